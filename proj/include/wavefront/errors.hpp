#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wavefront {

/// Base of every error raised by the library.
class WavefrontError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One failed parameter inequality, e.g. {"p>q", "p=2 q=2"}.
struct Violation {
    std::string constraint;
    std::string detail;
};

class ConstraintViolation : public WavefrontError {
public:
    explicit ConstraintViolation(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class DomainError : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

enum class IntegrationFailure { StiffnessFailure, NonFinite };

class IntegrationError : public WavefrontError {
public:
    IntegrationError(IntegrationFailure kind, const std::string& what)
        : WavefrontError(what), kind_(kind) {}
    IntegrationFailure kind() const noexcept { return kind_; }

private:
    IntegrationFailure kind_;
};

class UnsupportedCombination : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

class InsufficientData : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

/// A shooting orbit did something the theory rules out (escape before the
/// first crossing, budget exhaustion, ...).
class ShootingAnomaly : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

class NoBracket : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

class MatchFailure : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

class NoReturn : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

class RootFailure : public WavefrontError {
public:
    using WavefrontError::WavefrontError;
};

}  // namespace wavefront
