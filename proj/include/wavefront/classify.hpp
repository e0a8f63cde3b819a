#pragma once

// The decision table mapping (parameters, speed) to the kind of travelling
// wave, and numerical reconstruction of the corresponding profile.

#include <optional>
#include <string>
#include <vector>

#include "wavefront/cycles.hpp"
#include "wavefront/integrate.hpp"
#include "wavefront/local.hpp"
#include "wavefront/model.hpp"

namespace wavefront {

enum class WaveKind {
    FrontOneToZeroMonotone,
    FrontOneToZeroDampedOsc,
    PeriodicWave,
    OscillatoryToZero,
    Soliton,
    FrontZeroToOne,
};

const char* to_string(WaveKind kind) noexcept;
std::optional<WaveKind> wave_kind_from_string(const std::string& name) noexcept;

struct WaveClass {
    WaveKind kind = WaveKind::FrontZeroToOne;
    double c = 0.0;
    /// Empty when monotonicity is neither proven nor excluded.
    std::optional<bool> monotone;
    /// A periodic wave exists at the same speed (reported alongside
    /// OscillatoryToZero).
    bool periodic_companion = false;
    /// Decay laws at the ends where f -> 0.
    std::vector<TailLaw> tails;
};

/// `soliton_tol` is relative: |c - c*| <= soliton_tol * max(1, |c*|) counts
/// as c = c*.
WaveClass classify_speed(const WaveParams& params, double c, double c_star, double soliton_tol = 1e-6);

enum class Anchor { MaxAtZero, HalfLevelAtZero, CrossingAtZero };

const char* to_string(Anchor a) noexcept;
std::optional<Anchor> anchor_from_string(const std::string& name) noexcept;

struct ProfileSample {
    double xi = 0.0;
    double f = 0.0;
    double fprime = 0.0;
};

struct Profile {
    WaveKind kind = WaveKind::FrontZeroToOne;
    double c = 0.0;
    Anchor anchor = Anchor::HalfLevelAtZero;
    std::vector<ProfileSample> samples;  // increasing xi

    Trajectory as_trajectory() const;
};

struct ProfileOptions {
    double eps = kDefaultSeedOffset;
    double soliton_tol = 1e-6;
    /// Loops of l0 traced backward for oscillatory-to-zero waves.
    int loops = 6;
    /// Longest xi span of each integration.
    double tail_span = 1e5;
    /// Approximate sample count of the main branch (uniform in xi) when the
    /// integrator config does not fix a spacing.
    std::size_t samples = 40000;
    /// Tolerance on X1 - X0 when gluing the soliton.
    double match_tol = 1e-3;
};

/// Builds the orbit for a non-periodic class and anchors it: 1 -> 0 fronts at
/// their last f = 1/2 crossing, 0 -> 1 fronts at their first, solitons at the
/// maximum, oscillatory-to-zero waves at the last crossing of Y = 0.
/// Ends that approach P1 along the slow direction stop at the seed offset.
/// Throws DomainError for PeriodicWave.
Profile reconstruct_profile(const WaveParams& params, double c, double c_star, const IntegratorConfig& cfg,
                            const ProfileOptions& opts = {});

/// The closed orbit replayed over `periods` loops, xi = 0 at the maximum.
Profile periodic_profile(const CycleResult& cycle, int periods);

struct CheckEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckEntry> entries;
    bool passed() const noexcept;
};

/// End limits (1e-3), monotonicity when claimed, damped oscillation (>= 2
/// crossings of f = 1 with shrinking excursions) when claimed, a single
/// maximum above 1 for solitons, and tail fits (rate/exponent within 2%,
/// constant within 5%) on the side of the global maximum facing each end.
VerifyReport verify_profile(const Profile& profile, const WaveClass& wclass, const WaveParams& params, double c);

/// Crossings of f = 1 and the extreme |f - 1| between consecutive ones,
/// ordered from the end nearest P2.
/// Rate/exponent within 2% of the law and, when the law fixes it, the
/// constant within 5%.
bool tail_fit_accepted(const TailFit& fit, const TailLaw& law) noexcept;

struct BranchTail {
    Branch branch = Branch::Unstable;
    TailLaw law;
    TailFit fit;
    bool passed = false;
};

/// Decay of a separatrix near P1 (l1 at -infinity, l0 at +infinity), fitted
/// on the branch traced up to its first crossing of Y = 0.
BranchTail check_branch_tail(const WaveParams& params, double c, Branch branch, const IntegratorConfig& cfg,
                             double eps = kDefaultSeedOffset, std::size_t samples = 40000);

struct Oscillation {
    std::size_t crossings = 0;
    std::vector<double> excursions;
};

Oscillation oscillation_about_one(const Profile& profile, bool from_left);

}  // namespace wavefront
