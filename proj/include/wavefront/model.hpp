#pragma once

// Planar profile system for traveling waves u(x,t) = f(x + c t) of
//
//     u_t = u_xx + k (u^n)_x + u^p - u^q,
//
// written as X = f, Y = f':
//
//     X' = Y
//     Y' = c Y - k n X+^(n-1) Y - X+^p + X+^q        (X+ = max(X, 0))
//
// For q = 1 the absorption term is X itself rather than X+.

#include <array>
#include <vector>

#include "wavefront/errors.hpp"

namespace wavefront {

/// Exponents and convection coefficient. Construct through validate().
struct WaveParams {
    double n = 2.0;
    double p = 3.0;
    double q = 2.0;
    double k = 1.0;

    double kn() const noexcept { return k * n; }
    /// sqrt(p - q), the half-width of the focus window around c = kn.
    double focus_half_width() const noexcept;
    /// kn + 2 sqrt(p - q): lower edge of the monotone-front regime.
    double node_speed() const noexcept;
    /// Sign of n - (p + q + 1); decides sub/supercritical Hopf.
    int hopf_sign() const noexcept;
    bool q_is_one() const noexcept { return q == 1.0; }
    /// n in [1, 2): outside the classical range, allowed with a warning.
    bool below_classical_range() const noexcept { return n < 2.0; }
};

std::vector<Violation> check_params(double n, double p, double q, double k);

/// Throws ConstraintViolation listing every failed inequality.
WaveParams validate(double n, double p, double q, double k);

struct PhasePoint {
    double x = 0.0;
    double y = 0.0;
};

/// max(x, 0)^r with the convention 0^r = 0 for r > 0.
double pos_pow(double x, double r) noexcept;

PhasePoint vector_field(const WaveParams& params, double c, PhasePoint pt) noexcept;

/// Jacobian of vector_field at a point with X > 0, row major.
std::array<double, 4> jacobian(const WaveParams& params, double c, PhasePoint pt) noexcept;

/// Lienard form shifted so that P2 sits at the origin:
///     X~' = Y~ + c X~ + k - k (1 + X~)^n
///     Y~' = (1 + X~)^q - (1 + X~)^p
/// Requires X~ > -1 (DomainError otherwise).
PhasePoint lienard_field(const WaveParams& params, double c, PhasePoint shifted);

enum class P2Kind { UnstableNode, UnstableFocus, CenterBoundary, StableFocus, StableNode };

const char* to_string(P2Kind kind) noexcept;

struct ComplexPair {
    double re = 0.0;
    double im = 0.0;  // >= 0; the partner is re - i*im
};

struct P2Class {
    P2Kind kind = P2Kind::CenterBoundary;
    /// lambda_+ and lambda_-; for a complex pair both share re and carry +/- im.
    ComplexPair lambda_plus;
    ComplexPair lambda_minus;
};

/// Linear type of P2 = (1, 0). Node kinds own the closed boundaries
/// c = kn +/- 2 sqrt(p - q); c = kn exactly is CenterBoundary.
P2Class classify_p2(const WaveParams& params, double c) noexcept;

/// Lyapunov number of the Hopf bifurcation at c = kn:
///     sigma = -3 k n (n - 1) pi (n - p - q - 1) / (4 sqrt(p - q)).
double lyapunov_number(const WaveParams& params) noexcept;

struct GeneralCoefficients {
    double a = 1.0;  // diffusion
    double b = 1.0;  // convection
    double c = 1.0;  // reaction
    double d = 1.0;  // absorption
};

struct Normalization {
    WaveParams params;
    double lambda = 1.0;  // amplitude scale, v = lambda u
    double mu = 1.0;      // space scale
    double nu = 1.0;      // time scale
};

/// Maps v_t = A v_xx + B (v^n)_x + C v^p - D v^q onto the unit-coefficient
/// equation through v(x,t) = lambda u(mu x, nu t).
Normalization normalize(const GeneralCoefficients& coeffs, double n, double p, double q);

}  // namespace wavefront
