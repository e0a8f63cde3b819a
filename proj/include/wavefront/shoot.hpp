#pragma once

// Shooting on the two separatrices of P1.
//
// X1(c): X at the first crossing of Y = 0 by l1(c) (1 when l1 falls into P2
//        without crossing).
// X0(c): X at the last crossing of Y = 0 by l0(c) before it enters P1,
//        found by integrating backward from the seed (1 for a direct P2->P1
//        connection, +infinity when the backward orbit escapes with Y < 0).
//
// c* is the unique zero of g(c) = X1(c) - X0(c).

#include <limits>
#include <optional>

#include "wavefront/exec.hpp"
#include "wavefront/integrate.hpp"
#include "wavefront/local.hpp"
#include "wavefront/model.hpp"

namespace wavefront {

inline constexpr double kInfiniteCrossing = std::numeric_limits<double>::infinity();

struct BranchOrbit {
    Trajectory traj;
    double crossing = 1.0;  // X1 or X0; kInfiniteCrossing for the X0 sentinel
};

/// True for the slow (center-manifold) separatrix of P1: l1 when c < 0, l0
/// when c > 0, and l1 at c = 0 when n < (q + 1)/2 (q > 1). Traced away from
/// P1, its transverse mode contracts and explicit steps become stability
/// bound.
bool slow_branch(const WaveParams& params, double c, Branch branch) noexcept;

/// X at which a slow branch is handed from the stiff to the explicit
/// integrator.
double slow_exit_x(const WaveParams& params, double c, double eps);

/// Integrates a separatrix away from P1 (l1 forward, l0 backward), starting
/// slow branches with integrate_stiff. `span` bounds the explicit part. With
/// `dense_target` > 0 (and no spacing in cfg) the explicit part is repeated
/// with uniform dense output of about that many samples.
Trajectory integrate_branch(const WaveParams& params, double c, const SeedState& seed, EventSet stop_on,
                            const IntegratorConfig& cfg, std::optional<double> span = std::nullopt,
                            std::size_t dense_target = 0);

BranchOrbit trace_l1(const WaveParams& params, double c, const IntegratorConfig& cfg,
                     double eps = kDefaultSeedOffset);
BranchOrbit trace_l0(const WaveParams& params, double c, const IntegratorConfig& cfg,
                     double eps = kDefaultSeedOffset);

double compute_x1(const WaveParams& params, double c, const IntegratorConfig& cfg,
                  double eps = kDefaultSeedOffset);
double compute_x0(const WaveParams& params, double c, const IntegratorConfig& cfg,
                  double eps = kDefaultSeedOffset);

struct CrossingRecord {
    double x1 = 1.0;
    double x0 = 1.0;
    Trajectory l1;
    Trajectory l0;

    /// g = X1 - X0, -infinity when X0 is the infinite sentinel.
    double gap() const noexcept { return x1 - x0; }
};

CrossingRecord crossings(const WaveParams& params, double c, const IntegratorConfig& cfg,
                         double eps = kDefaultSeedOffset);

struct CStarOptions {
    double c_tol = 1e-6;
    double eps = kDefaultSeedOffset;
    Exec exec = Exec::Parallel;
    /// Relative tolerance on |X1 - X0| when gluing the homoclinic orbit.
    double match_tol = 1e-3;
};

struct CStarResult {
    WaveParams params;
    double c_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    /// Glued orbit, empty when no speed in the bracket brought the two
    /// crossings within match_tol.
    Trajectory homoclinic;
    bool homoclinic_matched = false;
    /// Speed at which the homoclinic was glued (inside the final bracket).
    double homoclinic_c = 0.0;
    /// 0 < c* < kn + 2 sqrt(p - q), and c* on the side of kn fixed by
    /// sign(n - p - q - 1).
    bool bounds_hold = false;

    double kn() const noexcept { return params.kn(); }
    double upper_bound() const noexcept { return params.node_speed(); }
};

/// Scans g over [-2 sqrt(p-q), kn + 2 sqrt(p-q)] at spacing sqrt(p-q)/8
/// (extending left while g >= 0 at the left end), then bisects the first
/// sign change down to c_tol. Throws NoBracket when no sign change exists.
CStarResult find_cstar(const WaveParams& params, const IntegratorConfig& cfg, const CStarOptions& opts = {});

/// Glues l1 up to its crossing with l0 from its crossing, xi = 0 at the
/// maximum. Throws MatchFailure when the crossings disagree.
Trajectory extract_homoclinic(const WaveParams& params, double c_star, const IntegratorConfig& cfg,
                              double eps = kDefaultSeedOffset, double match_tol = 1e-3);

struct EnergyResidual {
    double residual = 0.0;    // int (c - k n f^(n-1)) f'^2
    double normalizer = 0.0;  // int f'^2
};

/// Trapezoidal quadrature over the samples (any order of xi).
EnergyResidual energy_residual(const Trajectory& traj, const WaveParams& params, double c);

/// Both sides of the identity obtained by multiplying the profile equation by
/// f' and integrating over the orbit:
///     [f'^2 / 2] = int (c - k n f^(n-1)) f'^2  -  int (f^p - f^q) f'.
struct EnergyBalance {
    double kinetic_jump = 0.0;       // f'(end)^2/2 - f'(start)^2/2
    double convective = 0.0;         // quadrature
    double reactive = 0.0;           // quadrature of (f^p - f^q) f'
    double reactive_exact = 0.0;     // via the antiderivative of f^p - f^q
    double defect() const noexcept { return kinetic_jump - (convective - reactive); }
};

EnergyBalance energy_balance(const Trajectory& traj, const WaveParams& params, double c);

/// Grid check of the flow across the segment Y = m (X - 1), X in [0, 1], for
/// c >= kn + 2 sqrt(p-q) (m the smaller root of m^2 - m (c - kn) + p - q), or
/// across Y = m (1 - X) for c <= -2 sqrt(p-q) (m the smaller root of
/// m^2 + c m + p - q). The expected sign is >= 0, respectively > 0.
struct FlowSignCheck {
    bool passed = false;
    double slope = 0.0;
    double min_value = 0.0;
    std::size_t violations = 0;
};

double triangle_flow_large(const WaveParams& params, double c, double m, double x) noexcept;
double triangle_flow_small(const WaveParams& params, double c, double m, double x) noexcept;
FlowSignCheck check_large_speed_triangle(const WaveParams& params, double c, std::size_t grid = 200);
FlowSignCheck check_small_speed_triangle(const WaveParams& params, double c, std::size_t grid = 200);

}  // namespace wavefront
