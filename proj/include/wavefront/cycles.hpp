#pragma once

// Limit cycles around P2 through the Poincare return map on the half-axis
// {Y = 0, X > 1}, and grid checks of the no-cycle criterion in Lienard form.

#include <optional>
#include <string>
#include <vector>

#include "wavefront/exec.hpp"
#include "wavefront/integrate.hpp"
#include "wavefront/model.hpp"

namespace wavefront {

enum class CycleStability { Unstable, Stable };

const char* to_string(CycleStability s) noexcept;

/// X of the next downward crossing of Y = 0 (with X > 1) by the orbit
/// through (x_start, 0). Throws NoReturn when the orbit reaches P1,
/// escapes or runs out of budget first.
double poincare_return(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg);

/// The return orbit itself (one loop, ending at the return crossing).
Trajectory poincare_orbit(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg);

/// The same map in reverse time: X of the previous downward crossing of Y = 0
/// with X > 1 before (x_start, 0). Throws NoReturn like poincare_return.
double backward_return(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg);
Trajectory backward_orbit(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg);

/// Iterates backward_return from x_start until successive values agree to
/// x_tol (relative). Empty when an iterate does not return or the loop
/// budget runs out.
std::optional<double> backward_fixed_point(const WaveParams& params, double c, double x_start,
                                           const IntegratorConfig& cfg, double x_tol, int max_loops);

struct CycleOptions {
    std::size_t scan_points = 64;
    /// Bisection stops when the bracket is narrower than x_tol * X.
    double x_tol = 1e-11;
    /// Scan starts at 1 + delta_fraction * (X1(c) - 1).
    double delta_fraction = 1e-3;
    double eps = 1e-4;
    /// Reverse-time iterations allowed when the forward bracket ends on the
    /// basin edge of P1.
    int max_backward_loops = 500;
    Exec exec = Exec::Parallel;
};

struct CycleResult {
    bool found = false;
    double c = 0.0;
    double fixed_point_x = 0.0;
    double period = 0.0;
    double amplitude = 0.0;   // max X on the orbit minus 1
    double closure = 0.0;     // |P(X*) - X*|
    int winding = 0;          // turns of (X - 1, Y) around 0, counted clockwise
    CycleStability stability = CycleStability::Unstable;
    Trajectory orbit;
    /// Every sign change of P(X) - X seen by the scan, bisected.
    std::vector<double> all_fixed_points;
    double scan_lo = 0.0;
    double scan_hi = 0.0;
};

/// Scans X in (1 + delta, X1(c)) for sign changes of P(X) - X (an orbit that
/// does not return counts as P(X) > X) and bisects the first one. A change
/// whose outer side never returns is the basin edge of P1; an unstable cycle
/// squeezed against it is then located by backward iteration.
CycleResult find_limit_cycle(const WaveParams& params, double c, const IntegratorConfig& cfg,
                             const CycleOptions& opts = {});

/// Repeats the closed orbit `periods` times, xi continuing across loops.
Trajectory replay_cycle(const CycleResult& cycle, int periods);

/// Turns of (X - 1, Y) around the origin along the samples, clockwise
/// positive, closing the path back to its first sample.
int winding_number(const Trajectory& traj);

struct LienardCurves {
    double c = 0.0;
    std::vector<double> x;
    std::vector<double> y1;
    std::vector<double> y2;
    double min_gap = 0.0;
    bool y1_decreasing = false;
    bool y2_decreasing = false;
};

/// y > 1 with k (y^n - x^n) = c (y - x). Needs n > 1 and c >= kn.
double lienard_y1(const WaveParams& params, double c, double x);
/// y > 1 with G(y) = G(x), G(t) = t^(p+1)/(p+1) - t^(q+1)/(q+1).
double lienard_y2(const WaveParams& params, double x);

/// y1, y2 on x_i = i / (grid_size + 1), i = 1..grid_size.
/// Throws DomainError unless n > 1, n <= p+q+1 and c >= kn.
LienardCurves lienard_curves(const WaveParams& params, double c, std::size_t grid_size = 200);

struct CalculusReport {
    bool h_increasing = false;
    bool h_bounded = false;
    double h_max = 0.0;
    bool phi_prime_nonnegative = false;
    bool exponent_inequality = false;
    double inequality_lhs = 0.0;
    double inequality_rhs = 0.0;
    bool y1_origin_decreasing = false;
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty(); }
};

/// h(x) = (x^p - x^q)/(x - 1) on [0, 1); phi'(t) = (t^p - 1)(t^q - 1) on
/// (0, t_max]; p+q+1 > ((p+1)/(q+1))^((p+q)/(p-q)); n^(1/(n-1)) decreasing
/// in n around the given n.
CalculusReport calculus_checks(const WaveParams& params, std::size_t grid = 200);

}  // namespace wavefront
