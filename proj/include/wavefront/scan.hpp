#pragma once

// Data-parallel kernels over independent integrations. Each kernel has a
// serial reference loop and an OpenMP loop selected by Exec; results are
// identical element for element because every element is computed by the
// same deterministic code path.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavefront/exec.hpp"
#include "wavefront/integrate.hpp"
#include "wavefront/model.hpp"
#include "wavefront/parallel.hpp"

namespace wavefront {

struct CrossingSample {
    double c = 0.0;
    double x1 = 1.0;
    double x0 = 1.0;
    double gap() const noexcept { return x1 - x0; }
};

/// X1(c), X0(c) at every speed. The first exception raised (in index order)
/// is rethrown after the loop.
std::vector<CrossingSample> scan_crossings(const WaveParams& params, std::span<const double> speeds,
                                           const IntegratorConfig& cfg, double eps, Exec exec);

struct ReturnSample {
    double x_start = 0.0;
    /// Empty when the orbit left without returning (NoReturn).
    std::optional<double> x_return;
};

/// Poincare return map on {Y = 0, X > 1} at every start point.
std::vector<ReturnSample> scan_return_map(const WaveParams& params, double c, std::span<const double> starts,
                                          const IntegratorConfig& cfg, Exec exec);

struct MonotonicityReport {
    std::vector<CrossingSample> samples;
    /// X1 nondecreasing, strictly where it exceeds 1.
    bool x1_monotone = false;
    /// X0 nonincreasing, strictly where finite and above 1.
    bool x0_monotone = false;
    /// Sign changes of g = X1 - X0 along the grid (zero counts as positive).
    std::size_t gap_sign_changes = 0;
    std::vector<std::string> violations;

    bool passed() const noexcept { return x1_monotone && x0_monotone && gap_sign_changes == 1; }
};

MonotonicityReport monotonicity_scan(const WaveParams& params, std::span<const double> speeds,
                                     const IntegratorConfig& cfg, double eps, Exec exec);

/// lo, lo + step, ... up to and including hi (within step/1e6).
std::vector<double> arange_inclusive(double lo, double hi, double step);

}  // namespace wavefront
