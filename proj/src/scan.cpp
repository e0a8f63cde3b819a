#include "wavefront/scan.hpp"

#include <cmath>
#include <cstdlib>

#include <omp.h>

#include "wavefront/cycles.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/parallel.hpp"
#include "wavefront/shoot.hpp"

namespace wavefront {

int kernel_threads() {
    if (const char* env = std::getenv("WAVEFRONT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return omp_get_max_threads();
}

std::vector<double> arange_inclusive(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("arange_inclusive: step must be positive");
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-6));
    for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
    return out;
}


std::vector<CrossingSample> scan_crossings(const WaveParams& params, std::span<const double> speeds,
                                           const IntegratorConfig& cfg, double eps, Exec exec) {
    std::vector<CrossingSample> out(speeds.size());
    for_each_index(speeds.size(), exec, [&](std::size_t i) {
        const double c = speeds[i];
        out[i] = {c, compute_x1(params, c, cfg, eps), compute_x0(params, c, cfg, eps)};
    });
    return out;
}

std::vector<ReturnSample> scan_return_map(const WaveParams& params, double c, std::span<const double> starts,
                                          const IntegratorConfig& cfg, Exec exec) {
    std::vector<ReturnSample> out(starts.size());
    for_each_index(starts.size(), exec, [&](std::size_t i) {
        out[i].x_start = starts[i];
        try {
            out[i].x_return = poincare_return(params, c, starts[i], cfg);
        } catch (const NoReturn&) {
            out[i].x_return.reset();
        }
    });
    return out;
}

MonotonicityReport monotonicity_scan(const WaveParams& params, std::span<const double> speeds,
                                     const IntegratorConfig& cfg, double eps, Exec exec) {
    MonotonicityReport rep;
    rep.samples = scan_crossings(params, speeds, cfg, eps, exec);
    rep.x1_monotone = rep.x0_monotone = true;
    auto at = [](double c) { return " between c=" + std::to_string(c); };
    for (std::size_t i = 1; i < rep.samples.size(); ++i) {
        const CrossingSample& a = rep.samples[i - 1];
        const CrossingSample& b = rep.samples[i];
        const bool x1_ok = a.x1 > 1.0 ? b.x1 > a.x1 : b.x1 >= a.x1;
        if (!x1_ok) {
            rep.x1_monotone = false;
            rep.violations.push_back("X1 not increasing" + at(a.c));
        }
        const bool x0_ok = (std::isfinite(b.x0) && b.x0 > 1.0) ? b.x0 < a.x0 : b.x0 <= a.x0;
        if (!x0_ok) {
            rep.x0_monotone = false;
            rep.violations.push_back("X0 not decreasing" + at(a.c));
        }
        if ((a.gap() < 0.0) != (b.gap() < 0.0)) ++rep.gap_sign_changes;
    }
    if (rep.gap_sign_changes != 1) {
        rep.violations.push_back("g changes sign " + std::to_string(rep.gap_sign_changes) + " times");
    }
    return rep;
}

}  // namespace wavefront
