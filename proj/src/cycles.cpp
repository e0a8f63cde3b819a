#include "wavefront/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "wavefront/errors.hpp"
#include "wavefront/scan.hpp"
#include "wavefront/shoot.hpp"

namespace wavefront {

const char* to_string(CycleStability s) noexcept {
    return s == CycleStability::Unstable ? "unstable" : "stable";
}

Trajectory poincare_orbit(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg) {
    if (!(x_start > 1.0)) throw DomainError("poincare_return: X_start must exceed 1");
    Trajectory traj = integrate(params, c, {x_start, 0.0}, Direction::Forward, {EventKind::YZeroDown}, cfg);
    const auto ev = traj.terminal_event();
    if (!ev || ev->kind != EventKind::YZeroDown || !(ev->point.x > 1.0)) {
        std::ostringstream msg;
        msg << "no return from X=" << x_start << " at c=" << c << " (stopped at "
            << (ev ? to_string(ev->kind) : "span end") << ")";
        throw NoReturn(msg.str());
    }
    return traj;
}

double poincare_return(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg) {
    return poincare_orbit(params, c, x_start, cfg).terminal_event()->point.x;
}

Trajectory backward_orbit(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg) {
    if (!(x_start > 1.0)) throw DomainError("backward_return: X_start must exceed 1");
    Trajectory traj = integrate(params, c, {x_start, 0.0}, Direction::Backward, {EventKind::YZeroDown}, cfg);
    const auto ev = traj.terminal_event();
    if (!ev || ev->kind != EventKind::YZeroDown || !(ev->point.x > 1.0)) {
        std::ostringstream msg;
        msg << "no backward return from X=" << x_start << " at c=" << c;
        throw NoReturn(msg.str());
    }
    return traj;
}

double backward_return(const WaveParams& params, double c, double x_start, const IntegratorConfig& cfg) {
    return backward_orbit(params, c, x_start, cfg).terminal_event()->point.x;
}

std::optional<double> backward_fixed_point(const WaveParams& params, double c, double x_start,
                                           const IntegratorConfig& cfg, double x_tol, int max_loops) {
    double x = x_start;
    for (int i = 0; i < max_loops; ++i) {
        double next = 0.0;
        try {
            next = backward_return(params, c, x, cfg);
        } catch (const NoReturn&) {
            return std::nullopt;
        }
        if (std::abs(next - x) <= x_tol * next) return next;
        x = next;
    }
    return std::nullopt;
}

namespace {

// P(x) - x, with no return counted as +1.
double displacement(const ReturnSample& s) { return s.x_return ? *s.x_return - s.x_start : 1.0; }

std::optional<double> displacement_at(const WaveParams& params, double c, double x, const IntegratorConfig& cfg) {
    try {
        return poincare_return(params, c, x, cfg) - x;
    } catch (const NoReturn&) {
        return std::nullopt;
    }
}

}  // namespace

int winding_number(const Trajectory& traj) {
    if (traj.samples.size() < 2) return 0;
    double total = 0.0;
    auto angle = [](const Sample& s) { return std::atan2(s.y, s.x - 1.0); };
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const Sample& a = traj.samples[i];
        const Sample& b = traj.samples[(i + 1) % traj.samples.size()];
        double d = angle(b) - angle(a);
        if (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
        if (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
        total += d;
    }
    return static_cast<int>(std::lround(-total / (2.0 * std::numbers::pi)));
}

CycleResult find_limit_cycle(const WaveParams& params, double c, const IntegratorConfig& cfg,
                             const CycleOptions& opts) {
    CycleResult res;
    res.c = c;

    double x1 = 0.0;
    try {
        x1 = compute_x1(params, c, cfg, opts.eps);
    } catch (const ShootingAnomaly&) {
        // l1 never comes back to the axis; scan a fixed window instead.
        x1 = std::min(cfg.x_max, 10.0);
    }
    if (!(x1 > 1.0) || !std::isfinite(x1)) return res;

    const double delta = opts.delta_fraction * (x1 - 1.0);
    res.scan_lo = 1.0 + delta;
    res.scan_hi = x1 - delta;
    const std::size_t n = std::max<std::size_t>(opts.scan_points, 2);
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = res.scan_lo + (res.scan_hi - res.scan_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    const auto map = scan_return_map(params, c, xs, cfg, opts.exec);

    // Where the forward map cannot resolve an unstable cycle (it hugs the
    // separatrix of P1), backward iteration converges onto it instead.
    std::optional<double> backward_start;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double da = displacement(map[i]);
        const double db = displacement(map[i + 1]);
        if ((da < 0.0) == (db < 0.0)) continue;
        double a = xs[i], b = xs[i + 1];
        const bool rising = da < 0.0;
        // Whether the positive side of the bracket is an orbit that returned.
        bool positive_returns = rising ? map[i + 1].x_return.has_value() : map[i].x_return.has_value();
        while (b - a > opts.x_tol * b) {
            const double mid = 0.5 * (a + b);
            const auto dm = displacement_at(params, c, mid, cfg);
            const bool negative = dm && *dm < 0.0;
            if (!negative) positive_returns = dm.has_value();
            (negative == rising ? a : b) = mid;
        }
        if (!positive_returns) {
            // Orbits inside return short, orbits outside reach P1: the
            // bracket is the basin edge. A cycle just inside it is unstable,
            // hence attracting in reverse time.
            if (rising && !backward_start && res.all_fixed_points.empty()) backward_start = a;
            continue;
        }
        res.all_fixed_points.push_back(0.5 * (a + b));
        if (!res.found) {
            res.found = true;
            res.fixed_point_x = 0.5 * (a + b);
            res.stability = rising ? CycleStability::Unstable : CycleStability::Stable;
        }
    }

    IntegratorConfig orbit_cfg = cfg;
    if (!(orbit_cfg.sample_spacing > 0.0)) orbit_cfg.sample_spacing = 0.01;

    if (!res.found && backward_start) {
        const auto xstar = backward_fixed_point(params, c, *backward_start, cfg, opts.x_tol, opts.max_backward_loops);
        if (!xstar) return res;
        const Trajectory back = backward_orbit(params, c, *xstar, orbit_cfg);
        const Event ev = *back.terminal_event();
        res.found = true;
        res.fixed_point_x = *xstar;
        res.stability = CycleStability::Unstable;
        res.all_fixed_points.push_back(*xstar);
        res.orbit = back.ascending().shifted(ev.xi);
        res.period = -ev.xi;
        res.closure = std::abs(ev.point.x - *xstar);
    } else if (res.found) {
        try {
            res.orbit = poincare_orbit(params, c, res.fixed_point_x, orbit_cfg);
        } catch (const NoReturn&) {
            res.found = false;
            return res;
        }
        const Event ret = *res.orbit.terminal_event();
        res.period = ret.xi - res.orbit.front().xi;
        res.closure = std::abs(ret.point.x - res.fixed_point_x);
    } else {
        return res;
    }
    double xmax = 0.0;
    for (const auto& s : res.orbit.samples) xmax = std::max(xmax, s.x);
    res.amplitude = xmax - 1.0;
    res.winding = winding_number(res.orbit);
    return res;
}

Trajectory replay_cycle(const CycleResult& cycle, int periods) {
    Trajectory out;
    if (!cycle.found || cycle.orbit.empty()) return out;
    const auto& loop = cycle.orbit.samples;
    for (int k = 0; k < periods; ++k) {
        const double shift = k * cycle.period;
        for (std::size_t i = (k == 0 ? 0 : 1); i < loop.size(); ++i) {
            out.samples.push_back({loop[i].xi + shift, loop[i].x, loop[i].y});
        }
    }
    return out;
}

namespace {

// Root of f in (lo, hi) with f(lo) < 0 < f(hi): Newton from `guess`,
// falling back to bisection whenever an iterate leaves the bracket.
template <typename F, typename DF>
double safeguarded_newton(F&& f, DF&& df, double lo, double hi, double guess, const char* what) {
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0)) {
        if (flo == 0.0) return lo;
        if (fhi == 0.0) return hi;
        throw RootFailure(std::string(what) + ": root not bracketed in (1, 10 * guess)");
    }
    double y = std::clamp(guess, lo, hi);
    if (y <= lo || y >= hi) y = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fy = f(y);
        if (fy == 0.0) return y;
        (fy < 0.0 ? lo : hi) = y;
        const double d = df(y);
        double next = d != 0.0 ? y - fy / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - y) <= 1e-15 * std::max(1.0, std::abs(y)) || hi - lo <= 1e-15 * hi) return next;
        y = next;
    }
    throw RootFailure(std::string(what) + ": no convergence");
}

void require_lienard(const WaveParams& prm, double c) {
    if (!(prm.n > 1.0)) throw DomainError("lienard curves need n > 1");
    if (prm.n > prm.p + prm.q + 1.0) throw DomainError("lienard curves need n <= p + q + 1");
    if (c < prm.kn()) throw DomainError("lienard curves need c >= kn");
}

}  // namespace

double lienard_y1(const WaveParams& prm, double c, double x) {
    if (!(prm.n > 1.0) || c < prm.kn()) throw DomainError("lienard_y1 needs n > 1 and c >= kn");
    const double guess = std::pow(c / prm.k, 1.0 / (prm.n - 1.0));
    const double xn = std::pow(x, prm.n);
    auto f = [&](double y) { return prm.k * (std::pow(y, prm.n) - xn) - c * (y - x); };
    auto df = [&](double y) { return prm.k * prm.n * std::pow(y, prm.n - 1.0) - c; };
    return safeguarded_newton(f, df, 1.0, 10.0 * guess, guess, "lienard_y1");
}

double lienard_y2(const WaveParams& prm, double x) {
    const double guess = std::pow((prm.p + 1.0) / (prm.q + 1.0), 1.0 / (prm.p - prm.q));
    auto G = [&](double t) {
        return std::pow(t, prm.p + 1.0) / (prm.p + 1.0) - std::pow(t, prm.q + 1.0) / (prm.q + 1.0);
    };
    const double gx = G(x);
    auto f = [&](double y) { return G(y) - gx; };
    auto df = [&](double y) { return std::pow(y, prm.p) - std::pow(y, prm.q); };
    return safeguarded_newton(f, df, 1.0, 10.0 * guess, guess, "lienard_y2");
}

LienardCurves lienard_curves(const WaveParams& params, double c, std::size_t grid_size) {
    require_lienard(params, c);
    LienardCurves out;
    out.c = c;
    out.min_gap = std::numeric_limits<double>::infinity();
    out.y1_decreasing = out.y2_decreasing = true;
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid_size + 1);
        const double a = lienard_y1(params, c, x);
        const double b = lienard_y2(params, x);
        if (!out.y1.empty()) {
            out.y1_decreasing = out.y1_decreasing && a < out.y1.back();
            out.y2_decreasing = out.y2_decreasing && b < out.y2.back();
        }
        out.x.push_back(x);
        out.y1.push_back(a);
        out.y2.push_back(b);
        out.min_gap = std::min(out.min_gap, a - b);
    }
    return out;
}

CalculusReport calculus_checks(const WaveParams& prm, std::size_t grid) {
    CalculusReport rep;
    const double p = prm.p, q = prm.q;
    auto note = [&](const std::string& s) { rep.violations.push_back(s); };

    auto h = [&](double x) { return (std::pow(x, p) - std::pow(x, q)) / (x - 1.0); };
    rep.h_increasing = rep.h_bounded = true;
    double prev = h(0.0);
    rep.h_max = prev;
    for (std::size_t i = 1; i < grid; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid);
        const double v = h(x);
        if (!(v > prev)) {
            rep.h_increasing = false;
            note("h not increasing at x=" + std::to_string(x));
        }
        if (v > p - q) {
            rep.h_bounded = false;
            note("h exceeds p-q at x=" + std::to_string(x));
        }
        rep.h_max = std::max(rep.h_max, v);
        prev = v;
    }

    rep.phi_prime_nonnegative = true;
    const double t_max = 4.0;
    for (std::size_t i = 1; i <= grid; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(grid);
        if ((std::pow(t, p) - 1.0) * (std::pow(t, q) - 1.0) < 0.0) {
            rep.phi_prime_nonnegative = false;
            note("phi' negative at t=" + std::to_string(t));
        }
    }

    rep.inequality_lhs = p + q + 1.0;
    rep.inequality_rhs = std::pow((p + 1.0) / (q + 1.0), (p + q) / (p - q));
    rep.exponent_inequality = rep.inequality_lhs > rep.inequality_rhs;
    if (!rep.exponent_inequality) note("p+q+1 <= ((p+1)/(q+1))^((p+q)/(p-q))");

    // n^(1/(n-1)) tends to e as n -> 1.
    auto y1_origin = [](double n) { return n == 1.0 ? std::numbers::e : std::pow(n, 1.0 / (n - 1.0)); };
    rep.y1_origin_decreasing = true;
    const double n0 = std::max(prm.n, 1.0 + 1e-6);
    for (double n = n0; n < n0 + 4.0; n += 0.25) {
        if (!(y1_origin(n + 0.25) < y1_origin(n))) {
            rep.y1_origin_decreasing = false;
            note("n^(1/(n-1)) not decreasing at n=" + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace wavefront
