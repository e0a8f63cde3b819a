#include "wavefront/shoot.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavefront/scan.hpp"

namespace wavefront {

namespace {

std::string where(double c) { return " at c=" + std::to_string(c); }

}  // namespace

bool slow_branch(const WaveParams& params, double c, Branch branch) noexcept {
    if (params.q_is_one()) return false;
    // At c = 0 the convective damping k n X^(n-1) outruns the drift of l1
    // when n < (q + 1)/2.
    if (c == 0.0) return branch == Branch::Unstable && blowup_case(params).regime == BlowupRegime::Case3;
    return branch == Branch::Unstable ? c < 0.0 : c > 0.0;
}

double slow_exit_x(const WaveParams& params, double c, double eps) {
    // Beyond this X the explicit integrator needs O(1e4) steps to finish the
    // slow drift (its length scales like c X^(1-q), its stiffness like |c|).
    if (c == 0.0) {
        const double kn = params.kn();
        const double x = std::pow(kn * kn / (3e4 * params.q), 1.0 / (params.q + 1.0 - 2.0 * params.n));
        return std::isfinite(x) ? std::clamp(x, eps, 0.3) : eps;
    }
    const double x = std::pow(c * c / (3e4 * (params.q - 1.0)), 1.0 / (params.q - 1.0));
    return std::clamp(x, eps, 0.3);
}

Trajectory integrate_branch(const WaveParams& params, double c, const SeedState& seed, EventSet stop_on,
                            const IntegratorConfig& cfg, std::optional<double> span, std::size_t dense_target) {
    const Direction dir = seed.branch == Branch::Unstable ? Direction::Forward : Direction::Backward;
    // Algebraic branches need about (C / eps)^(1/a) in xi to leave P1, which
    // for large q exceeds the default budget.
    IntegratorConfig run = cfg;
    const TailEnd end = seed.branch == Branch::Unstable ? TailEnd::MinusInfinity : TailEnd::PlusInfinity;
    const TailLaw law = tail_law(params, c, std::nullopt, end, seed.branch);
    if (law.kind == TailKind::Algebraic) {
        const double reach = std::pow(law.constant.value_or(1.0) / seed.point.x, 1.0 / law.rate_or_exponent);
        if (std::isfinite(reach)) run.xi_budget = std::max(cfg.xi_budget, 10.0 * reach);
    }
    Trajectory head;
    PhasePoint start = seed.point;
    double xi0 = 0.0;
    if (slow_branch(params, c, seed.branch)) {
        head = integrate_stiff(params, c, seed.point, dir, slow_exit_x(params, c, seed.point.x), run);
        start = {head.back().x, head.back().y};
        xi0 = head.back().xi;
    }
    Trajectory tail = integrate(params, c, start, dir, stop_on, run, span, xi0);
    if (dense_target > 0 && !(run.sample_spacing > 0.0) && tail.samples.size() >= 2) {
        IntegratorConfig dense = run;
        dense.sample_spacing = std::abs(tail.back().xi - tail.front().xi) / static_cast<double>(dense_target);
        if (dense.sample_spacing > 0.0) tail = integrate(params, c, start, dir, stop_on, dense, span, xi0);
    }
    if (head.samples.size() < 2) return tail;
    head.samples.insert(head.samples.end(), tail.samples.begin() + 1, tail.samples.end());
    head.events = std::move(tail.events);
    return head;
}

BranchOrbit trace_l1(const WaveParams& params, double c, const IntegratorConfig& cfg, double eps) {
    BranchOrbit out;
    out.traj = integrate_branch(params, c, seed_l1(params, c, eps), {EventKind::YZeroDown}, cfg);
    const auto ev = out.traj.terminal_event();
    if (!ev) throw ShootingAnomaly("l1 ended without an event" + where(c));
    switch (ev->kind) {
        case EventKind::YZeroDown: out.crossing = ev->point.x; break;
        case EventKind::ConvergedP2: out.crossing = 1.0; break;
        default:
            throw ShootingAnomaly(std::string("l1 stopped at ") + to_string(ev->kind) + " before crossing Y=0" +
                                  where(c));
    }
    return out;
}

BranchOrbit trace_l0(const WaveParams& params, double c, const IntegratorConfig& cfg, double eps) {
    BranchOrbit out;
    out.traj = integrate_branch(params, c, seed_l0(params, c, eps), {EventKind::YZeroDown}, cfg);
    const auto ev = out.traj.terminal_event();
    if (!ev) throw ShootingAnomaly("l0 ended without an event" + where(c));
    switch (ev->kind) {
        case EventKind::YZeroDown: out.crossing = ev->point.x; break;
        case EventKind::ConvergedP2: out.crossing = 1.0; break;
        case EventKind::Escape:
            if (ev->point.y < 0.0) {
                out.crossing = kInfiniteCrossing;
                break;
            }
            [[fallthrough]];
        default:
            throw ShootingAnomaly(std::string("l0 (backward) stopped at ") + to_string(ev->kind) +
                                  " before crossing Y=0" + where(c));
    }
    return out;
}

double compute_x1(const WaveParams& params, double c, const IntegratorConfig& cfg, double eps) {
    return trace_l1(params, c, cfg, eps).crossing;
}

double compute_x0(const WaveParams& params, double c, const IntegratorConfig& cfg, double eps) {
    return trace_l0(params, c, cfg, eps).crossing;
}

CrossingRecord crossings(const WaveParams& params, double c, const IntegratorConfig& cfg, double eps) {
    BranchOrbit l1 = trace_l1(params, c, cfg, eps);
    BranchOrbit l0 = trace_l0(params, c, cfg, eps);
    return {l1.crossing, l0.crossing, std::move(l1.traj), std::move(l0.traj)};
}

CStarResult find_cstar(const WaveParams& params, const IntegratorConfig& cfg, const CStarOptions& opts) {
    if (!(opts.c_tol > 0.0)) throw std::invalid_argument("find_cstar: c_tol must be positive");
    const double s = params.focus_half_width();
    const double step = s / 8.0;
    double lo = -2.0 * s;
    const double hi = params.node_speed();

    std::vector<CrossingSample> grid =
        scan_crossings(params, arange_inclusive(lo, hi, step), cfg, opts.eps, opts.exec);

    // Extend left while the left end does not sit below zero yet.
    for (int extension = 0; grid.front().gap() >= 0.0; ++extension) {
        if (extension >= 16) throw NoBracket("find_cstar: g(c) >= 0 down to c=" + std::to_string(lo));
        const double new_lo = lo - 2.0 * s;
        auto left = scan_crossings(params, arange_inclusive(new_lo, lo - 0.5 * step, step), cfg, opts.eps,
                                   opts.exec);
        grid.insert(grid.begin(), left.begin(), left.end());
        lo = new_lo;
    }

    CStarResult res;
    res.params = params;
    std::optional<std::pair<double, double>> bracket;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double ga = grid[i].gap(), gb = grid[i + 1].gap();
        if (ga == 0.0) {
            bracket = {grid[i].c, grid[i].c};
            break;
        }
        if (ga < 0.0 && gb >= 0.0) {
            bracket = {grid[i].c, grid[i + 1].c};
            break;
        }
    }
    if (!bracket) throw NoBracket("find_cstar: no sign change of X1 - X0 on the scan grid");

    auto [a, b] = *bracket;
    while (b - a > opts.c_tol) {
        const double mid = 0.5 * (a + b);
        const double g = compute_x1(params, mid, cfg, opts.eps) - compute_x0(params, mid, cfg, opts.eps);
        ++res.iterations;
        if (g == 0.0) {
            a = b = mid;
            break;
        }
        (g < 0.0 ? a : b) = mid;
    }
    res.bracket_lo = a;
    res.bracket_hi = b;
    res.c_star = 0.5 * (a + b);

    const double kn = params.kn();
    bool ok = res.c_star > 0.0 && res.c_star < res.upper_bound();
    if (params.hopf_sign() < 0) ok = ok && res.c_star < kn;
    if (params.hopf_sign() > 0) ok = ok && res.c_star > kn;
    res.bounds_hold = ok;

    // Gluing needs |X1 - X0| small, which can require c far closer to c*
    // than c_tol where X0(c) is steep; keep halving the bracket for that
    // purpose only.
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (a + b);
        try {
            res.homoclinic = extract_homoclinic(params, mid, cfg, opts.eps, opts.match_tol);
            res.homoclinic_c = mid;
            res.homoclinic_matched = true;
            break;
        } catch (const MatchFailure&) {
        }
        if (!(mid > a && mid < b)) break;
        const double g = compute_x1(params, mid, cfg, opts.eps) - compute_x0(params, mid, cfg, opts.eps);
        (g < 0.0 ? a : b) = mid;
    }
    return res;
}

Trajectory extract_homoclinic(const WaveParams& params, double c_star, const IntegratorConfig& cfg, double eps,
                              double match_tol) {
    const BranchOrbit l1 = trace_l1(params, c_star, cfg, eps);
    const BranchOrbit l0 = trace_l0(params, c_star, cfg, eps);
    const auto e1 = l1.traj.terminal_event();
    const auto e0 = l0.traj.terminal_event();
    if (!e1 || !e0 || e1->kind != EventKind::YZeroDown || e0->kind != EventKind::YZeroDown) {
        throw MatchFailure("extract_homoclinic: l1/l0 do not both cross Y=0" + where(c_star));
    }
    if (std::abs(l1.crossing - l0.crossing) > match_tol * std::max(1.0, l1.crossing)) {
        throw MatchFailure("extract_homoclinic: crossings differ (X1=" + std::to_string(l1.crossing) +
                           ", X0=" + std::to_string(l0.crossing) + ")" + where(c_star));
    }

    Trajectory out = l1.traj.shifted(e1->xi);
    const Trajectory tail = l0.traj.shifted(e0->xi).ascending();
    out.samples.insert(out.samples.end(), tail.samples.begin() + 1, tail.samples.end());
    out.events.clear();
    out.direction = Direction::Forward;
    return out;
}

namespace {

template <typename F>
double trapezoid(const Trajectory& traj, F&& integrand) {
    double acc = 0.0;
    for (std::size_t i = 1; i < traj.samples.size(); ++i) {
        const Sample& a = traj.samples[i - 1];
        const Sample& b = traj.samples[i];
        acc += 0.5 * (b.xi - a.xi) * (integrand(a) + integrand(b));
    }
    return acc;
}

double absorption(const WaveParams& prm, double x) { return prm.q_is_one() ? x : pos_pow(x, prm.q); }

}  // namespace

EnergyResidual energy_residual(const Trajectory& traj, const WaveParams& params, double c) {
    EnergyResidual out;
    out.residual = trapezoid(traj, [&](const Sample& s) {
        return (c - params.kn() * pos_pow(s.x, params.n - 1.0)) * s.y * s.y;
    });
    out.normalizer = trapezoid(traj, [](const Sample& s) { return s.y * s.y; });
    // Backward-ordered samples integrate with negative dxi.
    if (traj.samples.size() >= 2 && traj.samples.back().xi < traj.samples.front().xi) {
        out.residual = -out.residual;
        out.normalizer = -out.normalizer;
    }
    return out;
}

EnergyBalance energy_balance(const Trajectory& traj, const WaveParams& params, double c) {
    const Trajectory asc = traj.ascending();
    EnergyBalance out;
    if (asc.samples.size() < 2) return out;
    const Sample& first = asc.samples.front();
    const Sample& last = asc.samples.back();
    out.kinetic_jump = 0.5 * (last.y * last.y - first.y * first.y);
    out.convective = energy_residual(asc, params, c).residual;
    out.reactive = trapezoid(asc, [&](const Sample& s) {
        return (pos_pow(s.x, params.p) - absorption(params, s.x)) * s.y;
    });
    auto antiderivative = [&](double x) {
        return pos_pow(x, params.p + 1.0) / (params.p + 1.0) - pos_pow(x, params.q + 1.0) / (params.q + 1.0);
    };
    out.reactive_exact = antiderivative(last.x) - antiderivative(first.x);
    return out;
}

double triangle_flow_large(const WaveParams& prm, double c, double m, double x) noexcept {
    return (x - 1.0) * (m * m - m * c + m * prm.kn() * pos_pow(x, prm.n - 1.0)) + pos_pow(x, prm.p) -
           absorption(prm, x);
}

double triangle_flow_small(const WaveParams& prm, double c, double m, double x) noexcept {
    return (x - 1.0) * (m * m + m * c - m * prm.kn() * pos_pow(x, prm.n - 1.0)) + pos_pow(x, prm.p) -
           absorption(prm, x);
}

FlowSignCheck check_large_speed_triangle(const WaveParams& prm, double c, std::size_t grid) {
    const double d = c - prm.kn();
    // The boundary speed itself is admissible; absorb its rounding.
    if (d < 2.0 * prm.focus_half_width() * (1.0 - 1e-12)) throw std::invalid_argument("check_large_speed_triangle: needs c >= kn + 2 sqrt(p-q)");
    FlowSignCheck out;
    out.slope = 0.5 * (d - std::sqrt(std::max(d * d - 4.0 * (prm.p - prm.q), 0.0)));
    out.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= grid; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid);
        const double v = triangle_flow_large(prm, c, out.slope, x);
        out.min_value = std::min(out.min_value, v);
        if (v < -1e-12) ++out.violations;
    }
    out.passed = out.violations == 0;
    return out;
}

FlowSignCheck check_small_speed_triangle(const WaveParams& prm, double c, std::size_t grid) {
    if (-c < 2.0 * prm.focus_half_width() * (1.0 - 1e-12)) throw std::invalid_argument("check_small_speed_triangle: needs c <= -2 sqrt(p-q)");
    FlowSignCheck out;
    out.slope = 0.5 * (-c - std::sqrt(std::max(c * c - 4.0 * (prm.p - prm.q), 0.0)));
    out.min_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= grid; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(grid + 1);
        const double v = triangle_flow_small(prm, c, out.slope, x);
        out.min_value = std::min(out.min_value, v);
        if (!(v > 0.0)) ++out.violations;
    }
    out.passed = out.violations == 0;
    return out;
}

}  // namespace wavefront
