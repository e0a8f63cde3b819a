#include "wavefront/classify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavefront/errors.hpp"
#include "wavefront/shoot.hpp"

namespace wavefront {

namespace {

constexpr std::pair<WaveKind, const char*> kKindNames[] = {
    {WaveKind::FrontOneToZeroMonotone, "front_one_to_zero_monotone"},
    {WaveKind::FrontOneToZeroDampedOsc, "front_one_to_zero_damped_osc"},
    {WaveKind::PeriodicWave, "periodic_wave"},
    {WaveKind::OscillatoryToZero, "oscillatory_to_zero"},
    {WaveKind::Soliton, "soliton"},
    {WaveKind::FrontZeroToOne, "front_zero_to_one"},
};

}  // namespace

const char* to_string(WaveKind kind) noexcept {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<WaveKind> wave_kind_from_string(const std::string& name) noexcept {
    for (const auto& [k, s] : kKindNames) {
        if (name == s) return k;
    }
    return std::nullopt;
}

const char* to_string(Anchor a) noexcept {
    switch (a) {
        case Anchor::MaxAtZero: return "max_at_zero";
        case Anchor::HalfLevelAtZero: return "half_level_at_zero";
        case Anchor::CrossingAtZero: return "crossing_at_zero";
    }
    return "unknown";
}

std::optional<Anchor> anchor_from_string(const std::string& name) noexcept {
    for (Anchor a : {Anchor::MaxAtZero, Anchor::HalfLevelAtZero, Anchor::CrossingAtZero}) {
        if (name == to_string(a)) return a;
    }
    return std::nullopt;
}

WaveClass classify_speed(const WaveParams& prm, double c, double c_star, double soliton_tol) {
    WaveClass wc;
    wc.c = c;
    const double kn = prm.kn();
    const double s = prm.focus_half_width();
    auto plus_tail = [&] { return tail_law(prm, c, std::nullopt, TailEnd::PlusInfinity, Branch::Stable); };
    auto minus_tail = [&] { return tail_law(prm, c, std::nullopt, TailEnd::MinusInfinity, Branch::Unstable); };

    if (std::abs(c - c_star) <= soliton_tol * std::max(1.0, std::abs(c_star))) {
        wc.kind = WaveKind::Soliton;
        wc.monotone = false;
        wc.tails = {minus_tail(), plus_tail()};
        return wc;
    }

    // Subcritical order c* < kn, or supercritical order kn < c*. On the
    // boundary n = p+q+1 the observed order decides.
    const bool subcritical = prm.hopf_sign() < 0 || (prm.hopf_sign() == 0 && c_star < kn);
    const double front_edge = subcritical ? kn : c_star;   // fronts 1 -> 0 at or above
    const double rising_edge = subcritical ? c_star : kn;  // fronts 0 -> 1 below (at or below kn)

    const bool one_to_zero = subcritical ? c >= front_edge : c > front_edge;
    const bool zero_to_one = subcritical ? c < rising_edge : c <= rising_edge;
    if (one_to_zero) {
        const bool monotone = c >= prm.node_speed();
        wc.kind = monotone ? WaveKind::FrontOneToZeroMonotone : WaveKind::FrontOneToZeroDampedOsc;
        wc.monotone = monotone;
        wc.tails = {plus_tail()};
    } else if (zero_to_one) {
        wc.kind = WaveKind::FrontZeroToOne;
        if (c <= -2.0 * s) wc.monotone = true;
        wc.tails = {minus_tail()};
    } else {
        wc.kind = WaveKind::OscillatoryToZero;
        wc.monotone = false;
        wc.periodic_companion = true;
        wc.tails = {plus_tail()};
    }
    return wc;
}

Trajectory Profile::as_trajectory() const {
    Trajectory t;
    t.samples.reserve(samples.size());
    for (const auto& s : samples) t.samples.push_back({s.xi, s.f, s.fprime});
    return t;
}

namespace {

Profile to_profile(const Trajectory& asc, WaveKind kind, double c, Anchor anchor) {
    Profile out;
    out.kind = kind;
    out.c = c;
    out.anchor = anchor;
    out.samples.reserve(asc.samples.size());
    for (const auto& s : asc.samples) out.samples.push_back({s.xi, s.x, s.y});
    return out;
}

// Backward part (made ascending) followed by the forward part, which starts
// at the shared seed.
Trajectory glue(const Trajectory& backward, const Trajectory& forward) {
    Trajectory out = backward.ascending();
    const std::size_t skip = out.samples.empty() ? 0 : 1;
    if (forward.samples.size() > skip) {
        out.samples.insert(out.samples.end(), forward.samples.begin() + static_cast<std::ptrdiff_t>(skip),
                           forward.samples.end());
    }
    out.direction = Direction::Forward;
    return out;
}

void shift(Profile& prof, double origin) {
    for (auto& s : prof.samples) s.xi -= origin;
}

// xi where f crosses `level`, rising or falling, searching from the left or
// the right end.
std::optional<double> level_crossing(const Profile& prof, double level, bool rising, bool from_left) {
    const auto& v = prof.samples;
    auto check = [&](std::size_t i) -> std::optional<double> {
        const double a = v[i].f - level, b = v[i + 1].f - level;
        const bool hit = rising ? (a < 0.0 && b >= 0.0) : (a > 0.0 && b <= 0.0);
        if (!hit) return std::nullopt;
        const double t = a / (a - b);
        return v[i].xi + t * (v[i + 1].xi - v[i].xi);
    };
    if (v.size() < 2) return std::nullopt;
    if (from_left) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (auto x = check(i)) return x;
        }
    } else {
        for (std::size_t i = v.size() - 1; i-- > 0;) {
            if (auto x = check(i)) return x;
        }
    }
    return std::nullopt;
}

}  // namespace

namespace {

// Integrates, then repeats with uniform dense output so that every part of
// the orbit (long slow tails included) carries about `target` samples.
Trajectory sampled(const WaveParams& prm, double c, PhasePoint seed, Direction dir, EventSet stop_on,
                   const IntegratorConfig& cfg, std::optional<double> span, double xi0, std::size_t target) {
    Trajectory t = integrate(prm, c, seed, dir, stop_on, cfg, span, xi0);
    if (cfg.sample_spacing > 0.0 || t.samples.size() < 2 || target == 0) return t;
    const double length = std::abs(t.back().xi - t.front().xi);
    IntegratorConfig dense = cfg;
    dense.sample_spacing = length / static_cast<double>(target);
    if (!(dense.sample_spacing > 0.0)) return t;
    return integrate(prm, c, seed, dir, stop_on, dense, span, xi0);
}

// Continuing a branch past its seed toward P1 is stable only along the
// hyperbolic direction; the slow (center) branches are left at the seed.
bool hyperbolic_branch(const WaveParams& prm, double c, Branch b) {
    if (prm.q_is_one()) return true;
    return b == Branch::Unstable ? c > 0.0 : c < 0.0;
}

}  // namespace

Profile reconstruct_profile(const WaveParams& prm, double c, double c_star, const IntegratorConfig& cfg,
                            const ProfileOptions& opts) {
    const WaveClass wc = classify_speed(prm, c, c_star, opts.soliton_tol);
    const EventSet none{};
    const std::size_t target = opts.samples;

    switch (wc.kind) {
        case WaveKind::PeriodicWave:
            throw DomainError("reconstruct_profile: periodic waves come from find_limit_cycle");

        case WaveKind::Soliton: {
            const Trajectory h = extract_homoclinic(prm, c_star, cfg, opts.eps, opts.match_tol);
            return to_profile(h, wc.kind, c, Anchor::MaxAtZero);
        }

        case WaveKind::FrontOneToZeroMonotone:
        case WaveKind::FrontOneToZeroDampedOsc: {
            const SeedState seed = seed_l0(prm, c, opts.eps);
            const Trajectory back = integrate_branch(prm, c, seed, none, cfg, opts.tail_span, target);
            Trajectory fwd;
            if (hyperbolic_branch(prm, c, Branch::Stable)) {
                fwd = sampled(prm, c, seed.point, Direction::Forward, none, cfg, opts.tail_span, 0.0, target / 4);
            }
            Profile prof = to_profile(glue(back, fwd), wc.kind, c, Anchor::HalfLevelAtZero);
            const auto half = level_crossing(prof, 0.5, false, false);
            if (!half) throw ShootingAnomaly("reconstruct_profile: front never crosses f = 1/2");
            shift(prof, *half);
            return prof;
        }

        case WaveKind::FrontZeroToOne: {
            const SeedState seed = seed_l1(prm, c, opts.eps);
            const Trajectory fwd = integrate_branch(prm, c, seed, none, cfg, opts.tail_span, target);
            Trajectory back;
            if (hyperbolic_branch(prm, c, Branch::Unstable)) {
                back = sampled(prm, c, seed.point, Direction::Backward, none, cfg, opts.tail_span, 0.0, target / 4);
            }
            Profile prof = to_profile(glue(back, fwd), wc.kind, c, Anchor::HalfLevelAtZero);
            const auto half = level_crossing(prof, 0.5, true, true);
            if (!half) throw ShootingAnomaly("reconstruct_profile: front never crosses f = 1/2");
            shift(prof, *half);
            return prof;
        }

        case WaveKind::OscillatoryToZero: {
            const SeedState seed = seed_l0(prm, c, opts.eps);
            // Trace l0 backward one loop at a time, restarting on the axis.
            Trajectory back;
            back.direction = Direction::Backward;
            PhasePoint start = seed.point;
            double xi0 = 0.0;
            std::optional<double> anchor;
            for (int loop = 0; loop < std::max(opts.loops, 1); ++loop) {
                const Trajectory part =
                    loop == 0 ? integrate_branch(prm, c, seed, {EventKind::YZeroDown}, cfg, std::nullopt, target)
                              : sampled(prm, c, start, Direction::Backward, {EventKind::YZeroDown}, cfg,
                                        std::nullopt, xi0, target / 16);
                const std::size_t skip = back.samples.empty() ? 0 : 1;
                back.samples.insert(back.samples.end(), part.samples.begin() + static_cast<std::ptrdiff_t>(skip),
                                    part.samples.end());
                const auto ev = part.terminal_event();
                if (!ev || ev->kind != EventKind::YZeroDown) break;
                if (!anchor) anchor = ev->xi;
                start = {ev->point.x, 0.0};
                xi0 = ev->xi;
            }
            if (!anchor) throw ShootingAnomaly("reconstruct_profile: l0 does not cross Y = 0 backward");
            Trajectory fwd;
            if (hyperbolic_branch(prm, c, Branch::Stable)) {
                fwd = sampled(prm, c, seed.point, Direction::Forward, none, cfg, opts.tail_span, 0.0, target / 4);
            }
            Profile prof = to_profile(glue(back, fwd), wc.kind, c, Anchor::CrossingAtZero);
            shift(prof, *anchor);
            return prof;
        }
    }
    throw DomainError("reconstruct_profile: unhandled class");
}

Profile periodic_profile(const CycleResult& cycle, int periods) {
    if (!cycle.found) throw DomainError("periodic_profile: no cycle");
    Profile prof = to_profile(replay_cycle(cycle, periods), WaveKind::PeriodicWave, cycle.c, Anchor::MaxAtZero);
    if (!prof.samples.empty()) shift(prof, prof.samples.front().xi);
    return prof;
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
}

Oscillation oscillation_about_one(const Profile& prof, bool from_left) {
    Oscillation out;
    std::vector<ProfileSample> v = prof.samples;
    if (!from_left) std::reverse(v.begin(), v.end());
    double extreme = 0.0;
    bool started = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double a = v[i - 1].f - 1.0, b = v[i].f - 1.0;
        if (started) extreme = std::max(extreme, std::abs(a));
        if ((a < 0.0) != (b < 0.0)) {
            if (started) out.excursions.push_back(extreme);
            ++out.crossings;
            started = true;
            extreme = 0.0;
        }
    }
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Samples on the side of the global maximum facing `end`.
Trajectory tail_side(const Profile& prof, TailEnd end) {
    const auto& v = prof.samples;
    const auto top = static_cast<std::size_t>(
        std::max_element(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.f < b.f; }) - v.begin());
    Trajectory t;
    const std::size_t lo = end == TailEnd::PlusInfinity ? top : 0;
    const std::size_t hi = end == TailEnd::PlusInfinity ? v.size() : top + 1;
    for (std::size_t i = lo; i < hi; ++i) t.samples.push_back({v[i].xi, v[i].f, v[i].fprime});
    return t;
}

}  // namespace

bool tail_fit_accepted(const TailFit& fit, const TailLaw& law) noexcept {
    const double rel = std::abs(fit.measured - law.rate_or_exponent) / std::abs(law.rate_or_exponent);
    bool ok = rel <= 0.02;
    if (law.kind == TailKind::Algebraic && law.constant) {
        ok = ok && std::abs(fit.constant - *law.constant) <= 0.05 * std::abs(*law.constant);
    }
    return ok;
}

BranchTail check_branch_tail(const WaveParams& params, double c, Branch branch, const IntegratorConfig& cfg,
                             double eps, std::size_t samples) {
    BranchTail out;
    out.branch = branch;
    const TailEnd end = branch == Branch::Unstable ? TailEnd::MinusInfinity : TailEnd::PlusInfinity;
    out.law = tail_law(params, c, std::nullopt, end, branch);
    const SeedState seed = branch == Branch::Unstable ? seed_l1(params, c, eps) : seed_l0(params, c, eps);
    const Trajectory traj = integrate_branch(params, c, seed, {EventKind::YZeroDown}, cfg, std::nullopt, samples);
    out.fit = fit_tail(traj, out.law, default_window(traj, end));
    out.passed = tail_fit_accepted(out.fit, out.law);
    return out;
}

VerifyReport verify_profile(const Profile& prof, const WaveClass& wc, const WaveParams& params, double c) {
    (void)params;
    VerifyReport rep;
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.entries.push_back({std::move(name), ok, std::move(detail)});
    };
    if (prof.samples.empty()) {
        add("non_empty", false, "profile has no samples");
        return rep;
    }
    const double left = prof.samples.front().f;
    const double right = prof.samples.back().f;
    constexpr double kEndTol = 1e-3;
    auto end_check = [&](const char* name, double value, double target) {
        add(name, std::abs(value - target) <= kEndTol, "f=" + fmt(value) + " target " + fmt(target));
    };

    switch (wc.kind) {
        case WaveKind::FrontOneToZeroMonotone:
        case WaveKind::FrontOneToZeroDampedOsc:
            end_check("limit_minus_inf", left, 1.0);
            end_check("limit_plus_inf", right, 0.0);
            break;
        case WaveKind::FrontZeroToOne:
            end_check("limit_minus_inf", left, 0.0);
            end_check("limit_plus_inf", right, 1.0);
            break;
        case WaveKind::Soliton:
        case WaveKind::OscillatoryToZero:
            if (wc.kind == WaveKind::Soliton) end_check("limit_minus_inf", left, 0.0);
            end_check("limit_plus_inf", right, 0.0);
            break;
        case WaveKind::PeriodicWave:
            add("closed", std::abs(left - right) <= kEndTol, "|f(start) - f(end)|=" + fmt(std::abs(left - right)));
            break;
    }

    if (wc.monotone == true) {
        const bool rising = wc.kind == WaveKind::FrontZeroToOne;
        std::size_t bad = 0;
        for (std::size_t i = 1; i < prof.samples.size(); ++i) {
            const double d = prof.samples[i].f - prof.samples[i - 1].f;
            if (rising ? !(d > 0.0) : !(d < 0.0)) ++bad;
        }
        add("monotone", bad == 0, std::to_string(bad) + " non-strict steps");
    }

    if (wc.kind == WaveKind::FrontOneToZeroDampedOsc) {
        const Oscillation osc = oscillation_about_one(prof, true);
        // Excursions above and below 1 alternate and are not symmetric, so
        // each side is compared with itself.
        bool shrinking = osc.excursions.size() >= 1;
        for (std::size_t i = 2; i < osc.excursions.size(); ++i) {
            shrinking = shrinking && osc.excursions[i] > osc.excursions[i - 2];
        }
        add("damped_oscillation", osc.crossings >= 2 && shrinking,
            std::to_string(osc.crossings) + " crossings of f=1");
    }

    if (wc.kind == WaveKind::Soliton) {
        std::size_t maxima = 0;
        double top = 0.0;
        for (std::size_t i = 1; i + 1 < prof.samples.size(); ++i) {
            top = std::max(top, prof.samples[i].f);
            if (prof.samples[i].f > prof.samples[i - 1].f && prof.samples[i].f >= prof.samples[i + 1].f) ++maxima;
        }
        add("single_maximum", maxima == 1 && top > 1.0,
            std::to_string(maxima) + " interior maxima, max f=" + fmt(top));
    }

    for (const TailLaw& law : wc.tails) {
        const std::string name = std::string("tail_") + to_string(law.end);
        try {
            const Trajectory side = tail_side(prof, law.end);
            const TailFit fit = fit_tail(side, law, default_window(side, law.end));
            const bool ok = tail_fit_accepted(fit, law);
            std::string detail = "measured " + fmt(fit.measured) + " predicted " + fmt(law.rate_or_exponent);
            if (law.kind == TailKind::Algebraic && law.constant) {
                detail += ", constant " + fmt(fit.constant) + " predicted " + fmt(*law.constant);
            }
            add(name, ok, detail);
        } catch (const WavefrontError& e) {
            add(name, false, e.what());
        }
    }
    (void)c;
    return rep;
}

}  // namespace wavefront
