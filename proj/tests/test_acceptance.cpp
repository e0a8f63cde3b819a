// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wavefront/classify.hpp"
#include "wavefront/cycles.hpp"
#include "wavefront/scan.hpp"
#include "wavefront/shoot.hpp"

using namespace wavefront;

namespace {

const WaveParams kRef = validate(2, 3, 2, 1);

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CStarResult& reference_cstar() {
    static const CStarResult r = find_cstar(kRef, IntegratorConfig{});
    return r;
}

// c* of the reference parameters in [1.63, 1.73] within 30 s.
Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const CStarResult r = find_cstar(kRef, IntegratorConfig{});
    const double elapsed = seconds_since(t0);
    const bool ok = r.c_star >= 1.63 && r.c_star <= 1.73 && elapsed < 30.0;
    return {ok, fmt("c*=%.7f in %.2f s", r.c_star, elapsed)};
}

// 0 < c* < kn + 2 sqrt(p-q), c* < kn iff n < p+q+1, on >= 20 parameter sets.
Outcome criterion2() {
    const std::vector<std::array<double, 4>> grid = {
        {2, 3, 2, 1},   {2, 2, 1, 1},     {2, 3, 1, 0.5},   {3, 4, 2, 1},     {2, 2.5, 1.5, 2}, {3, 3, 2, 0.5},
        {2.5, 4, 3, 1}, {4, 3, 2, 1},     {5, 4, 2, 0.3},   {2, 5, 3, 1},     {3, 2, 1, 1},     {2, 4, 1.5, 0.5},
        {7, 3, 2, 1},   {5, 2, 1, 1},     {6, 2.5, 1.5, 0.5}, {9, 4, 3, 1},   {6, 2, 1.5, 1},   {8, 3, 2, 2},
        {5, 2, 1, 0.5}, {10, 5, 3, 1},    {5, 2.5, 1, 1},   {12, 5, 4, 0.5},
    };
    std::size_t sub = 0, super = 0, bad = 0;
    std::string failures;
    std::vector<CStarResult> results(grid.size());
    for_each_index(grid.size(), Exec::Parallel, [&](std::size_t i) {
        const auto& g = grid[i];
        results[i] = find_cstar(validate(g[0], g[1], g[2], g[3]), IntegratorConfig{});
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const CStarResult& r = results[i];
        const WaveParams& prm = r.params;
        const int side = prm.hopf_sign();
        (side < 0 ? sub : super) += 1;
        const bool ok = r.c_star > 0.0 && r.c_star < prm.node_speed() &&
                        (side < 0 ? r.c_star < prm.kn() : r.c_star > prm.kn());
        if (!ok) {
            ++bad;
            failures += fmt(" (%g,%g,%g,%g)", prm.n, prm.p, prm.q, prm.k);
        }
    }
    const bool ok = bad == 0 && grid.size() >= 20 && sub > 0 && super > 0;
    return {ok, std::to_string(grid.size()) + " sets (" + std::to_string(sub) + " with n<p+q+1, " +
                    std::to_string(super) + " with n>p+q+1), " + std::to_string(bad) + " violations" + failures};
}

// Cycle at c = 1.8, none at 1.6 and 2.5, amplitude shrinking toward kn.
Outcome criterion3() {
    const IntegratorConfig cfg;
    const CycleResult at18 = find_limit_cycle(kRef, 1.8, cfg);
    const CycleResult at16 = find_limit_cycle(kRef, 1.6, cfg);
    const CycleResult at25 = find_limit_cycle(kRef, 2.5, cfg);
    const CycleResult near = find_limit_cycle(kRef, kRef.kn() - 0.01, cfg);
    const CycleResult far = find_limit_cycle(kRef, kRef.kn() - 0.1, cfg);
    const bool ok = at18.found && !at16.found && !at25.found && near.found && far.found &&
                    near.amplitude < far.amplitude;
    std::string d = std::string("found(1.8)=") + (at18.found ? "true" : "false") +
                    " found(1.6)=" + (at16.found ? "true" : "false") + " found(2.5)=" + (at25.found ? "true" : "false");
    d += fmt(" amplitude(kn-0.01)=%.4f amplitude(kn-0.1)=%.4f", near.amplitude, far.amplitude);
    return {ok, d};
}

const CheckEntry* entry(const VerifyReport& rep, const std::string& name) {
    for (const auto& e : rep.entries) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool entry_passed(const VerifyReport& rep, const std::string& name) {
    const CheckEntry* e = entry(rep, name);
    return e && e->passed;
}

// Fronts at c = 4.5, 2.1 and -3.
Outcome criterion4() {
    const IntegratorConfig cfg;
    const double cs = reference_cstar().c_star;
    std::string d;
    bool ok = true;

    const double x0 = compute_x0(kRef, 4.5, cfg);
    const Profile down = reconstruct_profile(kRef, 4.5, cs, cfg);
    const VerifyReport rd = verify_profile(down, classify_speed(kRef, 4.5, cs), kRef, 4.5);
    const bool ok45 = x0 == 1.0 && entry_passed(rd, "monotone") && entry_passed(rd, "limit_minus_inf") &&
                      entry_passed(rd, "limit_plus_inf");
    ok = ok && ok45;
    d += fmt("c=4.5: X0=%g", x0) + (ok45 ? " decreasing" : " not monotone");

    // l0 continued backward from P1 with no stopping event.
    const Trajectory l0 = integrate_branch(kRef, 2.1, seed_l0(kRef, 2.1), {}, cfg);
    double closest = 1e300;
    for (const auto& s : l0.samples) closest = std::min(closest, std::hypot(s.x - 1.0, s.y));
    const Profile damped = reconstruct_profile(kRef, 2.1, cs, cfg);
    const VerifyReport rdm = verify_profile(damped, classify_speed(kRef, 2.1, cs), kRef, 2.1);
    const Oscillation osc = oscillation_about_one(damped, true);
    const bool ok21 = closest < 1e-3 && l0.count(EventKind::YZeroUp) >= 2 && entry_passed(rdm, "damped_oscillation") &&
                      entry_passed(rdm, "limit_minus_inf") && entry_passed(rdm, "limit_plus_inf");
    ok = ok && ok21;
    d += fmt("; c=2.1: l0 within %.1e of P2, %g crossings of f=1", closest, static_cast<double>(osc.crossings));

    const double x1 = compute_x1(kRef, -3.0, cfg);
    const Profile up = reconstruct_profile(kRef, -3.0, cs, cfg);
    const VerifyReport ru = verify_profile(up, classify_speed(kRef, -3.0, cs), kRef, -3.0);
    const bool okm3 = x1 == 1.0 && entry_passed(ru, "monotone") && entry_passed(ru, "limit_minus_inf") &&
                      entry_passed(ru, "limit_plus_inf");
    ok = ok && okm3;
    d += fmt("; c=-3: X1=%g", x1) + (okm3 ? " increasing" : " not monotone");
    return {ok, d};
}

// Tail fits: rates/exponents within 2%, constants within 5%.
Outcome criterion5() {
    const IntegratorConfig cfg;
    struct Case {
        const char* name;
        WaveParams prm;
        double c;
        Branch branch;
    };
    const std::vector<Case> cases = {
        {"l1 exp rate c (c=1)", kRef, 1.0, Branch::Unstable},
        {"l0 f*xi -> 1 (c=1,q=2)", kRef, 1.0, Branch::Stable},
        {"l0 f*xi^2 -> 6 (c=0)", kRef, 0.0, Branch::Stable},
        {"l1 f*xi^2 -> 6 (c=0)", kRef, 0.0, Branch::Unstable},
        {"l0 rate 1 (q=1,c=0)", validate(2, 3, 1, 1), 0.0, Branch::Stable},
    };
    bool ok = true;
    std::string d;
    for (const auto& cs : cases) {
        const BranchTail t = check_branch_tail(cs.prm, cs.c, cs.branch, cfg);
        ok = ok && t.passed;
        if (!d.empty()) d += "; ";
        d += std::string(cs.name) + fmt(": %.5f vs %.5f", t.fit.measured, t.law.rate_or_exponent);
        if (t.law.kind == TailKind::Algebraic && t.law.constant) {
            d += fmt(", C=%.4f vs %.4f", t.fit.constant, *t.law.constant);
        }
    }
    return {ok, d};
}

// X1 nondecreasing, X0 nonincreasing over [-2, 4] step 0.1, one sign change.
Outcome criterion6() {
    const auto speeds = arange_inclusive(-2.0, 4.0, 0.1);
    const MonotonicityReport rep = monotonicity_scan(kRef, speeds, IntegratorConfig{}, kDefaultSeedOffset,
                                                     Exec::Parallel);
    std::string d = std::to_string(speeds.size()) + " speeds, X1 " + (rep.x1_monotone ? "monotone" : "NOT monotone") +
                    ", X0 " + (rep.x0_monotone ? "monotone" : "NOT monotone") + ", " +
                    std::to_string(rep.gap_sign_changes) + " sign change(s) of g";
    for (const auto& v : rep.violations) d += "; " + v;
    return {rep.passed(), d};
}

// |int (c* - kn f^(n-1)) f'^2| / int f'^2 < 1e-3 on the homoclinic.
Outcome criterion7() {
    const CStarResult& r = reference_cstar();
    if (!r.homoclinic_matched) return {false, "homoclinic orbit not glued"};
    const EnergyResidual e = energy_residual(r.homoclinic, kRef, r.homoclinic_c);
    const double ratio = std::abs(e.residual) / e.normalizer;
    return {ratio < 1e-3, fmt("ratio %.2e", ratio)};
}

// Calculus lemmas on 50 random (p, q), Lienard separation, flow signs.
Outcome criterion8() {
    std::mt19937_64 rng(1234567);
    std::uniform_real_distribution<double> qd(1.0, 5.0);
    std::uniform_real_distribution<double> gap(0.05, 5.0);
    std::size_t calc_bad = 0, lien_bad = 0, flow_bad = 0;
    double min_gap = 1e300;
    for (int i = 0; i < 50; ++i) {
        const double q = qd(rng);
        const double p = q + gap(rng);
        const WaveParams prm = validate(2, p, q, 1);
        if (!calculus_checks(prm, 200).passed()) ++calc_bad;
        for (double c : {prm.kn(), prm.kn() + 1.0}) {
            const LienardCurves l = lienard_curves(prm, c, 200);
            min_gap = std::min(min_gap, l.min_gap);
            if (!(l.min_gap > 0.0)) ++lien_bad;
        }
        const double w = 2.0 * prm.focus_half_width();
        for (double dc : {0.0, 0.5, 2.0}) {
            if (!check_large_speed_triangle(prm, prm.node_speed() + dc).passed) ++flow_bad;
            if (!check_small_speed_triangle(prm, -w - dc).passed) ++flow_bad;
        }
    }
    const bool ok = calc_bad == 0 && lien_bad == 0 && flow_bad == 0;
    return {ok, fmt("50 random (p,q): calculus failures %g, Lienard failures %g (min gap %.3e), flow failures %g",
                    static_cast<double>(calc_bad), static_cast<double>(lien_bad), min_gap,
                    static_cast<double>(flow_bad))};
}

// eps halving, tolerance halving, round trips.
Outcome criterion9() {
    const IntegratorConfig cfg;
    CStarOptions opts;
    const CStarResult base = reference_cstar();
    opts.eps = kDefaultSeedOffset / 2.0;
    const CStarResult half = find_cstar(kRef, cfg, opts);
    const double dc = std::abs(base.c_star - half.c_star);
    const bool eps_ok = dc < 10.0 * opts.c_tol;

    IntegratorConfig fine = cfg;
    fine.rel_tol /= 2.0;
    fine.abs_tol /= 2.0;
    fine.event_tol /= 2.0;
    const auto speeds = arange_inclusive(-2.0, 4.0, 0.25);
    const auto coarse = scan_crossings(kRef, speeds, cfg, kDefaultSeedOffset, Exec::Parallel);
    const auto finer = scan_crossings(kRef, speeds, fine, kDefaultSeedOffset, Exec::Parallel);
    double shift = 0.0;
    bool finite_agree = true;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        shift = std::max(shift, std::abs(coarse[i].x1 - finer[i].x1));
        if (std::isinf(coarse[i].x0) || std::isinf(finer[i].x0)) {
            finite_agree = finite_agree && std::isinf(coarse[i].x0) == std::isinf(finer[i].x0);
        } else {
            shift = std::max(shift, std::abs(coarse[i].x0 - finer[i].x0));
        }
    }
    const bool tol_ok = finite_agree && shift < 10.0 * fine.rel_tol;

    double roundtrip = 0.0;
    roundtrip = std::max(roundtrip, roundtrip_check(kRef, 1.8, {1.2, 0.0}, 10.0, cfg));
    roundtrip = std::max(roundtrip, roundtrip_check(kRef, 2.1, {1.1, 0.05}, 5.0, cfg));
    roundtrip = std::max(roundtrip, roundtrip_check(kRef, 1.0, {0.8, 0.1}, 3.0, cfg));
    const bool rt_ok = roundtrip < 1e-7;

    return {eps_ok && tol_ok && rt_ok, fmt("eps halving moves c* by %.2e; tolerance halving moves crossings by "
                                           "%.2e (bound %.1e); round trip %.2e",
                                           dc, shift, 10.0 * fine.rel_tol, roundtrip)};
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3,
                                                            criterion4, criterion5, criterion6,
                                                            criterion7, criterion8, criterion9};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed) ++failed;
        std::printf("criterion %zu: %s  %s\n", i + 1, o.passed ? "PASS" : "FAIL", o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
