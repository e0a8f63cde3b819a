#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wavefront/classify.hpp"
#include "wavefront/cycles.hpp"
#include "wavefront/errors.hpp"
#include "wavefront/io.hpp"
#include "wavefront/parallel.hpp"
#include "wavefront/scan.hpp"
#include "wavefront/shoot.hpp"

namespace wavefront::cli {

namespace {

/// Usage problems detected after parsing (missing --c, bad combinations).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string g15(double v) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct Context {
    RunConfig cfg;
    WaveParams params;
    IntegratorConfig integ;
    std::optional<double> cstar_cache;

    double speed() const {
        if (!cfg.c) throw UsageError("--c is required for this command");
        return *cfg.c;
    }

    double cstar() {
        if (cfg.cstar) return *cfg.cstar;
        if (!cstar_cache) cstar_cache = find_cstar(params, integ, cstar_options()).c_star;
        return *cstar_cache;
    }

    CStarOptions cstar_options() const {
        CStarOptions o;
        o.c_tol = cfg.ctol;
        o.eps = cfg.eps;
        return o;
    }

    bool json() const { return cfg.format == "json"; }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

void emit(const Context& ctx, std::ostream& out, const std::string& text) {
    if (ctx.cfg.out.empty()) {
        out << text;
    } else {
        write_text(ctx.cfg.out, text);
    }
}

void merge(Json& dst, const Json& src) {
    for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    write_trajectory_csv(os, traj);
    return os.str();
}

int cmd_cstar(Context& ctx, std::ostream& out) {
    const CStarResult r = find_cstar(ctx.params, ctx.integ, ctx.cstar_options());
    if (ctx.json()) {
        emit(ctx, out, dump(to_json(r)));
    } else {
        std::string s = "n,p,q,k,c_star,bracket_lo,bracket_hi,iterations,kn,upper_bound,bounds_hold\n";
        for (double v : {r.params.n, r.params.p, r.params.q, r.params.k, r.c_star, r.bracket_lo, r.bracket_hi}) {
            s += g15(v) + ",";
        }
        s += std::to_string(r.iterations) + "," + g15(r.kn()) + "," + g15(r.upper_bound()) + "," +
             (r.bounds_hold ? "true" : "false") + "\n";
        emit(ctx, out, s);
    }
    return kOk;
}

int cmd_classify(Context& ctx, std::ostream& out) {
    const double c = ctx.speed();
    const double cs = ctx.cstar();
    const WaveClass wc = classify_speed(ctx.params, c, cs);
    if (ctx.json()) {
        Json j;
        j["params"] = to_json(ctx.params);
        j["c_star"] = round15(cs);
        merge(j, to_json(wc));
        emit(ctx, out, dump(j));
    } else {
        std::string s = "c,c_star,class,monotone,periodic_companion\n";
        s += g15(c) + "," + g15(cs) + "," + to_string(wc.kind) + "," +
             (wc.monotone ? (*wc.monotone ? "true" : "false") : "") + "," +
             (wc.periodic_companion ? "true" : "false") + "\n";
        emit(ctx, out, s);
    }
    return kOk;
}

CycleOptions cycle_options(const Context& ctx) {
    CycleOptions o;
    o.eps = ctx.cfg.eps;
    o.scan_points = ctx.cfg.scan_points;
    return o;
}

int cmd_profile(Context& ctx, std::ostream& out) {
    const double c = ctx.speed();
    const double cs = ctx.cstar();
    WaveClass wc = classify_speed(ctx.params, c, cs);
    Profile prof;
    if (ctx.cfg.periodic) {
        if (!wc.periodic_companion) throw UsageError("no periodic wave is expected at this speed");
        const CycleResult cyc = find_limit_cycle(ctx.params, c, ctx.integ, cycle_options(ctx));
        if (!cyc.found) throw NoReturn("no limit cycle found at c=" + g15(c));
        prof = periodic_profile(cyc, ctx.cfg.periods);
        wc = WaveClass{WaveKind::PeriodicWave, c, std::nullopt, false, {}};
    } else {
        ProfileOptions po;
        po.eps = ctx.cfg.eps;
        po.loops = ctx.cfg.loops;
        po.samples = ctx.cfg.samples;
        prof = reconstruct_profile(ctx.params, c, cs, ctx.integ, po);
    }
    const VerifyReport rep = verify_profile(prof, wc, ctx.params, c);
    if (ctx.json()) {
        Json j;
        j["params"] = to_json(ctx.params);
        j["c_star"] = round15(cs);
        j["classification"] = to_json(wc);
        j["verify"] = to_json(rep);
        j["profile"] = to_json(prof);
        emit(ctx, out, dump(j));
    } else {
        std::ostringstream os;
        write_profile_csv(os, prof);
        emit(ctx, out, os.str());
    }
    return rep.passed() ? kOk : kVerificationFailed;
}

int cmd_cycle(Context& ctx, std::ostream& out) {
    const double c = ctx.speed();
    const CycleResult r = find_limit_cycle(ctx.params, c, ctx.integ, cycle_options(ctx));
    if (ctx.json()) {
        Json j;
        j["params"] = to_json(ctx.params);
        merge(j, to_json(r));
        emit(ctx, out, dump(j));
    } else {
        emit(ctx, out, trajectory_csv(r.orbit));
    }
    if (!ctx.cfg.orbit.empty()) write_text(ctx.cfg.orbit, trajectory_csv(r.orbit));
    return kOk;
}

struct PortraitItem {
    std::string file;
    std::string kind;
    PhasePoint seed;
    Direction direction = Direction::Forward;
    Trajectory traj;
};

int cmd_portrait(Context& ctx, std::ostream& out) {
    const double c = ctx.speed();
    const std::filesystem::path dir = ctx.cfg.out.empty() ? "portrait" : ctx.cfg.out;
    std::filesystem::create_directories(dir);

    std::vector<PortraitItem> items;
    items.push_back({"l1.csv", "l1", seed_l1(ctx.params, c, ctx.cfg.eps).point, Direction::Forward, {}});
    items.push_back({"l0.csv", "l0", seed_l0(ctx.params, c, ctx.cfg.eps).point, Direction::Backward, {}});
    const std::size_t g = ctx.cfg.grid;
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            const double fx = g > 1 ? static_cast<double>(i) / static_cast<double>(g - 1) : 0.5;
            const double fy = g > 1 ? static_cast<double>(j) / static_cast<double>(g - 1) : 0.5;
            char name[32];
            std::snprintf(name, sizeof name, "seed_%03zu.csv", items.size() - 2);
            items.push_back({name, "grid", {0.1 + 1.8 * fx, -0.8 + 1.6 * fy}, Direction::Forward, {}});
        }
    }

    // The separatrices run until a terminal event; slow branches need long
    // xi spans to leave P1.
    const double span = ctx.cfg.span;
    for_each_index(items.size(), Exec::Parallel, [&](std::size_t i) {
        PortraitItem& it = items[i];
        if (it.kind == "l1") {
            it.traj = integrate_branch(ctx.params, c, seed_l1(ctx.params, c, ctx.cfg.eps), {}, ctx.integ);
        } else if (it.kind == "l0") {
            it.traj = integrate_branch(ctx.params, c, seed_l0(ctx.params, c, ctx.cfg.eps), {}, ctx.integ);
        } else {
            it.traj = integrate(ctx.params, c, it.seed, it.direction, {}, ctx.integ, span);
        }
    });

    Json index;
    index["params"] = to_json(ctx.params);
    index["c"] = round15(c);
    Json files = Json::array();
    std::string csv = "file,kind,direction,seed_x,seed_y,samples,terminal\n";
    for (const auto& it : items) {
        write_text((dir / it.file).string(), trajectory_csv(it.traj));
        const auto term = it.traj.terminal_event();
        const std::string terminal = term ? to_string(term->kind) : "span";
        const char* direction = it.direction == Direction::Forward ? "forward" : "backward";
        Json f;
        f["file"] = it.file;
        f["kind"] = it.kind;
        f["direction"] = direction;
        f["seed"] = Json::array({round15(it.seed.x), round15(it.seed.y)});
        f["samples"] = it.traj.samples.size();
        f["terminal"] = terminal;
        files.push_back(std::move(f));
        csv += it.file + "," + it.kind + "," + direction + "," + g15(it.seed.x) + "," + g15(it.seed.y) + "," +
               std::to_string(it.traj.samples.size()) + "," + terminal + "\n";
    }
    index["files"] = std::move(files);
    const std::string index_name = ctx.json() ? "index.json" : "index.csv";
    write_text((dir / index_name).string(), ctx.json() ? dump(index) : csv);
    out << (dir / index_name).string() << "\n";
    return kOk;
}

Json flow_json(const char* regime, double c, const FlowSignCheck& chk) {
    Json j;
    j["regime"] = regime;
    j["c"] = round15(c);
    j["passed"] = chk.passed;
    j["slope"] = round15(chk.slope);
    j["min_value"] = round15(chk.min_value);
    j["violations"] = chk.violations;
    return j;
}

int cmd_checks(Context& ctx, std::ostream& out) {
    const WaveParams& prm = ctx.params;
    bool all = true;
    Json j;
    j["params"] = to_json(prm);

    const CalculusReport calc = calculus_checks(prm, ctx.cfg.check_grid);
    all = all && calc.passed();
    j["calculus"] = to_json(calc);

    Json lien = Json::array();
    if (prm.n > 1.0 && prm.n <= prm.p + prm.q + 1.0) {
        for (double c : {prm.kn(), prm.kn() + 1.0}) {
            const LienardCurves lc = lienard_curves(prm, c, ctx.cfg.check_grid);
            const bool ok = lc.min_gap > 0.0;
            all = all && ok;
            Json e = to_json(lc);
            e["passed"] = ok;
            lien.push_back(std::move(e));
        }
    }
    j["lienard"] = std::move(lien);

    const auto speeds = arange_inclusive(ctx.cfg.cmin, ctx.cfg.cmax, ctx.cfg.cstep);
    const MonotonicityReport mono = monotonicity_scan(prm, speeds, ctx.integ, ctx.cfg.eps, Exec::Parallel);
    all = all && mono.passed();
    Json m;
    m["speeds"] = speeds.size();
    m["x1_monotone"] = mono.x1_monotone;
    m["x0_monotone"] = mono.x0_monotone;
    m["gap_sign_changes"] = mono.gap_sign_changes;
    m["violations"] = mono.violations;
    m["passed"] = mono.passed();
    j["monotonicity"] = std::move(m);

    Json flows = Json::array();
    const double w = 2.0 * prm.focus_half_width();
    for (double d : {0.0, 0.5, 2.0}) {
        const double cl = prm.node_speed() + d;
        const FlowSignCheck large = check_large_speed_triangle(prm, cl, ctx.cfg.check_grid);
        const double cs = -w - d;
        const FlowSignCheck small = check_small_speed_triangle(prm, cs, ctx.cfg.check_grid);
        all = all && large.passed && small.passed;
        flows.push_back(flow_json("large", cl, large));
        flows.push_back(flow_json("small", cs, small));
    }
    j["flow_sign"] = std::move(flows);
    j["passed"] = all;

    if (ctx.json()) {
        emit(ctx, out, dump(j));
    } else {
        std::string s = "check,passed\n";
        s += std::string("calculus,") + (calc.passed() ? "true" : "false") + "\n";
        for (const auto& e : j["lienard"]) {
            s += "lienard_c=" + g15(e["c"].get<double>()) + "," + (e["passed"].get<bool>() ? "true" : "false") + "\n";
        }
        s += std::string("monotonicity,") + (mono.passed() ? "true" : "false") + "\n";
        for (const auto& e : j["flow_sign"]) {
            s += "flow_" + e["regime"].get<std::string>() + "_c=" + g15(e["c"].get<double>()) + "," +
                 (e["passed"].get<bool>() ? "true" : "false") + "\n";
        }
        emit(ctx, out, s);
    }
    return all ? kOk : kVerificationFailed;
}

int cmd_tails(Context& ctx, std::ostream& out) {
    const double c = ctx.speed();
    std::vector<BranchTail> tails(2);
    for_each_index(2, Exec::Parallel, [&](std::size_t i) {
        const Branch b = i == 0 ? Branch::Unstable : Branch::Stable;
        tails[i] = check_branch_tail(ctx.params, c, b, ctx.integ, ctx.cfg.eps, ctx.cfg.samples);
    });
    bool all = true;
    Json arr = Json::array();
    std::string csv = "branch,end,kind,predicted,measured,predicted_constant,fitted_constant,passed\n";
    for (const auto& t : tails) {
        all = all && t.passed;
        Json e;
        e["branch"] = to_string(t.branch);
        merge(e, to_json(t.fit, t.law));
        e["passed"] = t.passed;
        arr.push_back(std::move(e));
        csv += std::string(to_string(t.branch)) + "," + to_string(t.law.end) + "," + to_string(t.law.kind) + "," +
               g15(t.law.rate_or_exponent) + "," + g15(t.fit.measured) + "," +
               (t.law.constant ? g15(*t.law.constant) : "") + "," + g15(t.fit.constant) + "," +
               (t.passed ? "true" : "false") + "\n";
    }
    if (ctx.json()) {
        Json j;
        j["params"] = to_json(ctx.params);
        j["c"] = round15(c);
        j["tails"] = std::move(arr);
        j["passed"] = all;
        emit(ctx, out, dump(j));
    } else {
        emit(ctx, out, csv);
    }
    return all ? kOk : kVerificationFailed;
}

void add_shared(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--n", rc.n, "Convection exponent")->capture_default_str();
    sub->add_option("--p", rc.p, "Reaction exponent")->capture_default_str();
    sub->add_option("--q", rc.q, "Absorption exponent")->capture_default_str();
    sub->add_option("--k", rc.k, "Convection coefficient")->capture_default_str();
    sub->add_option("--c", rc.c, "Wave speed");
    sub->add_option("--cstar", rc.cstar, "Use this c* instead of computing it");
    sub->add_option("--ctol", rc.ctol, "Bisection tolerance on c*")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--rtol", rc.rtol, "Integrator relative tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--atol", rc.atol, "Integrator absolute tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--eps", rc.eps, "Seed offset from P1")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", rc.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", rc.out, "Output file (directory for portrait)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Travelling waves of the generalized Burgers-Fisher equation", "wavefront"};
    app.require_subcommand(1);

    auto* cstar = app.add_subcommand("cstar", "Critical speed c*");
    auto* classify = app.add_subcommand("classify", "Kind of wave at speed c");
    auto* profile = app.add_subcommand("profile", "Reconstruct and verify the profile at speed c");
    auto* cycle = app.add_subcommand("cycle", "Limit cycle around P2 at speed c");
    auto* portrait = app.add_subcommand("portrait", "Phase portrait trajectories at speed c");
    auto* checks = app.add_subcommand("checks", "Lemma verification suite");
    auto* tails = app.add_subcommand("tails", "Decay laws of l1 and l0 at speed c");
    for (auto* sub : {cstar, classify, profile, cycle, portrait, checks, tails}) add_shared(sub, rc);

    profile->add_flag("--periodic", rc.periodic, "Emit the periodic companion wave");
    profile->add_option("--loops", rc.loops, "Loops traced for oscillatory waves")->capture_default_str();
    profile->add_option("--periods", rc.periods, "Periods replayed for --periodic")->capture_default_str();
    profile->add_option("--samples", rc.samples, "Approximate sample count")->capture_default_str();
    cycle->add_option("--scan-points", rc.scan_points, "Return-map scan points")->capture_default_str();
    cycle->add_option("--orbit", rc.orbit, "Also write the closed orbit as CSV");
    portrait->add_option("--grid", rc.grid, "Seeds per axis")->capture_default_str();
    portrait->add_option("--span", rc.span, "Longest xi span per trajectory")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    checks->add_option("--cmin", rc.cmin, "First speed of the monotonicity scan")->capture_default_str();
    checks->add_option("--cmax", rc.cmax, "Last speed of the monotonicity scan")->capture_default_str();
    checks->add_option("--cstep", rc.cstep, "Speed step of the monotonicity scan")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    checks->add_option("--grid", rc.check_grid, "Grid size of the calculus and flow checks")->capture_default_str();
    tails->add_option("--samples", rc.samples, "Approximate sample count")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Context ctx{rc, validate(rc.n, rc.p, rc.q, rc.k), {}, std::nullopt};
        ctx.integ.rel_tol = rc.rtol;
        ctx.integ.abs_tol = rc.atol;
        ctx.integ.check();
        if (ctx.params.below_classical_range()) {
            err << "warning: n=" << rc.n << " is below the classical range n >= 2\n";
        }
        if (*cstar) return cmd_cstar(ctx, out);
        if (*classify) return cmd_classify(ctx, out);
        if (*profile) return cmd_profile(ctx, out);
        if (*cycle) return cmd_cycle(ctx, out);
        if (*portrait) return cmd_portrait(ctx, out);
        if (*checks) return cmd_checks(ctx, out);
        if (*tails) return cmd_tails(ctx, out);
        return kUsage;
    } catch (const ConstraintViolation& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const WavefrontError& e) {
        err << "anomaly: " << e.what() << "\n";
        return kAnomaly;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace wavefront::cli
