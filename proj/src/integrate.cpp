#include "wavefront/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace wavefront {

void IntegratorConfig::check() const {
    auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
    if (!in_unit(rel_tol) || !in_unit(abs_tol)) {
        throw std::invalid_argument("IntegratorConfig: tolerances must lie in (0, 1)");
    }
    if (!(max_step > 0.0) || !(x_max > 0.0) || !(y_max > 0.0) || !(xi_budget > 0.0) ||
        !(converge_radius > 0.0) || !(arrival_x > 0.0) || !(event_tol > 0.0) || max_steps <= 0 ||
        sample_spacing < 0.0) {
        throw std::invalid_argument("IntegratorConfig: budgets and radii must be positive");
    }
}

const char* to_string(EventKind kind) noexcept {
    switch (kind) {
        case EventKind::YZeroDown: return "YZeroDown";
        case EventKind::YZeroUp: return "YZeroUp";
        case EventKind::XZero: return "XZero";
        case EventKind::Escape: return "Escape";
        case EventKind::ConvergedP1: return "ConvergedP1";
        case EventKind::ConvergedP2: return "ConvergedP2";
        case EventKind::BudgetExhausted: return "BudgetExhausted";
    }
    return "Unknown";
}

std::optional<EventKind> event_kind_from_string(const std::string& name) noexcept {
    for (auto k : {EventKind::YZeroDown, EventKind::YZeroUp, EventKind::XZero, EventKind::Escape,
                   EventKind::ConvergedP1, EventKind::ConvergedP2, EventKind::BudgetExhausted}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

std::optional<Event> Trajectory::terminal_event() const {
    if (events.empty() || samples.empty()) return std::nullopt;
    const Event& last = events.back();
    if (last.kind == EventKind::YZeroDown || last.kind == EventKind::YZeroUp) {
        // A crossing ends the orbit only if nothing was integrated past it.
        if (last.xi != samples.back().xi) return std::nullopt;
    }
    return last;
}

std::optional<Event> Trajectory::first_event(EventKind kind) const {
    for (const auto& e : events) {
        if (e.kind == kind) return e;
    }
    return std::nullopt;
}

std::size_t Trajectory::count(EventKind kind) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [kind](const Event& e) { return e.kind == kind; }));
}

Trajectory Trajectory::ascending() const {
    Trajectory out = *this;
    if (direction == Direction::Backward) {
        std::reverse(out.samples.begin(), out.samples.end());
    }
    return out;
}

Trajectory Trajectory::shifted(double origin) const {
    Trajectory out = *this;
    for (auto& s : out.samples) s.xi -= origin;
    for (auto& e : out.events) e.xi -= origin;
    return out;
}

namespace {

using State = std::array<double, 2>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense output (Hairer's contd5).
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

struct System {
    const WaveParams& params;
    double c;
    double sign;  // +1 forward, -1 backward

    State operator()(const State& s) const noexcept {
        const PhasePoint v = vector_field(params, c, {s[0], s[1]});
        return {sign * v.x, sign * v.y};
    }
};

struct StepResult {
    State y1;
    State k7;  // FSAL derivative at y1
    double err = 0.0;
    std::array<State, 5> dense;  // rcont1..rcont5
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [w, k] : terms) {
        out[0] += h * w * (*k)[0];
        out[1] += h * w * (*k)[1];
    }
    return out;
}

StepResult dopri_step(const System& f, const State& y0, const State& k1, double h, double rtol,
                      double atol) {
    const State k2 = f(axpy(y0, h, {{a21, &k1}}));
    const State k3 = f(axpy(y0, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = f(axpy(y0, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(axpy(y0, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = f(axpy(y0, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    StepResult r;
    r.y1 = axpy(y0, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    r.k7 = f(r.y1);

    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * r.k7[i]);
        const double sc = atol + rtol * std::max(std::abs(y0[i]), std::abs(r.y1[i]));
        acc += (e / sc) * (e / sc);
    }
    r.err = std::sqrt(acc / 2.0);

    for (int i = 0; i < 2; ++i) {
        const double dy = r.y1[i] - y0[i];
        const double bspl = h * k1[i] - dy;
        r.dense[0][i] = y0[i];
        r.dense[1][i] = dy;
        r.dense[2][i] = bspl;
        r.dense[3][i] = dy - h * r.k7[i] - bspl;
        r.dense[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * r.k7[i]);
    }
    return r;
}

State dense_eval(const std::array<State, 5>& rc, double theta) {
    const double t1 = 1.0 - theta;
    State out;
    for (int i = 0; i < 2; ++i) {
        out[i] = rc[0][i] + theta * (rc[1][i] + t1 * (rc[2][i] + theta * (rc[3][i] + t1 * rc[4][i])));
    }
    return out;
}

double initial_step(const System& f, const State& y0, const State& f0, double rtol, double atol,
                    double hmax) {
    double d0 = 0.0, d1n = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        d0 += (y0[i] / sc) * (y0[i] / sc);
        d1n += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / 2.0);
    d1n = std::sqrt(d1n / 2.0);
    double h = (d0 < 1e-10 || d1n < 1e-10) ? 1e-6 : 0.01 * d0 / d1n;
    h = std::min(h, hmax);
    const State y1 = axpy(y0, h, {{1.0, &f0}});
    const State f1 = f(y1);
    double d2 = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        d2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
    }
    d2 = std::sqrt(d2 / 2.0) / h;
    const double dmax = std::max(d1n, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / dmax, 0.2);
    return std::min({100.0 * h, h1, hmax});
}

bool finite(const State& s) { return std::isfinite(s[0]) && std::isfinite(s[1]); }

class Integrator {
public:
    Integrator(const WaveParams& params, double c, Direction dir, EventSet stop_on,
               const IntegratorConfig& cfg, std::optional<double> span, double xi0)
        : params_(params),
          c_(c),
          sign_(dir == Direction::Forward ? 1.0 : -1.0),
          f_{params, c, sign_},
          stop_on_(stop_on),
          cfg_(cfg),
          span_(span),
          xi0_(xi0) {
        traj_.direction = dir;
    }

    Trajectory run(PhasePoint seed) {
        State y{seed.x, seed.y};
        if (!finite(y)) throw IntegrationError(IntegrationFailure::NonFinite, "non-finite seed");
        push_sample(0.0, y);

        State k1 = f_(y);
        if (k1[0] == 0.0 && k1[1] == 0.0) {
            const bool near_p2 = std::hypot(y[0] - 1.0, y[1]) < 0.5;
            add_event(near_p2 ? EventKind::ConvergedP2 : EventKind::ConvergedP1, 0.0, y);
            return std::move(traj_);
        }
        if (span_ && *span_ <= 0.0) return std::move(traj_);

        const double limit = span_ ? std::min(*span_, cfg_.xi_budget) : cfg_.xi_budget;
        double tau = 0.0;
        double h = initial_step(f_, y, k1, cfg_.rel_tol, cfg_.abs_tol, std::min(cfg_.max_step, limit));
        bool rejected_last = false;
        std::int64_t steps = 0;

        while (true) {
            if (++steps > cfg_.max_steps) {
                throw IntegrationError(IntegrationFailure::StiffnessFailure,
                                       "integrate: step limit reached (stiff or stalled orbit)");
            }
            bool clipped = false;
            if (tau + h >= limit) {
                h = limit - tau;
                clipped = true;
            }
            if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, tau)) {
                throw IntegrationError(IntegrationFailure::StiffnessFailure, "integrate: step size underflow");
            }
            StepResult step = dopri_step(f_, y, k1, h, cfg_.rel_tol, cfg_.abs_tol);
            if (!finite(step.y1) || !std::isfinite(step.err)) {
                if (h < 1e-8) {
                    throw IntegrationError(IntegrationFailure::NonFinite, "integrate: non-finite state");
                }
                h *= 0.1;
                rejected_last = true;
                continue;
            }
            if (step.err > 1.0) {
                h *= std::max(0.2, 0.9 * std::pow(step.err, -0.2));
                rejected_last = true;
                continue;
            }

            if (handle_step(tau, h, y, k1, step)) return std::move(traj_);

            tau += h;
            y = step.y1;
            k1 = step.k7;

            if (clipped) {
                if (!span_ || tau < *span_) add_event(EventKind::BudgetExhausted, tau, y);
                return std::move(traj_);
            }
            if (terminal_state(tau, y)) return std::move(traj_);

            double fac = step.err == 0.0 ? 10.0 : 0.9 * std::pow(step.err, -0.2);
            fac = std::clamp(fac, 0.2, rejected_last ? 1.0 : 10.0);
            h = std::min(h * fac, cfg_.max_step);
            rejected_last = false;
        }
    }

private:
    double xi_of(double tau) const noexcept { return xi0_ + sign_ * tau; }

    void push_sample(double tau, const State& y) { traj_.samples.push_back({xi_of(tau), y[0], y[1]}); }

    void add_event(EventKind kind, double tau, const State& y) {
        traj_.events.push_back({kind, xi_of(tau), {y[0], y[1]}});
    }

    void push_dense(double tau, double h, const StepResult& step, double theta_end) {
        if (cfg_.sample_spacing <= 0.0 || h <= cfg_.sample_spacing) return;
        const double dtheta = cfg_.sample_spacing / h;
        for (double theta = dtheta; theta < theta_end - 1e-12; theta += dtheta) {
            push_sample(tau + theta * h, dense_eval(step.dense, theta));
        }
    }

    // Finds theta in (0, 1] where component `comp` of the dense interpolant
    // vanishes, then polishes it with genuine RK steps and Newton updates.
    std::pair<double, State> locate(double tau, double h, const State& y0, const State& k1,
                                    const StepResult& step, int comp) const {
        double lo = 0.0, hi = 1.0;
        double glo = y0[comp], ghi = step.y1[comp];
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            // Illinois-style regula falsi guarded by bisection.
            double mid = (ghi != glo) ? lo + (hi - lo) * glo / (glo - ghi) : 0.5 * (lo + hi);
            if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
            if (it % 3 == 2) mid = 0.5 * (lo + hi);
            const double gm = dense_eval(step.dense, mid)[comp];
            if (gm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((gm > 0.0) == (glo > 0.0)) {
                lo = mid;
                glo = gm;
            } else {
                hi = mid;
                ghi = gm;
            }
        }
        double hs = 0.5 * (lo + hi) * h;
        State ys = dense_eval(step.dense, hs / h);
        for (int it = 0; it < 8; ++it) {
            if (hs > 0.0) ys = dopri_step(f_, y0, k1, hs, cfg_.rel_tol, cfg_.abs_tol).y1;
            const double tol = cfg_.event_tol * std::max(1.0, std::abs(ys[0]));
            if (std::abs(ys[comp]) <= tol) break;
            const State fs = f_(ys);
            if (fs[comp] == 0.0) break;
            hs = std::clamp(hs - ys[comp] / fs[comp], 0.0, h);
        }
        (void)tau;
        return {hs, ys};
    }

    // Processes crossings inside an accepted step. Returns true when a
    // terminal event ended the trajectory.
    bool handle_step(double tau, double h, const State& y0, const State& k1, const StepResult& step) {
        struct Hit {
            double hs;
            State ys;
            EventKind kind;
        };
        std::vector<Hit> hits;
        const State& y1 = step.y1;

        if (y0[0] > 0.0 && y1[0] <= 0.0) {
            auto [hs, ys] = locate(tau, h, y0, k1, step, 0);
            hits.push_back({hs, ys, EventKind::XZero});
        }
        if (y0[1] != 0.0 && (y1[1] == 0.0 || (y0[1] > 0.0) != (y1[1] > 0.0))) {
            auto [hs, ys] = locate(tau, h, y0, k1, step, 1);
            const bool down = (y0[1] > 0.0) == (sign_ > 0.0);
            hits.push_back({hs, ys, down ? EventKind::YZeroDown : EventKind::YZeroUp});
        }
        std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.hs < b.hs; });

        for (const auto& hit : hits) {
            const bool terminal = hit.kind == EventKind::XZero || stop_on_.contains(hit.kind);
            if (terminal) {
                push_dense(tau, h, step, hit.hs / h);
                if (hit.hs > 0.0) push_sample(tau + hit.hs, hit.ys);
                else traj_.samples.back() = {xi_of(tau), hit.ys[0], hit.ys[1]};
                add_event(hit.kind, tau + hit.hs, hit.ys);
                return true;
            }
        }
        // Non-terminal crossings are recorded as samples in xi order.
        double theta_done = 0.0;
        for (const auto& hit : hits) {
            const double theta = hit.hs / h;
            if (cfg_.sample_spacing > 0.0 && h > cfg_.sample_spacing) {
                const double dtheta = cfg_.sample_spacing / h;
                for (double th = std::ceil((theta_done + 1e-12) / dtheta) * dtheta; th < theta - 1e-12;
                     th += dtheta) {
                    push_sample(tau + th * h, dense_eval(step.dense, th));
                }
            }
            if (hit.hs > 0.0 && hit.hs < h) push_sample(tau + hit.hs, hit.ys);
            add_event(hit.kind, tau + hit.hs, hit.ys);
            theta_done = theta;
        }
        if (cfg_.sample_spacing > 0.0 && h > cfg_.sample_spacing) {
            const double dtheta = cfg_.sample_spacing / h;
            for (double th = std::ceil((theta_done + 1e-12) / dtheta) * dtheta; th < 1.0 - 1e-12; th += dtheta) {
                push_sample(tau + th * h, dense_eval(step.dense, th));
            }
        }
        push_sample(tau + h, y1);
        return false;
    }

    bool terminal_state(double tau, const State& y) {
        if (y[0] > cfg_.x_max || std::abs(y[1]) > cfg_.y_max) {
            add_event(EventKind::Escape, tau, y);
            return true;
        }
        if (std::hypot(y[0] - 1.0, y[1]) < cfg_.converge_radius && sign_ * (c_ - params_.kn()) < 0.0) {
            add_event(EventKind::ConvergedP2, tau, y);
            return true;
        }
        // Arrival at P1: approach along the stable/center direction.
        const double slope_bound = 2.0 * (std::abs(c_) + 2.0);
        if (y[0] > 0.0 && y[0] < cfg_.arrival_x && sign_ * y[1] < 0.0 && std::abs(y[1]) <= slope_bound * y[0]) {
            add_event(EventKind::ConvergedP1, tau, y);
            return true;
        }
        return false;
    }

    const WaveParams& params_;
    double c_;
    double sign_;
    System f_;
    EventSet stop_on_;
    const IntegratorConfig& cfg_;
    std::optional<double> span_;
    double xi0_;
    Trajectory traj_;
};

}  // namespace

Trajectory integrate(const WaveParams& params, double c, PhasePoint seed, Direction direction,
                     EventSet stop_on, const IntegratorConfig& cfg, std::optional<double> span, double xi0) {
    cfg.check();
    if (span && *span < 0.0) throw std::invalid_argument("integrate: span must be non-negative");
    Integrator integrator(params, c, direction, stop_on, cfg, span, xi0);
    return integrator.run(seed);
}

Trajectory integrate_stiff(const WaveParams& params, double c, PhasePoint seed, Direction direction,
                           double x_exit, const IntegratorConfig& cfg, double xi0) {
    // Rosenbrock 2(3) pair of Shampine and Reichelt (L-stable).
    const double d = 1.0 / (2.0 + std::sqrt(2.0));
    const double e32 = 6.0 + std::sqrt(2.0);
    const double sign = direction == Direction::Forward ? 1.0 : -1.0;
    const System f{params, c, sign};
    auto solve = [&](const std::array<double, 4>& w, const State& b) {
        const double det = w[0] * w[3] - w[1] * w[2];
        return State{(w[3] * b[0] - w[1] * b[1]) / det, (w[0] * b[1] - w[2] * b[0]) / det};
    };

    Trajectory traj;
    traj.direction = direction;
    State y{seed.x, seed.y};
    if (!finite(y)) throw IntegrationError(IntegrationFailure::NonFinite, "non-finite seed");
    double tau = 0.0;
    traj.samples.push_back({xi0, y[0], y[1]});
    const double y_sign = y[1] > 0.0 ? 1.0 : -1.0;

    State f0 = f(y);
    double h = 1e-3 * std::abs(y[0]) / std::max(std::abs(f0[0]), 1e-300);
    std::int64_t steps = 0;
    while (y[0] < x_exit) {
        if (++steps > cfg.max_steps) {
            throw IntegrationError(IntegrationFailure::StiffnessFailure, "integrate_stiff: step limit reached");
        }
        const auto jac = jacobian(params, c, {y[0], y[1]});
        const std::array<double, 4> w{1.0 - h * d * sign * jac[0], -h * d * sign * jac[1],
                                      -h * d * sign * jac[2], 1.0 - h * d * sign * jac[3]};
        const State k1 = solve(w, f0);
        const State f1 = f({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
        State k2 = solve(w, {f1[0] - k1[0], f1[1] - k1[1]});
        k2 = {k2[0] + k1[0], k2[1] + k1[1]};
        const State y1{y[0] + h * k2[0], y[1] + h * k2[1]};
        const State f2 = f(y1);
        const State k3 = solve(w, {f2[0] - e32 * (k2[0] - f1[0]) - 2.0 * (k1[0] - f0[0]),
                                   f2[1] - e32 * (k2[1] - f1[1]) - 2.0 * (k1[1] - f0[1])});
        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h / 6.0 * (k1[i] - 2.0 * k2[i] + k3[i]);
            const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / 2.0);
        if (!finite(y1) || !std::isfinite(err) || err > 1.0) {
            h *= std::isfinite(err) ? std::max(0.2, 0.8 * std::cbrt(1.0 / err)) : 0.1;
            if (h < 1e-300) throw IntegrationError(IntegrationFailure::NonFinite, "integrate_stiff: step underflow");
            continue;
        }
        // The slow manifold ends where the orbit leaves the quadrant; the
        // explicit integrator handles crossings.
        if (!(y1[0] > 0.0) || y1[1] * y_sign <= 0.0) break;
        tau += h;
        y = y1;
        f0 = f2;
        traj.samples.push_back({xi0 + sign * tau, y[0], y[1]});
        h *= std::clamp(err == 0.0 ? 5.0 : 0.8 * std::cbrt(1.0 / err), 0.2, 5.0);
    }
    return traj;
}

double roundtrip_check(const WaveParams& params, double c, PhasePoint seed, double span,
                       const IntegratorConfig& cfg) {
    const Trajectory fwd = integrate(params, c, seed, Direction::Forward, {}, cfg, span);
    if (fwd.terminal_event()) {
        const auto ev = *fwd.terminal_event();
        const bool equilibrium = fwd.samples.size() == 1;
        if (equilibrium) return 0.0;
        throw ShootingAnomaly(std::string("roundtrip_check: forward pass stopped early at ") + to_string(ev.kind));
    }
    const Sample end = fwd.back();
    const Trajectory bwd =
        integrate(params, c, {end.x, end.y}, Direction::Backward, {}, cfg, span, end.xi);
    if (bwd.terminal_event()) {
        throw ShootingAnomaly(std::string("roundtrip_check: backward pass stopped early at ") +
                              to_string(bwd.terminal_event()->kind));
    }
    return std::hypot(bwd.back().x - seed.x, bwd.back().y - seed.y);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    char buf[128];
    os << "xi,x,y\n";
    for (const auto& s : traj.samples) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g\n", s.xi, s.x, s.y);
        os << buf;
    }
    for (const auto& e : traj.events) {
        std::snprintf(buf, sizeof buf, "# event,%s,%.15g,%.15g,%.15g\n", to_string(e.kind), e.xi, e.point.x,
                      e.point.y);
        os << buf;
    }
}

Trajectory read_trajectory_csv(std::istream& is) {
    Trajectory traj;
    std::string line;
    if (!std::getline(is, line) || line.rfind("xi,", 0) != 0) {
        throw std::runtime_error("read_trajectory_csv: missing header");
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prefix = "# event,";
            if (line.rfind(prefix, 0) != 0) continue;
            std::stringstream ss(line.substr(prefix.size()));
            std::string kind, a, b, d;
            std::getline(ss, kind, ',');
            std::getline(ss, a, ',');
            std::getline(ss, b, ',');
            std::getline(ss, d, ',');
            const auto k = event_kind_from_string(kind);
            if (!k) throw std::runtime_error("read_trajectory_csv: unknown event kind " + kind);
            traj.events.push_back({*k, std::stod(a), {std::stod(b), std::stod(d)}});
            continue;
        }
        std::stringstream ss(line);
        std::string a, b, d;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, d, ',');
        traj.samples.push_back({std::stod(a), std::stod(b), std::stod(d)});
    }
    if (traj.samples.size() >= 2 && traj.samples.back().xi < traj.samples.front().xi) {
        traj.direction = Direction::Backward;
    }
    return traj;
}

}  // namespace wavefront
