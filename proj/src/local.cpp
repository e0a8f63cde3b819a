#include "wavefront/local.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wavefront {

const char* to_string(Branch b) noexcept { return b == Branch::Unstable ? "l1" : "l0"; }
const char* to_string(TailEnd e) noexcept { return e == TailEnd::MinusInfinity ? "-inf" : "+inf"; }
const char* to_string(TailKind k) noexcept { return k == TailKind::Exponential ? "exp" : "alg"; }

std::pair<double, double> blowup_case2_roots(const WaveParams& prm) noexcept {
    const double kn = prm.kn();
    const double root = std::sqrt(kn * kn + 4.0 * prm.n);
    return {(root - kn) / (2.0 * prm.n), (-root - kn) / (2.0 * prm.n)};
}

BlowupCase blowup_case(const WaveParams& prm) {
    const double threshold = (prm.q + 1.0) / 2.0;
    BlowupCase out;
    if (std::abs(prm.n - threshold) <= 1e-12 * threshold) {
        const auto [v1, v2] = blowup_case2_roots(prm);
        out = {BlowupRegime::Case2, v1, v2};
    } else if (prm.n > threshold) {
        const double v = std::sqrt(2.0 / (prm.q + 1.0));
        out = {BlowupRegime::Case1, v, -v};
    } else {
        out = {BlowupRegime::Case3, 0.0, -prm.k};
    }
    return out;
}

std::pair<double, double> saddle_eigenvalues(double c) noexcept {
    const double root = std::sqrt(c * c + 4.0);
    return {(c + root) / 2.0, (c - root) / 2.0};
}

namespace {

// Heuristic X range where the leading term dominates the next one.
double validity(const WaveParams& prm, double c, bool center) {
    if (prm.q_is_one()) return 0.1;
    if (c == 0.0) return 0.1;
    if (center) return 0.1 * std::min(1.0, std::pow(std::abs(c), 2.0 / (prm.q - 1.0)));
    return 0.1 * std::min(1.0, c * c);
}

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("seed offset must be positive");
}

}  // namespace

SeedState seed_l1(const WaveParams& prm, double c, double eps) {
    check_eps(eps);
    SeedState s;
    s.branch = Branch::Unstable;
    s.point.x = eps;
    if (prm.q_is_one()) {
        s.point.y = saddle_eigenvalues(c).first * eps;
        s.validity_radius = validity(prm, c, false);
    } else if (c > 0.0) {
        s.point.y = c * eps;
        s.validity_radius = validity(prm, c, false);
    } else if (c < 0.0) {
        s.point.y = -std::pow(eps, prm.q) / c;
        s.validity_radius = validity(prm, c, true);
    } else {
        const BlowupCase bc = blowup_case(prm);
        switch (bc.regime) {
            case BlowupRegime::Case1: s.point.y = bc.outgoing * std::pow(eps, (prm.q + 1.0) / 2.0); break;
            case BlowupRegime::Case2: s.point.y = bc.outgoing * std::pow(eps, prm.n); break;
            case BlowupRegime::Case3: s.point.y = std::pow(eps, prm.q + 1.0 - prm.n) / prm.kn(); break;
        }
        s.validity_radius = validity(prm, c, true);
    }
    return s;
}

SeedState seed_l0(const WaveParams& prm, double c, double eps) {
    check_eps(eps);
    SeedState s;
    s.branch = Branch::Stable;
    s.point.x = eps;
    if (prm.q_is_one()) {
        s.point.y = saddle_eigenvalues(c).second * eps;
        s.validity_radius = validity(prm, c, false);
    } else if (c > 0.0) {
        s.point.y = -std::pow(eps, prm.q) / c;
        s.validity_radius = validity(prm, c, true);
    } else if (c < 0.0) {
        s.point.y = c * eps;
        s.validity_radius = validity(prm, c, false);
    } else {
        const BlowupCase bc = blowup_case(prm);
        switch (bc.regime) {
            case BlowupRegime::Case1: s.point.y = bc.incoming * std::pow(eps, (prm.q + 1.0) / 2.0); break;
            case BlowupRegime::Case2: s.point.y = bc.incoming * std::pow(eps, prm.n); break;
            case BlowupRegime::Case3: s.point.y = -prm.k * std::pow(eps, prm.n); break;
        }
        s.validity_radius = validity(prm, c, true);
    }
    return s;
}

namespace {

TailLaw unstable_law(const WaveParams& prm, double c) {
    TailLaw law{TailEnd::MinusInfinity, TailKind::Exponential, 0.0, std::nullopt};
    if (prm.q_is_one()) {
        law.rate_or_exponent = saddle_eigenvalues(c).first;
        return law;
    }
    if (c > 0.0) {
        law.rate_or_exponent = c;
        return law;
    }
    law.kind = TailKind::Algebraic;
    const double q = prm.q, n = prm.n;
    if (c < 0.0) {
        law.rate_or_exponent = 1.0 / (q - 1.0);
        law.constant = std::pow(std::abs(c) / (q - 1.0), 1.0 / (q - 1.0));
        return law;
    }
    const BlowupCase bc = blowup_case(prm);
    switch (bc.regime) {
        case BlowupRegime::Case1:
            law.rate_or_exponent = 2.0 / (q - 1.0);
            law.constant = std::pow((q - 1.0) / 2.0 * std::sqrt(2.0 / (q + 1.0)), -2.0 / (q - 1.0));
            break;
        case BlowupRegime::Case2:
            law.rate_or_exponent = 1.0 / (n - 1.0);
            law.constant = std::pow(bc.outgoing * (n - 1.0), -1.0 / (n - 1.0));
            break;
        case BlowupRegime::Case3:
            law.rate_or_exponent = 1.0 / (q - n);
            law.constant = std::pow((q - n) / prm.kn(), -1.0 / (q - n));
            break;
    }
    return law;
}

TailLaw stable_law(const WaveParams& prm, double c) {
    TailLaw law{TailEnd::PlusInfinity, TailKind::Exponential, 0.0, std::nullopt};
    if (prm.q_is_one()) {
        law.rate_or_exponent = -saddle_eigenvalues(c).second;
        return law;
    }
    if (c < 0.0) {
        law.rate_or_exponent = -c;
        return law;
    }
    law.kind = TailKind::Algebraic;
    const double q = prm.q, n = prm.n;
    if (c > 0.0) {
        law.rate_or_exponent = 1.0 / (q - 1.0);
        law.constant = std::pow(c / (q - 1.0), 1.0 / (q - 1.0));
        return law;
    }
    const BlowupCase bc = blowup_case(prm);
    switch (bc.regime) {
        case BlowupRegime::Case1:
            law.rate_or_exponent = 2.0 / (q - 1.0);
            law.constant = std::pow((q - 1.0) / 2.0 * std::sqrt(2.0 / (q + 1.0)), -2.0 / (q - 1.0));
            break;
        case BlowupRegime::Case2:
            law.rate_or_exponent = 1.0 / (n - 1.0);
            law.constant = std::pow(-bc.incoming * (n - 1.0), -1.0 / (n - 1.0));
            break;
        case BlowupRegime::Case3:
            law.rate_or_exponent = 1.0 / (n - 1.0);
            law.constant = std::pow(prm.k * (n - 1.0), -1.0 / (n - 1.0));
            break;
    }
    return law;
}

}  // namespace

TailLaw tail_law(const WaveParams& prm, double c, std::optional<double> c_star, TailEnd end, Branch branch) {
    if (branch == Branch::Unstable && end == TailEnd::MinusInfinity) return unstable_law(prm, c);
    if (branch == Branch::Stable && end == TailEnd::PlusInfinity) return stable_law(prm, c);

    const bool homoclinic = c_star && std::abs(c - *c_star) <= 1e-9 * std::max(1.0, std::abs(*c_star));
    if (!homoclinic) {
        throw UnsupportedCombination(std::string("tail_law: no decay law for ") + to_string(branch) + " at " +
                                     to_string(end) + " away from c*");
    }
    // At c*, l1 and l0 are the same orbit.
    return branch == Branch::Unstable ? stable_law(prm, c) : unstable_law(prm, c);
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

LineFit least_squares(const std::vector<double>& u, const std::vector<double>& v) {
    const double m = static_cast<double>(u.size());
    double su = 0.0, sv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        su += u[i];
        sv += v[i];
    }
    const double mu = su / m, mv = sv / m;
    double suu = 0.0, suv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        suu += (u[i] - mu) * (u[i] - mu);
        suv += (u[i] - mu) * (v[i] - mv);
    }
    if (suu == 0.0) throw InsufficientData("fit_tail: degenerate abscissae");
    LineFit fit;
    fit.slope = suv / suu;
    fit.intercept = mv - fit.slope * mu;
    double ss = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = v[i] - (fit.intercept + fit.slope * u[i]);
        ss += r * r;
    }
    fit.rms = std::sqrt(ss / m);
    return fit;
}

}  // namespace

TailFit fit_tail(const Trajectory& traj, const TailLaw& law, FitWindow window, const FitOptions& opts) {
    const double lo = std::min(window.lo, window.hi), hi = std::max(window.lo, window.hi);
    std::vector<double> xi, lnf, f;
    for (const auto& s : traj.samples) {
        if (s.xi >= lo && s.xi <= hi && s.x > 0.0) {
            xi.push_back(s.xi);
            f.push_back(s.x);
            lnf.push_back(std::log(s.x));
        }
    }
    if (xi.size() < std::max<std::size_t>(opts.min_samples, 2)) {
        throw InsufficientData("fit_tail: " + std::to_string(xi.size()) + " usable samples in window");
    }

    TailFit out;
    out.samples = xi.size();
    if (law.kind == TailKind::Exponential) {
        const LineFit fit = least_squares(xi, lnf);
        out.measured = law.end == TailEnd::MinusInfinity ? fit.slope : -fit.slope;
        out.constant = std::exp(fit.intercept);
        out.residual = fit.rms;
        return out;
    }

    const double a = law.rate_or_exponent;
    const auto [xmin, xmax] = std::minmax_element(xi.begin(), xi.end());
    auto origin_ok = [&](double x0) {
        return law.end == TailEnd::PlusInfinity ? x0 < *xmin : x0 > *xmax;
    };
    double origin = 0.0;
    if (opts.virtual_origin) {
        std::vector<double> z(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) z[i] = std::pow(f[i], -1.0 / a);
        const LineFit lin = least_squares(xi, z);
        if (lin.slope != 0.0) {
            const double candidate = -lin.intercept / lin.slope;
            if (std::isfinite(candidate) && origin_ok(candidate)) origin = candidate;
        }
    }
    if (!origin_ok(origin)) throw InsufficientData("fit_tail: window straddles the algebraic origin");
    out.origin = origin;

    std::vector<double> lnxi(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) lnxi[i] = std::log(std::abs(xi[i] - origin));
    const LineFit fit = least_squares(lnxi, lnf);
    out.measured = -fit.slope;
    out.residual = fit.rms;
    double acc = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) acc += lnf[i] + a * lnxi[i];
    out.constant = std::exp(acc / static_cast<double>(xi.size()));
    return out;
}

FitWindow default_window(const Trajectory& traj, TailEnd end) {
    if (traj.samples.empty()) throw InsufficientData("default_window: empty trajectory");
    double lo = traj.samples.front().xi, hi = lo;
    for (const auto& s : traj.samples) {
        lo = std::min(lo, s.xi);
        hi = std::max(hi, s.xi);
    }
    const double quarter = 0.25 * (hi - lo);
    return end == TailEnd::PlusInfinity ? FitWindow{hi - quarter, hi} : FitWindow{lo, lo + quarter};
}

}  // namespace wavefront
