#include "wavefront/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wavefront {

namespace {

std::string describe(double n, double p, double q, double k) {
    std::ostringstream os;
    os << "n=" << n << " p=" << p << " q=" << q << " k=" << k;
    return os.str();
}

std::string join(const std::vector<Violation>& violations) {
    std::string msg = "invalid parameters:";
    for (const auto& v : violations) {
        msg += " " + v.constraint + " violated (" + v.detail + ");";
    }
    return msg;
}

}  // namespace

ConstraintViolation::ConstraintViolation(std::vector<Violation> violations)
    : WavefrontError(join(violations)), violations_(std::move(violations)) {}

double WaveParams::focus_half_width() const noexcept { return std::sqrt(p - q); }

double WaveParams::node_speed() const noexcept { return kn() + 2.0 * focus_half_width(); }

int WaveParams::hopf_sign() const noexcept {
    const double d = n - (p + q + 1.0);
    return (d > 0.0) - (d < 0.0);
}

std::vector<Violation> check_params(double n, double p, double q, double k) {
    std::vector<Violation> out;
    const std::string ctx = describe(n, p, q, k);
    if (!std::isfinite(n) || !std::isfinite(p) || !std::isfinite(q) || !std::isfinite(k)) {
        out.push_back({"finite", ctx});
        return out;
    }
    if (!(n >= 1.0)) out.push_back({"n>=1", ctx});
    if (!(p > q)) out.push_back({"p>q", ctx});
    if (!(q >= 1.0)) out.push_back({"q>=1", ctx});
    if (!(k > 0.0)) out.push_back({"k>0", ctx});
    return out;
}

WaveParams validate(double n, double p, double q, double k) {
    auto violations = check_params(n, p, q, k);
    if (!violations.empty()) throw ConstraintViolation(std::move(violations));
    return WaveParams{n, p, q, k};
}

double pos_pow(double x, double r) noexcept {
    if (x <= 0.0) return 0.0;
    if (r == 1.0) return x;
    if (r == 2.0) return x * x;
    return std::pow(x, r);
}

PhasePoint vector_field(const WaveParams& prm, double c, PhasePoint pt) noexcept {
    const double x = pt.x;
    const double absorption = prm.q_is_one() ? x : pos_pow(x, prm.q);
    const double dy = c * pt.y - prm.kn() * pos_pow(x, prm.n - 1.0) * pt.y - pos_pow(x, prm.p) + absorption;
    return {pt.y, dy};
}

std::array<double, 4> jacobian(const WaveParams& prm, double c, PhasePoint pt) noexcept {
    const double x = pt.x;
    const double conv = prm.n == 1.0 ? 0.0 : prm.kn() * (prm.n - 1.0) * pos_pow(x, prm.n - 2.0);
    const double dabs = prm.q_is_one() ? 1.0 : prm.q * pos_pow(x, prm.q - 1.0);
    const double dyx = -conv * pt.y - prm.p * pos_pow(x, prm.p - 1.0) + dabs;
    const double dyy = c - prm.kn() * pos_pow(x, prm.n - 1.0);
    return {0.0, 1.0, dyx, dyy};
}

PhasePoint lienard_field(const WaveParams& prm, double c, PhasePoint shifted) {
    if (!(shifted.x > -1.0)) {
        throw DomainError("lienard_field: shifted X must exceed -1");
    }
    const double x = 1.0 + shifted.x;
    return {shifted.y + c * shifted.x + prm.k - prm.k * std::pow(x, prm.n),
            std::pow(x, prm.q) - std::pow(x, prm.p)};
}

const char* to_string(P2Kind kind) noexcept {
    switch (kind) {
        case P2Kind::UnstableNode: return "unstable_node";
        case P2Kind::UnstableFocus: return "unstable_focus";
        case P2Kind::CenterBoundary: return "center_boundary";
        case P2Kind::StableFocus: return "stable_focus";
        case P2Kind::StableNode: return "stable_node";
    }
    return "unknown";
}

P2Class classify_p2(const WaveParams& prm, double c) noexcept {
    const double trace = c - prm.kn();
    const double width = 2.0 * prm.focus_half_width();
    const double disc = trace * trace - 4.0 * (prm.p - prm.q);

    P2Class out;
    if (trace >= width || trace <= -width) {
        const double root = std::sqrt(std::max(disc, 0.0));
        out.lambda_plus = {(trace + root) / 2.0, 0.0};
        out.lambda_minus = {(trace - root) / 2.0, 0.0};
        out.kind = trace > 0.0 ? P2Kind::UnstableNode : P2Kind::StableNode;
    } else {
        const double im = std::sqrt(-disc) / 2.0;
        out.lambda_plus = {trace / 2.0, im};
        out.lambda_minus = {trace / 2.0, -im};
        if (trace > 0.0) {
            out.kind = P2Kind::UnstableFocus;
        } else if (trace < 0.0) {
            out.kind = P2Kind::StableFocus;
        } else {
            out.kind = P2Kind::CenterBoundary;
        }
    }
    return out;
}

double lyapunov_number(const WaveParams& prm) noexcept {
    return -3.0 * prm.kn() * (prm.n - 1.0) * std::numbers::pi * (prm.n - prm.p - prm.q - 1.0) /
           (4.0 * std::sqrt(prm.p - prm.q));
}

Normalization normalize(const GeneralCoefficients& co, double n, double p, double q) {
    std::vector<Violation> bad;
    if (!(co.a > 0.0)) bad.push_back({"A>0", "A=" + std::to_string(co.a)});
    if (!(co.b > 0.0)) bad.push_back({"B>0", "B=" + std::to_string(co.b)});
    if (!(co.c > 0.0)) bad.push_back({"C>0", "C=" + std::to_string(co.c)});
    if (!(co.d > 0.0)) bad.push_back({"D>0", "D=" + std::to_string(co.d)});
    if (!(p > q)) bad.push_back({"p>q", describe(n, p, q, 0.0)});
    if (!bad.empty()) throw ConstraintViolation(std::move(bad));

    const double gap = p - q;
    Normalization out;
    out.lambda = std::pow(co.d / co.c, 1.0 / gap);
    out.nu = std::pow(co.c, (1.0 - q) / gap) * std::pow(co.d, (p - 1.0) / gap);
    out.mu = std::sqrt(out.nu / co.a);
    const double k = co.b / std::sqrt(co.a) * std::pow(co.c, (q + 1.0 - 2.0 * n) / (2.0 * gap)) *
                     std::pow(co.d, -(p + 1.0 - 2.0 * n) / (2.0 * gap));
    out.params = validate(n, p, q, k);
    return out;
}

}  // namespace wavefront
