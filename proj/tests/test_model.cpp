#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wavefront/model.hpp"

using namespace wavefront;

namespace {

bool has_violation(const ConstraintViolation& e, const std::string& name) {
    for (const auto& v : e.violations()) {
        if (v.constraint == name) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("validate accepts the reference parameters") {
    const WaveParams prm = validate(2, 3, 2, 1);
    CHECK(prm.kn() == 2.0);
    CHECK(prm.focus_half_width() == doctest::Approx(1.0));
    CHECK(prm.node_speed() == doctest::Approx(4.0));
    CHECK(prm.hopf_sign() == -1);
    CHECK(validate(7, 3, 2, 1).hopf_sign() == 1);
    CHECK(validate(6, 3, 2, 1).hopf_sign() == 0);
}

TEST_CASE("validate lists every failed inequality") {
    try {
        validate(0.5, 1, 2, -1);
        FAIL("expected ConstraintViolation");
    } catch (const ConstraintViolation& e) {
        CHECK(has_violation(e, "n>=1"));
        CHECK(has_violation(e, "p>q"));
        CHECK(has_violation(e, "k>0"));
        CHECK_FALSE(has_violation(e, "q>=1"));
        CHECK(std::string(e.what()).find("p>q violated") != std::string::npos);
    }
    CHECK_THROWS_AS(validate(2, 2, 2, 1), ConstraintViolation);
    CHECK_THROWS_AS(validate(2, 3, 0.5, 1), ConstraintViolation);
    CHECK_THROWS_AS(validate(2, NAN, 2, 1), ConstraintViolation);
    CHECK(validate(1.5, 3, 2, 1).below_classical_range());
}

TEST_CASE("pos_pow clamps negative arguments") {
    CHECK(pos_pow(-0.3, 2.5) == 0.0);
    CHECK(pos_pow(0.0, 3.0) == 0.0);
    CHECK(pos_pow(4.0, 0.5) == doctest::Approx(2.0));
    CHECK(pos_pow(1.7, 1.0) == 1.7);
}

TEST_CASE("equilibria of the profile system") {
    const WaveParams prm = validate(2, 3, 2, 1);
    for (double c : {-3.0, 0.0, 1.68, 4.5}) {
        const PhasePoint at_p1 = vector_field(prm, c, {0.0, 0.0});
        const PhasePoint at_p2 = vector_field(prm, c, {1.0, 0.0});
        CHECK(at_p1.x == 0.0);
        CHECK(at_p1.y == 0.0);
        CHECK(at_p2.x == 0.0);
        CHECK(at_p2.y == doctest::Approx(0.0));
    }
}

TEST_CASE("absorption is linear for q = 1, including X < 0") {
    const WaveParams prm = validate(2, 3, 1, 1);
    const PhasePoint v = vector_field(prm, 0.0, {-0.1, 0.0});
    CHECK(v.y == doctest::Approx(-0.1));
}

TEST_CASE("jacobian matches central differences") {
    const WaveParams prm = validate(2.5, 3.5, 1.5, 0.7);
    const double c = 1.3;
    const PhasePoint pt{0.8, -0.4};
    const auto jac = jacobian(prm, c, pt);
    const double h = 1e-6;
    const PhasePoint fxp = vector_field(prm, c, {pt.x + h, pt.y});
    const PhasePoint fxm = vector_field(prm, c, {pt.x - h, pt.y});
    const PhasePoint fyp = vector_field(prm, c, {pt.x, pt.y + h});
    const PhasePoint fym = vector_field(prm, c, {pt.x, pt.y - h});
    CHECK(jac[0] == doctest::Approx((fxp.x - fxm.x) / (2 * h)).epsilon(1e-7));
    CHECK(jac[1] == doctest::Approx((fyp.x - fym.x) / (2 * h)).epsilon(1e-7));
    CHECK(jac[2] == doctest::Approx((fxp.y - fxm.y) / (2 * h)).epsilon(1e-7));
    CHECK(jac[3] == doctest::Approx((fyp.y - fym.y) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("linear type of P2 across the speed axis") {
    const WaveParams prm = validate(2, 3, 2, 1);
    CHECK(classify_p2(prm, -1.0).kind == P2Kind::StableNode);
    CHECK(classify_p2(prm, 0.0).kind == P2Kind::StableNode);
    CHECK(classify_p2(prm, 1.0).kind == P2Kind::StableFocus);
    CHECK(classify_p2(prm, 2.0).kind == P2Kind::CenterBoundary);
    CHECK(classify_p2(prm, 3.0).kind == P2Kind::UnstableFocus);
    CHECK(classify_p2(prm, 4.0).kind == P2Kind::UnstableNode);

    const P2Class focus = classify_p2(prm, 3.0);
    CHECK(focus.lambda_plus.re == doctest::Approx(0.5));
    CHECK(focus.lambda_plus.im == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(focus.lambda_minus.im == doctest::Approx(-std::sqrt(3.0) / 2.0));

    const P2Class node = classify_p2(prm, 5.0);
    CHECK(node.lambda_plus.re * node.lambda_minus.re == doctest::Approx(1.0));
    CHECK(node.lambda_plus.re + node.lambda_minus.re == doctest::Approx(3.0));
}

TEST_CASE("Lyapunov number of the Hopf point") {
    CHECK(lyapunov_number(validate(2, 3, 2, 1)) == doctest::Approx(6.0 * std::numbers::pi));
    CHECK(lyapunov_number(validate(7, 3, 2, 1)) < 0.0);
    CHECK(lyapunov_number(validate(6, 3, 2, 1)) == 0.0);
}

TEST_CASE("Lienard form is the shifted profile system") {
    const WaveParams prm = validate(2, 3, 2, 1);
    const PhasePoint at_origin = lienard_field(prm, 1.5, {0.0, 0.0});
    CHECK(at_origin.x == doctest::Approx(0.0));
    CHECK(at_origin.y == doctest::Approx(0.0));
    const PhasePoint v = lienard_field(prm, 1.5, {0.5, 0.2});
    CHECK(v.y == doctest::Approx(std::pow(1.5, 2) - std::pow(1.5, 3)));
    CHECK_THROWS_AS(lienard_field(prm, 1.5, {-1.0, 0.0}), DomainError);
}

TEST_CASE("normalization maps the general equation to unit coefficients") {
    const double n = 2.5;
    const double p = 3.0;
    const double q = 1.5;
    const GeneralCoefficients co{0.7, 2.3, 1.9, 0.4};
    const Normalization nz = normalize(co, n, p, q);
    const double lam = nz.lambda;
    // Coefficients of u_t = a u_xx + b (u^n)_x + c u^p - d u^q after the substitution.
    const double a = co.a * nz.mu * nz.mu / nz.nu;
    const double b = co.b * std::pow(lam, n - 1.0) * nz.mu / nz.nu;
    const double c = co.c * std::pow(lam, p - 1.0) / nz.nu;
    const double d = co.d * std::pow(lam, q - 1.0) / nz.nu;
    CHECK(std::abs(a - 1.0) < 1e-10);
    CHECK(std::abs(c - 1.0) < 1e-10);
    CHECK(std::abs(d - 1.0) < 1e-10);
    CHECK(std::abs(b - nz.params.k) < 1e-10 * nz.params.k);
    CHECK_THROWS_AS(normalize({1, 1, 1, 0}, n, p, q), ConstraintViolation);
}

TEST_CASE("unit coefficients normalize to themselves") {
    const Normalization nz = normalize({1, 1, 1, 1}, 2, 3, 2);
    CHECK(nz.lambda == doctest::Approx(1.0));
    CHECK(nz.mu == doctest::Approx(1.0));
    CHECK(nz.nu == doctest::Approx(1.0));
    CHECK(nz.params.k == doctest::Approx(1.0));
}
