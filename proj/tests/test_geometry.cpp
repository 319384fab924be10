#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conekit/error.hpp"
#include "conekit/geometry.hpp"
#include "conekit/verify.hpp"
#include "fixtures.hpp"

using namespace conekit;
using fixture::poly;
using fixture::q;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("volume ratio and traced Ricci polynomials") {
    CHECK(volume_ratio_poly(fixture::pair_m1_2()) == poly({"1", "-1", "-2"}));
    CHECK(traced_ricci_poly(fixture::pair_m1_2()) == poly({"2", "-1"}));
    CHECK(volume_ratio_poly(fixture::pair_m2_1()) == poly({"1", "1", "-2"}));
    CHECK(traced_ricci_poly(fixture::pair_m2_1()) == poly({"2", "1"}));
    CHECK(volume_ratio_poly(fixture::trivial()) == Poly::constant(1));
    CHECK(traced_ricci_poly(fixture::trivial()) == Poly::constant(2));
    CHECK(volume_ratio_poly({{2, 1, 1}}) == poly({"1", "-2", "1"}));
    CHECK(traced_ricci_poly({{2, 1, 1}}) == poly({"2", "-2"}));
    CHECK(volume_ratio_poly(fixture::mixed()) == poly({"1", "-1", "-15/4", "9/2"}));
    CHECK(traced_ricci_poly(fixture::mixed()) == poly({"3", "-11/2", "3/2"}));
}

TEST_CASE("admissibility bound") {
    CHECK(*max_admissible_b(fixture::pair_m1_2()) == ratio(1, 2));
    CHECK(*max_admissible_b(fixture::pair_m2_1()) == ratio(1, 2));
    CHECK(*max_admissible_b(fixture::mixed()) == ratio(1, 2));
    CHECK_FALSE(max_admissible_b(fixture::trivial()).has_value());
    CHECK(*max_admissible_b({{1, ratio(1, 2), 3}}) == ratio(2, 3));
}

TEST_CASE("build_setup errors") {
    CHECK(code_of([] { (void)build_setup(fixture::pair_m1_2(), q("3/5")); }) == ErrorCode::DegenerateInterval);
    CHECK(code_of([] { (void)build_setup(fixture::pair_m1_2(), q("1/2")); }) == ErrorCode::DegenerateInterval);
    CHECK(code_of([] { (void)build_setup(fixture::pair_m1_2(), q("0")); }) == ErrorCode::DegenerateInterval);
    CHECK(code_of([] { (void)build_setup({}, q("1/4")); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)build_setup({{0, 1, 1}}, q("1/4")); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)build_setup({{1, -1, 1}}, q("1/4")); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)build_setup(fixture::pair_m1_2(), q("1/4"), -1.0); }) == ErrorCode::InvalidArgument);
    try {
        (void)build_setup(fixture::pair_m1_2(), q("3/5"));
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("need b < 1/2") != std::string::npos);
    }
    // trivial bundle: any positive b
    CHECK_NOTHROW((void)build_setup(fixture::trivial(), q("1000")));
}

TEST_CASE("moments of the trivial pair at b = 1") {
    const auto d = fixture::data(fixture::trivial(), "1");
    CHECK(d.A == 2);
    CHECK(d.B == 0);
    CHECK(d.C == ratio(2, 3));
    CHECK(d.IR == 4);
    CHECK(d.IxR == 0);
    CHECK(d.tau_bar() == 0);
}

TEST_CASE("R(τ)Q(τ) against R evaluated factorwise") {
    for (auto factors : {fixture::pair_m1_2(), fixture::pair_m2_1(), fixture::mixed()}) {
        const auto d = fixture::data(factors, "1/4");
        for (const char* t : {"-1/4", "-1/8", "0", "1/7", "1/4"}) {
            const Rational tau = q(t);
            Rational r = 0;
            for (const auto& f : factors) r += f.dim * f.einstein / (1 - tau * f.exponent * f.einstein);
            CHECK(eval_R(d, tau) == r);
            CHECK(d.RQ(tau) == r * d.Q(tau));
        }
    }
}

TEST_CASE("eval_R pole") {
    const auto d = fixture::data(fixture::pair_m1_2(), "1/4");
    CHECK(code_of([&] { (void)eval_R(d, q("1/2")); }) == ErrorCode::PoleAtTau);
}

TEST_CASE("curvature eigenvalues and base dimension") {
    const auto s = build_setup(fixture::mixed(), q("1/4"));
    CHECK(s.base_dim() == 3);
    CHECK(s.curvature_eigenvalues() == std::vector<Rational>{ratio(3, 2), Rational(-2)});
    CHECK(s.scalings()[0] == Poly::linear(1, ratio(-3, 2)));
}

TEST_CASE("property: structural inequalities on random setups") {
    RandomSetupSource source(11);
    for (int k = 0; k < 200; ++k) {
        const auto setup = source.next();
        const auto d = build_momentum_data(setup);
        CHECK(d.A > 0);
        CHECK(d.A * d.C - d.B * d.B > 0);
        CHECK(d.b * d.A - d.B > 0);
        CHECK(d.b * d.A + d.B > 0);
        CHECK(d.Q_minus() > 0);
        CHECK(d.Q_plus() > 0);
        CHECK(d.tau_bar() > -d.b);
        CHECK(d.tau_bar() < d.b);
    }
}
