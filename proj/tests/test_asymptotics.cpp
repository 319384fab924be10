#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conekit/asymptotics.hpp"
#include "conekit/error.hpp"
#include "conekit/profiles.hpp"
#include "fixtures.hpp"

#include <cmath>

using namespace conekit;

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

TEST_CASE("trivial profile: t = artanh τ") {
    const auto d = fixture::data(fixture::trivial(), "1");
    const auto con = solve_cscK_conical(d);
    const auto fit = fit_cone_exponent(con.phiQ, d, con.beta);
    CHECK(fit.slope_fitted == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(fit.relative_error < 0.01);
    REQUIRE_FALSE(fit.samples.empty());
    for (const auto& s : fit.samples) {
        CHECK(s.t == doctest::Approx(std::atanh(s.tau)).epsilon(1e-9));
        CHECK(s.tau <= 1 - 1e-6 + 1e-15);
    }
    for (std::size_t k = 1; k < fit.samples.size(); ++k) CHECK(fit.samples[k].tau > fit.samples[k - 1].tau);
}

TEST_CASE("l = (-2, 1), b = 1/4") {
    const auto d = fixture::data(fixture::pair_m2_1(), "1/4");
    const auto con = solve_cscK_conical(d);
    const auto fit = fit_cone_exponent(con.phiQ, d, con.beta);
    CHECK(fit.beta_target == ratio(400, 567));
    CHECK(fit.relative_error < 0.01);
    // halving the cutoff keeps the fit stable
    const auto half = fit_cone_exponent(con.phiQ, d, con.beta, 5e-7);
    CHECK(half.relative_error <= 2 * fit.relative_error + 1e-12);
}

TEST_CASE("l = (-1, 2) across b") {
    for (const char* b : {"1/100", "1/4", "49/100"}) {
        const auto d = fixture::data(fixture::pair_m1_2(), b);
        const auto con = solve_cscK_conical(d);
        CHECK(fit_cone_exponent(con.phiQ, d, con.beta).relative_error < 0.01);
    }
}

TEST_CASE("preconditions") {
    const auto d = fixture::data(fixture::pair_m2_1(), "1/4");
    const auto con = solve_cscK_conical(d);
    CHECK(code_of([&] { (void)fit_cone_exponent(con.phiQ, d, con.beta, 1e-6, 50); }) ==
          ErrorCode::PreconditionViolation);
    CHECK(code_of([&] { (void)fit_cone_exponent(con.phiQ, d, con.beta, 0.1); }) ==
          ErrorCode::PreconditionViolation);
    CHECK(code_of([&] { (void)fit_cone_exponent(con.phiQ, d, 0); }) == ErrorCode::PreconditionViolation);
    CHECK(code_of([&] { (void)fit_cone_exponent(con.phiQ + Poly::constant(1), d, con.beta); }) ==
          ErrorCode::PreconditionViolation);
    // a profile that vanishes inside the interval
    const Poly bad = (Poly::linear(ratio(1, 4), 1) * Poly::linear(ratio(1, 4), -1)) * Poly{ratio(-1, 100), 0, 1};
    CHECK(code_of([&] { (void)fit_cone_exponent(bad, d, 1); }) == ErrorCode::NonPositiveProfile);
}
