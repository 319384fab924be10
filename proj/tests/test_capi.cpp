#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <conekit/conekit.h>

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace {

struct Base {
    conekit_base* h = nullptr;
    Base(std::initializer_list<std::array<const char*, 3>> factors) {
        REQUIRE(conekit_base_create(&h) == CONEKIT_OK);
        for (const auto& f : factors)
            REQUIRE(conekit_base_add_factor(h, std::stoi(f[0]), f[1], f[2]) == CONEKIT_OK);
    }
    ~Base() { conekit_base_destroy(h); }
};

struct Problem {
    conekit_problem* h = nullptr;
    conekit_status status;
    Problem(const Base& base, const char* b) : status(conekit_problem_create(base.h, b, 1.0, nullptr, &h)) {}
    ~Problem() { conekit_problem_destroy(h); }
};

struct Solution {
    conekit_solution* h = nullptr;
    conekit_status status;
    explicit Solution(const Problem& p) : status(conekit_solve(p.h, &h)) {}
    ~Solution() { conekit_solution_destroy(h); }
};

}  // namespace

TEST_CASE("base polynomials and admissibility") {
    Base pair_m1_2{{"1", "1", "-1"}, {"1", "1", "2"}};
    CHECK(conekit_base_factor_count(pair_m1_2.h) == 2);
    const char* s = nullptr;
    REQUIRE(conekit_base_poly(pair_m1_2.h, CONEKIT_POLY_Q, &s) == CONEKIT_OK);
    CHECK(std::string(s) == "1 - τ - 2τ²");
    REQUIRE(conekit_base_max_b(pair_m1_2.h, &s) == CONEKIT_OK);
    CHECK(std::string(s) == "1/2");

    Base flat{{"1", "1", "0"}};
    REQUIRE(conekit_base_max_b(flat.h, &s) == CONEKIT_OK);
    CHECK(s == nullptr);
}

TEST_CASE("bad factors and bad b") {
    Base base{};
    CHECK(conekit_base_add_factor(base.h, 1, "1/0", "1") == CONEKIT_ERR_PARSE);
    CHECK(std::string(conekit_last_error()).find("ParseError") != std::string::npos);
    CHECK(conekit_base_add_factor(base.h, 1, "-1", "1") == CONEKIT_ERR_INVALID_ARGUMENT);
    CHECK(conekit_base_add_factor(base.h, 0, "1", "1") == CONEKIT_ERR_INVALID_ARGUMENT);
    CHECK(conekit_base_factor_count(base.h) == 0);
    const char* s = nullptr;
    CHECK(conekit_base_poly(base.h, CONEKIT_POLY_Q, &s) == CONEKIT_ERR_INVALID_ARGUMENT);

    Base pair_m1_2{{"1", "1", "-1"}, {"1", "1", "2"}};
    Problem p(pair_m1_2, "3/5");
    CHECK(p.status == CONEKIT_ERR_DEGENERATE_INTERVAL);
    CHECK(p.h == nullptr);
    CHECK(std::string(conekit_status_name(p.status)) == "DegenerateInterval");
    CHECK(conekit_problem_create(nullptr, "1/4", 1.0, nullptr, &p.h) == CONEKIT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("problem data") {
    Base pair_m1_2{{"1", "1", "-1"}, {"1", "1", "2"}};
    Problem p(pair_m1_2, "1/4");
    REQUIRE(p.status == CONEKIT_OK);
    CHECK(conekit_problem_poly_degree(p.h, CONEKIT_POLY_Q) == 2);
    CHECK(std::string(conekit_problem_poly_coeff(p.h, CONEKIT_POLY_Q, 2)) == "-2");
    CHECK(std::string(conekit_problem_poly_coeff(p.h, CONEKIT_POLY_Q, 7)) == "0");
    CHECK(std::string(conekit_problem_poly(p.h, CONEKIT_POLY_RQ)) == "2 - τ");
    CHECK(std::string(conekit_problem_moment(p.h, CONEKIT_MOMENT_HALF_WIDTH)) == "1/4");

    char buf[64];
    REQUIRE(conekit_problem_eval_R(p.h, "0", buf, sizeof buf) == CONEKIT_OK);
    CHECK(std::string(buf) == "2");
    CHECK(conekit_problem_eval_R(p.h, "0", buf, 1) == CONEKIT_ERR_BUFFER_TOO_SMALL);
    CHECK(conekit_problem_eval_R(p.h, "-1", buf, sizeof buf) == CONEKIT_ERR_POLE_AT_TAU);

    double err = 1.0;
    const char* worst = nullptr;
    REQUIRE(conekit_problem_cross_validate(p.h, &err, &worst) == CONEKIT_OK);
    CHECK(err <= 1e-10);
    CHECK(worst != nullptr);
}

TEST_CASE("volume functional through the C interface") {
    Base flat{{"1", "1", "0"}};
    Problem p(flat, "1");
    const char* one[] = {"1"};
    double v = 0.0;
    REQUIRE(conekit_problem_volume_functional(p.h, one, 1, &v) == CONEKIT_OK);
    CHECK(std::abs(v - 4 * M_PI) <= 1e-12 * 4 * M_PI);
}

TEST_CASE("solution quantities") {
    Base pair_m2_1{{"1", "1", "-2"}, {"1", "1", "1"}};
    Problem p(pair_m2_1, "1/4");
    Solution s(p);
    REQUIRE(s.status == CONEKIT_OK);
    CHECK(std::string(conekit_solution_quantity(s.h, CONEKIT_BETA)) == "400/567");
    CHECK(std::string(conekit_solution_quantity(s.h, CONEKIT_BETA_FUTAKI)) == "400/567");
    CHECK(std::string(conekit_solution_quantity(s.h, CONEKIT_SIGMA0_CSCK)) == "106/21");
    CHECK(std::string(conekit_solution_quantity(s.h, CONEKIT_LAMBDA)) == "6680/831");
    CHECK(std::string(conekit_solution_quantity(s.h, CONEKIT_FUT_LOG)) == "0");
    CHECK(conekit_solution_value(s.h, CONEKIT_BETA) == 400.0 / 567.0);
    CHECK(conekit_solution_identity_ok(s.h) == 1);
    size_t roots = 99;
    CHECK(conekit_solution_positivity(s.h, CONEKIT_PROFILE_CONICAL, &roots) == 1);
    CHECK(roots == 0);
    CHECK(conekit_solution_profile_degree(s.h, CONEKIT_PROFILE_CONICAL) == 4);
    CHECK(std::string(conekit_solution_profile_coeff(s.h, CONEKIT_PROFILE_CONICAL, 4)) == "106/63");

    char buf[64];
    REQUIRE(conekit_solution_scalar_curvature(s.h, CONEKIT_PROFILE_CONICAL, "1/8", buf, sizeof buf) == CONEKIT_OK);
    CHECK(std::string(buf) == "106/21");

    std::vector<double> tau(5), phi(5), scalar(5);
    REQUIRE(conekit_solution_sample(s.h, CONEKIT_PROFILE_EXTREMAL, 5, tau.data(), phi.data(), scalar.data()) ==
            CONEKIT_OK);
    CHECK(tau.front() == -0.25);
    CHECK(phi.back() == 0.0);

    double value = 1.0;
    int vanishes = 0;
    REQUIRE(conekit_solution_log_futaki(s.h, "400/567", &value, &vanishes) == CONEKIT_OK);
    CHECK(vanishes == 1);
    CHECK(value == 0.0);
    REQUIRE(conekit_solution_log_futaki(s.h, "1", &value, &vanishes) == CONEKIT_OK);
    CHECK(vanishes == 0);
    CHECK(value > 0.0);

    double slope = 0.0, rel = 1.0;
    REQUIRE(conekit_solution_fit_exponent(s.h, 1e-6, 10000, &slope, &rel) == CONEKIT_OK);
    CHECK(rel < 0.01);
    CHECK(conekit_solution_fit_exponent(s.h, 1e-6, 50, &slope, &rel) == CONEKIT_ERR_PRECONDITION);
}

TEST_CASE("verify through the C interface") {
    conekit_verify_report* r = nullptr;
    REQUIRE(conekit_verify_random(5, 3, &r) == CONEKIT_OK);
    CHECK(conekit_verify_cases(r) == 3);
    CHECK(conekit_verify_checks(r) > 3);
    CHECK(conekit_verify_passed(r) == 1);
    CHECK(conekit_verify_failure(r, 0) == nullptr);
    conekit_verify_destroy(r);

    Base pair_m1_2{{"1", "1", "-1"}, {"1", "1", "2"}};
    Problem p(pair_m1_2, "1/4");
    REQUIRE(conekit_verify_problem(p.h, &r) == CONEKIT_OK);
    CHECK(conekit_verify_passed(r) == 1);
    conekit_verify_destroy(r);
}

TEST_CASE("float entry point") {
    Base pair_m1_2{{"1", "1", "-1"}, {"1", "1", "2"}};
    double beta = 0.0;
    REQUIRE(conekit_beta_float(pair_m1_2.h, 0.25, &beta) == CONEKIT_OK);
    CHECK(std::abs(beta - 542.0 / 375.0) < 1e-12);
    CHECK(conekit_beta_float(pair_m1_2.h, 0.5, &beta) == CONEKIT_ERR_DEGENERATE_INTERVAL);
}
