#pragma once

// Randomized invariant suite behind `conekit verify` and the acceptance run.

#include "conekit/geometry.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace conekit {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int cases = 100;
    bool numeric = true;        // exact-vs-quadrature moments
    bool asymptotics = true;    // cone exponent fit
    double cutoff = 1e-6;
    int steps = 10000;
    double moment_tolerance = 1e-10;
    double exponent_tolerance = 0.01;
};

// Factor data drawn from r <= 3, n_i <= 3, l_i in [-3, 3], κ_i in {1/2, 1, 2},
// and a rational b strictly inside the admissible range.
struct RandomSetupSource {
    explicit RandomSetupSource(std::uint64_t seed) : rng(seed) {}
    std::vector<KEFactor> factors();
    Rational admissible_b(const std::vector<KEFactor>& factors);
    FibrationSetup next();

    std::mt19937_64 rng;
};

std::string describe_factors(const std::vector<KEFactor>& factors);

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Every invariant for one setup, in a fixed order.
std::vector<CheckResult> check_setup(const FibrationSetup& setup, const VerifyOptions& options);

struct VerifyReport {
    int cases_run = 0;
    int cases_failed = 0;
    int checks_run = 0;
    std::vector<std::string> failures;   // "case k (setup): check: detail"
    bool passed() const { return cases_failed == 0; }
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace conekit
