#pragma once

#include <functional>
#include <span>
#include <vector>

namespace conekit::quad {

// Gauss-Legendre rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point rule, nodes by Newton iteration on P_n. n >= 1.
Rule gauss_legendre(int n);

using Integrand = std::function<double(double)>;

// Composite rule: `panels` equal panels on [lo, hi], `rule` on each.
double composite(const Integrand& f, double lo, double hi, int panels, const Rule& rule);

struct AdaptiveResult {
    double value = 0.0;
    double abs_error = 0.0;   // estimated
    double l1_norm = 0.0;     // integral of |f|, a natural scale for relative checks
    int intervals = 0;
    bool converged = false;
};

// Globally adaptive Gauss-Kronrod (7/15) with bisection of the worst interval.
AdaptiveResult adaptive(const Integrand& f, double lo, double hi, double rel_tol = 1e-13,
                        double abs_tol = 0.0, int max_intervals = 2000);

}  // namespace conekit::quad
