#pragma once

// Numerical check of the cone angle: along a fibre the log-radius t and the
// moment map are related by dt = dτ/φ(τ), and near τ = b
//     t = -(1/(2β)) log(b - τ) + O(1),
// so the slope of t against -log(b - τ) close to b recovers 1/(2β).

#include "conekit/geometry.hpp"

#include <vector>

namespace conekit {

struct AsymptoticSample {
    double tau;
    double t;
    double minus_log_gap;   // -ln(b - τ)
};

struct AsymptoticFit {
    Rational beta_target;
    double slope_fitted = 0.0;
    double relative_error = 0.0;
    std::vector<AsymptoticSample> samples;
};

// Integrates 1/φ from τ = 0 to the window [b - 10·cutoff, b - cutoff] with a
// composite Gauss-Legendre rule of `steps` panels and fits the log-slope by
// least squares over the window.
AsymptoticFit fit_cone_exponent(const Poly& phiQ, const MomentumData& data, const Rational& beta,
                                double cutoff = 1e-6, int steps = 10000);

}  // namespace conekit
