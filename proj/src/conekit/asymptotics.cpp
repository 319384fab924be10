#include "conekit/asymptotics.hpp"

#include "conekit/error.hpp"
#include "conekit/quadrature.hpp"

#include <cmath>
#include <vector>

namespace conekit {

namespace {

constexpr int k_rule_order = 8;
constexpr int k_window_samples = 41;
constexpr int k_window_panels = 4;

// Coefficients rounded once; the integrand is evaluated ~10⁵ times.
std::vector<double> float_coeffs(const Poly& p) {
    std::vector<double> out;
    for (const auto& c : p.coefficients()) {
        const double v = to_double(c);
        if (!std::isfinite(v)) fail(ErrorCode::Overflow, "coefficient does not fit in a double");
        out.push_back(v);
    }
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

AsymptoticFit fit_cone_exponent(const Poly& phiQ, const MomentumData& data, const Rational& beta,
                                double cutoff, int steps) {
    const double b = to_double(data.b);
    if (steps < 100) fail(ErrorCode::PreconditionViolation, "steps = " + std::to_string(steps) + " < 100");
    if (!(cutoff > 0.0) || !(10.0 * cutoff < b))
        fail(ErrorCode::PreconditionViolation, "need 0 < 10·cutoff < b");
    if (beta <= 0) fail(ErrorCode::PreconditionViolation, "cone exponent fit needs β > 0");
    if (phiQ(data.b) != 0) fail(ErrorCode::PreconditionViolation, "profile does not vanish at τ = b");

    // Work in the gap s = b - τ, exactly: φQ(b - s) = s·P(s), Q(b - s) = Qs(s),
    // so s/φ = Qs(s)/P(s) stays O(1) all the way to s = 0.
    const auto gap_profile = float_coeffs(phiQ.reflected().taylor_shift(-data.b).deflate(0));
    const auto gap_q = float_coeffs(data.Q.reflected().taylor_shift(-data.b));

    // With u = -ln s, dτ = s du and t = ∫ (s/φ) du.
    auto integrand = [&](double u) {
        const double s = std::exp(-u);
        const double p = horner(gap_profile, s);
        if (!(p > 0.0))
            fail(ErrorCode::NonPositiveProfile, "φ <= 0 at τ = " + std::to_string(b - s));
        return horner(gap_q, s) / p;
    };

    const quad::Rule rule = quad::gauss_legendre(k_rule_order);
    const double u_origin = -std::log(b);
    const double u_first = -std::log(10.0 * cutoff);
    const double u_last = -std::log(cutoff);

    AsymptoticFit fit;
    fit.beta_target = beta;
    double t = quad::composite(integrand, u_origin, u_first, steps, rule);
    const double du = (u_last - u_first) / (k_window_samples - 1);
    for (int k = 0; k < k_window_samples; ++k) {
        const double u = u_first + k * du;
        if (k > 0) t += quad::composite(integrand, u - du, u, k_window_panels, rule);
        fit.samples.push_back({b - std::exp(-u), t, u});
    }

    double mean_u = 0.0, mean_t = 0.0;
    for (const auto& s : fit.samples) {
        mean_u += s.minus_log_gap;
        mean_t += s.t;
    }
    mean_u /= static_cast<double>(fit.samples.size());
    mean_t /= static_cast<double>(fit.samples.size());
    double sxy = 0.0, sxx = 0.0;
    for (const auto& s : fit.samples) {
        sxy += (s.minus_log_gap - mean_u) * (s.t - mean_t);
        sxx += (s.minus_log_gap - mean_u) * (s.minus_log_gap - mean_u);
    }
    fit.slope_fitted = sxy / sxx;

    const double expected = 1.0 / (2.0 * to_double(beta));
    fit.relative_error = std::abs(fit.slope_fitted - expected) / expected;
    return fit;
}

}  // namespace conekit
