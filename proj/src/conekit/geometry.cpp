#include "conekit/geometry.hpp"

#include "conekit/error.hpp"

namespace conekit {

int FibrationSetup::base_dim() const noexcept {
    int n = 0;
    for (const auto& f : factors_) n += f.dim;
    return n;
}

std::vector<Rational> FibrationSetup::curvature_eigenvalues() const {
    std::vector<Rational> mu;
    for (const auto& f : factors_) mu.emplace_back(f.exponent * f.einstein);
    return mu;
}

std::vector<Poly> FibrationSetup::scalings() const {
    std::vector<Poly> s;
    for (const auto& f : factors_) s.push_back(Poly::linear(1, -f.exponent * f.einstein));
    return s;
}

std::optional<Rational> max_admissible_b(const std::vector<KEFactor>& factors) {
    std::optional<Rational> bound;
    for (const auto& f : factors) {
        const Rational mu = abs(Rational(f.exponent * f.einstein));
        if (mu == 0) continue;
        const Rational candidate = Rational(1) / mu;
        if (!bound || candidate < *bound) bound = candidate;
    }
    return bound;
}

void validate_factors(const std::vector<KEFactor>& factors) {
    if (factors.empty()) fail(ErrorCode::InvalidArgument, "at least one Kähler-Einstein factor is required");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.dim < 1)
            fail(ErrorCode::InvalidArgument, "factor " + std::to_string(i) + ": dimension must be >= 1");
        if (f.einstein <= 0)
            fail(ErrorCode::InvalidArgument,
                 "factor " + std::to_string(i) + ": Einstein constant must be positive (Fano)");
    }
}

FibrationSetup build_setup(std::vector<KEFactor> factors, Rational b, double vol_M, Rational a) {
    validate_factors(factors);
    if (b <= 0) fail(ErrorCode::DegenerateInterval, "b = " + b.get_str() + " must be positive");
    if (!(vol_M > 0.0)) fail(ErrorCode::InvalidArgument, "Vol(M) must be positive");
    if (a == 0) fail(ErrorCode::InvalidArgument, "potential scale a must be nonzero");
    if (auto bound = max_admissible_b(factors); bound && b >= *bound)
        fail(ErrorCode::DegenerateInterval,
             "b = " + b.get_str() + " makes ω_M(τ) degenerate on [-b, b]; need b < " + bound->get_str());

    FibrationSetup setup;
    setup.factors_ = std::move(factors);
    setup.b_ = std::move(b);
    setup.vol_M_ = vol_M;
    setup.a_ = std::move(a);
    return setup;
}

Poly volume_ratio_poly(const std::vector<KEFactor>& factors) {
    Poly q = Poly::constant(1);
    for (const auto& f : factors)
        q *= pow(Poly::linear(1, -f.exponent * f.einstein), static_cast<unsigned>(f.dim));
    return q;
}

Poly traced_ricci_poly(const std::vector<KEFactor>& factors) {
    Poly rq;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& fi = factors[i];
        Poly term = Poly::constant(Rational(fi.dim) * fi.einstein) *
                    pow(Poly::linear(1, -fi.exponent * fi.einstein), static_cast<unsigned>(fi.dim - 1));
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j == i) continue;
            const auto& fj = factors[j];
            term *= pow(Poly::linear(1, -fj.exponent * fj.einstein), static_cast<unsigned>(fj.dim));
        }
        rq += term;
    }
    return rq;
}

MomentumData build_momentum_data(const FibrationSetup& setup) {
    MomentumData d;
    d.b = setup.b();
    d.Q = volume_ratio_poly(setup.factors());
    d.RQ = traced_ricci_poly(setup.factors());
    const Rational lo = -d.b, hi = d.b;
    const Poly x = Poly::identity();
    d.A = d.Q.integrate(lo, hi);
    d.B = (x * d.Q).integrate(lo, hi);
    d.C = (x * x * d.Q).integrate(lo, hi);
    d.IR = d.RQ.integrate(lo, hi);
    d.IxR = (x * d.RQ).integrate(lo, hi);

    // Q > 0 on [-b, b] follows from admissibility; the moment inequalities
    // follow from it. A violation means the polynomial layer is broken.
    if (count_roots_in_open_interval(d.Q, lo, hi) != 0 || d.Q(lo) <= 0 || d.Q(hi) <= 0)
        fail(ErrorCode::InternalInconsistency, "Q is not positive on [-b, b]");
    if (d.A <= 0 || d.A * d.C - d.B * d.B <= 0 || d.b * d.A - d.B <= 0)
        fail(ErrorCode::InternalInconsistency, "moment inequalities A > 0, AC - B² > 0, bA - B > 0 violated");
    return d;
}

Rational eval_R(const MomentumData& data, const Rational& tau) {
    const Rational q = data.Q(tau);
    if (q == 0) fail(ErrorCode::PoleAtTau, "Q vanishes at τ = " + tau.get_str());
    return data.RQ(tau) / q;
}

}  // namespace conekit
