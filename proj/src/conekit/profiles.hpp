#pragma once

// Momentum profiles φ on [-b, b], carried as the polynomial (φQ)(τ).
//
// Both solvers build
//     (φQ)(τ) = 2(τ + b)Q(-b) - 2 ∫_{-b}^τ (S(x) - R(x))(τ - x) Q(x) dx
// for a target scalar curvature S: S = σ₀ + λτ for the smooth extremal
// metric, S = σ'₀ for the cscK metric with a cone angle 2πβ along τ = b.

#include "conekit/geometry.hpp"

#include <vector>

namespace conekit {

struct PositivityCertificate {
    std::size_t interior_root_count = 0;
    Rational midpoint_value;   // (φQ)(0)

    bool passed() const { return interior_root_count == 0 && midpoint_value > 0; }
};

struct ExtremalSolution {
    Rational sigma0;
    Rational lambda;
    Poly phiQ;
    PositivityCertificate positivity;
};

struct ConicalSolution {
    Rational sigma0_prime;
    Rational beta;               // closed form, exported value
    Rational beta_from_slope;    // -φ'(b)/2 from the boundary derivative relation
    Poly phiQ;
    PositivityCertificate positivity;
};

// φQ for the target curvature polynomial `target` (σ₀ + λτ or σ'₀).
Poly profile_poly(const MomentumData& data, const Poly& target);

PositivityCertificate certify_positivity(const Poly& phiQ, const Rational& b);

// Throw InternalInconsistency on a broken identity and PositivityFailure
// when the certificate fails.
ExtremalSolution solve_extremal(const MomentumData& data);
ConicalSolution solve_cscK_conical(const MomentumData& data);

// Same construction without the final checks, for reporting.
ExtremalSolution construct_extremal(const MomentumData& data);
ConicalSolution construct_cscK_conical(const MomentumData& data);

// Named identity failures; empty when everything holds exactly.
std::vector<std::string> extremal_violations(const MomentumData& data, const ExtremalSolution& sol);
std::vector<std::string> conical_violations(const MomentumData& data, const ConicalSolution& sol);

// S = (RQ - (φQ)''/2) / Q at τ.
Rational scalar_curvature(const Poly& phiQ, const MomentumData& data, const Rational& tau);

struct ProfileSample {
    double tau;
    double phi;
    double scalar;
};

// Uniform grid on [-b, b] inclusive, evaluated exactly and rounded.
std::vector<ProfileSample> sample_profile(const Poly& phiQ, const MomentumData& data, int grid_size);

}  // namespace conekit
