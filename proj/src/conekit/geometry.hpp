#pragma once

// Base data for the momentum construction on P(F + C) over a product of
// Kähler-Einstein Fano factors M = M_1 x ... x M_r with F = ⊗ p_i^* K_i^{l_i}.
//
// On the i-th factor the form ω_M(τ) = ω_M - τγ restricts to s_i(τ) ω_i with
//     s_i(τ) = 1 - τ l_i κ_i,
// so the volume ratio and the traced Ricci form are
//     Q(τ)  = Π s_i(τ)^{n_i},
//     RQ(τ) = Σ n_i κ_i s_i(τ)^{n_i - 1} Π_{j≠i} s_j(τ)^{n_j}.
// With this orientation τ = b is the ∞-section, where the cone angle lives.

#include "conekit/exactalg.hpp"

#include <optional>
#include <vector>

namespace conekit {

struct KEFactor {
    int dim = 1;             // complex dimension n_i
    Rational einstein = 1;   // κ_i in Ric(ω_i) = κ_i ω_i
    Rational exponent = 0;   // l_i
};

// Validated input: the momentum interval [-b, b] keeps every s_i positive.
class FibrationSetup {
public:
    const std::vector<KEFactor>& factors() const noexcept { return factors_; }
    const Rational& b() const noexcept { return b_; }
    double vol_M() const noexcept { return vol_M_; }
    const Rational& a() const noexcept { return a_; }

    // Complex dimension n - 1 of the base.
    int base_dim() const noexcept;
    // Eigenvalues of ω_M^{-1}γ, one per factor (multiplicity = dim).
    std::vector<Rational> curvature_eigenvalues() const;
    // s_i(τ) for each factor.
    std::vector<Poly> scalings() const;

    friend FibrationSetup build_setup(std::vector<KEFactor>, Rational, double, Rational);

private:
    std::vector<KEFactor> factors_;
    Rational b_;
    double vol_M_ = 1.0;
    Rational a_ = 1;
};

// Supremum of admissible b, i.e. min over l_i κ_i ≠ 0 of 1/|l_i κ_i|.
// Empty when every exponent vanishes (γ = 0, any b works).
std::optional<Rational> max_admissible_b(const std::vector<KEFactor>& factors);

// Checks factor data (DegenerateInterval / InvalidArgument on failure).
void validate_factors(const std::vector<KEFactor>& factors);

FibrationSetup build_setup(std::vector<KEFactor> factors, Rational b, double vol_M = 1.0,
                           Rational a = 1);

Poly volume_ratio_poly(const std::vector<KEFactor>& factors);   // Q
Poly traced_ricci_poly(const std::vector<KEFactor>& factors);   // RQ

struct MomentumData {
    Poly Q;
    Poly RQ;
    Rational b;
    Rational A;     // ∫ Q
    Rational B;     // ∫ τQ
    Rational C;     // ∫ τ²Q
    Rational IR;    // ∫ RQ
    Rational IxR;   // ∫ τ RQ

    Rational Q_minus() const { return Q(-b); }
    Rational Q_plus() const { return Q(b); }
    Rational tau_bar() const { return B / A; }
};

MomentumData build_momentum_data(const FibrationSetup& setup);

// R(τ) = RQ(τ)/Q(τ); PoleAtTau where Q vanishes.
Rational eval_R(const MomentumData& data, const Rational& tau);

}  // namespace conekit
