#pragma once

// Floating-point backend. Q and RQ are evaluated straight from the factor
// data (product / sum-of-fractions form, never the expanded polynomials) and
// integrated adaptively, so it is an independent route to the exact moments.

#include "conekit/geometry.hpp"

#include <array>
#include <string>

namespace conekit::numeric {

double q_value(const std::vector<KEFactor>& factors, double tau);
// R(τ) Q(τ) with R = Σ n_i κ_i / s_i(τ).
double rq_value(const std::vector<KEFactor>& factors, double tau);

struct Moment {
    const char* name;
    double value;
    double l1_norm;   // ∫ |integrand|, the scale for relative comparison
};

// A, B, C, ∫RQ, ∫τRQ over [-b, b].
std::array<Moment, 5> moments(const std::vector<KEFactor>& factors, double b);

struct CrossCheck {
    std::string worst;
    double max_relative_error = 0.0;
};

// Compares moments() against the exact MomentumData. The error of each
// moment is measured relative to max(|exact|, ∫|integrand|), which keeps
// odd moments that vanish exactly meaningful.
CrossCheck cross_validate(const std::vector<KEFactor>& factors, const MomentumData& data);

// Cone angle in floating point for a double b (closed form on numeric moments).
double beta_float(const std::vector<KEFactor>& factors, double b);

}  // namespace conekit::numeric
