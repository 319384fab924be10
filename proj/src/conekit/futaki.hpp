#pragma once

// Futaki invariants for the fibrewise C*-action with holomorphy potential
// f = a(τ - τ̄), evaluated on the smooth extremal metric of the same class.
//
// Every vanishing decision is made on the exact "per unit Vol(M)" rational
// before the transcendental factors (2π, Vol(M)) are applied. The classical
// invariant carries 2π; the log invariant is exported without it, matching
// the two formulas as they are usually displayed. Both raw numbers are kept.

#include "conekit/profiles.hpp"

namespace conekit {

// 2π Vol(M) ∫_{-b}^{b} f Q dτ.
double volume_functional(const MomentumData& data, const Poly& f, double vol_M);

struct FutakiValue {
    Rational exact;   // value divided by Vol(M) (and by 2π for the classical one)
    double value = 0.0;
};

// 2π a λ Vol(M) ∫ (τ - τ̄)² Q = 2π a λ Vol(M) (C - B²/A).
FutakiValue classical_futaki(const MomentumData& data, const ExtremalSolution& ext, const Rational& a,
                             double vol_M);

// a λ Vol(M) ∫ (τ - τ̄)² Q - (1 - β) a (b - τ̄) Q(b) Vol(M).
FutakiValue log_futaki(const MomentumData& data, const Rational& beta, const ExtremalSolution& ext,
                       const Rational& a, double vol_M);

// Unique β with log_futaki = 0:
//     β = (Q(b)(bA - B) - λ(AC - B²)) / (Q(b)(bA - B)).
Rational beta_via_futaki(const MomentumData& data, const ExtremalSolution& ext);

struct FutakiReport {
    Rational tau_bar;
    FutakiValue fut_classical;
    FutakiValue fut_log;          // at beta_from_futaki, so exact part is 0
    Rational beta_from_futaki;
    bool identity_ok = false;     // beta_from_futaki == conical β
};

FutakiReport futaki_report(const MomentumData& data, const ExtremalSolution& ext, const ConicalSolution& con,
                           const Rational& a, double vol_M);

struct MainTheoremCheck {
    Rational beta_construction;
    Rational beta_futaki;
    bool holds = false;
    std::string discrepancy;   // empty when holds
};

// Solves both profiles and compares the two cone angles as exact rationals.
MainTheoremCheck verify_main_theorem(const MomentumData& data);

}  // namespace conekit
