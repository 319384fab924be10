#include "conekit/futaki.hpp"

#include "conekit/error.hpp"

#include <numbers>

namespace conekit {

double volume_functional(const MomentumData& data, const Poly& f, double vol_M) {
    const Rational integral = (f * data.Q).integrate(-data.b, data.b);
    return 2.0 * std::numbers::pi * vol_M * to_double(integral);
}

namespace {

// ∫ (τ - τ̄)² Q dτ = C - B²/A
Rational centred_second_moment(const MomentumData& d) { return d.C - d.B * d.B / d.A; }

}  // namespace

FutakiValue classical_futaki(const MomentumData& data, const ExtremalSolution& ext, const Rational& a,
                             double vol_M) {
    FutakiValue out;
    out.exact = a * ext.lambda * centred_second_moment(data);
    out.value = out.exact == 0 ? 0.0 : 2.0 * std::numbers::pi * vol_M * to_double(out.exact);
    return out;
}

FutakiValue log_futaki(const MomentumData& data, const Rational& beta, const ExtremalSolution& ext,
                       const Rational& a, double vol_M) {
    FutakiValue out;
    out.exact = a * ext.lambda * centred_second_moment(data) -
                (1 - beta) * a * (data.b - data.tau_bar()) * data.Q_plus();
    out.value = out.exact == 0 ? 0.0 : vol_M * to_double(out.exact);
    return out;
}

Rational beta_via_futaki(const MomentumData& data, const ExtremalSolution& ext) {
    const Rational denom = data.Q_plus() * (data.b * data.A - data.B);
    if (denom == 0) fail(ErrorCode::DegenerateDenominator, "Q(b)(bA - B) vanishes");
    return (denom - ext.lambda * (data.A * data.C - data.B * data.B)) / denom;
}

FutakiReport futaki_report(const MomentumData& data, const ExtremalSolution& ext, const ConicalSolution& con,
                           const Rational& a, double vol_M) {
    FutakiReport r;
    r.tau_bar = data.tau_bar();
    r.fut_classical = classical_futaki(data, ext, a, vol_M);
    r.beta_from_futaki = beta_via_futaki(data, ext);
    r.fut_log = log_futaki(data, r.beta_from_futaki, ext, a, vol_M);
    r.identity_ok = r.beta_from_futaki == con.beta;
    return r;
}

MainTheoremCheck verify_main_theorem(const MomentumData& data) {
    const ExtremalSolution ext = solve_extremal(data);
    const ConicalSolution con = solve_cscK_conical(data);
    MainTheoremCheck check;
    check.beta_construction = con.beta;
    check.beta_futaki = beta_via_futaki(data, ext);
    check.holds = check.beta_construction == check.beta_futaki;
    if (!check.holds)
        check.discrepancy = "construction β = " + check.beta_construction.get_str() +
                            ", Futaki β = " + check.beta_futaki.get_str() +
                            ", difference = " + Rational(check.beta_construction - check.beta_futaki).get_str();
    return check;
}

}  // namespace conekit
