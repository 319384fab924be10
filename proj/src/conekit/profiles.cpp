#include "conekit/profiles.hpp"

#include "conekit/error.hpp"

#include <sstream>

namespace conekit {

Poly profile_poly(const MomentumData& data, const Poly& target) {
    const Rational& b = data.b;
    const Poly integrand = target * data.Q - data.RQ;
    return Poly::linear(2 * b, 2) * data.Q(-b) - 2 * integrand.double_antiderivative_from(-b);
}

PositivityCertificate certify_positivity(const Poly& phiQ, const Rational& b) {
    PositivityCertificate cert;
    cert.interior_root_count = count_roots_in_open_interval(phiQ, -b, b);
    cert.midpoint_value = phiQ(Rational(0));
    return cert;
}

namespace {

void require_positive(const PositivityCertificate& cert, const char* which) {
    if (cert.passed()) return;
    std::ostringstream msg;
    msg << which << " profile is not positive on (-b, b): " << cert.interior_root_count
        << " interior root(s), (φQ)(0) = " << cert.midpoint_value.get_str();
    fail(ErrorCode::PositivityFailure, msg.str());
}

void require_clean(const std::vector<std::string>& violations, const char* which) {
    if (violations.empty()) return;
    std::string msg = std::string(which) + " solution violates";
    for (const auto& v : violations) msg += " [" + v + "]";
    fail(ErrorCode::InternalInconsistency, msg);
}

}  // namespace

ExtremalSolution construct_extremal(const MomentumData& d) {
    // (A B; B C)(σ₀; λ) = (Q(-b) + Q(b) + ∫RQ; -bQ(-b) + bQ(b) + ∫xRQ)
    const Rational qm = d.Q_minus(), qp = d.Q_plus();
    const Rational r1 = qm + qp + d.IR;
    const Rational r2 = -d.b * qm + d.b * qp + d.IxR;
    const Rational det = d.A * d.C - d.B * d.B;
    if (det == 0) fail(ErrorCode::DegenerateDenominator, "moment matrix is singular");

    ExtremalSolution sol;
    sol.sigma0 = (d.C * r1 - d.B * r2) / det;
    sol.lambda = (d.A * r2 - d.B * r1) / det;
    sol.phiQ = profile_poly(d, Poly::linear(sol.sigma0, sol.lambda));
    sol.positivity = certify_positivity(sol.phiQ, d.b);
    return sol;
}

ExtremalSolution solve_extremal(const MomentumData& d) {
    auto sol = construct_extremal(d);
    require_clean(extremal_violations(d, sol), "extremal");
    require_positive(sol.positivity, "extremal");
    return sol;
}

ConicalSolution construct_cscK_conical(const MomentumData& d) {
    const Rational qm = d.Q_minus(), qp = d.Q_plus();
    const Rational denom = qp * (d.b * d.A - d.B);
    if (d.b * d.A - d.B == 0 || qp == 0)
        fail(ErrorCode::DegenerateDenominator, "Q(b)(bA - B) vanishes");

    ConicalSolution sol;
    // φ(b) = 0 fixes σ'₀.
    sol.sigma0_prime = (2 * d.b * qm + d.b * d.IR - d.IxR) / (d.b * d.A - d.B);
    // φ'(b)Q(b) = 2Q(-b) - 2∫(σ'₀ - R)Q
    const Rational slope_times_q = 2 * qm - 2 * (sol.sigma0_prime * d.A - d.IR);
    sol.beta_from_slope = -slope_times_q / (2 * qp);
    // Closed form from eliminating σ'₀ between the two boundary relations.
    sol.beta = (qm * (d.b * d.A + d.B) - d.A * d.IxR + d.B * d.IR) / denom;

    if (sol.beta != sol.beta_from_slope)
        fail(ErrorCode::InternalInconsistency, "cone angle routes disagree: closed form " + sol.beta.get_str() +
                                                   " vs boundary slope " + sol.beta_from_slope.get_str());

    sol.phiQ = profile_poly(d, Poly::constant(sol.sigma0_prime));
    sol.positivity = certify_positivity(sol.phiQ, d.b);
    return sol;
}

ConicalSolution solve_cscK_conical(const MomentumData& d) {
    auto sol = construct_cscK_conical(d);
    require_clean(conical_violations(d, sol), "conical");
    // β < 0 means φ' > 0 at both ends, so it always shows up here as a root.
    require_positive(sol.positivity, ("conical (β = " + sol.beta.get_str() + ")").c_str());
    return sol;
}

namespace {

void boundary_checks(const MomentumData& d, const Poly& phiQ, const Rational& beta,
                     std::vector<std::string>& out) {
    const Poly dphiQ = phiQ.derivative();
    if (phiQ(-d.b) != 0) out.emplace_back("(φQ)(-b) = 0");
    if (phiQ(d.b) != 0) out.emplace_back("(φQ)(b) = 0");
    if (dphiQ(-d.b) != 2 * d.Q_minus()) out.emplace_back("(φQ)'(-b) = 2Q(-b)");
    if (dphiQ(d.b) != -2 * beta * d.Q_plus()) out.emplace_back("(φQ)'(b) = -2βQ(b)");
}

}  // namespace

std::vector<std::string> extremal_violations(const MomentumData& d, const ExtremalSolution& sol) {
    std::vector<std::string> out;
    boundary_checks(d, sol.phiQ, Rational(1), out);
    const Poly lhs = 2 * d.RQ - sol.phiQ.derivative().derivative();
    const Poly rhs = 2 * Poly::linear(sol.sigma0, sol.lambda) * d.Q;
    if (!(lhs == rhs)) out.emplace_back("2RQ - (φQ)'' = 2(σ₀ + λτ)Q");
    return out;
}

std::vector<std::string> conical_violations(const MomentumData& d, const ConicalSolution& sol) {
    std::vector<std::string> out;
    boundary_checks(d, sol.phiQ, sol.beta, out);
    const Poly lhs = 2 * d.RQ - sol.phiQ.derivative().derivative();
    const Poly rhs = 2 * sol.sigma0_prime * d.Q;
    if (!(lhs == rhs)) out.emplace_back("2RQ - (φQ)'' = 2σ'₀Q");
    return out;
}

Rational scalar_curvature(const Poly& phiQ, const MomentumData& data, const Rational& tau) {
    const Rational q = data.Q(tau);
    if (q == 0) fail(ErrorCode::PoleAtTau, "Q vanishes at τ = " + tau.get_str());
    return (data.RQ(tau) - phiQ.derivative().derivative()(tau) / 2) / q;
}

std::vector<ProfileSample> sample_profile(const Poly& phiQ, const MomentumData& data, int grid_size) {
    if (grid_size < 2) fail(ErrorCode::PreconditionViolation, "grid_size must be >= 2");
    const Poly second = phiQ.derivative().derivative();
    std::vector<ProfileSample> out;
    out.reserve(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k) {
        const Rational tau = -data.b + 2 * data.b * ratio(k, grid_size - 1);
        const Rational q = data.Q(tau);
        const double phi = (k == 0 || k == grid_size - 1) ? 0.0 : to_double(phiQ(tau) / q);
        const double s = to_double((data.RQ(tau) - second(tau) / 2) / q);
        out.push_back({to_double(tau), phi, s});
    }
    return out;
}

}  // namespace conekit
