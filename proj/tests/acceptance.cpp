// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include "conekit/asymptotics.hpp"
#include "conekit/futaki.hpp"
#include "conekit/numeric.hpp"
#include "conekit/profiles.hpp"
#include "conekit/verify.hpp"

#include "golden_curves.inc"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace conekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<KEFactor> p1_pair(long l1, long l2) { return {{1, 1, l1}, {1, 1, l2}}; }
const std::vector<KEFactor> k_pair_m1_2 = p1_pair(-1, 2);
const std::vector<KEFactor> k_pair_m2_1 = p1_pair(-2, 1);
const std::vector<KEFactor> k_mixed = {{2, ratio(1, 2), 3}, {1, 2, -1}};

// b = 1/100 + k/100, k = 0..48: the 49-point grid on [0.01, 0.49].
Rational grid_b(int k) { return ratio(1, 100) + ratio(k, 100); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

int g_failed = 0;

void report(int id, const char* title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++g_failed;
    std::printf("%s criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

std::vector<FibrationSetup> random_setups() {
    RandomSetupSource source(1);
    std::vector<FibrationSetup> out;
    for (int k = 0; k < 100; ++k) out.push_back(source.next());
    return out;
}

Outcome cone_angle_curve(const std::vector<KEFactor>& factors, const char* const* golden, const Rational& lo,
                     const Rational& hi, bool hi_open) {
    int in_band = 0, golden_hits = 0;
    Rational min_beta, max_beta;
    for (int k = 0; k < 49; ++k) {
        const auto d = build_momentum_data(build_setup(factors, grid_b(k)));
        const auto con = solve_cscK_conical(d);
        if (k == 0 || con.beta < min_beta) min_beta = con.beta;
        if (k == 0 || con.beta > max_beta) max_beta = con.beta;
        const bool upper_ok = hi_open ? true : con.beta < hi;
        if (con.beta > lo && upper_ok) ++in_band;
        if (con.beta == parse_rational(golden[k])) ++golden_hits;
    }
    std::ostringstream d;
    d << in_band << "/49 in band, " << golden_hits << "/49 equal golden rationals, β ∈ [" << to_double(min_beta)
      << ", " << to_double(max_beta) << "]";
    return {in_band == 49 && golden_hits == 49, d.str()};
}

}  // namespace

int main() {
    const auto setups = random_setups();

    report(1, "β(construction) = β(log Futaki) exactly on 100 seeded random setups, < 5 s", [&] {
        const auto t0 = Clock::now();
        int equal = 0;
        for (const auto& s : setups) {
            const auto d = build_momentum_data(s);
            if (construct_cscK_conical(d).beta == beta_via_futaki(d, construct_extremal(d))) ++equal;
        }
        const double t = seconds_since(t0);
        std::ostringstream d;
        d << equal << "/100 exact, " << t << " s";
        return Outcome{equal == 100 && t < 5.0, d.str()};
    });

    report(2, "l = (-1, 2): β > 1 on the 49-point grid b ∈ [0.01, 0.49], golden rationals", [&] {
        return cone_angle_curve(k_pair_m1_2, k_golden_pair_m1_2, 1, 0, true);
    });

    report(3, "l = (-2, 1): 0.25 < β < 1 on the same grid, golden rationals", [&] {
        return cone_angle_curve(k_pair_m2_1, k_golden_pair_m2_1, ratio(1, 4), 1, false);
    });

    report(4, "trivial bundle: λ = 0, β = 1, conical = extremal; P1 pair at b = 1 gives σ₀ = 3, φQ = 1 - τ²", [&] {
        int ok = 0, total = 0;
        std::vector<std::pair<std::vector<KEFactor>, Rational>> cases{
            {p1_pair(0, 0), Rational(1)},
            {p1_pair(0, 0), ratio(1, 3)},
            {{{2, ratio(1, 2), 0}, {3, 2, 0}}, ratio(7, 5)},
            {{{1, 2, 0}}, Rational(4)},
        };
        for (const auto& [f, b] : cases) {
            const auto d = build_momentum_data(build_setup(f, b));
            const auto ext = solve_extremal(d);
            const auto con = solve_cscK_conical(d);
            ++total;
            if (ext.lambda == 0 && con.beta == 1 && con.phiQ == ext.phiQ) ++ok;
        }
        const auto d = build_momentum_data(build_setup(p1_pair(0, 0), 1));
        const auto ext = solve_extremal(d);
        const bool pinned = ext.sigma0 == 3 && ext.phiQ == Poly{1, 0, -1};
        std::ostringstream s;
        s << ok << "/" << total << " setups, pinned pair " << (pinned ? "ok" : "wrong") << ": σ₀ = " << ext.sigma0
          << ", φQ = " << ext.phiQ.to_string();
        return Outcome{ok == total && pinned, s.str()};
    });

    report(5, "exact ODE and boundary identities, zero tolerance, every produced solution", [&] {
        int solutions = 0, clean = 0;
        std::string first;
        auto check = [&](const MomentumData& d) {
            const auto ext = construct_extremal(d);
            const auto con = construct_cscK_conical(d);
            for (const auto& v : {extremal_violations(d, ext), conical_violations(d, con)}) {
                ++solutions;
                if (v.empty()) ++clean;
                else if (first.empty()) first = v.front();
            }
        };
        for (const auto& s : setups) check(build_momentum_data(s));
        for (const auto& f : {k_pair_m1_2, k_pair_m2_1})
            for (int k = 0; k < 49; ++k) check(build_momentum_data(build_setup(f, grid_b(k))));
        check(build_momentum_data(build_setup(p1_pair(0, 0), 1)));
        std::ostringstream s;
        s << clean << "/" << solutions << " solutions clean" << (first.empty() ? "" : ", first violation: " + first);
        return Outcome{clean == solutions, s.str()};
    });

    report(6, "AC - B² > 0, bA - B > 0, β >= 0, no interior root, on the 100 random setups", [&] {
        int det = 0, gap = 0, nonneg = 0, roots = 0;
        std::string first;
        for (const auto& s : setups) {
            const auto d = build_momentum_data(s);
            const auto ext = construct_extremal(d);
            const auto con = construct_cscK_conical(d);
            det += d.A * d.C - d.B * d.B > 0;
            gap += d.b * d.A - d.B > 0;
            nonneg += con.beta >= 0;
            const bool r = ext.positivity.interior_root_count == 0 && con.positivity.interior_root_count == 0;
            roots += r;
            if ((con.beta < 0 || !r) && first.empty())
                first = describe_factors(s.factors()) + ", b = " + s.b().get_str() + ", β = " + con.beta.get_str();
        }
        std::ostringstream s;
        s << "AC-B² " << det << "/100, bA-B " << gap << "/100, β>=0 " << nonneg << "/100, root-free " << roots
          << "/100" << (first.empty() ? "" : ", first failure: " + first);
        return Outcome{det == 100 && gap == 100 && nonneg == 100 && roots == 100, s.str()};
    });

    report(7, "adaptive quadrature of A, B, C, ∫RQ, ∫xRQ matches exact values to 1e-10 relative", [&] {
        double worst = 0.0;
        std::string where;
        int runs = 0;
        auto check = [&](const FibrationSetup& s) {
            const auto cc = numeric::cross_validate(s.factors(), build_momentum_data(s));
            ++runs;
            if (cc.max_relative_error > worst) {
                worst = cc.max_relative_error;
                where = describe_factors(s.factors()) + " b = " + s.b().get_str() + " " + cc.worst;
            }
        };
        for (const auto& f : {k_pair_m1_2, k_pair_m2_1})
            for (int k = 0; k < 49; ++k) check(build_setup(f, grid_b(k)));
        check(build_setup(p1_pair(0, 0), 1));
        // the mixed example config: b = 1/20 .. 9/20
        for (int k = 0; k < 9; ++k) check(build_setup(k_mixed, ratio(1 + k, 20)));
        for (const auto& s : setups) check(s);
        std::ostringstream d;
        d << runs << " setups, worst " << worst << (where.empty() ? "" : " at " + where);
        return Outcome{worst <= 1e-10, d.str()};
    });

    report(8, "log-slope fit matches 1/(2β) within 1% for l = (-2, 1), b = 1/4 and the trivial case, < 2 s each", [&] {
        std::ostringstream d;
        bool ok = true;
        for (const auto& [name, f, b] : {std::tuple{"l = (-2, 1)", k_pair_m2_1, ratio(1, 4)},
                                         std::tuple{"trivial", p1_pair(0, 0), Rational(1)}}) {
            const auto data = build_momentum_data(build_setup(f, b));
            const auto con = solve_cscK_conical(data);
            const auto t0 = Clock::now();
            const auto fit = fit_cone_exponent(con.phiQ, data, con.beta, 1e-6, 10000);
            const double t = seconds_since(t0);
            ok = ok && fit.relative_error < 0.01 && t < 2.0;
            d << name << ": slope " << fit.slope_fitted << " vs " << 1 / (2 * to_double(con.beta)) << ", rel err "
              << fit.relative_error << ", " << t << " s; ";
        }
        std::string s = d.str();
        s.resize(s.size() - 2);
        return Outcome{ok, s};
    });

    report(9, "volume functional: f = 1 gives 2π·vol_M·A; Q = 1, b = 1, vol_M = 1 gives 4π to 1e-12", [&] {
        constexpr double pi = std::numbers::pi;
        const auto flat = build_momentum_data(build_setup({{1, 1, 0}}, 1));
        const double v = volume_functional(flat, Poly::constant(1), 1.0);
        const double rel4pi = std::abs(v - 4 * pi) / (4 * pi);
        double worst = 0.0;
        for (const auto& s : setups) {
            const auto d = build_momentum_data(s);
            for (double vol : {1.0, 2.5}) {
                const double got = volume_functional(d, Poly::constant(1), vol);
                const double want = 2 * pi * vol * to_double(d.A);
                worst = std::max(worst, std::abs(got - want) / want);
            }
        }
        std::ostringstream d;
        d << "4π relative error " << rel4pi << ", worst 2π·vol·A relative error " << worst;
        return Outcome{rel4pi <= 1e-12 && worst <= 1e-12, d.str()};
    });

    std::printf("%s: %d of 9 criteria failed\n", g_failed ? "FAILED" : "ALL PASSED", g_failed);
    return g_failed ? 1 : 0;
}
