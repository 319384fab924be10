#include "conekit/verify.hpp"

#include "conekit/asymptotics.hpp"
#include "conekit/error.hpp"
#include "conekit/futaki.hpp"
#include "conekit/numeric.hpp"
#include "conekit/profiles.hpp"

#include <sstream>

namespace conekit {

namespace {

// Modulo draws keep the stream identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

std::vector<KEFactor> RandomSetupSource::factors() {
    static const Rational einstein[] = {ratio(1, 2), Rational(1), Rational(2)};
    std::vector<KEFactor> out(static_cast<std::size_t>(draw(rng, 1, 3)));
    for (auto& f : out) {
        f.dim = static_cast<int>(draw(rng, 1, 3));
        f.einstein = einstein[draw(rng, 0, 2)];
        f.exponent = Rational(draw(rng, -3, 3));
    }
    return out;
}

Rational RandomSetupSource::admissible_b(const std::vector<KEFactor>& factors) {
    if (auto bound = max_admissible_b(factors)) {
        const long m = draw(rng, 2, 40);
        return *bound * ratio(draw(rng, 1, m - 1), m);
    }
    const long m = draw(rng, 1, 8);
    return ratio(draw(rng, 1, 4 * m), m);
}

FibrationSetup RandomSetupSource::next() {
    auto f = factors();
    auto b = admissible_b(f);
    return build_setup(std::move(f), std::move(b));
}

std::string describe_factors(const std::vector<KEFactor>& factors) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << ", ";
        out << "(" << factors[i].dim << ", " << factors[i].einstein.get_str() << ", "
            << factors[i].exponent.get_str() << ")";
    }
    out << "]";
    return out.str();
}

std::vector<CheckResult> check_setup(const FibrationSetup& setup, const VerifyOptions& options) {
    std::vector<CheckResult> out;
    auto record = [&](std::string name, bool ok, std::string detail = {}) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    MomentumData data;
    ExtremalSolution ext;
    ConicalSolution con;
    try {
        data = build_momentum_data(setup);
    } catch (const Error& e) {
        record("momentum data", false, e.what());
        return out;
    }
    record("AC - B² > 0", data.A * data.C - data.B * data.B > 0);
    record("bA - B > 0", data.b * data.A - data.B > 0);

    try {
        ext = construct_extremal(data);
        con = construct_cscK_conical(data);
    } catch (const Error& e) {
        record("profiles", false, e.what());
        return out;
    }

    auto joined = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
        return s;
    };
    const auto ev = extremal_violations(data, ext);
    record("extremal boundary and ODE identities", ev.empty(), joined(ev));
    const auto cv = conical_violations(data, con);
    record("conical boundary and ODE identities", cv.empty(), joined(cv));
    auto roots = [](const PositivityCertificate& c) {
        return std::to_string(c.interior_root_count) + " interior root(s), (φQ)(0) = " + c.midpoint_value.get_str();
    };
    record("extremal positivity certificate", ext.positivity.passed(), roots(ext.positivity));
    record("conical positivity certificate", con.positivity.passed(), roots(con.positivity));
    record("β >= 0", con.beta >= 0, con.beta.get_str());

    const Rational beta_fut = beta_via_futaki(data, ext);
    record("main theorem: β(construction) = β(Futaki)", beta_fut == con.beta,
           con.beta.get_str() + " vs " + beta_fut.get_str());
    record("λ = 0 ⟺ β = 1", (ext.lambda == 0) == (con.beta == 1));
    record("log Futaki vanishes at β(Futaki)",
           log_futaki(data, beta_fut, ext, setup.a(), setup.vol_M()).exact == 0);

    if (options.numeric) {
        const auto cc = numeric::cross_validate(setup.factors(), data);
        std::ostringstream d;
        d << cc.worst << " relative error " << cc.max_relative_error;
        record("exact vs quadrature moments", cc.max_relative_error <= options.moment_tolerance, d.str());
    }
    if (options.asymptotics && con.positivity.passed()) {
        try {
            const auto fit = fit_cone_exponent(con.phiQ, data, con.beta, options.cutoff, options.steps);
            std::ostringstream d;
            d << "slope " << fit.slope_fitted << ", relative error " << fit.relative_error;
            record("cone exponent fit", fit.relative_error < options.exponent_tolerance, d.str());
        } catch (const Error& e) {
            record("cone exponent fit", false, e.what());
        }
    }
    return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
    VerifyReport report;
    RandomSetupSource source(options.seed);
    for (int k = 0; k < options.cases; ++k) {
        const FibrationSetup setup = source.next();
        ++report.cases_run;
        bool failed = false;
        for (const auto& c : check_setup(setup, options)) {
            ++report.checks_run;
            if (c.ok) continue;
            failed = true;
            report.failures.push_back("case " + std::to_string(k) + " " + describe_factors(setup.factors()) +
                                      ", b = " + setup.b().get_str() + ": " + c.name +
                                      (c.detail.empty() ? "" : ": " + c.detail));
        }
        if (failed) ++report.cases_failed;
    }
    return report;
}

}  // namespace conekit
