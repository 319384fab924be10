#include "conekit/conekit.h"

#include "conekit/asymptotics.hpp"
#include "conekit/error.hpp"
#include "conekit/futaki.hpp"
#include "conekit/numeric.hpp"
#include "conekit/profiles.hpp"
#include "conekit/verify.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

using namespace conekit;

struct conekit_base {
    std::vector<KEFactor> factors;
    // Refreshed on every add_factor; read-only afterwards.
    std::optional<std::string> max_b;
    std::array<std::string, 2> polys;
};

struct conekit_problem {
    FibrationSetup setup;
    MomentumData data;
    std::array<std::string, 8> moments;
    std::array<std::string, 2> polys;
    std::array<std::vector<std::string>, 2> poly_coeffs;
};

struct conekit_solution {
    MomentumData data;
    ExtremalSolution extremal;
    ConicalSolution conical;
    FutakiReport futaki;
    FutakiValue log_futaki_at_beta;
    Rational a;
    double vol_M = 1.0;
    std::array<std::string, 9> quantities;
    std::array<double, 9> values{};
    std::array<std::string, 2> profiles;
    std::array<std::vector<std::string>, 2> profile_coeffs;
};

struct conekit_verify_report {
    int cases = 0;
    int checks = 0;
    std::vector<std::string> failures;
};

namespace {

thread_local std::string g_last_error;

conekit_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return CONEKIT_ERR_INVALID_ARGUMENT;
        case ErrorCode::Parse: return CONEKIT_ERR_PARSE;
        case ErrorCode::DegenerateInterval: return CONEKIT_ERR_DEGENERATE_INTERVAL;
        case ErrorCode::PositivityFailure: return CONEKIT_ERR_POSITIVITY_FAILURE;
        case ErrorCode::InternalInconsistency: return CONEKIT_ERR_INTERNAL_INCONSISTENCY;
        case ErrorCode::PoleAtTau: return CONEKIT_ERR_POLE_AT_TAU;
        case ErrorCode::InvalidInterval: return CONEKIT_ERR_INVALID_INTERVAL;
        case ErrorCode::ZeroPolynomial: return CONEKIT_ERR_ZERO_POLYNOMIAL;
        case ErrorCode::Overflow: return CONEKIT_ERR_OVERFLOW;
        case ErrorCode::NonPositiveProfile: return CONEKIT_ERR_NON_POSITIVE_PROFILE;
        case ErrorCode::DegenerateDenominator: return CONEKIT_ERR_DEGENERATE_DENOMINATOR;
        case ErrorCode::PreconditionViolation: return CONEKIT_ERR_PRECONDITION;
    }
    return CONEKIT_ERR_UNKNOWN;
}

conekit_status set_error(conekit_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
conekit_status guarded(F&& body) noexcept {
    try {
        g_last_error.clear();
        body();
        return CONEKIT_OK;
    } catch (const Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(CONEKIT_ERR_UNKNOWN, "out of memory");
    } catch (const std::exception& e) {
        return set_error(CONEKIT_ERR_UNKNOWN, e.what());
    } catch (...) {
        return set_error(CONEKIT_ERR_UNKNOWN, "unknown failure");
    }
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, what);
}

conekit_status copy_out(const std::string& s, char* buf, size_t capacity) {
    if (!buf || capacity < s.size() + 1)
        return set_error(CONEKIT_ERR_BUFFER_TOO_SMALL, "need " + std::to_string(s.size() + 1) + " bytes");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return CONEKIT_OK;
}

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coefficients()) out.push_back(c.get_str());
    return out;
}

const Poly& profile_of(const conekit_solution* s, conekit_profile which) {
    return which == CONEKIT_PROFILE_CONICAL ? s->conical.phiQ : s->extremal.phiQ;
}

bool valid_poly(conekit_poly p) { return p == CONEKIT_POLY_Q || p == CONEKIT_POLY_RQ; }
bool valid_profile(conekit_profile p) { return p == CONEKIT_PROFILE_EXTREMAL || p == CONEKIT_PROFILE_CONICAL; }

}  // namespace

extern "C" {

const char* conekit_version(void) { return "1.0.0"; }

const char* conekit_status_name(conekit_status status) {
    switch (status) {
        case CONEKIT_OK: return "OK";
        case CONEKIT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case CONEKIT_ERR_PARSE: return "ParseError";
        case CONEKIT_ERR_DEGENERATE_INTERVAL: return "DegenerateInterval";
        case CONEKIT_ERR_POSITIVITY_FAILURE: return "PositivityFailure";
        case CONEKIT_ERR_INTERNAL_INCONSISTENCY: return "InternalInconsistency";
        case CONEKIT_ERR_POLE_AT_TAU: return "PoleAtTau";
        case CONEKIT_ERR_INVALID_INTERVAL: return "InvalidInterval";
        case CONEKIT_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
        case CONEKIT_ERR_OVERFLOW: return "Overflow";
        case CONEKIT_ERR_NON_POSITIVE_PROFILE: return "NonPositiveProfile";
        case CONEKIT_ERR_DEGENERATE_DENOMINATOR: return "DegenerateDenominator";
        case CONEKIT_ERR_PRECONDITION: return "PreconditionViolation";
        case CONEKIT_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case CONEKIT_ERR_UNKNOWN: break;
    }
    return "Unknown";
}

const char* conekit_last_error(void) { return g_last_error.c_str(); }

conekit_status conekit_grid_point(const char* lo, const char* hi, int k, int n, char* buf, size_t capacity) {
    std::string value;
    auto status = guarded([&] {
        require(lo && hi, "NULL argument");
        require(n >= 1 && k >= 0 && k < n, "need 0 <= k < n");
        const Rational a = parse_rational(lo), b = parse_rational(hi);
        value = (n == 1 ? a : a + (b - a) * ratio(k, n - 1)).get_str();
    });
    return status == CONEKIT_OK ? copy_out(value, buf, capacity) : status;
}

// ---------------------------------------------------------------------------

conekit_status conekit_base_create(conekit_base** out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        *out = new conekit_base;
    });
}

void conekit_base_destroy(conekit_base* base) { delete base; }

conekit_status conekit_base_add_factor(conekit_base* base, int dim, const char* einstein, const char* exponent) {
    return guarded([&] {
        require(base && einstein && exponent, "NULL argument");
        KEFactor f{dim, parse_rational(einstein), parse_rational(exponent)};
        auto factors = base->factors;
        factors.push_back(f);
        validate_factors(factors);
        auto bound = max_admissible_b(factors);
        base->factors = std::move(factors);
        base->max_b = bound ? std::optional<std::string>(bound->get_str()) : std::nullopt;
        base->polys[CONEKIT_POLY_Q] = volume_ratio_poly(base->factors).to_string();
        base->polys[CONEKIT_POLY_RQ] = traced_ricci_poly(base->factors).to_string();
    });
}

size_t conekit_base_factor_count(const conekit_base* base) { return base ? base->factors.size() : 0; }

conekit_status conekit_base_max_b(const conekit_base* base, const char** out) {
    return guarded([&] {
        require(base && out, "NULL argument");
        validate_factors(base->factors);
        *out = base->max_b ? base->max_b->c_str() : nullptr;
    });
}

conekit_status conekit_base_poly(const conekit_base* base, conekit_poly which, const char** out) {
    return guarded([&] {
        require(base && out && valid_poly(which), "invalid argument");
        validate_factors(base->factors);
        *out = base->polys[which].c_str();
    });
}

conekit_status conekit_beta_float(const conekit_base* base, double b, double* beta) {
    return guarded([&] {
        require(base && beta, "NULL argument");
        *beta = numeric::beta_float(base->factors, b);
    });
}

// ---------------------------------------------------------------------------

conekit_status conekit_problem_create(const conekit_base* base, const char* b, double vol_M, const char* a,
                                      conekit_problem** out) {
    return guarded([&] {
        require(base && b && out, "NULL argument");
        auto p = std::make_unique<conekit_problem>();
        p->setup = build_setup(base->factors, parse_rational(b), vol_M, a ? parse_rational(a) : Rational(1));
        p->data = build_momentum_data(p->setup);
        const auto& d = p->data;
        p->moments = {d.A.get_str(),   d.B.get_str(), d.C.get_str(),       d.IR.get_str(),
                      d.IxR.get_str(), d.b.get_str(), d.Q_minus().get_str(), d.Q_plus().get_str()};
        p->polys = {d.Q.to_string(), d.RQ.to_string()};
        p->poly_coeffs = {coeff_strings(d.Q), coeff_strings(d.RQ)};
        *out = p.release();
    });
}

void conekit_problem_destroy(conekit_problem* problem) { delete problem; }

const char* conekit_problem_moment(const conekit_problem* problem, conekit_moment which) {
    if (!problem || which < CONEKIT_MOMENT_A || which > CONEKIT_MOMENT_Q_PLUS) return nullptr;
    return problem->moments[which].c_str();
}

double conekit_problem_moment_value(const conekit_problem* problem, conekit_moment which) {
    if (!problem || which < CONEKIT_MOMENT_A || which > CONEKIT_MOMENT_Q_PLUS) return std::nan("");
    return to_double(Rational(problem->moments[which]));
}

const char* conekit_problem_poly(const conekit_problem* problem, conekit_poly which) {
    if (!problem || !valid_poly(which)) return nullptr;
    return problem->polys[which].c_str();
}

int conekit_problem_poly_degree(const conekit_problem* problem, conekit_poly which) {
    if (!problem || !valid_poly(which)) return -1;
    return static_cast<int>(problem->poly_coeffs[which].size()) - 1;
}

const char* conekit_problem_poly_coeff(const conekit_problem* problem, conekit_poly which, int k) {
    if (!problem || !valid_poly(which) || k < 0) return nullptr;
    const auto& c = problem->poly_coeffs[which];
    return static_cast<size_t>(k) < c.size() ? c[static_cast<size_t>(k)].c_str() : "0";
}

conekit_status conekit_problem_eval_R(const conekit_problem* problem, const char* tau, char* buf,
                                      size_t capacity) {
    std::string value;
    auto status = guarded([&] {
        require(problem && tau, "NULL argument");
        value = eval_R(problem->data, parse_rational(tau)).get_str();
    });
    return status == CONEKIT_OK ? copy_out(value, buf, capacity) : status;
}

conekit_status conekit_problem_volume_functional(const conekit_problem* problem, const char* const* f_coeffs,
                                                 size_t count, double* out) {
    return guarded([&] {
        require(problem && out && (count == 0 || f_coeffs), "NULL argument");
        std::vector<Rational> c;
        for (size_t k = 0; k < count; ++k) {
            require(f_coeffs[k] != nullptr, "NULL coefficient");
            c.push_back(parse_rational(f_coeffs[k]));
        }
        *out = volume_functional(problem->data, Poly(std::move(c)), problem->setup.vol_M());
    });
}

conekit_status conekit_problem_cross_validate(const conekit_problem* problem, double* max_rel_error,
                                              const char** worst_moment) {
    return guarded([&] {
        require(problem && max_rel_error, "NULL argument");
        const auto cc = numeric::cross_validate(problem->setup.factors(), problem->data);
        *max_rel_error = cc.max_relative_error;
        if (worst_moment) {
            static const char* const names[] = {"A", "B", "C", "IR", "IxR"};
            *worst_moment = names[0];
            for (const char* n : names)
                if (cc.worst == n) *worst_moment = n;
        }
    });
}

// ---------------------------------------------------------------------------

conekit_status conekit_solve(const conekit_problem* problem, conekit_solution** out) {
    return guarded([&] {
        require(problem && out, "NULL argument");
        auto s = std::make_unique<conekit_solution>();
        s->data = problem->data;
        s->a = problem->setup.a();
        s->vol_M = problem->setup.vol_M();
        s->extremal = solve_extremal(s->data);
        s->conical = solve_cscK_conical(s->data);
        s->futaki = futaki_report(s->data, s->extremal, s->conical, s->a, s->vol_M);
        s->log_futaki_at_beta = log_futaki(s->data, s->conical.beta, s->extremal, s->a, s->vol_M);

        const std::array<const Rational*, 7> exact{&s->extremal.sigma0,     &s->extremal.lambda,
                                                   &s->conical.sigma0_prime, &s->conical.beta,
                                                   &s->conical.beta_from_slope, &s->futaki.beta_from_futaki,
                                                   &s->futaki.tau_bar};
        for (size_t k = 0; k < exact.size(); ++k) {
            s->quantities[k] = exact[k]->get_str();
            s->values[k] = to_double(*exact[k]);
        }
        s->quantities[CONEKIT_FUT_CLASSICAL] = s->futaki.fut_classical.exact.get_str();
        s->values[CONEKIT_FUT_CLASSICAL] = s->futaki.fut_classical.value;
        s->quantities[CONEKIT_FUT_LOG] = s->log_futaki_at_beta.exact.get_str();
        s->values[CONEKIT_FUT_LOG] = s->log_futaki_at_beta.value;

        s->profiles = {s->extremal.phiQ.to_string(), s->conical.phiQ.to_string()};
        s->profile_coeffs = {coeff_strings(s->extremal.phiQ), coeff_strings(s->conical.phiQ)};
        *out = s.release();
    });
}

void conekit_solution_destroy(conekit_solution* solution) { delete solution; }

const char* conekit_solution_quantity(const conekit_solution* solution, conekit_quantity which) {
    if (!solution || which < CONEKIT_SIGMA0_EXTREMAL || which > CONEKIT_FUT_LOG) return nullptr;
    return solution->quantities[which].c_str();
}

double conekit_solution_value(const conekit_solution* solution, conekit_quantity which) {
    if (!solution || which < CONEKIT_SIGMA0_EXTREMAL || which > CONEKIT_FUT_LOG) return 0.0;
    return solution->values[which];
}

const char* conekit_solution_profile(const conekit_solution* solution, conekit_profile which) {
    if (!solution || !valid_profile(which)) return nullptr;
    return solution->profiles[which].c_str();
}

const char* conekit_solution_profile_coeff(const conekit_solution* solution, conekit_profile which, int k) {
    if (!solution || !valid_profile(which) || k < 0) return nullptr;
    const auto& c = solution->profile_coeffs[which];
    return static_cast<size_t>(k) < c.size() ? c[static_cast<size_t>(k)].c_str() : "0";
}

int conekit_solution_profile_degree(const conekit_solution* solution, conekit_profile which) {
    if (!solution || !valid_profile(which)) return -1;
    return profile_of(solution, which).degree();
}

int conekit_solution_identity_ok(const conekit_solution* solution) {
    return solution && solution->futaki.identity_ok ? 1 : 0;
}

int conekit_solution_positivity(const conekit_solution* solution, conekit_profile which, size_t* interior_roots) {
    if (!solution || !valid_profile(which)) return 0;
    const auto& cert = which == CONEKIT_PROFILE_CONICAL ? solution->conical.positivity
                                                        : solution->extremal.positivity;
    if (interior_roots) *interior_roots = cert.interior_root_count;
    return cert.passed() ? 1 : 0;
}

conekit_status conekit_solution_scalar_curvature(const conekit_solution* solution, conekit_profile which,
                                                 const char* tau, char* buf, size_t capacity) {
    std::string value;
    auto status = guarded([&] {
        require(solution && tau && valid_profile(which), "invalid argument");
        value = scalar_curvature(profile_of(solution, which), solution->data, parse_rational(tau)).get_str();
    });
    return status == CONEKIT_OK ? copy_out(value, buf, capacity) : status;
}

conekit_status conekit_solution_sample(const conekit_solution* solution, conekit_profile which, int grid_size,
                                       double* tau, double* phi, double* scalar) {
    return guarded([&] {
        require(solution && valid_profile(which) && tau && phi && scalar, "invalid argument");
        const auto rows = sample_profile(profile_of(solution, which), solution->data, grid_size);
        for (size_t k = 0; k < rows.size(); ++k) {
            tau[k] = rows[k].tau;
            phi[k] = rows[k].phi;
            scalar[k] = rows[k].scalar;
        }
    });
}

conekit_status conekit_solution_log_futaki(const conekit_solution* solution, const char* beta, double* value,
                                           int* vanishes) {
    return guarded([&] {
        require(solution && beta && value, "NULL argument");
        const auto v = log_futaki(solution->data, parse_rational(beta), solution->extremal, solution->a,
                                  solution->vol_M);
        *value = v.value;
        if (vanishes) *vanishes = v.exact == 0 ? 1 : 0;
    });
}

conekit_status conekit_solution_fit_exponent(const conekit_solution* solution, double cutoff, int steps,
                                             double* slope, double* relative_error) {
    return guarded([&] {
        require(solution && slope && relative_error, "NULL argument");
        const auto fit = fit_cone_exponent(solution->conical.phiQ, solution->data, solution->conical.beta,
                                           cutoff, steps);
        *slope = fit.slope_fitted;
        *relative_error = fit.relative_error;
    });
}

// ---------------------------------------------------------------------------

conekit_status conekit_verify_random(uint64_t seed, int cases, conekit_verify_report** out) {
    return guarded([&] {
        require(out != nullptr, "out is NULL");
        require(cases >= 1, "cases must be >= 1");
        VerifyOptions options;
        options.seed = seed;
        options.cases = cases;
        const auto report = run_verify(options);
        auto r = std::make_unique<conekit_verify_report>();
        r->cases = report.cases_run;
        r->checks = report.checks_run;
        r->failures = report.failures;
        *out = r.release();
    });
}

conekit_status conekit_verify_problem(const conekit_problem* problem, conekit_verify_report** out) {
    return guarded([&] {
        require(problem && out, "NULL argument");
        auto r = std::make_unique<conekit_verify_report>();
        r->cases = 1;
        for (const auto& c : check_setup(problem->setup, VerifyOptions{})) {
            ++r->checks;
            if (!c.ok) r->failures.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
        }
        *out = r.release();
    });
}

void conekit_verify_destroy(conekit_verify_report* report) { delete report; }

int conekit_verify_passed(const conekit_verify_report* report) { return report && report->failures.empty(); }

int conekit_verify_cases(const conekit_verify_report* report) { return report ? report->cases : 0; }

int conekit_verify_checks(const conekit_verify_report* report) { return report ? report->checks : 0; }

size_t conekit_verify_failure_count(const conekit_verify_report* report) {
    return report ? report->failures.size() : 0;
}

const char* conekit_verify_failure(const conekit_verify_report* report, size_t index) {
    if (!report || index >= report->failures.size()) return nullptr;
    return report->failures[index].c_str();
}

}  // extern "C"
