#pragma once

// Thin RAII layer over the C interface. Failures become LibraryError carrying
// the status and conekit_last_error().

#include <conekit/conekit.h>

#include "cli/config.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace conekit::cli {

class LibraryError : public std::runtime_error {
public:
    LibraryError(conekit_status status, const std::string& context)
        : std::runtime_error(context + ": " + conekit_last_error()), status_(status) {}
    conekit_status status() const noexcept { return status_; }

private:
    conekit_status status_;
};

inline void check(conekit_status s, const std::string& context) {
    if (s != CONEKIT_OK) throw LibraryError(s, context);
}

struct BaseDeleter {
    void operator()(conekit_base* p) const { conekit_base_destroy(p); }
};
struct ProblemDeleter {
    void operator()(conekit_problem* p) const { conekit_problem_destroy(p); }
};
struct SolutionDeleter {
    void operator()(conekit_solution* p) const { conekit_solution_destroy(p); }
};
struct VerifyDeleter {
    void operator()(conekit_verify_report* p) const { conekit_verify_destroy(p); }
};

using BasePtr = std::unique_ptr<conekit_base, BaseDeleter>;
using ProblemPtr = std::unique_ptr<conekit_problem, ProblemDeleter>;
using SolutionPtr = std::unique_ptr<conekit_solution, SolutionDeleter>;
using VerifyPtr = std::unique_ptr<conekit_verify_report, VerifyDeleter>;

inline BasePtr make_base(const RunConfig& cfg) {
    conekit_base* raw = nullptr;
    check(conekit_base_create(&raw), "base");
    BasePtr base(raw);
    for (std::size_t i = 0; i < cfg.factors.size(); ++i) {
        const auto& f = cfg.factors[i];
        check(conekit_base_add_factor(base.get(), f.dim, f.einstein.c_str(), f.exponent.c_str()),
              "factors[" + std::to_string(i) + "]");
    }
    return base;
}

inline ProblemPtr make_problem(const conekit_base* base, const RunConfig& cfg, const std::string& b) {
    conekit_problem* raw = nullptr;
    check(conekit_problem_create(base, b.c_str(), cfg.vol_M, cfg.a.c_str(), &raw), "b = " + b);
    return ProblemPtr(raw);
}

inline SolutionPtr solve(const conekit_problem* problem, const std::string& b) {
    conekit_solution* raw = nullptr;
    check(conekit_solve(problem, &raw), "b = " + b);
    return SolutionPtr(raw);
}

// Grid point k of the configured sweep, as an exact rational string.
inline std::string grid_point(const SweepSpec& s, int k) {
    char buf[512];
    check(conekit_grid_point(s.b_min.c_str(), s.b_max.c_str(), k, s.grid_points, buf, sizeof buf), "sweep");
    return buf;
}

}  // namespace conekit::cli
