#pragma once

#include "cli/config.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace conekit::cli {

// Exit codes shared by every command.
enum Exit : int { kOk = 0, kCheckFailed = 1, kBadInput = 2 };

struct SweepRow {
    std::string b_exact;
    std::string beta_exact;
    double b = 0.0;
    double beta = 0.0;
    double sigma0_cscK = 0.0;
    double lambda_ext = 0.0;
    double sigma0_ext = 0.0;
    bool positivity_ok = false;
    bool identity_ok = false;
    double fut_classical = 0.0;
    double asympt_rel_err = 0.0;   // NaN when exact_only
};

// Every grid row, in grid order. Rows run on `threads` workers; a failing row
// throws LibraryError naming its b.
std::vector<SweepRow> compute_sweep(const RunConfig& cfg, unsigned threads = 0);

extern const char* const kCsvHeader;
std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_number(double v);

int cmd_describe(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct SweepArgs {
    bool svg = false;
    std::string csv_override;   // from -o
    std::string config_path;    // used to derive default output names
    unsigned threads = 0;
};
int cmd_sweep(const RunConfig& cfg, const SweepArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::uint64_t seed = 1;
    int cases = 100;
    bool seed_given = false;
    std::optional<RunConfig> config;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace conekit::cli
