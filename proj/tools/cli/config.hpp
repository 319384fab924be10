#pragma once

// JSON run configuration:
//
// {
//   "version": 1,
//   "name": "pair_m1_2",
//   "factors": [{"dim": 1, "einstein": "1", "exponent": "-1"}, ...],
//   "sweep": {"b_min": "1/100", "b_max": "49/100", "grid_points": 49},   or  "b": "1/4"
//   "vol_M": 1.0, "a": "1",
//   "outputs": {"csv": "pair_m1_2.csv", "svg": "pair_m1_2.svg"},
//   "flags": {"exact_only": false, "seed": 1}
// }
//
// Rationals are strings. Only version 1 exists.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conekit::cli {

// Malformed JSON or a bad field; the message names the line or the field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FactorSpec {
    int dim = 1;
    std::string einstein = "1";
    std::string exponent = "0";
};

struct SweepSpec {
    std::string b_min;
    std::string b_max;
    int grid_points = 1;
};

struct RunConfig {
    std::string name;
    std::vector<FactorSpec> factors;
    SweepSpec sweep;
    double vol_M = 1.0;
    std::string a = "1";
    std::string csv_path;   // empty: stdout
    std::string svg_path;   // empty: next to the CSV, or <name>.svg
    bool exact_only = false;
    std::optional<std::uint64_t> seed;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace conekit::cli
