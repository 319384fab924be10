#include "cli/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace conekit::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& what) {
    throw ConfigError("field " + field + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::set<std::string> allowed) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) bad(where.empty() ? key : where + "." + key, "unknown key");
}

const json& member(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) bad(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

std::string rational_field(const json& v, const std::string& field) {
    if (!v.is_string()) bad(field, "expected a rational string such as \"1/4\"");
    const auto s = v.get<std::string>();
    if (s.empty()) bad(field, "empty rational");
    return s;
}

int int_field(const json& v, const std::string& field) {
    if (!v.is_number_integer()) bad(field, "expected an integer");
    const auto n = v.get<long long>();
    if (n < -1000000000 || n > 1000000000) bad(field, "integer out of range");
    return static_cast<int>(n);
}

// 1-based line and column of a byte offset.
std::string locate(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character
        throw ConfigError(locate(text, e.byte > 0 ? e.byte - 1 : 0) + ": malformed JSON");
    }
    if (!doc.is_object()) throw ConfigError("line 1, column 1: top level must be an object");
    only_keys(doc, "", {"version", "name", "factors", "sweep", "b", "vol_M", "a", "outputs", "flags"});

    const auto& version = member(doc, "", "version");
    if (!version.is_number_integer() || version.get<long long>() != 1) bad("version", "only version 1 is supported");

    RunConfig cfg;
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) bad("name", "expected a string");
        cfg.name = it->get<std::string>();
    }

    const auto& factors = member(doc, "", "factors");
    if (!factors.is_array()) bad("factors", "expected an array");
    if (factors.empty()) bad("factors", "at least one factor is required");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::string where = "factors[" + std::to_string(i) + "]";
        const auto& f = factors[i];
        if (!f.is_object()) bad(where, "expected an object");
        only_keys(f, where, {"dim", "einstein", "exponent"});
        FactorSpec spec;
        spec.dim = int_field(member(f, where, "dim"), where + ".dim");
        if (spec.dim < 1) bad(where + ".dim", "must be >= 1");
        if (f.contains("einstein")) spec.einstein = rational_field(f["einstein"], where + ".einstein");
        spec.exponent = rational_field(member(f, where, "exponent"), where + ".exponent");
        cfg.factors.push_back(spec);
    }

    const bool has_sweep = doc.contains("sweep"), has_b = doc.contains("b");
    if (has_sweep == has_b) bad("sweep", "give exactly one of \"sweep\" and \"b\"");
    if (has_b) {
        cfg.sweep.b_min = cfg.sweep.b_max = rational_field(doc["b"], "b");
        cfg.sweep.grid_points = 1;
    } else {
        const auto& s = doc["sweep"];
        if (!s.is_object()) bad("sweep", "expected an object");
        only_keys(s, "sweep", {"b_min", "b_max", "grid_points"});
        cfg.sweep.b_min = rational_field(member(s, "sweep", "b_min"), "sweep.b_min");
        cfg.sweep.b_max = rational_field(member(s, "sweep", "b_max"), "sweep.b_max");
        cfg.sweep.grid_points = int_field(member(s, "sweep", "grid_points"), "sweep.grid_points");
        if (cfg.sweep.grid_points < 1) bad("sweep.grid_points", "must be >= 1");
    }

    if (auto it = doc.find("vol_M"); it != doc.end()) {
        if (!it->is_number()) bad("vol_M", "expected a number");
        cfg.vol_M = it->get<double>();
        if (!(cfg.vol_M > 0)) bad("vol_M", "must be positive");
    }
    if (auto it = doc.find("a"); it != doc.end()) cfg.a = rational_field(*it, "a");

    if (auto it = doc.find("outputs"); it != doc.end()) {
        if (!it->is_object()) bad("outputs", "expected an object");
        only_keys(*it, "outputs", {"csv", "svg"});
        for (const char* key : {"csv", "svg"}) {
            if (!it->contains(key)) continue;
            if (!(*it)[key].is_string()) bad(std::string("outputs.") + key, "expected a path string");
            (key[0] == 'c' ? cfg.csv_path : cfg.svg_path) = (*it)[key].get<std::string>();
        }
    }
    if (auto it = doc.find("flags"); it != doc.end()) {
        if (!it->is_object()) bad("flags", "expected an object");
        only_keys(*it, "flags", {"exact_only", "seed"});
        if (it->contains("exact_only")) {
            if (!(*it)["exact_only"].is_boolean()) bad("flags.exact_only", "expected true or false");
            cfg.exact_only = (*it)["exact_only"].get<bool>();
        }
        if (it->contains("seed")) {
            if (!(*it)["seed"].is_number_unsigned()) bad("flags.seed", "expected a non-negative integer");
            cfg.seed = (*it)["seed"].get<std::uint64_t>();
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_config(text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace conekit::cli
