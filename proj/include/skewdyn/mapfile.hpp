#pragma once

#include "skewdyn/poly.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace skew {

struct MapDefaults {
    std::vector<double> r_grid{0.4, 0.2, 0.1, 0.05};
    int samples = 4096;
    std::uint64_t seed = 1;
    double tol = 1e-12;
    int n_max = 64;
};

struct MapSpec {
    SkewProduct f;
    MapDefaults defaults;
    nlohmann::json echo;  // the parsed document
};

// TOML tables, key = value pairs, numbers, strings, booleans and (nested, multiline) arrays
nlohmann::json parse_toml(const std::string& text);

MapSpec map_from_json(const nlohmann::json& doc);
MapSpec parse_map(const std::string& text, bool toml);
// picks the format from the extension (.toml, else JSON)
MapSpec load_map(const std::string& path);

}  // namespace skew
