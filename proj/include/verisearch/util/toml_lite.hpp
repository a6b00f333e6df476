#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace verisearch::util {

// Minimal TOML reader covering the subset used by manifests and service
// configs: [table] / [a.b] headers, bare or dotted keys, strings with basic
// escapes, integers, floats, booleans, and single-line scalar arrays. Throws
// ConfigError on anything else.
nlohmann::json parse_toml(const std::string& text);

}  // namespace verisearch::util
