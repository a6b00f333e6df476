#pragma once

#include <string>

namespace verisearch {

// Directory holding prompt assets. Resolution order: explicit override via
// set_asset_root, the VERISEARCH_ASSETS environment variable, then the
// build-time default.
std::string asset_root();
void set_asset_root(const std::string& dir);

// Loads assets/prompts/<name>.txt (cached). Throws ConfigError when missing.
const std::string& load_prompt(const std::string& name);

// Reads a whole file; throws ConfigError when unreadable.
std::string read_file(const std::string& path);

}  // namespace verisearch
