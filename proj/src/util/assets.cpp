#include "verisearch/util/assets.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "verisearch/errors.hpp"

#ifndef VERISEARCH_DEFAULT_ASSET_DIR
#define VERISEARCH_DEFAULT_ASSET_DIR "assets"
#endif

namespace verisearch {

namespace {
std::mutex g_mutex;
std::string g_override;
std::map<std::string, std::string> g_cache;
}  // namespace

std::string asset_root() {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_override.empty()) return g_override;
    if (const char* env = std::getenv("VERISEARCH_ASSETS")) {
        if (*env) return env;
    }
    return VERISEARCH_DEFAULT_ASSET_DIR;
}

void set_asset_root(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_override = dir;
    g_cache.clear();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string& load_prompt(const std::string& name) {
    const std::string path = asset_root() + "/prompts/" + name + ".txt";
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_cache.find(path);
    if (it != g_cache.end()) return it->second;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read prompt asset: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return g_cache.emplace(path, buf.str()).first->second;
}

}  // namespace verisearch
