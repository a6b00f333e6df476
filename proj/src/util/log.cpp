#include "verisearch/util/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace verisearch::util {

namespace {

LogLevel threshold() {
    static LogLevel level = [] {
        const char* env = std::getenv("VERISEARCH_LOG");
        if (!env) return LogLevel::Warn;
        std::string v(env);
        if (v == "debug") return LogLevel::Debug;
        if (v == "info") return LogLevel::Info;
        if (v == "error") return LogLevel::Error;
        return LogLevel::Warn;
    }();
    return level;
}

const char* tag(LogLevel level) {
    switch (level) {
        case LogLevel::Debug: return "debug";
        case LogLevel::Info: return "info";
        case LogLevel::Warn: return "warn";
        case LogLevel::Error: return "error";
    }
    return "info";
}

std::mutex g_mutex;

}  // namespace

void log(LogLevel level, const std::string& message) {
    if (level < threshold()) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[" << tag(level) << "] " << message << "\n";
}

}  // namespace verisearch::util
