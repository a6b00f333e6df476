#pragma once

#include <string>

namespace verisearch::util {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

// Stderr logger; threshold from VERISEARCH_LOG (debug|info|warn|error),
// default warn. Thread-safe line-at-a-time output.
void log(LogLevel level, const std::string& message);

inline void log_debug(const std::string& m) { log(LogLevel::Debug, m); }
inline void log_info(const std::string& m) { log(LogLevel::Info, m); }
inline void log_warn(const std::string& m) { log(LogLevel::Warn, m); }
inline void log_error(const std::string& m) { log(LogLevel::Error, m); }

}  // namespace verisearch::util
