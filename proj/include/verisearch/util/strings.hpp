#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace verisearch::util {

std::string trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

// Replaces every occurrence of `from` (non-empty) with `to`.
std::string replace_all(std::string text, std::string_view from, std::string_view to);

bool starts_with(std::string_view s, std::string_view prefix);

std::string to_lower(std::string s);

// Parses a whole string as a base-10 integer; returns false on any junk.
bool parse_int(std::string_view s, long long& out);

}  // namespace verisearch::util
