#include "verisearch/util/toml_lite.hpp"

#include <cctype>

#include "verisearch/errors.hpp"
#include "verisearch/util/strings.hpp"

namespace verisearch::util {

namespace {

// Strips a trailing comment that is not inside a string literal.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
        if (c == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

std::string parse_string(const std::string& raw) {
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') {
        throw ConfigError("toml: malformed string: " + raw);
    }
    std::string out;
    for (size_t i = 1; i + 1 < raw.size(); ++i) {
        char c = raw[i];
        if (c != '\\') {
            out += c;
            continue;
        }
        if (i + 2 >= raw.size()) throw ConfigError("toml: dangling escape");
        char esc = raw[++i];
        switch (esc) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case '"': out += '"'; break;
            case '\\': out += '\\'; break;
            default: throw ConfigError(std::string("toml: unsupported escape \\") + esc);
        }
    }
    return out;
}

nlohmann::json parse_scalar(const std::string& raw) {
    std::string v = trim(raw);
    if (v.empty()) throw ConfigError("toml: empty value");
    if (v.front() == '"') return parse_string(v);
    if (v == "true") return true;
    if (v == "false") return false;
    long long as_int = 0;
    if (parse_int(v, as_int)) return as_int;
    try {
        size_t used = 0;
        double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (...) {
    }
    throw ConfigError("toml: cannot parse value: " + v);
}

// Splits a single-line array body on commas outside string literals.
nlohmann::json parse_array(const std::string& raw) {
    std::string body = trim(raw);
    body = body.substr(1, body.size() - 2);  // strip [ ]
    nlohmann::json arr = nlohmann::json::array();
    std::string current;
    bool in_string = false;
    auto flush = [&] {
        if (!trim(current).empty()) arr.push_back(parse_scalar(current));
        current.clear();
    };
    for (size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '"' && (i == 0 || body[i - 1] != '\\')) in_string = !in_string;
        if (c == ',' && !in_string) {
            flush();
            continue;
        }
        current += c;
    }
    flush();
    return arr;
}

nlohmann::json* descend(nlohmann::json& root, const std::vector<std::string>& keys) {
    nlohmann::json* node = &root;
    for (const auto& key : keys) {
        if (!node->contains(key)) (*node)[key] = nlohmann::json::object();
        node = &(*node)[key];
        if (!node->is_object()) throw ConfigError("toml: key collision at " + key);
    }
    return node;
}

}  // namespace

nlohmann::json parse_toml(const std::string& text) {
    nlohmann::json root = nlohmann::json::object();
    nlohmann::json* table = &root;

    for (const auto& raw_line : split(text, '\n')) {
        std::string line = trim(strip_comment(raw_line));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("toml: malformed table header: " + line);
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty() || name.front() == '[') {
                throw ConfigError("toml: arrays of tables are not supported: " + line);
            }
            table = descend(root, split(name, '.'));
            continue;
        }

        size_t eq = std::string::npos;
        bool in_string = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
            if (line[i] == '=' && !in_string) {
                eq = i;
                break;
            }
        }
        if (eq == std::string::npos) throw ConfigError("toml: expected key = value: " + line);

        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("toml: empty key: " + line);

        auto key_parts = split(key, '.');
        std::string leaf = key_parts.back();
        key_parts.pop_back();
        nlohmann::json* target = key_parts.empty() ? table : descend(*table, key_parts);

        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']') {
                throw ConfigError("toml: arrays must be single-line: " + line);
            }
            (*target)[leaf] = parse_array(value);
        } else {
            (*target)[leaf] = parse_scalar(value);
        }
    }
    return root;
}

}  // namespace verisearch::util
