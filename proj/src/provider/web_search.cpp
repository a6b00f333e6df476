#include "verisearch/provider/web_search.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "verisearch/errors.hpp"
#include "verisearch/util/assets.hpp"

namespace verisearch {

FixtureSearchBackend::FixtureSearchBackend(const std::string& fixture_path)
    : path_(fixture_path) {}

SearchResultSet FixtureSearchBackend::search(const std::string& query, int k) {
    auto fixture = nlohmann::json::parse(read_file(path_));
    SearchResultSet set;
    set.query = query;
    if (!fixture.contains(query)) return set;
    for (const auto& rj : fixture[query]) {
        if (static_cast<int>(set.results.size()) >= k) break;
        set.results.push_back({rj.value("title", ""), rj.value("url", ""),
                               rj.value("snippet", "")});
    }
    return set;
}

HttpSearchBackend::HttpSearchBackend(std::string endpoint, int timeout_s)
    : endpoint_(std::move(endpoint)), timeout_s_(timeout_s) {}

SearchResultSet HttpSearchBackend::search(const std::string& query, int k) {
    size_t scheme = endpoint_.find("://");
    if (scheme == std::string::npos) throw ConfigError("search endpoint is not a URL");
    size_t slash = endpoint_.find('/', scheme + 3);
    std::string host = slash == std::string::npos ? endpoint_ : endpoint_.substr(0, slash);
    std::string path = slash == std::string::npos ? "/" : endpoint_.substr(slash);

    httplib::Client client(host);
    client.set_connection_timeout(timeout_s_, 0);
    client.set_read_timeout(timeout_s_, 0);
    nlohmann::json body{{"query", query}, {"max_results", k}};
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res || res->status != 200) {
        throw ProviderError(res ? res->status : 0, "search endpoint unavailable");
    }
    auto j = nlohmann::json::parse(res->body);
    SearchResultSet set;
    set.query = query;
    for (const auto& rj : j.value("results", nlohmann::json::array())) {
        if (static_cast<int>(set.results.size()) >= k) break;
        set.results.push_back({rj.value("title", ""), rj.value("url", ""),
                               rj.value("snippet", "")});
    }
    return set;
}

SearchResultSet web_search(SearchBackend& backend, const std::string& query, int k) {
    if (k < 1) throw ConfigError("web_search requires k >= 1");
    return backend.search(query, k);
}

std::string format_search_results(const SearchResultSet& set, bool failed) {
    if (failed) return kWebSearchUnavailable;
    std::string out = "Search results:\n";
    int i = 1;
    for (const auto& r : set.results) {
        out += "--- SOURCE " + std::to_string(i) + ": " + r.title + " ---\nURL: " +
               r.url + "\n\nCONTENT:\n" + r.snippet + "\n\n";
        ++i;
    }
    return out;
}

std::string web_search_block(SearchBackend& backend, const std::string& query, int k) {
    try {
        return format_search_results(web_search(backend, query, k), false);
    } catch (const std::exception&) {
        return kWebSearchUnavailable;
    }
}

}  // namespace verisearch
