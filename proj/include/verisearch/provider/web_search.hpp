#pragma once

#include <memory>
#include <string>
#include <vector>

namespace verisearch {

struct SearchResult {
    std::string title;
    std::string url;
    std::string snippet;
};

struct SearchResultSet {
    std::vector<SearchResult> results;
    std::string query;
};

// Literal sentinel emitted whenever the search backend fails.
inline constexpr const char* kWebSearchUnavailable = "Web search unavailable.";

class SearchBackend {
public:
    virtual ~SearchBackend() = default;
    // Throws on failure; web_search converts failures into the sentinel.
    virtual SearchResultSet search(const std::string& query, int k) = 0;
};

// Replays recorded results from a JSON fixture mapping query -> results.
// Unknown queries resolve to zero results (the backend itself succeeded).
class FixtureSearchBackend : public SearchBackend {
public:
    explicit FixtureSearchBackend(const std::string& fixture_path);
    SearchResultSet search(const std::string& query, int k) override;

private:
    std::string path_;
};

// Queries an HTTP endpoint returning {"results": [{title, url, snippet}]}.
class HttpSearchBackend : public SearchBackend {
public:
    explicit HttpSearchBackend(std::string endpoint, int timeout_s = 30);
    SearchResultSet search(const std::string& query, int k) override;

private:
    std::string endpoint_;
    int timeout_s_;
};

// Runs the query capped at k results. Failures are swallowed and reported as
// an empty set with the sentinel block (degradation contract).
SearchResultSet web_search(SearchBackend& backend, const std::string& query, int k);

// "Search results:" header followed by one "--- SOURCE i: title ---" block
// per result; kWebSearchUnavailable when formatting a failed search.
std::string format_search_results(const SearchResultSet& set, bool failed);

// Convenience wrapper returning the formatted block directly.
std::string web_search_block(SearchBackend& backend, const std::string& query, int k);

}  // namespace verisearch
