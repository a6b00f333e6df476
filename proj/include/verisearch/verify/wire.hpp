#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verisearch/core/types.hpp"
#include "verisearch/verify/ranking.hpp"

namespace verisearch {

// POST /verify request body. "rankings" on the response is the one field name
// fixed by the protocol; the rest is declared plumbing.
struct VerifyRequest {
    std::string task_type = "math";  // math | agentic
    std::string mode = "judge";      // judge | pairwise | rm | prm
    std::string question;
    std::optional<std::string> context;
    std::vector<std::string> candidates;
    std::string request_id;

    nlohmann::json to_json() const;
    static VerifyRequest from_json(const nlohmann::json& j);

    // Throws ConfigError on schema violations (e.g. fewer than 2 candidates).
    void validate() const;
};

struct VerifyResponse {
    std::vector<int> rankings;
    std::optional<std::vector<double>> scores;
    std::optional<std::string> rationale;
    bool parse_failure = false;
    std::string request_id;

    nlohmann::json to_json() const;
    static VerifyResponse from_json(const nlohmann::json& j);

    int best() const { return rankings.empty() ? 0 : rankings.front(); }
};

// Identity-order response used whenever a backend or the transport fails.
VerifyResponse fallback_response(const VerifyRequest& request);

}  // namespace verisearch
