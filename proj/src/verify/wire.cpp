#include "verisearch/verify/wire.hpp"

#include <numeric>

namespace verisearch {

nlohmann::json VerifyRequest::to_json() const {
    nlohmann::json j{{"task_type", task_type},
                     {"mode", mode},
                     {"question", question},
                     {"candidates", candidates},
                     {"request_id", request_id}};
    if (context && !context->empty()) j["context"] = *context;
    return j;
}

VerifyRequest VerifyRequest::from_json(const nlohmann::json& j) {
    VerifyRequest r;
    r.task_type = j.value("task_type", "math");
    r.mode = j.value("mode", "judge");
    if (!j.contains("question")) throw ConfigError("verify request missing 'question'");
    r.question = j.at("question").get<std::string>();
    if (!j.contains("candidates")) throw ConfigError("verify request missing 'candidates'");
    r.candidates = j.at("candidates").get<std::vector<std::string>>();
    if (j.contains("context") && !j["context"].is_null()) {
        r.context = j["context"].get<std::string>();
    }
    r.request_id = j.value("request_id", "");
    return r;
}

void VerifyRequest::validate() const {
    if (candidates.size() < 2) {
        throw ConfigError("verify request needs at least 2 candidates, got " +
                          std::to_string(candidates.size()));
    }
    if (mode != "judge" && mode != "pairwise" && mode != "rm" && mode != "prm") {
        throw UnknownModeError("unknown verification mode: " + mode);
    }
    if (task_type != "math" && task_type != "agentic") {
        throw ConfigError("unknown task_type: " + task_type);
    }
}

nlohmann::json VerifyResponse::to_json() const {
    nlohmann::json j{{"rankings", rankings},
                     {"parse_failure", parse_failure},
                     {"request_id", request_id}};
    if (scores) j["scores"] = *scores;
    if (rationale) j["rationale"] = *rationale;
    return j;
}

VerifyResponse VerifyResponse::from_json(const nlohmann::json& j) {
    VerifyResponse r;
    r.rankings = j.value("rankings", std::vector<int>{});
    if (j.contains("scores") && !j["scores"].is_null()) {
        r.scores = j["scores"].get<std::vector<double>>();
    }
    if (j.contains("rationale") && !j["rationale"].is_null()) {
        r.rationale = j["rationale"].get<std::string>();
    }
    r.parse_failure = j.value("parse_failure", false);
    r.request_id = j.value("request_id", "");
    return r;
}

VerifyResponse fallback_response(const VerifyRequest& request) {
    VerifyResponse resp;
    resp.rankings.resize(request.candidates.size());
    std::iota(resp.rankings.begin(), resp.rankings.end(), 0);
    resp.parse_failure = true;
    resp.request_id = request.request_id;
    return resp;
}

}  // namespace verisearch
