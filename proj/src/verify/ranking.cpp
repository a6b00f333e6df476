#include "verisearch/verify/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "verisearch/util/assets.hpp"
#include "verisearch/util/strings.hpp"

namespace verisearch {

Ranking identity_ranking(int n) {
    Ranking r;
    r.order.resize(static_cast<size_t>(std::max(n, 0)));
    std::iota(r.order.begin(), r.order.end(), 0);
    return r;
}

PrmAggregation prm_aggregation_from_string(const std::string& s) {
    if (s == "mean") return PrmAggregation::Mean;
    if (s == "min") return PrmAggregation::Min;
    if (s == "last") return PrmAggregation::Last;
    if (s == "product") return PrmAggregation::Product;
    throw ConfigError("unknown prm aggregation: " + s);
}

std::string to_string(PrmAggregation a) {
    switch (a) {
        case PrmAggregation::Mean: return "mean";
        case PrmAggregation::Min: return "min";
        case PrmAggregation::Last: return "last";
        case PrmAggregation::Product: return "product";
    }
    return "mean";
}

std::string render_judge_prompt(const std::string& question,
                                const std::vector<std::string>& candidates) {
    if (candidates.size() < 2) {
        throw TooFewCandidatesError("judge ranking needs at least 2 candidates, got " +
                                    std::to_string(candidates.size()));
    }
    std::string prompt = load_prompt("judge_ranking");
    prompt += "\n\n[User Question]\n" + question + "\n";
    for (size_t i = 0; i < candidates.size(); ++i) {
        prompt += "\nCandidate " + std::to_string(i + 1) + ":\n" + candidates[i] + "\n";
    }
    return prompt;
}

Ranking parse_ranking(const std::string& response, int n) {
    Ranking fallback = identity_ranking(n);
    fallback.parse_failure = true;

    const std::string open = "<ranking>";
    const std::string close = "</ranking>";
    size_t begin = response.find(open);
    if (begin == std::string::npos) return fallback;
    begin += open.size();
    size_t end = response.find(close, begin);
    if (end == std::string::npos) return fallback;

    std::vector<int> order;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (const auto& token : util::split(response.substr(begin, end - begin), ',')) {
        long long value = 0;
        if (!util::parse_int(token, value)) return fallback;
        if (value < 1 || value > n) return fallback;
        if (seen[static_cast<size_t>(value - 1)]) return fallback;
        seen[static_cast<size_t>(value - 1)] = true;
        order.push_back(static_cast<int>(value - 1));
    }
    if (static_cast<int>(order.size()) != n) return fallback;

    Ranking r;
    r.order = std::move(order);
    // Everything before the tag is the judge's explanation.
    std::string rationale = util::trim(response.substr(0, begin - open.size()));
    if (!rationale.empty()) r.rationale = rationale;
    return r;
}

std::string render_pairwise_prompt(const std::string& question, const std::string& a,
                                   const std::string& b, const std::string& c) {
    std::string body = load_prompt("pairwise_template");
    body = util::replace_all(body, "{instruction}", question);
    body = util::replace_all(body, "{response_a}", a);
    body = util::replace_all(body, "{response_b}", b);
    body = util::replace_all(body, "{response_c}", c);
    return load_prompt("pairwise_system") + "\n\n" + body;
}

Verdict parse_verdict(const std::string& response) {
    size_t region = 0;
    size_t verdict_pos = response.rfind("Verdict:");
    if (verdict_pos != std::string::npos) region = verdict_pos;

    int winner = -1;
    for (size_t i = region; (i = response.find('[', i)) != std::string::npos; ++i) {
        if (i + 2 < response.size() && response[i + 2] == ']') {
            char c = response[i + 1];
            if (c == 'A') winner = 0;
            else if (c == 'B') winner = 1;
            else if (c == 'C') winner = 2;
        }
    }
    if (winner < 0) return {0, true};
    return {winner, false};
}

double aggregate_prm(const std::vector<double>& step_scores, PrmAggregation method) {
    if (step_scores.empty()) {
        throw EmptyScoresError("cannot aggregate an empty score list");
    }
    switch (method) {
        case PrmAggregation::Mean: {
            double sum = std::accumulate(step_scores.begin(), step_scores.end(), 0.0);
            return sum / static_cast<double>(step_scores.size());
        }
        case PrmAggregation::Min:
            return *std::min_element(step_scores.begin(), step_scores.end());
        case PrmAggregation::Last:
            return step_scores.back();
        case PrmAggregation::Product: {
            double prod = 1.0;
            for (double s : step_scores) prod *= s;
            return prod;
        }
    }
    throw EmptyScoresError("unreachable aggregation method");
}

Ranking rank_from_scores(const ScoreVector& scores) {
    if (scores.scores.empty()) {
        throw EmptyScoresError("cannot rank an empty score vector");
    }
    for (double s : scores.scores) {
        if (!std::isfinite(s)) {
            throw NonFiniteScoreError("non-finite score in rank_from_scores");
        }
    }
    Ranking r = identity_ranking(static_cast<int>(scores.scores.size()));
    std::stable_sort(r.order.begin(), r.order.end(), [&](int a, int b) {
        return scores.scores[static_cast<size_t>(a)] > scores.scores[static_cast<size_t>(b)];
    });
    return r;
}

}  // namespace verisearch
