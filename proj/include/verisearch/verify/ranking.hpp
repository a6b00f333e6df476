#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verisearch/errors.hpp"

namespace verisearch {

// Total order over candidates, best first, as 0-based indices. parse_failure
// marks rankings recovered via the identity fallback.
struct Ranking {
    std::vector<int> order;
    std::optional<std::string> rationale;
    bool parse_failure = false;

    int best() const { return order.empty() ? 0 : order.front(); }
};

Ranking identity_ranking(int n);

enum class ScoreMode { RM, PRM };

struct ScoreVector {
    std::vector<double> scores;
    ScoreMode mode = ScoreMode::RM;
};

enum class PrmAggregation { Mean, Min, Last, Product };

PrmAggregation prm_aggregation_from_string(const std::string& s);
std::string to_string(PrmAggregation a);

// Judge prompt: the ranking system text followed by the question and the
// candidates labeled "Candidate 1".."Candidate N". Requires >= 2 candidates.
std::string render_judge_prompt(const std::string& question,
                                const std::vector<std::string>& candidates);

// Extracts the first <ranking>...</ranking> span and converts the 1-based
// comma-separated candidate numbers to a 0-based permutation. Any failure
// (missing tags, junk tokens, not a permutation of 1..n) yields the identity
// ranking with parse_failure set; nothing is thrown.
Ranking parse_ranking(const std::string& response, int n);

// Three-way comparison prompt: pairwise system text above the filled
// assistant A/B/C template.
std::string render_pairwise_prompt(const std::string& question, const std::string& a,
                                   const std::string& b, const std::string& c);

struct Verdict {
    int winner = 0;  // 0-based
    bool parse_failure = false;
};

// Last bracketed [A]/[B]/[C] after the literal "Verdict:" when present, else
// anywhere in the response; falls back to winner 0 with the flag set.
Verdict parse_verdict(const std::string& response);

// Collapses per-step scores into one candidate score.
double aggregate_prm(const std::vector<double>& step_scores, PrmAggregation method);

// Descending-score order with ties broken by lower candidate index.
Ranking rank_from_scores(const ScoreVector& scores);

}  // namespace verisearch
