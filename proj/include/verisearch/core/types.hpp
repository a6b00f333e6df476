#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "verisearch/errors.hpp"

namespace verisearch {

enum class TaskType { Math, Agentic };

std::string to_string(TaskType t);
TaskType task_type_from_string(const std::string& s);

// One benchmark question.
struct Query {
    std::string id;
    std::string prompt;
    TaskType task_type = TaskType::Math;
    std::optional<std::string> gold_answer;
};

enum class Granularity { AgentCall, Iteration };

enum class ContextStrategyKind { StepOnly, SummaryPlusStep, ContinuousSummary, RawPlusStep };

enum class VerifierMode { Judge, PairwiseJudge, RM, PRM };

std::string to_string(Granularity g);
Granularity granularity_from_string(const std::string& s);
std::string to_string(ContextStrategyKind s);
ContextStrategyKind context_strategy_from_string(const std::string& s);
std::string to_string(VerifierMode m);
VerifierMode verifier_mode_from_string(const std::string& s);

// Search settings for one run.
struct SearchConfig {
    int n_candidates = 3;
    Granularity granularity = Granularity::AgentCall;
    ContextStrategyKind context_strategy = ContextStrategyKind::StepOnly;
    VerifierMode verifier_mode = VerifierMode::Judge;
    int64_t summary_budget = 512;
    uint64_t seed = 0;

    void validate() const;
};

}  // namespace verisearch
