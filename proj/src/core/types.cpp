#include "verisearch/core/types.hpp"

namespace verisearch {

std::string to_string(TaskType t) {
    return t == TaskType::Math ? "math" : "agentic";
}

TaskType task_type_from_string(const std::string& s) {
    if (s == "math") return TaskType::Math;
    if (s == "agentic") return TaskType::Agentic;
    throw ConfigError("unknown task_type: " + s);
}

std::string to_string(Granularity g) {
    return g == Granularity::AgentCall ? "agent_call" : "iteration";
}

Granularity granularity_from_string(const std::string& s) {
    if (s == "agent_call") return Granularity::AgentCall;
    if (s == "iteration") return Granularity::Iteration;
    throw ConfigError("unknown granularity: " + s);
}

std::string to_string(ContextStrategyKind s) {
    switch (s) {
        case ContextStrategyKind::StepOnly: return "step_only";
        case ContextStrategyKind::SummaryPlusStep: return "summary_plus_step";
        case ContextStrategyKind::ContinuousSummary: return "continuous_summary";
        case ContextStrategyKind::RawPlusStep: return "raw_plus_step";
    }
    return "step_only";
}

ContextStrategyKind context_strategy_from_string(const std::string& s) {
    if (s == "step_only") return ContextStrategyKind::StepOnly;
    if (s == "summary_plus_step") return ContextStrategyKind::SummaryPlusStep;
    if (s == "continuous_summary") return ContextStrategyKind::ContinuousSummary;
    if (s == "raw_plus_step") return ContextStrategyKind::RawPlusStep;
    throw ConfigError("unknown context_strategy: " + s);
}

std::string to_string(VerifierMode m) {
    switch (m) {
        case VerifierMode::Judge: return "judge";
        case VerifierMode::PairwiseJudge: return "pairwise";
        case VerifierMode::RM: return "rm";
        case VerifierMode::PRM: return "prm";
    }
    return "judge";
}

VerifierMode verifier_mode_from_string(const std::string& s) {
    if (s == "judge") return VerifierMode::Judge;
    if (s == "pairwise") return VerifierMode::PairwiseJudge;
    if (s == "rm") return VerifierMode::RM;
    if (s == "prm") return VerifierMode::PRM;
    throw ConfigError("unknown verifier_mode: " + s);
}

void SearchConfig::validate() const {
    if (n_candidates < 1) throw ConfigError("n_candidates must be >= 1");
    if (summary_budget <= 0) throw ConfigError("summary_budget must be > 0");
}

}  // namespace verisearch
