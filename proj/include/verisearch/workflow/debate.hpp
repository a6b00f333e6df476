#pragma once

#include <string>

#include "verisearch/core/trajectory.hpp"
#include "verisearch/workflow/answer.hpp"
#include "verisearch/workflow/run_context.hpp"

namespace verisearch {

struct DebateConfig {
    int n_agents = 2;
    int n_rounds = 3;
    enum class FinalSelection { RandomFinalRound };
    FinalSelection final_selection = FinalSelection::RandomFinalRound;

    void validate() const;
};

struct WorkflowResult {
    FinalAnswer answer;
    Trajectory trajectory{""};
};

// Round 1: every agent answers the question with the task's reasoning prompt.
// Rounds 2..R: every agent refines given all peers' previous-round answers.
// Each agent call routes through the verification hook; the final answer is a
// seeded uniform draw from the final-round answers. The trajectory holds
// exactly n_agents * n_rounds steps (only selected candidates are appended).
WorkflowResult run_debate(RunContext& ctx, const DebateConfig& config);

// The unified reasoning prompt for one task type; web-search context is
// appended when a search backend is configured for an agentic query.
std::string reasoning_prompt(const RunContext& ctx);

std::string answer_format_instruction(TaskType task_type);

}  // namespace verisearch
