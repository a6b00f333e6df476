#include "verisearch/workflow/debate.hpp"

#include <future>

#include "verisearch/util/assets.hpp"
#include "verisearch/util/rng.hpp"
#include "verisearch/util/strings.hpp"
#include "verisearch/workflow/verified_call.hpp"

namespace verisearch {

void DebateConfig::validate() const {
    if (n_agents < 2) throw ConfigError("debate needs at least 2 agents");
    if (n_rounds < 1) throw ConfigError("debate needs at least 1 round");
}

std::string answer_format_instruction(TaskType task_type) {
    if (task_type == TaskType::Math) {
        return "State your final answer as a single integer enclosed in boxed{}.";
    }
    return "Enclose the final answer within <answer></answer> tags.";
}

std::string reasoning_prompt(const RunContext& ctx) {
    std::string prompt;
    if (ctx.task_type == TaskType::Math) {
        prompt = util::replace_all(load_prompt("cot_math"), "{question}", ctx.question);
    } else {
        prompt = util::replace_all(load_prompt("gaia_general"), "{question}", ctx.question);
    }
    if (ctx.task_type == TaskType::Agentic && ctx.search_backend) {
        std::string block = web_search_block(*ctx.search_backend, ctx.question, 5);
        prompt += "\n\n### Web Search Results ###\n" + block +
                  "\n\nUse the above search results to help answer the question.";
    }
    return prompt;
}

WorkflowResult run_debate(RunContext& ctx, const DebateConfig& config) {
    config.validate();

    Trajectory trajectory(ctx.query_id, ctx.context.counter);
    std::vector<std::string> previous_round;  // answers from round r-1, by agent

    for (int round = 1; round <= config.n_rounds; ++round) {
        std::string prompt_base;
        if (round == 1) {
            prompt_base = reasoning_prompt(ctx);
        } else {
            std::string peers;
            for (size_t a = 0; a < previous_round.size(); ++a) {
                if (!peers.empty()) peers += "\n\n";
                peers += "Agent " + std::to_string(a + 1) + ":\n" + previous_round[a];
            }
            prompt_base = load_prompt("debate_refine");
            prompt_base = util::replace_all(prompt_base, "{question}", ctx.question);
            prompt_base = util::replace_all(prompt_base, "{peers}", peers);
            prompt_base = util::replace_all(prompt_base, "{format_instruction}",
                                            answer_format_instruction(ctx.task_type));
        }

        // Agents within a round are mutually independent: select concurrently
        // over the pre-round snapshot, then append in agent order so the
        // trajectory is deterministic.
        std::vector<std::string> producers;
        std::vector<std::string> prompts;
        for (int a = 1; a <= config.n_agents; ++a) {
            producers.push_back("agent-" + std::to_string(a) + "-round-" +
                                std::to_string(round));
            // Each agent sees the same instruction; candidate diversity comes
            // from sampling, peer context from the refine prompt.
            prompts.push_back("You are agent " + std::to_string(a) + ".\n\n" + prompt_base);
        }

        std::vector<std::future<SelectedCandidate>> futures;
        for (int a = 0; a < config.n_agents; ++a) {
            futures.push_back(std::async(std::launch::async, [&, a] {
                return verified_select(
                    ctx, trajectory, producers[static_cast<size_t>(a)],
                    [&ctx, &prompts, a](int, uint64_t ordinal) {
                        return ctx.provider
                            ->complete(prompts[static_cast<size_t>(a)], ordinal)
                            .text;
                    },
                    -1);
            }));
        }
        std::vector<std::string> round_answers;
        for (int a = 0; a < config.n_agents; ++a) {
            SelectedCandidate selected = futures[static_cast<size_t>(a)].get();
            trajectory.append(selected.text, producers[static_cast<size_t>(a)]);
            round_answers.push_back(selected.text);
        }
        previous_round = std::move(round_answers);
    }

    // Seeded uniform draw from the final-round answers.
    uint64_t pick = util::pick_index(util::mix64(ctx.seed, 0x64656261746566ULL),
                                     static_cast<uint64_t>(config.n_agents));
    const std::string& chosen = previous_round[static_cast<size_t>(pick)];

    WorkflowResult result;
    result.answer = extract_answer(chosen, ctx.task_type);
    trajectory.close();
    result.trajectory = std::move(trajectory);
    return result;
}

}  // namespace verisearch
