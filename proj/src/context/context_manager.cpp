#include "verisearch/context/context_manager.hpp"

#include "verisearch/util/assets.hpp"
#include "verisearch/util/strings.hpp"

namespace verisearch {

namespace {

// Largest prefix of text whose token estimate stays within budget.
std::string truncate_to_budget(const std::string& text, int64_t budget,
                               const TokenCounter& counter) {
    if (counter.count(text) <= budget) return text;
    size_t lo = 0;
    size_t hi = text.size();
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (counter.count(text.substr(0, mid)) <= budget) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return text.substr(0, lo);
}

}  // namespace

Summarizer identity_summarizer() {
    return [](const std::string&, const std::string& text) { return text; };
}

SummaryResult summarize(const std::string& text, int64_t budget,
                        const Summarizer& summarizer, const TokenCounter& counter) {
    if (budget <= 0) {
        throw BudgetExceededError("summary budget must be positive");
    }
    if (text.empty()) return {"", false};
    if (!summarizer) {
        throw SummarizerUnavailableError("no summarizer configured for a summarizing strategy");
    }
    const std::string instruction = util::replace_all(
        load_prompt("summarizer"), "{max_context_length}", std::to_string(budget));

    std::string result = summarizer(instruction, text);
    if (counter.count(result) <= budget) return {result, false};

    result = summarizer(instruction, text);  // one retry
    if (counter.count(result) <= budget) return {result, false};

    return {truncate_to_budget(result, budget, counter), true};
}

std::string render_raw_history(const Trajectory& trajectory) {
    std::string out;
    bool first = true;
    for (const auto& step : trajectory.steps()) {
        if (!first) out += "\n\n";
        first = false;
        out += "Step " + std::to_string(step.index) + " (" + step.producer +
               "): " + step.content;
    }
    return out;
}

ContextPayload build_payload(const Trajectory& trajectory, const std::string& question,
                             const std::string& candidate, const ContextOptions& options) {
    ContextPayload payload;
    payload.question = question;

    switch (options.strategy) {
        case ContextStrategyKind::StepOnly:
            payload.current_step = candidate;
            break;
        case ContextStrategyKind::RawPlusStep:
            payload.history_view = render_raw_history(trajectory);
            payload.current_step = candidate;
            break;
        case ContextStrategyKind::SummaryPlusStep: {
            auto summary = summarize(render_raw_history(trajectory),
                                     options.summary_budget, options.summarizer,
                                     options.counter);
            payload.history_view = summary.text;
            payload.current_step = candidate;
            break;
        }
        case ContextStrategyKind::ContinuousSummary: {
            std::string fused = render_raw_history(trajectory);
            if (!fused.empty() && !candidate.empty()) fused += "\n\n";
            fused += candidate;
            auto summary = summarize(fused, options.summary_budget,
                                     options.summarizer, options.counter);
            payload.history_view = summary.text;
            break;
        }
    }

    payload.total_tokens = options.counter.count(payload.question) +
                           options.counter.count(payload.history_view) +
                           options.counter.count(payload.current_step);
    return payload;
}

}  // namespace verisearch
