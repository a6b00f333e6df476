#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "verisearch/context/token_counter.hpp"
#include "verisearch/core/trajectory.hpp"
#include "verisearch/core/types.hpp"

namespace verisearch {

// Verifier-visible view of a partial trajectory under one context strategy.
// StepOnly keeps history_view empty; ContinuousSummary fuses history and the
// candidate into history_view and leaves current_step empty.
struct ContextPayload {
    std::string question;
    std::string history_view;
    std::string current_step;
    int64_t total_tokens = 0;
};

// A summarizer receives the rendered instruction (budget already substituted)
// and the text to compress, and returns the summary. The identity summarizer
// ignores the instruction and echoes the text.
using Summarizer = std::function<std::string(const std::string& instruction,
                                             const std::string& text)>;

Summarizer identity_summarizer();

struct SummaryResult {
    std::string text;
    bool truncated = false;  // hard-cut at the budget boundary after the retry
};

// Compresses text to at most `budget` tokens under `counter`. The summarizer
// is called with the summarization instruction ({max_context_length} replaced
// by the budget); one retry is issued if the first result is over budget, and
// a still-oversized result is hard-truncated and flagged. Empty input returns
// empty output without invoking the summarizer.
SummaryResult summarize(const std::string& text, int64_t budget,
                        const Summarizer& summarizer, const TokenCounter& counter);

// "Step k (producer): content" lines joined by blank lines.
std::string render_raw_history(const Trajectory& trajectory);

struct ContextOptions {
    ContextStrategyKind strategy = ContextStrategyKind::StepOnly;
    int64_t summary_budget = 512;
    TokenCounter counter = TokenCounter::approximate();
    Summarizer summarizer;  // required for the summarizing strategies
};

// Builds the verifier-visible payload for one candidate continuation. Never
// mutates the trajectory.
ContextPayload build_payload(const Trajectory& trajectory, const std::string& question,
                             const std::string& candidate, const ContextOptions& options);

}  // namespace verisearch
