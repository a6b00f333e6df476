#include "verisearch/workflow/verified_call.hpp"

#include <algorithm>
#include <future>

#include "verisearch/util/log.hpp"
#include "verisearch/util/rng.hpp"

namespace verisearch {

void VerifyEventLog::add(VerifyEvent event) {
    std::lock_guard<std::mutex> lock(mutex_);
    events_.push_back(std::move(event));
}

std::vector<VerifyEvent> VerifyEventLog::events() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<VerifyEvent> out = events_;
    std::sort(out.begin(), out.end(),
              [](const VerifyEvent& a, const VerifyEvent& b) { return a.ordinal < b.ordinal; });
    return out;
}

int VerifyEventLog::count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<int>(events_.size());
}

int64_t VerifyEventLog::total_payload_tokens() const {
    std::lock_guard<std::mutex> lock(mutex_);
    int64_t total = 0;
    for (const auto& e : events_) total += e.payload_tokens;
    return total;
}

bool VerifyEventLog::any_parse_failure() const {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& e : events_) {
        if (e.parse_failure) return true;
    }
    return false;
}

RunContext RunContext::fork_iteration(int iteration) const {
    RunContext fork = *this;
    fork.seed = util::mix64(seed, 0x697465726174ULL, static_cast<uint64_t>(iteration));
    // Disjoint ordinal range per iteration branch.
    fork.ordinals = std::make_shared<std::atomic<uint64_t>>(
        (static_cast<uint64_t>(iteration) + 1) << 40);
    return fork;
}

SelectedCandidate verified_select(RunContext& ctx, const Trajectory& trajectory,
                                  const std::string& producer,
                                  const CandidateGenerator& generate, int n,
                                  uint64_t base) {
    if (n < 0) n = ctx.agent_call_candidates();
    if (n < 1) throw ConfigError("verified_select needs n >= 1");
    if (base == kAllocOrdinals) base = ctx.alloc_ordinals(n);

    if (n == 1) {
        // Degenerate pass-through: no verifier traffic at all.
        return {generate(0, base), 0, false, false};
    }

    std::vector<std::future<std::string>> futures;
    futures.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        futures.push_back(std::async(std::launch::async, [&generate, i, base] {
            return generate(i, base + static_cast<uint64_t>(i));
        }));
    }
    std::vector<std::string> candidates;
    int failures = 0;
    std::string last_error;
    for (auto& f : futures) {
        try {
            candidates.push_back(f.get());
        } catch (const std::exception& e) {
            ++failures;
            last_error = e.what();
        }
    }
    if (candidates.empty()) {
        throw AllGenerationsFailedError("all " + std::to_string(n) +
                                        " generations failed: " + last_error);
    }
    if (failures > 0) {
        util::log_warn(std::to_string(failures) + " of " + std::to_string(n) +
                       " generations failed for " + producer);
    }
    if (candidates.size() == 1) {
        return {candidates.front(), 0, false, false};
    }

    // One payload per candidate; under ContinuousSummary each candidate is its
    // own fused view, otherwise history is shared and candidates ride as the
    // current step.
    std::vector<ContextPayload> payloads;
    payloads.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        payloads.push_back(build_payload(trajectory, ctx.question, candidate, ctx.context));
    }

    VerifyRequest request;
    request.task_type = to_string(ctx.task_type);
    request.mode = to_string(ctx.search.verifier_mode);
    request.question = ctx.question;
    request.request_id = ctx.query_id + "-" + std::to_string(base);

    const bool fused = ctx.context.strategy == ContextStrategyKind::ContinuousSummary;
    if (fused) {
        for (const auto& p : payloads) request.candidates.push_back(p.history_view);
    } else {
        if (!payloads.front().history_view.empty()) {
            request.context = payloads.front().history_view;
        }
        for (const auto& p : payloads) request.candidates.push_back(p.current_step);
    }

    const auto& counter = ctx.context.counter;
    int64_t payload_tokens = counter.count(request.question) +
                             (request.context ? counter.count(*request.context) : 0);
    for (const auto& c : request.candidates) payload_tokens += counter.count(c);

    VerifyResponse response;
    if (ctx.verifier) {
        response = ctx.verifier->verify(request);
        if (!is_permutation_of(response.rankings, request.candidates.size())) {
            response = fallback_response(request);
        }
    } else {
        response = fallback_response(request);
    }

    int best = response.best();
    if (ctx.events) {
        ctx.events->add(VerifyEvent{base, request.request_id, producer, candidates, best,
                                    response.parse_failure, payload_tokens});
    }
    return {candidates[static_cast<size_t>(best)], best, response.parse_failure, true};
}

std::string verified_call(RunContext& ctx, Trajectory& trajectory,
                          const std::string& producer, const std::string& prompt,
                          int n) {
    SelectedCandidate selected = verified_select(
        ctx, trajectory, producer,
        [&ctx, &prompt](int /*slot*/, uint64_t ordinal) {
            return ctx.provider->complete(prompt, ordinal).text;
        },
        n);
    trajectory.append(selected.text, producer);
    return selected.text;
}

}  // namespace verisearch
