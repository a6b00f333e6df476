#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "verisearch/context/context_manager.hpp"
#include "verisearch/core/types.hpp"
#include "verisearch/provider/provider.hpp"
#include "verisearch/provider/web_search.hpp"
#include "verisearch/verify/client.hpp"

namespace verisearch {

// One verification decision, kept out of the trajectory: rejected candidates
// go to the sidecar log, not the step history.
struct VerifyEvent {
    uint64_t ordinal = 0;  // deterministic sort key
    std::string request_id;
    std::string producer;
    std::vector<std::string> candidates;
    int selected_index = 0;
    bool parse_failure = false;
    int64_t payload_tokens = 0;
};

class VerifyEventLog {
public:
    void add(VerifyEvent event);
    // Sorted by ordinal, so concurrent branches always serialize identically.
    std::vector<VerifyEvent> events() const;
    int count() const;
    int64_t total_payload_tokens() const;
    bool any_parse_failure() const;

private:
    mutable std::mutex mutex_;
    std::vector<VerifyEvent> events_;
};

// Everything one workflow execution needs. Ordinals are allocated in
// deterministic program order before any concurrent work is launched, which
// keeps mock-provider runs reproducible.
struct RunContext {
    Provider* provider = nullptr;
    VerifierClient* verifier = nullptr;  // null degrades to fallback rankings
    SearchConfig search;
    ContextOptions context;
    TaskType task_type = TaskType::Math;
    std::string query_id;
    std::string question;
    uint64_t seed = 0;
    VerifyEventLog* events = nullptr;              // may be null
    SearchBackend* search_backend = nullptr;       // optional web search
    std::shared_ptr<std::atomic<uint64_t>> ordinals =
        std::make_shared<std::atomic<uint64_t>>(0);

    uint64_t alloc_ordinals(int n) {
        return ordinals->fetch_add(static_cast<uint64_t>(n));
    }

    // Derived context for one iteration-level branch: disjoint ordinal range
    // and an iteration-specific seed, same sinks.
    RunContext fork_iteration(int iteration) const;

    // Effective fan-out for an agent-level call under the configured
    // granularity.
    int agent_call_candidates() const {
        return search.granularity == Granularity::AgentCall ? search.n_candidates : 1;
    }
};

}  // namespace verisearch
