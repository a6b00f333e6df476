#pragma once

#include <functional>
#include <string>

#include "verisearch/core/trajectory.hpp"
#include "verisearch/workflow/run_context.hpp"

namespace verisearch {

// Produces one candidate continuation for slot i (0-based); the ordinal is
// pre-allocated by verified_select and feeds deterministic providers.
using CandidateGenerator = std::function<std::string(int slot, uint64_t ordinal)>;

struct SelectedCandidate {
    std::string text;
    int index = 0;               // index into the surviving candidate list
    bool parse_failure = false;  // verifier fallback was used
    bool verified = false;       // a VerifyRequest was actually issued
};

// Candidate fan-out + verification without touching the trajectory: runs the
// generator n times concurrently, builds one context payload per candidate
// under the configured strategy, sends a single VerifyRequest, and returns
// the top-ranked candidate. n = 1 skips verification entirely; verifier
// failures degrade to candidate 0 via the fallback ranking. Throws
// AllGenerationsFailedError when every generator call fails.
//
// Callers issuing several selects concurrently must pre-allocate each one's
// ordinal range (ctx.alloc_ordinals) in declaration order and pass it as
// `base`, otherwise allocation order races and mock runs lose determinism.
inline constexpr uint64_t kAllocOrdinals = ~0ULL;

SelectedCandidate verified_select(RunContext& ctx, const Trajectory& trajectory,
                                  const std::string& producer,
                                  const CandidateGenerator& generate, int n,
                                  uint64_t base = kAllocOrdinals);

// verified_select for a plain prompt, then append the selected candidate to
// the trajectory (exactly one step per call).
std::string verified_call(RunContext& ctx, Trajectory& trajectory,
                          const std::string& producer, const std::string& prompt,
                          int n = -1);

}  // namespace verisearch
