#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "verisearch/context/token_counter.hpp"
#include "verisearch/errors.hpp"

namespace verisearch {

// One entry in a reasoning trajectory. index is 1-based to match the
// serialized "step_K" labels.
struct Step {
    int index = 0;
    std::string content;
    std::string producer;
    int64_t token_count = 0;

    bool operator==(const Step&) const = default;
};

// Ordered step log of one workflow execution. Appends are serialized; reads
// take a snapshot and observe a prefix-consistent view. Copies (branches)
// share nothing mutable with their parent.
class Trajectory {
public:
    explicit Trajectory(std::string query_id,
                        TokenCounter counter = TokenCounter::approximate());

    Trajectory(const Trajectory& other);
    Trajectory(Trajectory&& other) noexcept;
    Trajectory& operator=(const Trajectory& other);
    Trajectory& operator=(Trajectory&& other) noexcept;

    // Appends a new step with index = size+1; token_count is computed once
    // here and cached. Throws ClosedTrajectoryError / EmptyContentError.
    Step append(const std::string& content, const std::string& producer);

    // Independent copy with the candidate appended; this trajectory is left
    // untouched.
    Trajectory branch(const std::string& candidate_content,
                      const std::string& producer = "candidate") const;

    std::vector<Step> steps() const;
    size_t size() const;

    bool closed() const;
    // Set by the workflow engine once the final answer is extracted; further
    // appends are rejected.
    void close();

    const std::string& query_id() const { return query_id_; }
    const TokenCounter& counter() const { return counter_; }

    // Sum of cached per-step token counts.
    int64_t total_step_tokens() const;

private:
    std::string query_id_;
    TokenCounter counter_;
    std::vector<Step> steps_;
    bool closed_ = false;
    mutable std::mutex mutex_;
};

// JSON object {"step_1": ..., "step_K": ...} with keys in step order,
// 4-space indentation, non-ASCII escaped; "{}" for an empty trajectory.
std::string render_progress(const Trajectory& trajectory);

// JSONL persistence: one {"index","producer","content","token_count"} object
// per step, then a trailing {"final": true, "answer": ...} record.
void save_trajectory_jsonl(const Trajectory& trajectory, const std::string& path,
                           const std::string& final_answer);

struct LoadedTrajectory {
    std::vector<Step> steps;
    std::optional<std::string> final_answer;
};

LoadedTrajectory load_trajectory_jsonl(const std::string& path);

}  // namespace verisearch
