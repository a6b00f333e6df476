#include "verisearch/core/trajectory.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "verisearch/util/strings.hpp"

namespace verisearch {

using ordered_json = nlohmann::ordered_json;

Trajectory::Trajectory(std::string query_id, TokenCounter counter)
    : query_id_(std::move(query_id)), counter_(std::move(counter)) {}

Trajectory::Trajectory(const Trajectory& other)
    : query_id_(other.query_id_), counter_(other.counter_) {
    std::lock_guard<std::mutex> lock(other.mutex_);
    steps_ = other.steps_;
    closed_ = other.closed_;
}

Trajectory::Trajectory(Trajectory&& other) noexcept {
    std::lock_guard<std::mutex> lock(other.mutex_);
    query_id_ = std::move(other.query_id_);
    counter_ = std::move(other.counter_);
    steps_ = std::move(other.steps_);
    closed_ = other.closed_;
}

Trajectory& Trajectory::operator=(const Trajectory& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    query_id_ = other.query_id_;
    counter_ = other.counter_;
    steps_ = other.steps_;
    closed_ = other.closed_;
    return *this;
}

Trajectory& Trajectory::operator=(Trajectory&& other) noexcept {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    query_id_ = std::move(other.query_id_);
    counter_ = std::move(other.counter_);
    steps_ = std::move(other.steps_);
    closed_ = other.closed_;
    return *this;
}

Step Trajectory::append(const std::string& content, const std::string& producer) {
    if (util::trim(content).empty()) {
        throw EmptyContentError("refusing to append empty step content");
    }
    const int64_t tokens = counter_.count(content);
    std::lock_guard<std::mutex> lock(mutex_);
    if (closed_) {
        throw ClosedTrajectoryError("trajectory for query '" + query_id_ +
                                    "' is closed");
    }
    Step step{static_cast<int>(steps_.size()) + 1, content, producer, tokens};
    steps_.push_back(step);
    return step;
}

Trajectory Trajectory::branch(const std::string& candidate_content,
                              const std::string& producer) const {
    Trajectory copy(*this);
    if (copy.closed()) {
        throw ClosedTrajectoryError("cannot branch a closed trajectory");
    }
    copy.append(candidate_content, producer);
    return copy;
}

std::vector<Step> Trajectory::steps() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return steps_;
}

size_t Trajectory::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return steps_.size();
}

bool Trajectory::closed() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return closed_;
}

void Trajectory::close() {
    std::lock_guard<std::mutex> lock(mutex_);
    closed_ = true;
}

int64_t Trajectory::total_step_tokens() const {
    std::lock_guard<std::mutex> lock(mutex_);
    int64_t total = 0;
    for (const auto& s : steps_) total += s.token_count;
    return total;
}

std::string render_progress(const Trajectory& trajectory) {
    ordered_json progress = ordered_json::object();
    for (const auto& step : trajectory.steps()) {
        progress["step_" + std::to_string(step.index)] = step.content;
    }
    // 4-space indent with non-ASCII escaped, matching json.dumps(..., indent=4).
    return progress.dump(4, ' ', true);
}

void save_trajectory_jsonl(const Trajectory& trajectory, const std::string& path,
                           const std::string& final_answer) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("cannot open trajectory file for write: " + path);
    for (const auto& step : trajectory.steps()) {
        ordered_json line{{"index", step.index},
                          {"producer", step.producer},
                          {"content", step.content},
                          {"token_count", step.token_count}};
        out << line.dump() << "\n";
    }
    ordered_json fin{{"final", true}, {"answer", final_answer}};
    out << fin.dump() << "\n";
}

LoadedTrajectory load_trajectory_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open trajectory file: " + path);
    LoadedTrajectory loaded;
    std::string line;
    while (std::getline(in, line)) {
        if (util::trim(line).empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (j.contains("final") && j["final"].get<bool>()) {
            loaded.final_answer = j.at("answer").get<std::string>();
            continue;
        }
        Step step;
        step.index = j.at("index").get<int>();
        step.producer = j.at("producer").get<std::string>();
        step.content = j.at("content").get<std::string>();
        step.token_count = j.at("token_count").get<int64_t>();
        loaded.steps.push_back(std::move(step));
    }
    return loaded;
}

}  // namespace verisearch
