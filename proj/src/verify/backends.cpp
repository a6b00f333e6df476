#include "verisearch/verify/backends.hpp"

#include <chrono>
#include <condition_variable>
#include <future>
#include <mutex>
#include <regex>
#include <thread>

#include "verisearch/util/log.hpp"
#include "verisearch/util/rng.hpp"

namespace verisearch {

namespace {

// Question block the judge/scorer sees; prior-trajectory context, when the
// middleware sends one, is folded in under an explicit header.
std::string question_block(const VerifyRequest& request) {
    if (request.context && !request.context->empty()) {
        return request.question + "\n\n[Trajectory Context]\n" + *request.context;
    }
    return request.question;
}

uint64_t request_ordinal(const VerifyRequest& request) {
    return util::hash_text(request.request_id);
}

constexpr const char* kRmInstruction =
    "You are a reward model. Rate how well the candidate response addresses the "
    "question, as a single real number between 0 and 1 (higher is better). "
    "Output only the number.";

constexpr const char* kPrmInstruction =
    "You are a process reward model. The trajectory context lists prior steps and "
    "the candidate is the latest step. Output one score between 0 and 1 per step, "
    "prior steps first and the candidate last, comma-separated. Output only the "
    "scores.";

}  // namespace

std::vector<double> extract_floats(const std::string& text) {
    static const std::regex number(R"([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)");
    std::vector<double> out;
    auto begin = std::sregex_iterator(text.begin(), text.end(), number);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        out.push_back(std::stod(it->str()));
    }
    return out;
}

JudgeBackend::JudgeBackend(std::shared_ptr<Provider> provider)
    : provider_(std::move(provider)) {}

VerifyResponse JudgeBackend::evaluate(const VerifyRequest& request) {
    const std::string prompt = render_judge_prompt(question_block(request), request.candidates);
    Completion completion = provider_->complete(prompt, request_ordinal(request));
    Ranking ranking = parse_ranking(completion.text, static_cast<int>(request.candidates.size()));
    VerifyResponse resp;
    resp.rankings = ranking.order;
    resp.rationale = ranking.rationale;
    resp.parse_failure = ranking.parse_failure;
    resp.request_id = request.request_id;
    return resp;
}

PairwiseBackend::PairwiseBackend(std::shared_ptr<Provider> provider)
    : provider_(std::move(provider)) {}

VerifyResponse PairwiseBackend::evaluate(const VerifyRequest& request) {
    const std::string question = question_block(request);
    const int n = static_cast<int>(request.candidates.size());
    bool any_flag = false;
    uint64_t ordinal = request_ordinal(request);

    // One 3-way match; group[2] < 0 renders an empty third block and a [C]
    // verdict then counts as a parse failure.
    auto play = [&](const std::vector<int>& group) -> int {
        const auto& c = request.candidates;
        std::string third = group.size() > 2 ? c[static_cast<size_t>(group[2])] : "";
        std::string prompt = render_pairwise_prompt(
            question, c[static_cast<size_t>(group[0])], c[static_cast<size_t>(group[1])], third);
        Completion completion = provider_->complete(prompt, ordinal++);
        Verdict verdict = parse_verdict(completion.text);
        if (verdict.parse_failure ||
            verdict.winner >= static_cast<int>(group.size())) {
            any_flag = true;
            return group[0];
        }
        return group[static_cast<size_t>(verdict.winner)];
    };

    // Single-elimination rounds of up-to-3-way matches, seeded by index.
    std::vector<int> active(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) active[static_cast<size_t>(i)] = i;
    std::vector<int> eliminated_round(static_cast<size_t>(n), -1);
    int round = 0;
    while (active.size() > 1) {
        std::vector<int> next;
        for (size_t at = 0; at < active.size(); at += 3) {
            std::vector<int> group(active.begin() + static_cast<long>(at),
                                   active.begin() + static_cast<long>(
                                                        std::min(at + 3, active.size())));
            if (group.size() == 1) {
                next.push_back(group[0]);  // bye
                continue;
            }
            int winner = play(group);
            next.push_back(winner);
            for (int idx : group) {
                if (idx != winner) eliminated_round[static_cast<size_t>(idx)] = round;
            }
        }
        active = std::move(next);
        ++round;
    }

    VerifyResponse resp;
    resp.request_id = request.request_id;
    resp.parse_failure = any_flag;
    resp.rankings.push_back(active.front());
    std::vector<int> losers;
    for (int i = 0; i < n; ++i) {
        if (i != active.front()) losers.push_back(i);
    }
    std::stable_sort(losers.begin(), losers.end(), [&](int a, int b) {
        return eliminated_round[static_cast<size_t>(a)] >
               eliminated_round[static_cast<size_t>(b)];
    });
    resp.rankings.insert(resp.rankings.end(), losers.begin(), losers.end());
    return resp;
}

RmBackend::RmBackend(std::shared_ptr<Provider> provider) : provider_(std::move(provider)) {}

VerifyResponse RmBackend::evaluate(const VerifyRequest& request) {
    const std::string question = question_block(request);
    ScoreVector scores;
    scores.mode = ScoreMode::RM;
    uint64_t base = request_ordinal(request);
    for (size_t i = 0; i < request.candidates.size(); ++i) {
        std::string prompt = std::string(kRmInstruction) + "\n\nQuestion:\n" + question +
                             "\n\nCandidate response:\n" + request.candidates[i];
        Completion completion = provider_->complete(prompt, base + i);
        auto floats = extract_floats(completion.text);
        if (floats.empty()) {
            throw ProviderError(0, "rm backend got no numeric score for candidate " +
                                       std::to_string(i));
        }
        scores.scores.push_back(floats.back());
    }
    Ranking ranking = rank_from_scores(scores);
    VerifyResponse resp;
    resp.rankings = ranking.order;
    resp.scores = scores.scores;
    resp.request_id = request.request_id;
    return resp;
}

PrmBackend::PrmBackend(std::shared_ptr<Provider> provider, PrmAggregation aggregation)
    : provider_(std::move(provider)), aggregation_(aggregation) {}

VerifyResponse PrmBackend::evaluate(const VerifyRequest& request) {
    const std::string question = question_block(request);
    ScoreVector scores;
    scores.mode = ScoreMode::PRM;
    uint64_t base = request_ordinal(request);
    for (size_t i = 0; i < request.candidates.size(); ++i) {
        std::string prompt = std::string(kPrmInstruction) + "\n\nQuestion:\n" + question +
                             "\n\nCandidate step:\n" + request.candidates[i];
        Completion completion = provider_->complete(prompt, base + i);
        auto step_scores = extract_floats(completion.text);
        if (step_scores.empty()) {
            throw ProviderError(0, "prm backend got no step scores for candidate " +
                                       std::to_string(i));
        }
        scores.scores.push_back(aggregate_prm(step_scores, aggregation_));
    }
    Ranking ranking = rank_from_scores(scores);
    VerifyResponse resp;
    resp.rankings = ranking.order;
    resp.scores = scores.scores;
    resp.request_id = request.request_id;
    return resp;
}

BackendConfig BackendConfig::from_json(const nlohmann::json& j, const std::string& base_dir) {
    BackendConfig config;
    if (!j.contains("mode")) throw ConfigError("backend config missing 'mode'");
    config.mode = j.at("mode").get<std::string>();
    const auto& pj = j.contains("provider") ? j.at("provider") : nlohmann::json::object();
    config.provider_type = pj.value("type", "mock");
    if (config.provider_type == "http") {
        config.http.endpoint = pj.value("endpoint", "");
        config.http.model = pj.value("model", "");
        config.http.temperature = pj.value("temperature", 0.0);
        config.http.max_output_tokens = pj.value("max_output_tokens", 2048);
        config.http.api_key_env = pj.value("api_key_env", "");
    } else if (config.provider_type == "mock") {
        std::string script = pj.value("script", "");
        if (script.empty()) throw ConfigError("mock backend provider needs 'script'");
        config.mock_script_path =
            script.front() == '/' ? script : base_dir + "/" + script;
    } else {
        throw ConfigError("unknown provider type: " + config.provider_type);
    }
    config.max_concurrency = j.value("max_concurrency", 4);
    config.timeout_s = j.value("timeout_s", 120);
    config.prm_aggregation = j.value("aggregation", "mean");
    return config;
}

std::unique_ptr<VerifierBackend> build_backend(const BackendConfig& config) {
    std::shared_ptr<Provider> provider;
    if (config.provider_type == "http") {
        provider = std::make_shared<HttpProvider>(config.http);
    } else {
        provider = std::make_shared<MockProvider>(MockScript::from_file(config.mock_script_path));
    }
    if (config.mode == "judge") return std::make_unique<JudgeBackend>(provider);
    if (config.mode == "pairwise") return std::make_unique<PairwiseBackend>(provider);
    if (config.mode == "rm") return std::make_unique<RmBackend>(provider);
    if (config.mode == "prm") {
        return std::make_unique<PrmBackend>(
            provider, prm_aggregation_from_string(config.prm_aggregation));
    }
    throw UnknownModeError("unknown verification mode: " + config.mode);
}

// Counting semaphore with a runtime cap.
namespace {
class Gate {
public:
    explicit Gate(int slots) : slots_(slots) {}
    void acquire() {
        std::unique_lock<std::mutex> lock(mutex_);
        cv_.wait(lock, [&] { return slots_ > 0; });
        --slots_;
    }
    void release() {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            ++slots_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mutex_;
    std::condition_variable cv_;
    int slots_;
};
}  // namespace

struct BackendPool::Entry {
    std::unique_ptr<VerifierBackend> backend;
    std::unique_ptr<Gate> gate;
    int timeout_s = 120;
};

void BackendPool::register_backend(std::unique_ptr<VerifierBackend> backend,
                                   int max_concurrency, int timeout_s) {
    auto entry = std::make_shared<Entry>();
    std::string mode = backend->mode();
    entry->backend = std::move(backend);
    entry->gate = std::make_unique<Gate>(std::max(1, max_concurrency));
    entry->timeout_s = timeout_s;
    entries_[mode] = std::move(entry);
}

bool BackendPool::has_mode(const std::string& mode) const {
    return entries_.count(mode) > 0;
}

std::vector<std::string> BackendPool::modes() const {
    std::vector<std::string> out;
    for (const auto& [mode, entry] : entries_) out.push_back(mode);
    return out;
}

size_t BackendPool::size() const { return entries_.size(); }

VerifyResponse BackendPool::evaluate(const VerifyRequest& request) const {
    auto it = entries_.find(request.mode);
    if (it == entries_.end()) {
        throw BackendUnavailableError("no backend registered for mode: " + request.mode);
    }
    auto entry = it->second;
    entry->gate->acquire();
    struct Release {
        Gate* gate;
        ~Release() { gate->release(); }
    } release{entry->gate.get()};

    // Run on a worker so a wedged backend degrades to the fallback instead of
    // stalling the server; the abandoned worker's result is discarded.
    auto task = std::make_shared<std::packaged_task<VerifyResponse()>>(
        [entry, request] { return entry->backend->evaluate(request); });
    std::future<VerifyResponse> future = task->get_future();
    std::thread([task] { (*task)(); }).detach();

    if (future.wait_for(std::chrono::seconds(entry->timeout_s)) !=
        std::future_status::ready) {
        util::log_warn("backend timeout for request " + request.request_id +
                       " (mode " + request.mode + ")");
        return fallback_response(request);
    }
    try {
        return future.get();
    } catch (const std::exception& e) {
        util::log_warn("backend failure for request " + request.request_id + ": " +
                       e.what());
        return fallback_response(request);
    }
}

VerifyResponse handle_request(const VerifyRequest& request, const BackendPool& pool) {
    request.validate();
    if (!pool.has_mode(request.mode)) {
        throw BackendUnavailableError("no backend registered for mode: " + request.mode);
    }
    VerifyResponse resp = pool.evaluate(request);
    resp.request_id = request.request_id;

    // Server-side permutation guarantee.
    const size_t n = request.candidates.size();
    std::vector<bool> seen(n, false);
    bool valid = resp.rankings.size() == n;
    for (int idx : resp.rankings) {
        if (!valid) break;
        if (idx < 0 || static_cast<size_t>(idx) >= n || seen[static_cast<size_t>(idx)]) {
            valid = false;
            break;
        }
        seen[static_cast<size_t>(idx)] = true;
    }
    if (!valid) {
        util::log_warn("backend produced a non-permutation ranking for request " +
                       request.request_id);
        return fallback_response(request);
    }
    return resp;
}

}  // namespace verisearch
