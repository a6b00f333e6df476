#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "verisearch/errors.hpp"

namespace verisearch {

struct TokenUsage {
    int64_t prompt_tokens = 0;
    int64_t completion_tokens = 0;

    TokenUsage& operator+=(const TokenUsage& other) {
        prompt_tokens += other.prompt_tokens;
        completion_tokens += other.completion_tokens;
        return *this;
    }
};

struct Completion {
    std::string text;
    TokenUsage usage;
};

struct RetryPolicy {
    int retries = 2;
    std::vector<int> backoff_ms = {500, 1000};

    int delay_for_attempt(int attempt) const {  // attempt is 0-based
        if (backoff_ms.empty()) return 0;
        size_t i = std::min(static_cast<size_t>(attempt), backoff_ms.size() - 1);
        return backoff_ms[i];
    }
};

// Text-in/text-out generation backend. The ordinal feeds deterministic mock
// providers and is ignored by live ones; callers allocate ordinals in
// deterministic program order so runs are reproducible.
class Provider {
public:
    virtual ~Provider() = default;
    virtual Completion complete(const std::string& prompt, uint64_t ordinal) = 0;
};

struct ProviderConfig {
    std::string endpoint;  // e.g. http://127.0.0.1:9090/v1/chat/completions
    std::string model;
    double temperature = 0.7;
    int max_output_tokens = 2048;
    std::string api_key_env;  // empty means no key required
    RetryPolicy retry;
    int timeout_s = 120;

    void validate() const;
};

// Chat-completion-compatible HTTP client. Sends {model, messages,
// temperature, max_tokens} and returns the first choice plus usage counts.
// Retries transient failures (429/5xx/transport) per the retry policy. The
// API key is read from the environment at call time and never logged.
class HttpProvider : public Provider {
public:
    explicit HttpProvider(ProviderConfig config);
    Completion complete(const std::string& prompt, uint64_t ordinal) override;

    const ProviderConfig& config() const { return config_; }

private:
    ProviderConfig config_;
    std::string host_;  // scheme://host:port
    std::string path_;
};

}  // namespace verisearch
