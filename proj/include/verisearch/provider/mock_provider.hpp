#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verisearch/provider/provider.hpp"

namespace verisearch {

// One scripted response rule. Rules are checked in order; the first match
// wins and the final rule must be a default so the script is total.
struct MockRule {
    std::optional<std::string> contains;   // substring match on the prompt
    std::optional<uint64_t> ordinal;       // match a specific call ordinal
    bool is_default = false;

    std::string response;                  // used when no probability is set
    std::optional<double> success_probability;
    std::string correct_text;
    std::string incorrect_text;
};

// Deterministic scripted generator: the emitted text is a pure function of
// (script, seed, prompt, ordinal). Probabilistic rules draw from a hash of
// (seed, prompt, ordinal), so concurrent use needs no locking.
struct MockScript {
    uint64_t seed = 0;
    std::vector<MockRule> rules;

    static MockScript from_json(const nlohmann::json& j);
    static MockScript from_file(const std::string& path);

    // Convenience: always answer `text`.
    static MockScript constant(const std::string& text, uint64_t seed = 0);

    // Convenience: answer `correct` with probability p, else `incorrect`.
    static MockScript coin(double p, const std::string& correct,
                           const std::string& incorrect, uint64_t seed = 0);

    void validate() const;
};

std::string mock_complete(const MockScript& script, const std::string& prompt,
                          uint64_t ordinal);

class MockProvider : public Provider {
public:
    explicit MockProvider(MockScript script);
    // Same script with a different seed; used to derive per-run/per-trial
    // streams without touching the script file.
    MockProvider(MockScript script, uint64_t seed_override);

    Completion complete(const std::string& prompt, uint64_t ordinal) override;

    const MockScript& script() const { return script_; }

private:
    MockScript script_;
};

}  // namespace verisearch
