#include "verisearch/provider/mock_provider.hpp"

#include "verisearch/context/token_counter.hpp"
#include "verisearch/util/assets.hpp"
#include "verisearch/util/rng.hpp"

namespace verisearch {

MockScript MockScript::from_json(const nlohmann::json& j) {
    MockScript script;
    script.seed = j.value("seed", 0ULL);
    if (!j.contains("rules") || !j["rules"].is_array()) {
        throw ConfigError("mock script needs a 'rules' array");
    }
    for (const auto& rj : j["rules"]) {
        MockRule rule;
        if (rj.contains("contains")) rule.contains = rj["contains"].get<std::string>();
        if (rj.contains("ordinal")) rule.ordinal = rj["ordinal"].get<uint64_t>();
        rule.is_default = rj.value("default", false);
        if (rj.contains("success_probability")) {
            rule.success_probability = rj["success_probability"].get<double>();
            rule.correct_text = rj.value("correct", "");
            rule.incorrect_text = rj.value("incorrect", "");
        } else {
            rule.response = rj.value("response", "");
        }
        script.rules.push_back(std::move(rule));
    }
    script.validate();
    return script;
}

MockScript MockScript::from_file(const std::string& path) {
    return from_json(nlohmann::json::parse(read_file(path)));
}

MockScript MockScript::constant(const std::string& text, uint64_t seed) {
    MockScript script;
    script.seed = seed;
    MockRule rule;
    rule.is_default = true;
    rule.response = text;
    script.rules.push_back(std::move(rule));
    return script;
}

MockScript MockScript::coin(double p, const std::string& correct,
                            const std::string& incorrect, uint64_t seed) {
    MockScript script;
    script.seed = seed;
    MockRule rule;
    rule.is_default = true;
    rule.success_probability = p;
    rule.correct_text = correct;
    rule.incorrect_text = incorrect;
    script.rules.push_back(std::move(rule));
    return script;
}

void MockScript::validate() const {
    if (rules.empty() || !rules.back().is_default) {
        throw ConfigError("mock script must end with a default rule");
    }
    for (const auto& rule : rules) {
        if (rule.success_probability &&
            (*rule.success_probability < 0.0 || *rule.success_probability > 1.0)) {
            throw ConfigError("success_probability must be in [0, 1]");
        }
    }
}

std::string mock_complete(const MockScript& script, const std::string& prompt,
                          uint64_t ordinal) {
    for (const auto& rule : script.rules) {
        if (rule.contains && prompt.find(*rule.contains) == std::string::npos) continue;
        if (rule.ordinal && *rule.ordinal != ordinal) continue;
        if (!rule.is_default && !rule.contains && !rule.ordinal) continue;
        if (rule.success_probability) {
            double draw = util::to_unit(
                util::mix64(script.seed, util::hash_text(prompt), ordinal));
            return draw < *rule.success_probability ? rule.correct_text
                                                    : rule.incorrect_text;
        }
        return rule.response;
    }
    // validate() guarantees a default rule, so this is unreachable.
    return "";
}

MockProvider::MockProvider(MockScript script) : script_(std::move(script)) {
    script_.validate();
}

MockProvider::MockProvider(MockScript script, uint64_t seed_override)
    : MockProvider(std::move(script)) {
    script_.seed = seed_override;
}

Completion MockProvider::complete(const std::string& prompt, uint64_t ordinal) {
    Completion completion;
    completion.text = mock_complete(script_, prompt, ordinal);
    auto counter = TokenCounter::approximate();
    completion.usage.prompt_tokens = counter.count(prompt);
    completion.usage.completion_tokens = counter.count(completion.text);
    return completion;
}

}  // namespace verisearch
