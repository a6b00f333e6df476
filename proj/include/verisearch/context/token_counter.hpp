#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "verisearch/errors.hpp"

namespace verisearch {

// Token estimation used for all budgeting and cost accounting. Approximate
// mode is a character-ratio estimate; Exact mode delegates to a
// provider-supplied tokenizer (e.g. an HTTP tokenize endpoint).
class TokenCounter {
public:
    enum class Mode { Approximate, Exact };

    using TokenizeFn = std::function<int64_t(const std::string&)>;

    // ceil(len(text) / chars_per_token); the project default is 4 chars/token.
    static TokenCounter approximate(double chars_per_token = 4.0);

    static TokenCounter exact(TokenizeFn tokenizer);

    int64_t count(const std::string& text) const;

    Mode mode() const { return mode_; }
    double chars_per_token() const { return chars_per_token_; }

private:
    TokenCounter(Mode mode, double cpt, TokenizeFn fn)
        : mode_(mode), chars_per_token_(cpt), tokenize_(std::move(fn)) {}

    Mode mode_;
    double chars_per_token_;
    TokenizeFn tokenize_;
};

}  // namespace verisearch
