#include "verisearch/context/token_counter.hpp"

#include <cmath>

namespace verisearch {

TokenCounter TokenCounter::approximate(double chars_per_token) {
    if (!(chars_per_token > 0.0)) {
        throw ConfigError("chars_per_token must be positive");
    }
    return TokenCounter(Mode::Approximate, chars_per_token, nullptr);
}

TokenCounter TokenCounter::exact(TokenizeFn tokenizer) {
    return TokenCounter(Mode::Exact, 0.0, std::move(tokenizer));
}

int64_t TokenCounter::count(const std::string& text) const {
    if (text.empty()) return 0;
    if (mode_ == Mode::Approximate) {
        return static_cast<int64_t>(
            std::ceil(static_cast<double>(text.size()) / chars_per_token_));
    }
    if (!tokenize_) {
        throw TokenizerEndpointError("exact token counter has no tokenizer configured");
    }
    try {
        return tokenize_(text);
    } catch (const TokenizerEndpointError&) {
        throw;
    } catch (const std::exception& e) {
        throw TokenizerEndpointError(std::string("tokenizer endpoint failed: ") + e.what());
    }
}

}  // namespace verisearch
