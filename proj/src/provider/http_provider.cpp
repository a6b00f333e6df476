#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "verisearch/provider/provider.hpp"

namespace verisearch {

namespace {

// Splits "http://host:port/path" into base and path for httplib.
void split_endpoint(const std::string& endpoint, std::string& host, std::string& path) {
    size_t scheme = endpoint.find("://");
    if (scheme == std::string::npos) {
        throw ConfigError("provider endpoint must include a scheme: " + endpoint);
    }
    size_t slash = endpoint.find('/', scheme + 3);
    if (slash == std::string::npos) {
        host = endpoint;
        path = "/";
    } else {
        host = endpoint.substr(0, slash);
        path = endpoint.substr(slash);
    }
}

bool retryable_status(int status) {
    return status == 429 || (status >= 500 && status < 600);
}

}  // namespace

void ProviderConfig::validate() const {
    if (endpoint.empty()) throw ConfigError("provider endpoint must not be empty");
    if (endpoint.find("://") == std::string::npos) {
        throw ConfigError("provider endpoint is not a URL: " + endpoint);
    }
    if (!std::isfinite(temperature) || temperature < 0.0) {
        throw ConfigError("provider temperature must be finite and >= 0");
    }
}

HttpProvider::HttpProvider(ProviderConfig config) : config_(std::move(config)) {
    config_.validate();
    split_endpoint(config_.endpoint, host_, path_);
}

Completion HttpProvider::complete(const std::string& prompt, uint64_t /*ordinal*/) {
    std::string api_key;
    if (!config_.api_key_env.empty()) {
        const char* key = std::getenv(config_.api_key_env.c_str());
        if (!key || !*key) {
            throw AuthError("API key environment variable '" + config_.api_key_env +
                            "' is not set");
        }
        api_key = key;
    }

    nlohmann::json body{{"model", config_.model},
                        {"messages", {{{"role", "user"}, {"content", prompt}}}},
                        {"temperature", config_.temperature},
                        {"max_tokens", config_.max_output_tokens}};
    const std::string payload = body.dump();

    std::string last_error = "no attempt made";
    int last_status = 0;
    for (int attempt = 0; attempt <= config_.retry.retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(config_.retry.delay_for_attempt(attempt - 1)));
        }
        httplib::Client client(host_);
        client.set_connection_timeout(config_.timeout_s, 0);
        client.set_read_timeout(config_.timeout_s, 0);
        httplib::Headers headers;
        if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

        auto res = client.Post(path_, headers, payload, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            last_status = 0;
            continue;
        }
        if (res->status == 401 || res->status == 403) {
            throw AuthError("provider rejected credentials (status " +
                            std::to_string(res->status) + ")");
        }
        if (retryable_status(res->status)) {
            last_error = "retryable status " + std::to_string(res->status);
            last_status = res->status;
            continue;
        }
        if (res->status != 200) {
            throw ProviderError(res->status,
                                "provider returned status " + std::to_string(res->status));
        }
        try {
            auto j = nlohmann::json::parse(res->body);
            Completion completion;
            completion.text =
                j.at("choices").at(0).at("message").at("content").get<std::string>();
            if (j.contains("usage")) {
                completion.usage.prompt_tokens = j["usage"].value("prompt_tokens", 0);
                completion.usage.completion_tokens =
                    j["usage"].value("completion_tokens", 0);
            }
            return completion;
        } catch (const nlohmann::json::exception& e) {
            throw ProviderError(res->status,
                                std::string("malformed provider response: ") + e.what());
        }
    }
    throw ProviderError(last_status, "provider unavailable after " +
                                         std::to_string(config_.retry.retries + 1) +
                                         " attempts (" + last_error + ")");
}

}  // namespace verisearch
