#include "verisearch/verify/client.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>

#include "verisearch/util/log.hpp"

namespace verisearch {

bool is_permutation_of(const std::vector<int>& rankings, size_t n) {
    if (rankings.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int idx : rankings) {
        if (idx < 0 || static_cast<size_t>(idx) >= n || seen[static_cast<size_t>(idx)]) {
            return false;
        }
        seen[static_cast<size_t>(idx)] = true;
    }
    return true;
}

HttpVerifierClient::HttpVerifierClient(std::string endpoint, RetryPolicy retry,
                                       int timeout_s)
    : endpoint_(std::move(endpoint)), retry_(retry), timeout_s_(timeout_s) {}

VerifyResponse HttpVerifierClient::verify(const VerifyRequest& request) {
    const std::string payload = request.to_json().dump();
    std::string last_error = "no attempt made";

    for (int attempt = 0; attempt <= retry_.retries; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(retry_.delay_for_attempt(attempt - 1)));
        }
        httplib::Client client(endpoint_);
        client.set_connection_timeout(timeout_s_, 0);
        client.set_read_timeout(timeout_s_, 0);
        auto res = client.Post("/verify", payload, "application/json");
        if (!res) {
            last_error = "transport failure: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "status " + std::to_string(res->status) + ": " + res->body;
            // 4xx is not retryable; the request itself is bad.
            if (res->status >= 400 && res->status < 500) break;
            continue;
        }
        try {
            VerifyResponse response = VerifyResponse::from_json(
                nlohmann::json::parse(res->body));
            if (!is_permutation_of(response.rankings, request.candidates.size())) {
                util::log_warn("verifier returned a non-permutation for request " +
                               request.request_id + "; using fallback");
                return fallback_response(request);
            }
            return response;
        } catch (const std::exception& e) {
            last_error = std::string("malformed response: ") + e.what();
        }
    }

    util::log_warn("verify request " + request.request_id + " failed (" + last_error +
                   "); using fallback ranking");
    return fallback_response(request);
}

}  // namespace verisearch
