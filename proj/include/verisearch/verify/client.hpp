#pragma once

#include <memory>
#include <string>

#include "verisearch/provider/provider.hpp"
#include "verisearch/verify/wire.hpp"

namespace verisearch {

// Client-side view of the verifier: the search loop depends only on this
// interface, so tests can plug in oracle, random, or counting verifiers.
class VerifierClient {
public:
    virtual ~VerifierClient() = default;
    virtual VerifyResponse verify(const VerifyRequest& request) = 0;
};

// Posts to <endpoint>/verify. Transport or server failures never escape: after
// the retry budget the identity fallback ranking is returned with
// parse_failure set, so the search can always proceed.
class HttpVerifierClient : public VerifierClient {
public:
    explicit HttpVerifierClient(std::string endpoint, RetryPolicy retry = {},
                                int timeout_s = 120);

    VerifyResponse verify(const VerifyRequest& request) override;

    const std::string& endpoint() const { return endpoint_; }

private:
    std::string endpoint_;
    RetryPolicy retry_;
    int timeout_s_;
};

// Client-side permutation re-validation; non-permutations are replaced by the
// fallback.
bool is_permutation_of(const std::vector<int>& rankings, size_t n);

}  // namespace verisearch
