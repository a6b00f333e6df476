#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "verisearch/provider/mock_provider.hpp"
#include "verisearch/provider/provider.hpp"
#include "verisearch/verify/ranking.hpp"
#include "verisearch/verify/wire.hpp"

namespace verisearch {

// One verification mode's evaluator. Implementations may throw; the pool
// converts failures and timeouts into the identity fallback.
class VerifierBackend {
public:
    virtual ~VerifierBackend() = default;
    virtual std::string mode() const = 0;
    virtual VerifyResponse evaluate(const VerifyRequest& request) = 0;
};

// Generative judge: ranks all candidates in one completion.
class JudgeBackend : public VerifierBackend {
public:
    explicit JudgeBackend(std::shared_ptr<Provider> provider);
    std::string mode() const override { return "judge"; }
    VerifyResponse evaluate(const VerifyRequest& request) override;

private:
    std::shared_ptr<Provider> provider_;
};

// Three-way comparison judge. For candidate counts other than 3 it runs a
// single-elimination mini-tournament seeded by candidate index and ranks
// winner first, then the eliminated by round (later round = better).
class PairwiseBackend : public VerifierBackend {
public:
    explicit PairwiseBackend(std::shared_ptr<Provider> provider);
    std::string mode() const override { return "pairwise"; }
    VerifyResponse evaluate(const VerifyRequest& request) override;

private:
    std::shared_ptr<Provider> provider_;
};

// Scalar reward model over (question, context, candidate); the provider's
// completion is parsed for its last real number.
class RmBackend : public VerifierBackend {
public:
    explicit RmBackend(std::shared_ptr<Provider> provider);
    std::string mode() const override { return "rm"; }
    VerifyResponse evaluate(const VerifyRequest& request) override;

private:
    std::shared_ptr<Provider> provider_;
};

// Process reward model: one score per step (prior steps + candidate),
// aggregated into a candidate score.
class PrmBackend : public VerifierBackend {
public:
    PrmBackend(std::shared_ptr<Provider> provider, PrmAggregation aggregation);
    std::string mode() const override { return "prm"; }
    VerifyResponse evaluate(const VerifyRequest& request) override;

private:
    std::shared_ptr<Provider> provider_;
    PrmAggregation aggregation_;
};

struct BackendConfig {
    std::string mode;
    std::string provider_type;  // "http" | "mock"
    ProviderConfig http;
    std::string mock_script_path;
    int max_concurrency = 4;
    int timeout_s = 120;
    std::string prm_aggregation = "mean";

    static BackendConfig from_json(const nlohmann::json& j, const std::string& base_dir);
};

std::unique_ptr<VerifierBackend> build_backend(const BackendConfig& config);

// Mode-keyed registry with per-backend concurrency caps and an evaluation
// timeout that degrades to the fallback response.
class BackendPool {
public:
    void register_backend(std::unique_ptr<VerifierBackend> backend,
                          int max_concurrency = 4, int timeout_s = 120);
    bool has_mode(const std::string& mode) const;
    std::vector<std::string> modes() const;
    size_t size() const;

    // Dispatch with concurrency cap + timeout; never throws for backend
    // failures (fallback contract). UnknownMode/BackendUnavailable are the
    // caller's to handle and are thrown.
    VerifyResponse evaluate(const VerifyRequest& request) const;

private:
    struct Entry;
    std::map<std::string, std::shared_ptr<Entry>> entries_;
};

// Validates the request and dispatches to the mode's backend. Throws
// ConfigError (invalid request) and UnknownModeError / BackendUnavailableError.
VerifyResponse handle_request(const VerifyRequest& request, const BackendPool& pool);

// Extracts real numbers in order of appearance; used by the scoring backends.
std::vector<double> extract_floats(const std::string& text);

}  // namespace verisearch
