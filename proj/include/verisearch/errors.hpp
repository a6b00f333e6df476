#pragma once

#include <stdexcept>
#include <string>

namespace verisearch {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- core-model ---
class ClosedTrajectoryError : public Error {
public:
    explicit ClosedTrajectoryError(const std::string& what) : Error(what) {}
};
class EmptyContentError : public Error {
public:
    explicit EmptyContentError(const std::string& what) : Error(what) {}
};

// --- context-manager ---
class SummarizerUnavailableError : public Error {
public:
    explicit SummarizerUnavailableError(const std::string& what) : Error(what) {}
};
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};
class TokenizerEndpointError : public Error {
public:
    explicit TokenizerEndpointError(const std::string& what) : Error(what) {}
};

// --- verifier-suite ---
class TooFewCandidatesError : public Error {
public:
    explicit TooFewCandidatesError(const std::string& what) : Error(what) {}
};
class EmptyScoresError : public Error {
public:
    explicit EmptyScoresError(const std::string& what) : Error(what) {}
};
class NonFiniteScoreError : public Error {
public:
    explicit NonFiniteScoreError(const std::string& what) : Error(what) {}
};

// --- verifier-service ---
class UnknownModeError : public Error {
public:
    explicit UnknownModeError(const std::string& what) : Error(what) {}
};
class BackendUnavailableError : public Error {
public:
    explicit BackendUnavailableError(const std::string& what) : Error(what) {}
};
class BindFailureError : public Error {
public:
    explicit BindFailureError(const std::string& what) : Error(what) {}
};

// --- provider-gateway ---
class AuthError : public Error {
public:
    explicit AuthError(const std::string& what) : Error(what) {}
};
class ProviderError : public Error {
public:
    ProviderError(int status, const std::string& what) : Error(what), status_(status) {}
    int status() const { return status_; }
private:
    int status_;
};

// --- mas-workflows ---
class AllGenerationsFailedError : public Error {
public:
    explicit AllGenerationsFailedError(const std::string& what) : Error(what) {}
};
class AllIterationsFailedError : public Error {
public:
    explicit AllIterationsFailedError(const std::string& what) : Error(what) {}
};
class MissingInputReferenceError : public Error {
public:
    explicit MissingInputReferenceError(const std::string& what) : Error(what) {}
};

// --- analytics ---
class InvalidCountsError : public Error {
public:
    explicit InvalidCountsError(const std::string& what) : Error(what) {}
};
class NotApplicableError : public Error {
public:
    explicit NotApplicableError(const std::string& what) : Error(what) {}
};
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};
class EmptyGroupError : public Error {
public:
    explicit EmptyGroupError(const std::string& what) : Error(what) {}
};

// --- configuration / input files ---
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace verisearch
