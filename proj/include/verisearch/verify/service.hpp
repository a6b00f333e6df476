#pragma once

#include <memory>
#include <string>
#include <vector>

#include "verisearch/verify/backends.hpp"

namespace verisearch {

struct ServiceConfig {
    std::string bind_host = "127.0.0.1";
    int bind_port = 8777;
    std::vector<BackendConfig> backends;

    // Accepts JSON or the TOML subset; relative script paths resolve against
    // the config file's directory.
    static ServiceConfig from_file(const std::string& path);
    static ServiceConfig from_json(const nlohmann::json& j, const std::string& base_dir);
};

// HTTP verifier host: POST /verify, GET /healthz. Stateless per request; no
// trajectory state lives here.
class VerifierService {
public:
    // Builds the pool; throws ConfigError when zero backends are configured.
    explicit VerifierService(ServiceConfig config);
    ~VerifierService();

    VerifierService(const VerifierService&) = delete;
    VerifierService& operator=(const VerifierService&) = delete;

    // Binds and serves on a background thread. Returns the bound port (the
    // configured port, or the ephemeral one when configured as 0). Throws
    // BindFailureError.
    int start();

    // Blocking variant for the CLI; returns after stop() (e.g. from a signal
    // handler). Throws BindFailureError.
    int run();

    // Graceful: stops accepting and drains in-flight requests.
    void stop();

    int port() const { return port_; }
    const BackendPool& pool() const { return pool_; }

private:
    struct Impl;
    ServiceConfig config_;
    BackendPool pool_;
    std::unique_ptr<Impl> impl_;
    int port_ = 0;
};

}  // namespace verisearch
