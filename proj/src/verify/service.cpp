#include "verisearch/verify/service.hpp"

#include <filesystem>
#include <thread>

#include <httplib.h>

#include "verisearch/util/assets.hpp"
#include "verisearch/util/log.hpp"
#include "verisearch/util/strings.hpp"
#include "verisearch/util/toml_lite.hpp"

namespace verisearch {

ServiceConfig ServiceConfig::from_file(const std::string& path) {
    std::string base_dir = std::filesystem::path(path).parent_path().string();
    if (base_dir.empty()) base_dir = ".";
    nlohmann::json j;
    if (util::starts_with(util::trim(read_file(path)), "{")) {
        j = nlohmann::json::parse(read_file(path));
    } else {
        j = util::parse_toml(read_file(path));
    }
    return from_json(j, base_dir);
}

ServiceConfig ServiceConfig::from_json(const nlohmann::json& j, const std::string& base_dir) {
    ServiceConfig config;
    if (j.contains("bind")) {
        auto parts = util::split(j.at("bind").get<std::string>(), ':');
        if (parts.size() != 2) throw ConfigError("bind must be host:port");
        config.bind_host = parts[0];
        long long port = 0;
        if (!util::parse_int(parts[1], port) || port < 0 || port > 65535) {
            throw ConfigError("invalid bind port: " + parts[1]);
        }
        config.bind_port = static_cast<int>(port);
    }
    for (const auto& bj : j.value("backends", nlohmann::json::array())) {
        config.backends.push_back(BackendConfig::from_json(bj, base_dir));
    }
    return config;
}

struct VerifierService::Impl {
    httplib::Server server;
    std::thread thread;
};

VerifierService::VerifierService(ServiceConfig config)
    : config_(std::move(config)), impl_(std::make_unique<Impl>()) {
    if (config_.backends.empty()) {
        throw ConfigError("verifier service needs at least one backend");
    }
    for (const auto& bc : config_.backends) {
        pool_.register_backend(build_backend(bc), bc.max_concurrency, bc.timeout_s);
    }

    impl_->server.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
        nlohmann::json body{{"status", "ok"}, {"modes", pool_.modes()}};
        res.set_content(body.dump(), "application/json");
    });

    impl_->server.Post("/verify", [this](const httplib::Request& req, httplib::Response& res) {
        VerifyRequest request;
        try {
            request = VerifyRequest::from_json(nlohmann::json::parse(req.body));
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
            return;
        }
        try {
            VerifyResponse response = handle_request(request, pool_);
            res.set_content(response.to_json().dump(), "application/json");
        } catch (const BackendUnavailableError& e) {
            res.status = 503;
            res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
        } catch (const std::exception& e) {
            res.status = 400;
            res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
        }
    });
}

VerifierService::~VerifierService() { stop(); }

int VerifierService::start() {
    int port = config_.bind_port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(config_.bind_host);
        if (port <= 0) throw BindFailureError("cannot bind " + config_.bind_host);
    } else if (!impl_->server.bind_to_port(config_.bind_host, port)) {
        throw BindFailureError("cannot bind " + config_.bind_host + ":" +
                               std::to_string(port));
    }
    port_ = port;
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port_;
}

int VerifierService::run() {
    int port = config_.bind_port;
    if (port == 0) {
        port = impl_->server.bind_to_any_port(config_.bind_host);
        if (port <= 0) throw BindFailureError("cannot bind " + config_.bind_host);
    } else if (!impl_->server.bind_to_port(config_.bind_host, port)) {
        throw BindFailureError("cannot bind " + config_.bind_host + ":" +
                               std::to_string(port));
    }
    port_ = port;
    util::log_info("verifier service listening on " + config_.bind_host + ":" +
                   std::to_string(port_));
    impl_->server.listen_after_bind();
    return port_;
}

void VerifierService::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace verisearch
