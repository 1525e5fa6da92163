#include "ragweld/service/http_server.hpp"

#include <httplib.h>

#include "ragweld/core/error.hpp"

namespace ragweld::service {

namespace {

constexpr std::size_t kWorkerThreads = 32;

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(std::shared_ptr<ChatService> service)
    : impl_(std::make_unique<Impl>()), service_(std::move(service)) {
  auto& svr = impl_->server;
  svr.new_task_queue = [] { return new httplib::ThreadPool(kWorkerThreads); };
  ChatService* s = service_.get();

  svr.Post("/api/chat", [s](const httplib::Request& req, httplib::Response& res) {
    send(res, s->chat_raw(req.body, req.remote_addr));
  });
  svr.Get(R"(/api/sessions/([^/]+)/history)",
          [s](const httplib::Request& req, httplib::Response& res) {
            send(res, s->history(req.matches[1]));
          });
  svr.Get("/api/health", [s](const httplib::Request&, httplib::Response& res) {
    send(res, s->health());
  });
  svr.Post("/api/eval", [s](const httplib::Request& req, httplib::Response& res) {
    send(res, s->eval_raw(req.body, req.remote_addr));
  });
  svr.Get(R"(/api/eval/([^/]+))", [s](const httplib::Request& req, httplib::Response& res) {
    send(res, s->eval_job(req.matches[1]));
  });
  svr.Get(R"(/api/debug/last_prompt/([^/]+))",
          [s](const httplib::Request& req, httplib::Response& res) {
            send(res, s->last_prompt(req.matches[1]));
          });
  svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    send(res, {500, nlohmann::json{{"error", "INTERNAL"}, {"message", message}}});
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& svr = impl_->server;
  if (port == 0) {
    port_ = svr.bind_to_any_port(host);
  } else {
    port_ = svr.bind_to_port(host, port) ? port : -1;
  }
  if (port_ <= 0) {
    throw Error(Errc::kIoFailure, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port_;
}

int HttpServer::start(const std::string& host, int port) {
  bind(host, port);
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port_;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace ragweld::service
