#pragma once

#include <memory>
#include <string>
#include <thread>

#include "ragweld/service/chat_service.hpp"

namespace ragweld::service {

/// Binds ChatService to HTTP routes:
///
///   POST /api/chat                       GET /api/health
///   GET  /api/sessions/{id}/history      POST /api/eval
///   GET  /api/eval/{job}                 GET /api/debug/last_prompt/{id}
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<ChatService> service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns the bound port; throws kIoFailure when binding fails.
  int start(const std::string& host, int port);
  /// Binds without serving. Port 0 picks a free port; returns the bound
  /// port or throws kIoFailure.
  int bind(const std::string& host, int port);
  /// Serves on the calling thread until stop(). Call bind() first.
  void listen();
  void stop();

  int port() const noexcept { return port_; }

 private:

  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::shared_ptr<ChatService> service_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace ragweld::service
