#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>

namespace ragweld::service {

/// Fixed-window request counter per client key.
class RateLimiter {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  /// `limit` == 0 disables limiting.
  explicit RateLimiter(std::size_t limit, std::chrono::seconds window = std::chrono::seconds(60),
                       Clock clock = [] { return std::chrono::steady_clock::now(); });

  /// Counts the request; false when the client is over its limit for the
  /// current window.
  bool allow(const std::string& client);

 private:
  struct Window {
    std::chrono::steady_clock::time_point start;
    std::size_t count = 0;
  };

  std::size_t limit_;
  std::chrono::seconds window_;
  Clock clock_;
  std::mutex mutex_;
  std::map<std::string, Window> windows_;
};

}  // namespace ragweld::service
