#include "ragweld/service/rate_limiter.hpp"

namespace ragweld::service {

RateLimiter::RateLimiter(std::size_t limit, std::chrono::seconds window, Clock clock)
    : limit_(limit), window_(window), clock_(std::move(clock)) {}

bool RateLimiter::allow(const std::string& client) {
  if (limit_ == 0) return true;
  const auto now = clock_();
  std::lock_guard lock(mutex_);
  Window& w = windows_[client];
  if (w.count == 0 || now - w.start >= window_) {
    w.start = now;
    w.count = 0;
  }
  if (w.count >= limit_) return false;
  ++w.count;
  return true;
}

}  // namespace ragweld::service
