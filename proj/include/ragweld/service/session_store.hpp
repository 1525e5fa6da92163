#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ragweld/core/types.hpp"

namespace ragweld::service {

/// Sessions persisted as append-only JSON Lines journals:
///
///   <data_dir>/sessions/index.jsonl      {"session_id", "created_at_us"} per session
///   <data_dir>/sessions/<id>.jsonl       one ChatTurn per line
///
/// Every write is flushed and fsync'ed before the call returns. A torn last
/// line (crash mid-append) is dropped and truncated away on reload.
class SessionStore {
 public:
  explicit SessionStore(std::filesystem::path data_dir);

  struct Handle {
    std::mutex mutex;  // serializes turns within the session
    ChatSession session;
  };

  std::shared_ptr<Handle> create();
  /// nullptr for an unknown id.
  std::shared_ptr<Handle> find(const std::string& session_id) const;

  /// Persists `turn` and then appends it to the in-memory session. The
  /// caller must hold `handle.mutex`.
  void append_turn(Handle& handle, const ChatTurn& turn);

  std::size_t size() const;

 private:
  void load();
  std::filesystem::path journal_path(const std::string& session_id) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Handle>, std::less<>> sessions_;
  std::mutex index_mutex_;
};

/// 128 random bits as 32 lowercase hex digits.
std::string random_hex_id();

}  // namespace ragweld::service
