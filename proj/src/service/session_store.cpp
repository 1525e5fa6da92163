#include "ragweld/service/session_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <iterator>
#include <random>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"

namespace ragweld::service {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void durable_append(const fs::path& path, const std::string& line) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(Errc::kIoFailure, "cannot open " + path.string());
  std::string data = line;
  data.push_back('\n');
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      ::close(fd);
      throw Error(Errc::kIoFailure, "write failed: " + path.string());
    }
    off += static_cast<std::size_t>(n);
  }
  const int rc = ::fsync(fd);
  ::close(fd);
  if (rc != 0) throw Error(Errc::kIoFailure, "fsync failed: " + path.string());
}

bool valid_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') return false;
  }
  return true;
}

}  // namespace

std::string random_hex_id() {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (int w = 0; w < 2; ++w) {
    std::uint64_t v = rng();
    for (int i = 0; i < 16; ++i) {
      out.push_back(kHex[v & 0xF]);
      v >>= 4;
    }
  }
  return out;
}

SessionStore::SessionStore(fs::path data_dir) : dir_(std::move(data_dir) / "sessions") {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(Errc::kIoFailure, "cannot create " + dir_.string() + ": " + ec.message());
  load();
}

fs::path SessionStore::journal_path(const std::string& id) const { return dir_ / (id + ".jsonl"); }

// Parses newline-terminated JSON lines up to the first bad or unterminated
// one, and truncates the file there so later appends start on a clean line.
static std::vector<json> read_journal(const fs::path& path) {
  std::vector<json> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  std::size_t good = 0;
  while (good < data.size()) {
    const std::size_t nl = data.find('\n', good);
    if (nl == std::string::npos) break;
    try {
      out.push_back(json::parse(std::string_view(data).substr(good, nl - good)));
    } catch (const json::exception&) {
      break;
    }
    good = nl + 1;
  }
  if (good < data.size()) {
    std::error_code ec;
    fs::resize_file(path, good, ec);
    if (ec) throw Error(Errc::kIoFailure, "cannot repair " + path.string() + ": " + ec.message());
  }
  return out;
}

void SessionStore::load() {
  for (const json& entry : read_journal(dir_ / "index.jsonl")) {
    auto handle = std::make_shared<Handle>();
    try {
      handle->session.session_id = entry.at("session_id").get<std::string>();
      handle->session.created_at_us = entry.at("created_at_us").get<std::int64_t>();
    } catch (const json::exception&) {
      continue;
    }
    handle->session.updated_at_us = handle->session.created_at_us;
    if (!valid_id(handle->session.session_id)) continue;

    for (const json& line : read_journal(journal_path(handle->session.session_id))) {
      try {
        ChatTurn turn = line.get<ChatTurn>();
        handle->session.updated_at_us = turn.timestamp_us;
        handle->session.turns.push_back(std::move(turn));
      } catch (const json::exception&) {
        break;
      }
    }
    sessions_[handle->session.session_id] = std::move(handle);
  }
}

std::shared_ptr<SessionStore::Handle> SessionStore::create() {
  auto handle = std::make_shared<Handle>();
  handle->session.session_id = random_hex_id();
  handle->session.created_at_us = now_us();
  handle->session.updated_at_us = handle->session.created_at_us;
  {
    std::lock_guard lock(index_mutex_);
    durable_append(dir_ / "index.jsonl", json{{"session_id", handle->session.session_id},
                                              {"created_at_us", handle->session.created_at_us}}
                                             .dump());
  }
  std::unique_lock lock(mutex_);
  sessions_[handle->session.session_id] = handle;
  return handle;
}

std::shared_ptr<SessionStore::Handle> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void SessionStore::append_turn(Handle& handle, const ChatTurn& turn) {
  durable_append(journal_path(handle.session.session_id), json(turn).dump());
  handle.session.turns.push_back(turn);
  handle.session.updated_at_us = turn.timestamp_us;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

}  // namespace ragweld::service
