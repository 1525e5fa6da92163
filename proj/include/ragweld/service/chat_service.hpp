#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ragweld/evalkit/faq.hpp"
#include "ragweld/evalkit/runner.hpp"
#include "ragweld/pipeline/pipeline.hpp"
#include "ragweld/service/config.hpp"
#include "ragweld/service/rate_limiter.hpp"
#include "ragweld/service/session_store.hpp"

namespace ragweld::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Wire form of an answer: documents carry id, title, source_uri and score;
/// images and videos add media_uri.
nlohmann::json wire_answer(const std::string& session_id, const MultiModalAnswer& answer);

/// The HTTP API minus the transport. Every handler is safe to call from any
/// number of threads.
class ChatService {
 public:
  ChatService(ServiceConfig config, std::shared_ptr<const vindex::StoreRegistry> registry,
              providers::ProviderSet providers);
  ~ChatService();

  ChatService(const ChatService&) = delete;
  ChatService& operator=(const ChatService&) = delete;

  /// Makes a FAQ set available to /api/eval under `name`.
  void register_dataset(const std::string& name, std::vector<evalkit::FaqPair> pairs);
  /// Registers every *.jsonl / *.csv file in `dir` under its stem.
  void register_datasets_in(const std::filesystem::path& dir);
  std::vector<std::string> dataset_names() const;

  Response chat(const nlohmann::json& request, const std::string& client);
  /// Parses `body` first; malformed JSON is a 400.
  Response chat_raw(const std::string& body, const std::string& client);
  Response history(const std::string& session_id) const;
  Response health() const;
  Response eval(const nlohmann::json& request, const std::string& client);
  Response eval_raw(const std::string& body, const std::string& client);
  Response eval_job(const std::string& job_id) const;
  /// 404 unless debug endpoints are enabled.
  Response last_prompt(const std::string& session_id) const;

  const ServiceConfig& config() const noexcept { return config_; }
  const pipeline::Pipeline& pipeline() const noexcept { return pipeline_; }

 private:
  struct Job {
    std::string id;
    std::string key;
    std::string status;  // "running", "done", "failed"
    nlohmann::json report;
    std::string error;
  };

  Response run_eval_request(const nlohmann::json& request);
  Response finish_sync(const std::string& key, const std::vector<evalkit::FaqPair>& pairs,
                       const evalkit::EvalSetting& setting);

  ServiceConfig config_;
  pipeline::Pipeline pipeline_;
  SessionStore sessions_;
  RateLimiter limiter_;

  mutable std::mutex prompts_mutex_;
  std::map<std::string, pipeline::PromptTrace> last_prompts_;

  mutable std::mutex datasets_mutex_;
  std::map<std::string, std::shared_ptr<const std::vector<evalkit::FaqPair>>> datasets_;

  mutable std::mutex jobs_mutex_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::set<std::string> running_keys_;
  std::vector<std::thread> workers_;
};

}  // namespace ragweld::service
