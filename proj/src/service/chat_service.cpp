#include "ragweld/service/chat_service.hpp"

#include <algorithm>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::service {

using nlohmann::json;

namespace {

json wire_items(const std::vector<RetrievedItem>& items, bool media) {
  json out = json::array();
  for (const RetrievedItem& r : items) {
    json j{{"id", r.item->id},
           {"title", r.item->title},
           {"source_uri", r.item->source_uri},
           {"score", r.score}};
    if (media) j["media_uri"] = r.item->media_uri.value_or("");
    out.push_back(std::move(j));
  }
  return out;
}

Response error_response(int status, std::string_view code, const std::string& message) {
  return {status, json{{"error", code}, {"message", message}}};
}

Response error_response(int status, const Error& e) {
  return error_response(status, errc_name(e.code()), e.what());
}

bool parse_body(const std::string& body, json& out) {
  try {
    out = json::parse(body);
    return out.is_object();
  } catch (const json::exception&) {
    return false;
  }
}

}  // namespace

json wire_answer(const std::string& session_id, const MultiModalAnswer& answer) {
  return json{{"session_id", session_id},
              {"text", answer.text},
              {"documents", wire_items(answer.documents, false)},
              {"images", wire_items(answer.images, true)},
              {"videos", wire_items(answer.videos, true)},
              {"language", answer.detected_language.iso()},
              {"language_fallback", answer.language_fallback}};
}

ChatService::ChatService(ServiceConfig config, std::shared_ptr<const vindex::StoreRegistry> registry,
                         providers::ProviderSet providers)
    : config_(std::move(config)),
      pipeline_(std::move(registry), std::move(providers)),
      sessions_(config_.data_dir),
      limiter_(config_.rate_limit_per_minute) {
  config_.pipeline.validate();
}

ChatService::~ChatService() {
  std::vector<std::thread> workers;
  {
    std::lock_guard lock(jobs_mutex_);
    workers.swap(workers_);
  }
  for (std::thread& t : workers) t.join();
}

void ChatService::register_dataset(const std::string& name, std::vector<evalkit::FaqPair> pairs) {
  if (name.empty()) throw Error(Errc::kInvalidArgument, "dataset name is empty");
  if (pairs.empty()) throw Error(Errc::kInvalidArgument, "dataset " + name + " is empty");
  std::lock_guard lock(datasets_mutex_);
  datasets_[name] = std::make_shared<const std::vector<evalkit::FaqPair>>(std::move(pairs));
}

void ChatService::register_datasets_in(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".jsonl" || ext == ".csv")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    register_dataset(path.stem().string(), evalkit::load_faq(path, Language::kEn));
  }
}

std::vector<std::string> ChatService::dataset_names() const {
  std::lock_guard lock(datasets_mutex_);
  std::vector<std::string> names;
  for (const auto& [name, _] : datasets_) names.push_back(name);
  return names;
}

Response ChatService::chat_raw(const std::string& body, const std::string& client) {
  json request;
  if (!parse_body(body, request)) {
    return error_response(400, "BAD_REQUEST", "body must be a JSON object");
  }
  return chat(request, client);
}

Response ChatService::chat(const json& request, const std::string& client) {
  if (!limiter_.allow(client)) return error_response(429, "RATE_LIMITED", "too many requests");

  const auto query_it = request.find("query");
  if (query_it == request.end() || !query_it->is_string() ||
      utf8::is_blank(query_it->get_ref<const std::string&>())) {
    return error_response(400, "EMPTY_INPUT", "query must be a non-empty string");
  }
  const std::string& query = query_it->get_ref<const std::string&>();

  std::shared_ptr<SessionStore::Handle> handle;
  const auto sid_it = request.find("session_id");
  if (sid_it != request.end() && !sid_it->is_null()) {
    if (!sid_it->is_string()) return error_response(400, "BAD_REQUEST", "session_id must be a string");
    handle = sessions_.find(sid_it->get<std::string>());
    if (!handle) return error_response(404, "UNKNOWN_SESSION", "no such session");
  } else {
    handle = sessions_.create();
  }

  std::lock_guard session_lock(handle->mutex);
  ChatSession working = handle->session;
  pipeline::PromptTrace trace;
  MultiModalAnswer answer;
  try {
    answer = pipeline_.answer(working, query, config_.pipeline, &trace);
  } catch (const pipeline::StageError& e) {
    Response r = error_response(502, e);
    r.body["stage"] = pipeline::stage_name(e.stage());
    r.body["session_id"] = handle->session.session_id;
    return r;
  } catch (const Error& e) {
    const int status = e.code() == Errc::kEmptyInput ? 400 : 500;
    return error_response(status, e);
  }

  try {
    sessions_.append_turn(*handle, working.turns.back());
  } catch (const Error& e) {
    return error_response(500, e);
  }
  if (config_.debug_endpoints) {
    std::lock_guard lock(prompts_mutex_);
    last_prompts_[handle->session.session_id] = std::move(trace);
  }
  return {200, wire_answer(handle->session.session_id, answer)};
}

Response ChatService::history(const std::string& session_id) const {
  auto handle = sessions_.find(session_id);
  if (!handle) return error_response(404, "UNKNOWN_SESSION", "no such session");
  std::lock_guard lock(handle->mutex);
  return {200, json{{"session_id", session_id}, {"turns", handle->session.turns}}};
}

Response ChatService::health() const {
  json stores = json::array();
  const auto& registry = pipeline_.registry();
  for (const StoreKey& key : registry.keys()) {
    stores.push_back(json{{"key", store_key_label(key)}, {"count", registry.at(key).size()}});
  }
  return {200, json{{"status", "ok"},
                    {"dim", registry.dim()},
                    {"stores", std::move(stores)},
                    {"sessions", sessions_.size()},
                    {"datasets", dataset_names()}}};
}

Response ChatService::eval_raw(const std::string& body, const std::string& client) {
  json request;
  if (!parse_body(body, request)) {
    return error_response(400, "BAD_REQUEST", "body must be a JSON object");
  }
  return eval(request, client);
}

Response ChatService::eval(const json& request, const std::string& client) {
  if (!limiter_.allow(client)) return error_response(429, "RATE_LIMITED", "too many requests");
  try {
    return run_eval_request(request);
  } catch (const Error& e) {
    return error_response(400, e);
  } catch (const json::exception& e) {
    return error_response(400, "BAD_REQUEST", e.what());
  }
}

// Request: {"dataset", "arm"?, "mode"?, "lang"?}. The language defaults to
// the language of the dataset's first pair; pairs in other languages are
// skipped.
Response ChatService::run_eval_request(const json& request) {
  const std::string name = request.at("dataset").get<std::string>();
  std::shared_ptr<const std::vector<evalkit::FaqPair>> dataset;
  {
    std::lock_guard lock(datasets_mutex_);
    auto it = datasets_.find(name);
    if (it == datasets_.end()) return error_response(404, "UNKNOWN_DATASET", "no dataset " + name);
    dataset = it->second;
  }

  evalkit::EvalSetting setting;
  setting.arm = evalkit::parse_eval_arm(request.value("arm", std::string{"text"}));
  setting.query_mode = evalkit::parse_query_mode(request.value("mode", std::string{"tq"}));
  setting.language = request.contains("lang")
                         ? LanguageTag::parse(request.at("lang").get<std::string>())
                         : dataset->front().language;
  if (!setting.language.supported()) {
    throw Error(Errc::kInvalidArgument, "unsupported language " + setting.language.iso());
  }

  std::vector<evalkit::FaqPair> pairs;
  std::copy_if(dataset->begin(), dataset->end(), std::back_inserter(pairs),
               [&](const evalkit::FaqPair& p) { return p.language == setting.language; });
  if (pairs.empty()) {
    return error_response(404, "UNKNOWN_DATASET",
                          "dataset " + name + " has no " + setting.language.iso() + " pairs");
  }

  const std::string key = name + "/" + setting.language.iso() + "/" +
                          std::string(evalkit::eval_arm_name(setting.arm)) + "/" +
                          std::string(evalkit::query_mode_name(setting.query_mode));
  {
    std::lock_guard lock(jobs_mutex_);
    if (!running_keys_.insert(key).second) {
      return error_response(409, "JOB_RUNNING", "job " + key + " is already running");
    }
  }

  if (pairs.size() <= config_.eval_sync_limit) return finish_sync(key, pairs, setting);

  auto job = std::make_shared<Job>();
  job->id = random_hex_id();
  job->key = key;
  job->status = "running";
  std::lock_guard lock(jobs_mutex_);
  jobs_[job->id] = job;
  workers_.emplace_back([this, job, pairs = std::move(pairs), setting] {
    json report;
    std::string error;
    try {
      report = evalkit::to_json(evalkit::run_eval(pairs, pipeline_, config_.pipeline, setting));
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::lock_guard done_lock(jobs_mutex_);
    job->status = error.empty() ? "done" : "failed";
    job->report = std::move(report);
    job->error = std::move(error);
    running_keys_.erase(job->key);
  });
  return {202, json{{"job_id", job->id}, {"key", key}, {"status", "running"},
                    {"poll", "/api/eval/" + job->id}}};
}

Response ChatService::finish_sync(const std::string& key, const std::vector<evalkit::FaqPair>& pairs,
                                  const evalkit::EvalSetting& setting) {
  Response r;
  try {
    r = {200, evalkit::to_json(evalkit::run_eval(pairs, pipeline_, config_.pipeline, setting))};
  } catch (const Error& e) {
    r = error_response(500, e);
  }
  std::lock_guard lock(jobs_mutex_);
  running_keys_.erase(key);
  return r;
}

Response ChatService::eval_job(const std::string& job_id) const {
  std::lock_guard lock(jobs_mutex_);
  auto it = jobs_.find(job_id);
  if (it == jobs_.end()) return error_response(404, "UNKNOWN_JOB", "no such job");
  const Job& job = *it->second;
  json body{{"job_id", job.id}, {"key", job.key}, {"status", job.status}};
  if (job.status == "done") body["report"] = job.report;
  if (job.status == "failed") body["error"] = job.error;
  return {200, std::move(body)};
}

Response ChatService::last_prompt(const std::string& session_id) const {
  if (!config_.debug_endpoints) return error_response(404, "NOT_FOUND", "debug endpoints disabled");
  std::lock_guard lock(prompts_mutex_);
  auto it = last_prompts_.find(session_id);
  if (it == last_prompts_.end()) return error_response(404, "UNKNOWN_SESSION", "no prompt recorded");
  const pipeline::PromptTrace& t = it->second;
  return {200, json{{"session_id", session_id},
                    {"prompt", t.prompt},
                    {"detected_language", t.route.detected.iso()},
                    {"english_query", t.route.english_query},
                    {"fallback", t.route.fallback}}};
}

}  // namespace ragweld::service
