#include "ragweld/providers/http.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <thread>

#include "ragweld/core/error.hpp"

namespace ragweld::providers {

using nlohmann::json;

namespace {

bool retryable_status(int status) { return status == 429 || status >= 500; }

}  // namespace

HttpJsonClient::HttpJsonClient(ProviderConfig config) : config_(std::move(config)) {
  config_.validate();
  const std::string& url = *config_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.substr(0, scheme_end) != "http") {
    throw Error(Errc::kInvalidConfig, "endpoint must be an http:// URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  base_path_ = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
}

json HttpJsonClient::post(const std::string& path, const json& body) const {
  const std::string name(provider_kind_name(config_.kind));
  httplib::Headers headers;
  if (config_.auth_token_env) {
    if (const char* token = std::getenv(config_.auth_token_env->c_str()); token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }
  const auto seconds = config_.timeout.count() / 1000;
  const auto micros = (config_.timeout.count() % 1000) * 1000;
  const std::string payload = body.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempt));
    httplib::Client client(origin_);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);
    auto res = client.Post(base_path_ + path, headers, payload, "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 200 && res->status < 300) {
      try {
        return json::parse(res->body);
      } catch (const json::exception& e) {
        throw Error(Errc::kProviderUnavailable, name + " returned malformed JSON: " + e.what());
      }
    }
    last_error = "HTTP " + std::to_string(res->status);
    if (!retryable_status(res->status)) break;
  }
  throw Error(Errc::kProviderUnavailable, name + " " + path + " failed: " + last_error);
}

HttpEmbedder::HttpEmbedder(ProviderConfig config, std::size_t dim)
    : client_(std::move(config)), dim_(dim) {}

std::vector<double> HttpEmbedder::embed(std::string_view text) const {
  require_text(text, "embedding input");
  const json res = client_.post("/embed", {{"text", text}});
  std::vector<double> v;
  try {
    v = res.at("vector").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw Error(Errc::kProviderUnavailable, std::string("embedder response: ") + e.what());
  }
  if (v.size() != dim_) {
    throw Error(Errc::kDimensionMismatch, "embedder returned " + std::to_string(v.size()) +
                                              " components, expected " + std::to_string(dim_));
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(Errc::kProviderUnavailable, "embedder returned non-finite value");
  }
  return v;
}

HttpGenerator::HttpGenerator(ProviderConfig config) : client_(std::move(config)) {}

std::string HttpGenerator::generate(std::string_view prompt) const {
  require_text(prompt, "prompt");
  const json res = client_.post("/generate", {{"prompt", prompt}});
  if (auto it = res.find("refusal"); it != res.end() && !it->is_null()) {
    throw Error(Errc::kSafetyRefusal, it->is_string() ? it->get<std::string>() : it->dump());
  }
  try {
    return res.at("text").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::kProviderUnavailable, std::string("generator response: ") + e.what());
  }
}

HttpTranslator::HttpTranslator(ProviderConfig config) : client_(std::move(config)) {}

std::string HttpTranslator::translate(std::string_view text, const LanguageTag& source,
                                      const LanguageTag& target) const {
  require_text(text, "translation input");
  if (source == target) return std::string(text);
  const json res =
      client_.post("/translate", {{"text", text}, {"source", source.iso()}, {"target", target.iso()}});
  try {
    return res.at("text").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(Errc::kProviderUnavailable, std::string("translator response: ") + e.what());
  }
}

}  // namespace ragweld::providers
