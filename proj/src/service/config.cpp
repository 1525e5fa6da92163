#include "ragweld/service/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::service {

namespace fs = std::filesystem;

namespace {

std::string unquote(std::string_view v, std::size_t line) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') return std::string(v);
  std::string out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    char c = v[i];
    if (c == '\\') {
      if (i + 2 >= v.size()) throw Error(Errc::kInvalidConfig, "line " + std::to_string(line) + ": bad escape");
      c = v[++i];
      if (c == 'n') c = '\n';
      else if (c == 't') c = '\t';
    }
    out.push_back(c);
  }
  return out;
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && quoted) {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(Errc::kInvalidConfig, key + ": not a number: '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw Error(Errc::kInvalidConfig, key + ": expected true or false");
}

providers::ProviderMode parse_mode(const std::string& key, const std::string& v) {
  if (v == "offline") return providers::ProviderMode::kOffline;
  if (v == "http") return providers::ProviderMode::kHttp;
  throw Error(Errc::kInvalidConfig, key + ": mode must be offline or http");
}

}  // namespace

std::map<std::string, std::string> parse_kv_config(std::string_view text) {
  std::map<std::string, std::string> out;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    const std::string_view line = utf8::trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(Errc::kInvalidConfig, "line " + std::to_string(n) + ": bad section");
      section = std::string(utf8::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::kInvalidConfig, "line " + std::to_string(n) + ": expected key = value");
    }
    const std::string key(utf8::trim(line.substr(0, eq)));
    if (key.empty()) throw Error(Errc::kInvalidConfig, "line " + std::to_string(n) + ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    out[full] = unquote(utf8::trim(line.substr(eq + 1)), n);
  }
  return out;
}

ServiceConfig parse_service_config(std::string_view text, const fs::path& base_dir) {
  ServiceConfig cfg;
  cfg.providers = providers::ProviderSettings{};
  auto path_of = [&](const std::string& v) {
    fs::path p(v);
    return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  };

  using Setter = std::function<void(const std::string&, const std::string&)>;
  std::map<std::string, Setter> setters = {
      {"bind_address", [&](auto&, auto& v) { cfg.bind_address = v; }},
      {"port", [&](auto& k, auto& v) { cfg.port = parse_number<int>(k, v); }},
      {"data_dir", [&](auto&, auto& v) { cfg.data_dir = path_of(v); }},
      {"store_dir", [&](auto&, auto& v) { cfg.store_dir = path_of(v); }},
      {"datasets_dir", [&](auto&, auto& v) { cfg.datasets_dir = path_of(v); }},
      {"rate_limit_per_minute",
       [&](auto& k, auto& v) { cfg.rate_limit_per_minute = parse_number<std::size_t>(k, v); }},
      {"debug_endpoints", [&](auto& k, auto& v) { cfg.debug_endpoints = parse_bool(k, v); }},
      {"eval_sync_limit", [&](auto& k, auto& v) { cfg.eval_sync_limit = parse_number<std::size_t>(k, v); }},
      {"dim", [&](auto& k, auto& v) { cfg.providers.dim = parse_number<std::size_t>(k, v); }},
      {"retrieval.lambda_text",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.lambda_text = parse_number<double>(k, v); }},
      {"retrieval.lambda_image",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.lambda_image = parse_number<double>(k, v); }},
      {"retrieval.lambda_video",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.lambda_video = parse_number<double>(k, v); }},
      {"retrieval.top_k_text",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.top_k_text = parse_number<std::size_t>(k, v); }},
      {"retrieval.top_k_image",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.top_k_image = parse_number<std::size_t>(k, v); }},
      {"retrieval.top_k_video",
       [&](auto& k, auto& v) { cfg.pipeline.retrieval.top_k_video = parse_number<std::size_t>(k, v); }},
      {"pipeline.history_max_turns",
       [&](auto& k, auto& v) { cfg.pipeline.history_max_turns = parse_number<std::size_t>(k, v); }},
      {"pipeline.prompt_file",
       [&](auto&, auto& v) {
         std::ifstream in(path_of(v));
         if (!in) throw Error(Errc::kInvalidConfig, "cannot read prompt file " + v);
         std::ostringstream ss;
         ss << in.rdbuf();
         cfg.pipeline.prompt = pipeline::PromptTemplate(ss.str());
       }},
      {"ingest.max_chunk_tokens",
       [&](auto& k, auto& v) { cfg.ingest.chunking.max_chunk_tokens = parse_number<std::size_t>(k, v); }},
      {"ingest.overlap_tokens",
       [&](auto& k, auto& v) { cfg.ingest.chunking.overlap_tokens = parse_number<std::size_t>(k, v); }},
      {"ingest.max_failure_rate",
       [&](auto& k, auto& v) { cfg.ingest.max_failure_rate = parse_number<double>(k, v); }},
      {"ingest.built_at", [&](auto& k, auto& v) { cfg.ingest.built_at = parse_number<std::int64_t>(k, v); }},
  };
  auto provider_keys = [&](const std::string& section, providers::ProviderConfig& pc) {
    setters[section + ".mode"] = [&pc](auto& k, auto& v) { pc.mode = parse_mode(k, v); };
    setters[section + ".endpoint"] = [&pc](auto&, auto& v) { pc.endpoint = v; };
    setters[section + ".token_env"] = [&pc](auto&, auto& v) { pc.auth_token_env = v; };
    setters[section + ".timeout_ms"] = [&pc](auto& k, auto& v) {
      pc.timeout = std::chrono::milliseconds(parse_number<long>(k, v));
    };
    setters[section + ".max_retries"] = [&pc](auto& k, auto& v) { pc.max_retries = parse_number<int>(k, v); };
    setters[section + ".variant"] = [&pc](auto&, auto& v) { pc.variant = v; };
  };
  provider_keys("embedder", cfg.providers.embedder);
  provider_keys("generator", cfg.providers.generator);
  provider_keys("translator", cfg.providers.translator);

  for (const auto& [key, value] : parse_kv_config(text)) {
    auto it = setters.find(key);
    if (it == setters.end()) throw Error(Errc::kInvalidConfig, "unknown config key '" + key + "'");
    it->second(key, value);
  }
  return cfg;
}

ServiceConfig load_service_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoFailure, "cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  ServiceConfig cfg = parse_service_config(ss.str(), path.parent_path());
  cfg.apply_env();
  cfg.validate();
  return cfg;
}

void ServiceConfig::apply_env() {
  for (auto* pc : {&providers.embedder, &providers.generator, &providers.translator}) {
    const providers::ProviderConfig env = providers::config_from_env(pc->kind);
    if (env.mode == providers::ProviderMode::kHttp) {
      pc->mode = providers::ProviderMode::kHttp;
      pc->endpoint = env.endpoint;
    }
    if (!pc->auth_token_env) pc->auth_token_env = env.auth_token_env;
  }
}

void ServiceConfig::validate() const {
  if (port < 0 || port > 65535) throw Error(Errc::kInvalidConfig, "port out of range");
  providers.embedder.validate();
  providers.generator.validate();
  providers.translator.validate();
  pipeline.validate();
  ingest.chunking.validate();
  if (ingest.max_failure_rate < 0.0 || ingest.max_failure_rate > 1.0) {
    throw Error(Errc::kInvalidConfig, "ingest.max_failure_rate must be in [0, 1]");
  }
}

std::optional<fs::path> resolve_config_path(const std::optional<fs::path>& cli_path) {
  if (const char* env = std::getenv("RAGWELD_CONFIG"); env != nullptr && *env != '\0') return fs::path(env);
  return cli_path;
}

}  // namespace ragweld::service
