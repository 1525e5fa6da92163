#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ragweld/ingest/builder.hpp"
#include "ragweld/pipeline/pipeline.hpp"
#include "ragweld/providers/factory.hpp"

namespace ragweld::service {

/// Flat key/value config: `key = value` lines, `[section]` headers that
/// prefix following keys with "section.", `#` comments. Values may be
/// double-quoted strings, numbers or true/false.
std::map<std::string, std::string> parse_kv_config(std::string_view text);

struct ServiceConfig {
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "ragweld-data";
  std::filesystem::path store_dir = "stores";
  std::filesystem::path datasets_dir;  // optional: *.jsonl FAQ sets to register
  std::size_t rate_limit_per_minute = 30;  // 0 disables
  bool debug_endpoints = false;
  std::size_t eval_sync_limit = 50;

  providers::ProviderSettings providers;
  pipeline::PipelineConfig pipeline;
  ingest::BuildConfig ingest;

  /// Applies RAGWELD_<KIND>_ENDPOINT / _TOKEN on top of the provider settings.
  void apply_env();
  void validate() const;
};

/// Parses config text. Relative paths resolve against `base_dir`. Unknown
/// keys and malformed values throw kInvalidConfig.
ServiceConfig parse_service_config(std::string_view text, const std::filesystem::path& base_dir = {});
ServiceConfig load_service_config(const std::filesystem::path& path);

/// RAGWELD_CONFIG when set, else `cli_path`.
std::optional<std::filesystem::path> resolve_config_path(
    const std::optional<std::filesystem::path>& cli_path);

}  // namespace ragweld::service
