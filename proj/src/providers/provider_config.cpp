#include <cstdlib>

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"
#include "ragweld/providers/providers.hpp"

namespace ragweld::providers {

std::string_view provider_kind_name(ProviderKind kind) noexcept {
  switch (kind) {
    case ProviderKind::kEmbedder: return "EMBEDDER";
    case ProviderKind::kGenerator: return "GENERATOR";
    case ProviderKind::kTranslator: return "TRANSLATOR";
    case ProviderKind::kDetector: return "DETECTOR";
  }
  return "EMBEDDER";
}

void ProviderConfig::validate() const {
  const std::string name(provider_kind_name(kind));
  if (mode == ProviderMode::kHttp) {
    if (kind == ProviderKind::kDetector) {
      throw Error(Errc::kInvalidConfig, "DETECTOR has no HTTP adapter");
    }
    if (!endpoint || endpoint->empty()) {
      throw Error(Errc::kInvalidConfig, name + " in HTTP mode requires an endpoint");
    }
    if (timeout.count() <= 0) throw Error(Errc::kInvalidConfig, name + " timeout must be > 0");
  }
  if (max_retries < 0 || max_retries > 10) {
    throw Error(Errc::kInvalidConfig, name + " max_retries must be in [0, 10]");
  }
  if (kind == ProviderKind::kGenerator && mode == ProviderMode::kOffline && variant != "extractive" &&
      variant != "echo") {
    throw Error(Errc::kInvalidConfig, "unknown offline generator variant '" + variant + "'");
  }
}

ProviderConfig config_from_env(ProviderKind kind) {
  ProviderConfig cfg;
  cfg.kind = kind;
  const std::string prefix = "RAGWELD_" + std::string(provider_kind_name(kind));
  cfg.auth_token_env = prefix + "_TOKEN";
  if (const char* endpoint = std::getenv((prefix + "_ENDPOINT").c_str());
      endpoint != nullptr && *endpoint != '\0' && kind != ProviderKind::kDetector) {
    cfg.mode = ProviderMode::kHttp;
    cfg.endpoint = endpoint;
  }
  return cfg;
}

void require_text(std::string_view text, std::string_view what) {
  if (utf8::is_blank(text)) throw Error(Errc::kEmptyInput, std::string(what) + " is empty");
}

}  // namespace ragweld::providers
