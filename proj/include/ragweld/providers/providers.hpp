#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ragweld/core/language.hpp"

namespace ragweld::providers {

enum class ProviderKind { kEmbedder, kGenerator, kTranslator, kDetector };
enum class ProviderMode { kOffline, kHttp };

std::string_view provider_kind_name(ProviderKind kind) noexcept;  // "EMBEDDER", ...

struct ProviderConfig {
  ProviderConfig() = default;
  explicit ProviderConfig(ProviderKind k) : kind(k) {}

  ProviderKind kind = ProviderKind::kEmbedder;
  ProviderMode mode = ProviderMode::kOffline;
  std::optional<std::string> endpoint;
  std::optional<std::string> auth_token_env;
  std::chrono::milliseconds timeout{10000};
  int max_retries = 2;
  /// Offline generator flavour: "extractive" or "echo".
  std::string variant = "extractive";

  /// HTTP mode requires an endpoint; the detector has no HTTP form.
  void validate() const;
};

/// Default configuration for `kind`, with RAGWELD_<KIND>_ENDPOINT and
/// RAGWELD_<KIND>_TOKEN applied. A set endpoint variable switches to HTTP.
ProviderConfig config_from_env(ProviderKind kind);

// All provider implementations are safe to call concurrently.

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const noexcept = 0;
  /// Throws kEmptyInput on blank text, kProviderUnavailable on transport failure.
  virtual std::vector<double> embed(std::string_view text) const = 0;
};

class Generator {
 public:
  virtual ~Generator() = default;
  /// Throws kEmptyInput, kProviderUnavailable or kSafetyRefusal.
  virtual std::string generate(std::string_view prompt) const = 0;
};

class Translator {
 public:
  virtual ~Translator() = default;
  /// Identity when source == target. Throws kEmptyInput, kUnsupportedPair,
  /// kProviderUnavailable.
  virtual std::string translate(std::string_view text, const LanguageTag& source,
                                const LanguageTag& target) const = 0;
};

class LanguageDetector {
 public:
  virtual ~LanguageDetector() = default;
  virtual LanguageTag detect(std::string_view text) const = 0;
};

struct ProviderSet {
  std::shared_ptr<const Embedder> embedder;
  std::shared_ptr<const Generator> generator;
  std::shared_ptr<const Translator> translator;
  std::shared_ptr<const LanguageDetector> detector;
};

/// Throws kEmptyInput when `text` is empty or whitespace-only.
void require_text(std::string_view text, std::string_view what);

}  // namespace ragweld::providers
