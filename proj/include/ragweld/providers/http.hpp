#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ragweld/providers/providers.hpp"

namespace ragweld::providers {

/// POSTs UTF-8 JSON to `<endpoint><path>` with an optional bearer token.
/// Connection failures, 429 and 5xx responses are retried up to
/// `max_retries` times; other 4xx responses fail immediately. Every attempt
/// uses the configured timeout for connect, read and write.
class HttpJsonClient {
 public:
  explicit HttpJsonClient(ProviderConfig config);

  nlohmann::json post(const std::string& path, const nlohmann::json& body) const;

  const ProviderConfig& config() const noexcept { return config_; }

 private:
  ProviderConfig config_;
  std::string origin_;  // scheme://host:port
  std::string base_path_;
};

/// /embed {"text"} -> {"vector":[...]}
class HttpEmbedder final : public Embedder {
 public:
  HttpEmbedder(ProviderConfig config, std::size_t dim);

  std::size_t dim() const noexcept override { return dim_; }
  std::vector<double> embed(std::string_view text) const override;

 private:
  HttpJsonClient client_;
  std::size_t dim_;
};

/// /generate {"prompt"} -> {"text"}; a response carrying a "refusal" field
/// raises kSafetyRefusal.
class HttpGenerator final : public Generator {
 public:
  explicit HttpGenerator(ProviderConfig config);

  std::string generate(std::string_view prompt) const override;

 private:
  HttpJsonClient client_;
};

/// /translate {"text","source","target"} -> {"text"}
class HttpTranslator final : public Translator {
 public:
  explicit HttpTranslator(ProviderConfig config);

  std::string translate(std::string_view text, const LanguageTag& source,
                        const LanguageTag& target) const override;

 private:
  HttpJsonClient client_;
};

}  // namespace ragweld::providers
