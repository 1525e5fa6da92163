#include "ragweld/providers/factory.hpp"

#include "ragweld/core/error.hpp"
#include "ragweld/providers/http.hpp"
#include "ragweld/providers/offline.hpp"

namespace ragweld::providers {

ProviderSettings ProviderSettings::from_env() {
  ProviderSettings s;
  s.embedder = config_from_env(ProviderKind::kEmbedder);
  s.generator = config_from_env(ProviderKind::kGenerator);
  s.translator = config_from_env(ProviderKind::kTranslator);
  s.detector = config_from_env(ProviderKind::kDetector);
  return s;
}

ProviderSet make_offline_providers(std::size_t dim, GeneratorVariant variant) {
  ProviderSet set;
  set.embedder = std::make_shared<HashingEmbedder>(dim);
  if (variant == GeneratorVariant::kEcho) {
    set.generator = std::make_shared<EchoGenerator>();
  } else {
    set.generator = std::make_shared<ExtractiveGenerator>();
  }
  set.translator = std::make_shared<TaggedTranslator>();
  set.detector = std::make_shared<StopwordDetector>();
  return set;
}

ProviderSet make_providers(const ProviderSettings& s) {
  s.embedder.validate();
  s.generator.validate();
  s.translator.validate();
  s.detector.validate();
  if (s.dim == 0) throw Error(Errc::kInvalidConfig, "embedding dimension must be positive");

  ProviderSet set;
  if (s.embedder.mode == ProviderMode::kHttp) {
    set.embedder = std::make_shared<HttpEmbedder>(s.embedder, s.dim);
  } else {
    set.embedder = std::make_shared<HashingEmbedder>(s.dim);
  }
  if (s.generator.mode == ProviderMode::kHttp) {
    set.generator = std::make_shared<HttpGenerator>(s.generator);
  } else if (s.generator.variant == "echo") {
    set.generator = std::make_shared<EchoGenerator>();
  } else {
    set.generator = std::make_shared<ExtractiveGenerator>();
  }
  if (s.translator.mode == ProviderMode::kHttp) {
    set.translator = std::make_shared<HttpTranslator>(s.translator);
  } else {
    set.translator = std::make_shared<TaggedTranslator>();
  }
  set.detector = std::make_shared<StopwordDetector>();
  return set;
}

}  // namespace ragweld::providers
