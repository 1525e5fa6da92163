#pragma once

#include "ragweld/providers/providers.hpp"

namespace ragweld::providers {

struct ProviderSettings {
  ProviderConfig embedder{ProviderKind::kEmbedder};
  ProviderConfig generator{ProviderKind::kGenerator};
  ProviderConfig translator{ProviderKind::kTranslator};
  ProviderConfig detector{ProviderKind::kDetector};
  std::size_t dim = 256;

  /// Offline defaults with the RAGWELD_<KIND>_* environment applied.
  static ProviderSettings from_env();
};

ProviderSet make_providers(const ProviderSettings& settings);

}  // namespace ragweld::providers
