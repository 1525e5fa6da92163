#include "ragweld/vindex/registry.hpp"

#include "ragweld/core/error.hpp"

namespace ragweld::vindex {

void StoreRegistry::add(std::shared_ptr<const VectorStore> store) {
  if (!store) throw Error(Errc::kInvalidArgument, "null store");
  const StoreKey key = store->key();
  const std::string label = store_key_label(key);
  if (!store->sealed()) throw Error(Errc::kNotSealed, "store " + label + " is not sealed");
  if (key.language == Language::kOther) {
    throw Error(Errc::kInvalidArgument, "stores are limited to en, fr and ar");
  }
  if (stores_.contains(key)) throw Error(Errc::kInvalidArgument, "duplicate store " + label);
  if (dim_ != 0 && store->dim() != dim_) {
    throw Error(Errc::kDimensionMismatch, "store " + label + " has dimension " +
                                              std::to_string(store->dim()) + ", registry uses " +
                                              std::to_string(dim_));
  }
  dim_ = store->dim();
  stores_.emplace(key, std::move(store));
}

std::shared_ptr<const VectorStore> StoreRegistry::find(const StoreKey& key) const {
  auto it = stores_.find(key);
  return it == stores_.end() ? nullptr : it->second;
}

const VectorStore& StoreRegistry::at(const StoreKey& key) const {
  auto it = stores_.find(key);
  if (it == stores_.end()) throw Error(Errc::kNoStore, "no store for " + store_key_label(key));
  return *it->second;
}

std::vector<StoreKey> StoreRegistry::keys() const {
  std::vector<StoreKey> out;
  out.reserve(stores_.size());
  for (const auto& [key, _] : stores_) out.push_back(key);
  return out;
}

}  // namespace ragweld::vindex
