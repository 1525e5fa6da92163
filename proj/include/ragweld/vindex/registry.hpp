#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ragweld/vindex/store.hpp"

namespace ragweld::vindex {

/// At most one sealed store per (language, modality), languages limited to
/// EN, FR and AR.
class StoreRegistry {
 public:
  /// Throws kNotSealed, kInvalidArgument (unsupported language or a second
  /// store for the same key) or kDimensionMismatch (dimension differs from
  /// stores already registered).
  void add(std::shared_ptr<const VectorStore> store);

  /// nullptr when there is no store for the key.
  std::shared_ptr<const VectorStore> find(const StoreKey& key) const;
  /// Throws kNoStore when there is no store for the key.
  const VectorStore& at(const StoreKey& key) const;

  bool contains(const StoreKey& key) const { return stores_.contains(key); }
  std::size_t size() const noexcept { return stores_.size(); }
  std::vector<StoreKey> keys() const;
  /// 0 until a store has been added.
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::map<StoreKey, std::shared_ptr<const VectorStore>> stores_;
  std::size_t dim_ = 0;
};

}  // namespace ragweld::vindex
