#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ragweld/core/types.hpp"

namespace ragweld::vindex {

/// Cosine similarity in double precision, clamped to [-1, 1].
/// Throws kDimensionMismatch or kZeroVector.
double cosine(std::span<const double> a, std::span<const double> b);

/// Exhaustive dense store for one (language, modality) pair. Append-only
/// while building; `seal()` freezes it, after which it is safe for any
/// number of concurrent readers.
class VectorStore {
 public:
  VectorStore(StoreKey key, std::size_t dim, std::int64_t built_at = 0);

  /// Validates the item against the store key and dimension. Throws
  /// kAlreadySealed, kDimensionMismatch, kInvalidItem, kZeroVector or
  /// kDuplicateId.
  void append(CorpusItem item);
  /// Throws kAlreadySealed on a second call.
  void seal();

  bool sealed() const noexcept { return sealed_; }
  const StoreKey& key() const noexcept { return key_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::int64_t built_at() const noexcept { return built_at_; }
  const std::vector<std::shared_ptr<const CorpusItem>>& items() const noexcept { return items_; }

  /// Up to `k` items with score >= lambda, score descending then id
  /// ascending. Throws kDimensionMismatch or kZeroVector for a bad query.
  std::vector<RetrievedItem> search(std::span<const double> query, std::size_t k,
                                    double lambda) const;

  /// Raw cosine score of every item, in insertion order.
  std::vector<double> score_all(std::span<const double> query) const;

 private:
  StoreKey key_;
  std::size_t dim_;
  std::int64_t built_at_;
  bool sealed_ = false;
  std::vector<std::shared_ptr<const CorpusItem>> items_;
  std::set<std::string, std::less<>> ids_;
  std::vector<double> rows_;
  std::vector<double> norms_;
};

}  // namespace ragweld::vindex
