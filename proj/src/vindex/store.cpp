#include "ragweld/vindex/store.hpp"

#include <algorithm>
#include <numeric>

#include "ragweld/core/error.hpp"
#include "ragweld/vindex/kernels.hpp"

namespace ragweld::vindex {

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kDimensionMismatch, "cosine of vectors with lengths " +
                                              std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()));
  }
  const double na = kernels::l2_norm(a);
  const double nb = kernels::l2_norm(b);
  if (!(na > 0.0) || !(nb > 0.0)) throw Error(Errc::kZeroVector, "cosine of a zero vector");
  return kernels::clamp_unit(kernels::dot(a, b) / (na * nb));
}

VectorStore::VectorStore(StoreKey key, std::size_t dim, std::int64_t built_at)
    : key_(key), dim_(dim), built_at_(built_at) {
  if (dim == 0) throw Error(Errc::kInvalidArgument, "store dimension must be positive");
}

void VectorStore::append(CorpusItem item) {
  const std::string label = store_key_label(key_);
  if (sealed_) throw Error(Errc::kAlreadySealed, "store " + label + " is sealed");
  if (item.embedding.size() != dim_) {
    throw Error(Errc::kDimensionMismatch, "item '" + item.id + "' has " +
                                              std::to_string(item.embedding.size()) +
                                              " components, store " + label + " expects " +
                                              std::to_string(dim_));
  }
  if (const Validation v = validate_corpus_item(item, dim_); !v.ok()) {
    throw Error(Errc::kInvalidItem, "item '" + item.id + "': " + v.violation);
  }
  if (item.language.code() != key_.language || item.modality != key_.modality) {
    throw Error(Errc::kInvalidItem, "item '" + item.id + "' does not belong in store " + label);
  }
  const double norm = kernels::l2_norm(item.embedding);
  if (!(norm > 0.0)) throw Error(Errc::kZeroVector, "item '" + item.id + "' has a zero embedding");
  if (ids_.contains(item.id)) {
    throw Error(Errc::kDuplicateId, "item id '" + item.id + "' already in store " + label);
  }
  ids_.insert(item.id);
  rows_.insert(rows_.end(), item.embedding.begin(), item.embedding.end());
  norms_.push_back(norm);
  items_.push_back(std::make_shared<const CorpusItem>(std::move(item)));
}

void VectorStore::seal() {
  if (sealed_) throw Error(Errc::kAlreadySealed, "store " + store_key_label(key_) + " already sealed");
  sealed_ = true;
}

std::vector<double> VectorStore::score_all(std::span<const double> query) const {
  if (query.size() != dim_) {
    throw Error(Errc::kDimensionMismatch, "query has " + std::to_string(query.size()) +
                                              " components, store expects " + std::to_string(dim_));
  }
  const double qn = kernels::l2_norm(query);
  if (!(qn > 0.0)) throw Error(Errc::kZeroVector, "query vector is zero");
  std::vector<double> scores(items_.size());
  kernels::cosine_scores(rows_, norms_, dim_, query, qn, scores);
  return scores;
}

std::vector<RetrievedItem> VectorStore::search(std::span<const double> query, std::size_t k,
                                               double lambda) const {
  const std::vector<double> scores = score_all(query);
  if (k == 0) return {};

  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= lambda) hits.push_back(i);
  }
  auto before = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return items_[a]->id < items_[b]->id;
  };
  const std::size_t take = std::min(k, hits.size());
  std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(take), hits.end(),
                    before);

  std::vector<RetrievedItem> out;
  out.reserve(take);
  for (std::size_t r = 0; r < take; ++r) out.push_back({items_[hits[r]], scores[hits[r]]});
  return out;
}

}  // namespace ragweld::vindex
