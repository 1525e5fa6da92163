#include "ragweld/core/types.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ragweld/core/error.hpp"

namespace ragweld {

Validation validate_corpus_item(const CorpusItem& item, std::size_t expected_dim) {
  if (item.id.empty()) return {"id-missing"};
  if (!item.embedding.empty() && item.index_summary_en.empty()) return {"summary-missing"};
  if (item.embedding.size() != expected_dim) return {"dimension-mismatch"};
  for (double x : item.embedding) {
    if (!std::isfinite(x)) return {"non-finite-embedding"};
  }
  for (double x : item.embedding) {
    if (x < -1.0 || x > 1.0) return {"embedding-out-of-range"};
  }
  if (item.modality != Modality::kText && (!item.media_uri || item.media_uri->empty())) {
    return {"media-uri-missing"};
  }
  return {};
}

double RetrievalConfig::lambda(Modality m) const noexcept {
  switch (m) {
    case Modality::kText: return lambda_text;
    case Modality::kImage: return lambda_image;
    case Modality::kVideo: return lambda_video;
  }
  return lambda_text;
}

std::size_t RetrievalConfig::top_k(Modality m) const noexcept {
  switch (m) {
    case Modality::kText: return top_k_text;
    case Modality::kImage: return top_k_image;
    case Modality::kVideo: return top_k_video;
  }
  return top_k_text;
}

void RetrievalConfig::validate() const {
  for (Modality m : kAllModalities) {
    const double l = lambda(m);
    if (!(l >= -1.0 && l <= kLambdaExcludeAll)) {
      throw Error(Errc::kInvalidConfig,
                  "lambda for " + std::string(modality_name(m)) + " outside [-1, 1]");
    }
    if (top_k(m) == 0) {
      throw Error(Errc::kInvalidConfig, "top_k for " + std::string(modality_name(m)) + " is 0");
    }
  }
}

bool operator==(const RetrievedItem& a, const RetrievedItem& b) {
  if (a.score != b.score) return false;
  if (a.item == b.item) return true;
  return a.item && b.item && *a.item == *b.item;
}

bool rank_before(const RetrievedItem& a, const RetrievedItem& b) noexcept {
  if (a.score != b.score) return a.score > b.score;
  return a.item->id < b.item->id;
}

void sort_by_rank(std::vector<RetrievedItem>& items) {
  std::sort(items.begin(), items.end(), rank_before);
}

std::int64_t ChatSession::next_timestamp(std::int64_t now) const noexcept {
  if (turns.empty()) return now;
  return std::max(now, turns.back().timestamp_us + 1);
}

std::int64_t now_us() {
  using namespace std::chrono;
  return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

const std::vector<RetrievedItem>& MultiModalAnswer::for_modality(Modality m) const noexcept {
  switch (m) {
    case Modality::kImage: return images;
    case Modality::kVideo: return videos;
    case Modality::kText: break;
  }
  return documents;
}

std::vector<RetrievedItem>& MultiModalAnswer::for_modality(Modality m) noexcept {
  switch (m) {
    case Modality::kImage: return images;
    case Modality::kVideo: return videos;
    case Modality::kText: break;
  }
  return documents;
}

}  // namespace ragweld
