#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ragweld/core/language.hpp"

namespace ragweld {

/// One indexed unit: a text chunk, an image record or a video record.
///
/// `raw_text` holds the chunk text, the image's source-page text or the video
/// transcript. `source_uri` is the page the material came from; `media_uri`
/// is the image or playable video itself (required for IMAGE and VIDEO).
/// `embedding` is empty when the item has not been embedded yet.
struct CorpusItem {
  std::string id;
  Modality modality = Modality::kText;
  LanguageTag language;
  std::string source_uri;
  std::optional<std::string> media_uri;
  std::string title;
  std::string raw_text;
  std::string index_summary_en;
  std::vector<double> embedding;

  friend bool operator==(const CorpusItem&, const CorpusItem&) = default;
};

struct Validation {
  std::string violation;  // empty when valid

  bool ok() const noexcept { return violation.empty(); }
};

/// Checks the CorpusItem invariants against the store-wide dimension and
/// reports the first violated one by name ("summary-missing",
/// "dimension-mismatch", "non-finite-embedding", ...).
Validation validate_corpus_item(const CorpusItem& item, std::size_t expected_dim);

struct RetrievalConfig {
  /// Largest accepted threshold; sits just above the cosine range so that it
  /// excludes every item.
  static constexpr double kLambdaExcludeAll = 1.0 + 1e-6;

  double lambda_text = 0.30;
  double lambda_image = 0.30;
  double lambda_video = 0.30;
  std::size_t top_k_text = 4;
  std::size_t top_k_image = 3;
  std::size_t top_k_video = 2;

  double lambda(Modality m) const noexcept;
  std::size_t top_k(Modality m) const noexcept;
  /// Throws kInvalidConfig when a lambda is outside [-1, kLambdaExcludeAll]
  /// or a top_k is zero.
  void validate() const;

  friend bool operator==(const RetrievalConfig&, const RetrievalConfig&) = default;
};

struct RetrievedItem {
  std::shared_ptr<const CorpusItem> item;
  double score = 0.0;

  friend bool operator==(const RetrievedItem& a, const RetrievedItem& b);
};

/// Rank order for retrieval lists: score descending, then id ascending.
bool rank_before(const RetrievedItem& a, const RetrievedItem& b) noexcept;
void sort_by_rank(std::vector<RetrievedItem>& items);

struct ChatTurn {
  std::string question;
  std::string answer;
  std::string question_en;
  std::string answer_en;
  std::int64_t timestamp_us = 0;

  friend bool operator==(const ChatTurn&, const ChatTurn&) = default;
};

struct ChatSession {
  std::string session_id;
  std::vector<ChatTurn> turns;
  std::int64_t created_at_us = 0;
  std::int64_t updated_at_us = 0;

  /// Timestamp for the next turn: `now_us`, bumped past the last turn so the
  /// sequence stays strictly increasing.
  std::int64_t next_timestamp(std::int64_t now_us) const noexcept;

  friend bool operator==(const ChatSession&, const ChatSession&) = default;
};

std::int64_t now_us();

struct MultiModalAnswer {
  std::string text;
  std::string text_en;
  std::vector<RetrievedItem> documents;
  std::vector<RetrievedItem> images;
  std::vector<RetrievedItem> videos;
  LanguageTag detected_language;
  /// Set when the query language has no stores and English was used instead.
  bool language_fallback = false;

  const std::vector<RetrievedItem>& for_modality(Modality m) const noexcept;
  std::vector<RetrievedItem>& for_modality(Modality m) noexcept;

  friend bool operator==(const MultiModalAnswer&, const MultiModalAnswer&) = default;
};

}  // namespace ragweld
