#pragma once

#include <span>
#include <string>
#include <string_view>

#include "ragweld/core/types.hpp"

namespace ragweld::pipeline {

/// Prompt text with exactly one each of {context}, {history} and {question}.
class PromptTemplate {
 public:
  /// The default answer prompt.
  PromptTemplate();
  /// Throws kTemplateInvalid unless every placeholder occurs exactly once.
  explicit PromptTemplate(std::string text);

  const std::string& text() const noexcept { return text_; }

  /// Substitutes all three slots in one pass; substituted text is never
  /// rescanned for placeholders.
  std::string render(std::string_view context, std::string_view history,
                     std::string_view question) const;

  friend bool operator==(const PromptTemplate&, const PromptTemplate&) = default;

 private:
  std::string text_;
};

extern const std::string_view kDefaultPromptText;

/// Text an item contributes to {context}: the passage itself for TEXT items,
/// the English index summary for IMAGE and VIDEO items.
std::string_view context_text(const CorpusItem& item);

/// Items joined by blank lines in rank order.
std::string format_context(std::span<const RetrievedItem> items);

/// The last `max_turns` turns, oldest first, as "Q: ...\nA: ..." blocks
/// separated by blank lines. Uses the English side of each turn.
std::string format_history(std::span<const ChatTurn> history, std::size_t max_turns);

std::string build_prompt(const PromptTemplate& tmpl, std::span<const RetrievedItem> context_items,
                         std::span<const ChatTurn> history, std::string_view question_en,
                         std::size_t history_max_turns);

}  // namespace ragweld::pipeline
