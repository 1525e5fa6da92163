#include "ragweld/pipeline/prompt.hpp"

#include <algorithm>
#include <array>

#include "ragweld/core/error.hpp"

namespace ragweld::pipeline {

const std::string_view kDefaultPromptText =
    "INSTRUCTIONS:\n"
    "You are an asthma medical support provider called AsthmaBot. You are designed to be as "
    "helpful as possible while providing only factual information.\n"
    "You should be friendly, but not overly chatty. Context information is below.\n"
    "Given the context information and chat history and no prior knowledge, answer the query. "
    "Give a detailed answer.\n"
    "Your answer should encompass the whole context.\n"
    "\n"
    "CONTEXT:\n"
    "{context}\n"
    "\n"
    "CHAT HISTORY:\n"
    "{history}\n"
    "\n"
    "QUERY:\n"
    "{question}\n"
    "\n"
    "ANSWER:";

namespace {

constexpr std::array<std::string_view, 3> kSlots = {"{context}", "{history}", "{question}"};

std::size_t count_occurrences(std::string_view text, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string_view::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

PromptTemplate::PromptTemplate() : text_(kDefaultPromptText) {}

PromptTemplate::PromptTemplate(std::string text) : text_(std::move(text)) {
  for (std::string_view slot : kSlots) {
    const std::size_t n = count_occurrences(text_, slot);
    if (n != 1) {
      throw Error(Errc::kTemplateInvalid, "placeholder " + std::string(slot) + " occurs " +
                                              std::to_string(n) + " times, expected once");
    }
  }
}

std::string PromptTemplate::render(std::string_view context, std::string_view history,
                                   std::string_view question) const {
  struct Slot {
    std::size_t pos;
    std::size_t len;
    std::string_view value;
  };
  std::array<Slot, 3> slots = {{
      {text_.find(kSlots[0]), kSlots[0].size(), context},
      {text_.find(kSlots[1]), kSlots[1].size(), history},
      {text_.find(kSlots[2]), kSlots[2].size(), question},
  }};
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.pos < b.pos; });

  std::string out;
  out.reserve(text_.size() + context.size() + history.size() + question.size());
  std::size_t cursor = 0;
  for (const Slot& s : slots) {
    out.append(text_, cursor, s.pos - cursor);
    out.append(s.value);
    cursor = s.pos + s.len;
  }
  out.append(text_, cursor, std::string::npos);
  return out;
}

std::string_view context_text(const CorpusItem& item) {
  return item.modality == Modality::kText ? std::string_view(item.raw_text)
                                          : std::string_view(item.index_summary_en);
}

std::string format_context(std::span<const RetrievedItem> items) {
  std::string out;
  for (const auto& r : items) {
    if (!out.empty()) out += "\n\n";
    out += context_text(*r.item);
  }
  return out;
}

std::string format_history(std::span<const ChatTurn> history, std::size_t max_turns) {
  const std::size_t start = history.size() > max_turns ? history.size() - max_turns : 0;
  std::string out;
  for (std::size_t i = start; i < history.size(); ++i) {
    if (!out.empty()) out += "\n\n";
    out += "Q: ";
    out += history[i].question_en;
    out += "\nA: ";
    out += history[i].answer_en;
  }
  return out;
}

std::string build_prompt(const PromptTemplate& tmpl, std::span<const RetrievedItem> context_items,
                         std::span<const ChatTurn> history, std::string_view question_en,
                         std::size_t history_max_turns) {
  return tmpl.render(format_context(context_items), format_history(history, history_max_turns),
                     question_en);
}

}  // namespace ragweld::pipeline
