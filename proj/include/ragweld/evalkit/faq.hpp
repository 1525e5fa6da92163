#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ragweld/core/language.hpp"

namespace ragweld::evalkit {

struct FaqPair {
  std::string id;
  std::string question;
  std::string reference_answer;
  LanguageTag language;
  std::string source;

  friend bool operator==(const FaqPair&, const FaqPair&) = default;
};

void to_json(nlohmann::json& j, const FaqPair& pair);
void from_json(const nlohmann::json& j, FaqPair& pair);

/// JSON Lines of FaqPair. Missing ids become "faq-<line>". Throws
/// kIoFailure or kInvalidArgument (with the line number) on bad input.
std::vector<FaqPair> load_faq_jsonl(const std::filesystem::path& path);

/// Two-column CSV (question, answer), RFC 4180 quoting. A header row whose
/// first cell is "question" is skipped. Every pair gets `language`.
std::vector<FaqPair> load_faq_csv(const std::filesystem::path& path, const LanguageTag& language);

/// Dispatches on extension: .csv needs `csv_language`, anything else is
/// read as JSON Lines.
std::vector<FaqPair> load_faq(const std::filesystem::path& path, const LanguageTag& csv_language);

}  // namespace ragweld::evalkit
