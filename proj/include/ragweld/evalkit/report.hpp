#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ragweld/evalkit/runner.hpp"

namespace ragweld::evalkit {

/// Row label for a setting: "No RAG", "Text", "Image", "Video"; arms run
/// in NQ mode read "RAG NQ" and TEXT arms in TQ mode next to one read
/// "RAG TQ".
std::string setting_label(const EvalSetting& setting, bool query_mode_table = false);
std::string language_label(const LanguageTag& lang);  // "English", "French", "Arabic"

/// One reported row from a reference table, kept for side-by-side display.
struct ReferenceRow {
  std::string table;     // "modalities" or "query_mode"
  std::string language;  // "en", "fr", "ar"
  std::string setting;   // row label as produced by setting_label
  double rouge1 = 0, rouge2 = 0, rouge_l = 0, bleu = 0;
};

std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& path);

/// Aligned text table: language, setting, then ROUGE-1/2/L f1 and BLEU, one
/// row per report, grouped by language in input order. When `reference`
/// rows exist for a (language, setting), a "reported" row follows.
std::string format_table(std::span<const EvalReport> reports,
                         std::span<const ReferenceRow> reference = {});

}  // namespace ragweld::evalkit
