#include "ragweld/evalkit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

#include "ragweld/core/error.hpp"

namespace ragweld::evalkit {

std::string setting_label(const EvalSetting& s, bool query_mode_table) {
  if (s.arm == EvalArm::kNoRag) return "No RAG";
  if (s.query_mode == QueryMode::kNq) return "RAG NQ";
  if (query_mode_table && s.arm == EvalArm::kText) return "RAG TQ";
  switch (s.arm) {
    case EvalArm::kText: return "Text";
    case EvalArm::kImage: return "Image";
    case EvalArm::kVideo: return "Video";
    case EvalArm::kNoRag: break;
  }
  return "No RAG";
}

std::string language_label(const LanguageTag& lang) {
  switch (lang.code()) {
    case Language::kEn: return "English";
    case Language::kFr: return "French";
    case Language::kAr: return "Arabic";
    case Language::kOther: break;
  }
  return lang.iso();
}

std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoFailure, "cannot open " + path.string());
  std::vector<ReferenceRow> rows;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [table, entries] : j.items()) {
      for (const auto& e : entries) {
        rows.push_back({table, e.at("language").get<std::string>(), e.at("setting").get<std::string>(),
                        e.at("rouge1").get<double>(), e.at("rouge2").get<double>(),
                        e.at("rougeL").get<double>(), e.at("bleu").get<double>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kInvalidArgument, std::string("reference table: ") + e.what());
  }
  return rows;
}

std::string format_table(std::span<const EvalReport> reports, std::span<const ReferenceRow> reference) {
  bool has_nq = false;
  for (const auto& r : reports) has_nq = has_nq || r.setting.query_mode == QueryMode::kNq;

  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-10s %-10s| %8s %8s %8s %8s\n", "Setting", "", "ROUGE-1",
                "ROUGE-2", "ROUGE-L", "BLEU");
  out += line;
  out += std::string(58, '-') + "\n";

  std::vector<std::string> languages;
  for (const auto& r : reports) {
    const std::string iso = r.setting.language.iso();
    if (std::find(languages.begin(), languages.end(), iso) == languages.end()) languages.push_back(iso);
  }
  for (const auto& iso : languages) {
    bool first = true;
    for (const auto& r : reports) {
      if (r.setting.language.iso() != iso) continue;
      const std::string label = setting_label(r.setting, has_nq);
      std::snprintf(line, sizeof line, "%-10s %-10s| %8.4f %8.4f %8.4f %8.4f\n",
                    first ? language_label(r.setting.language).c_str() : "", label.c_str(),
                    r.rouge1.f1, r.rouge2.f1, r.rouge_l.f1, r.bleu);
      out += line;
      first = false;
      for (const auto& ref : reference) {
        if (ref.language != iso || ref.setting != label) continue;
        if ((ref.table == "query_mode") != has_nq) continue;
        std::snprintf(line, sizeof line, "%-10s %-10s| %8.4f %8.4f %8.4f %8.4f\n", "", "  reported",
                      ref.rouge1, ref.rouge2, ref.rouge_l, ref.bleu);
        out += line;
      }
    }
    out += std::string(58, '-') + "\n";
  }
  return out;
}

}  // namespace ragweld::evalkit
