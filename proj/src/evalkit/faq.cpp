#include "ragweld/evalkit/faq.hpp"

#include <fstream>
#include <sstream>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::evalkit {

using nlohmann::json;

void to_json(json& j, const FaqPair& p) {
  j = {{"id", p.id},
       {"question", p.question},
       {"reference_answer", p.reference_answer},
       {"language", p.language},
       {"source", p.source}};
}

void from_json(const json& j, FaqPair& p) {
  p.id = j.value("id", std::string{});
  p.question = j.at("question").get<std::string>();
  p.reference_answer = j.at("reference_answer").get<std::string>();
  p.language = j.at("language").get<LanguageTag>();
  p.source = j.value("source", std::string{});
}

namespace {

void check_pair(const FaqPair& p, std::size_t line) {
  if (utf8::is_blank(p.question) || utf8::is_blank(p.reference_answer)) {
    throw Error(Errc::kInvalidArgument,
                "FAQ line " + std::to_string(line + 1) + ": question and answer must be non-empty");
  }
}

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field.push_back(c);
      any = true;
    }
  }
  if (quoted) throw Error(Errc::kInvalidArgument, "CSV ends inside a quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<FaqPair> load_faq_jsonl(const std::filesystem::path& path) {
  std::istringstream in(read_all(path));
  std::vector<FaqPair> pairs;
  std::string line;
  for (std::size_t n = 0; std::getline(in, line); ++n) {
    if (utf8::is_blank(line)) continue;
    FaqPair p;
    try {
      p = json::parse(line).get<FaqPair>();
    } catch (const json::exception& e) {
      throw Error(Errc::kInvalidArgument,
                  "FAQ line " + std::to_string(n + 1) + ": " + std::string(e.what()));
    }
    if (p.id.empty()) p.id = "faq-" + std::to_string(n + 1);
    if (p.source.empty()) p.source = path.filename().string();
    check_pair(p, n);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<FaqPair> load_faq_csv(const std::filesystem::path& path, const LanguageTag& language) {
  const auto rows = parse_csv(read_all(path));
  std::vector<FaqPair> pairs;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const auto& row = rows[n];
    if (n == 0 && !row.empty() && utf8::trim(row[0]) == "question") continue;
    if (row.size() != 2) {
      throw Error(Errc::kInvalidArgument, "CSV row " + std::to_string(n + 1) + " has " +
                                              std::to_string(row.size()) + " columns, expected 2");
    }
    FaqPair p;
    p.id = "faq-" + std::to_string(n + 1);
    p.question = std::string(utf8::trim(row[0]));
    p.reference_answer = std::string(utf8::trim(row[1]));
    p.language = language;
    p.source = path.filename().string();
    check_pair(p, n);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<FaqPair> load_faq(const std::filesystem::path& path, const LanguageTag& csv_language) {
  if (path.extension() == ".csv") return load_faq_csv(path, csv_language);
  return load_faq_jsonl(path);
}

}  // namespace ragweld::evalkit
