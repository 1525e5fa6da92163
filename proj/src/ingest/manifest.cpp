#include "ragweld/ingest/manifest.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::ingest {

using nlohmann::json;

ManifestEntry parse_manifest_entry(std::string_view line, const std::filesystem::path& base_dir) {
  ManifestEntry e;
  try {
    const json j = json::parse(line);
    e.modality = parse_modality(j.at("modality").get<std::string>());
    e.language = LanguageTag::parse(j.at("language").get<std::string>());
    e.source_uri = j.at("source_uri").get<std::string>();
    if (auto it = j.find("media_uri"); it != j.end() && !it->is_null()) {
      e.media_uri = it->get<std::string>();
    }
    e.title = j.value("title", std::string{});
    std::filesystem::path body = j.at("body_path").get<std::string>();
    e.body_path = body.is_absolute() ? body : base_dir / body;
  } catch (const json::exception& ex) {
    throw Error(Errc::kInvalidArgument, std::string("manifest entry: ") + ex.what());
  }
  return e;
}

std::string check_manifest_entry(const ManifestEntry& entry) {
  if (!entry.language.supported()) return "unsupported language '" + entry.language.iso() + "'";
  if (entry.source_uri.empty()) return "source_uri missing";
  if (entry.modality != Modality::kText && (!entry.media_uri || entry.media_uri->empty())) {
    return "media_uri required for " + std::string(modality_name(entry.modality));
  }
  return {};
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIoFailure, "cannot open manifest " + path.string());
  const auto base = path.parent_path();
  Manifest m;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (utf8::is_blank(line)) continue;
    try {
      ManifestEntry e = parse_manifest_entry(line, base);
      e.line = n;
      if (std::string why = check_manifest_entry(e); !why.empty()) {
        m.rejected.push_back({n, e.source_uri, std::move(why)});
        continue;
      }
      m.entries.push_back(std::move(e));
    } catch (const Error& err) {
      m.rejected.push_back({n, {}, err.what()});
    }
  }
  return m;
}

}  // namespace ragweld::ingest
