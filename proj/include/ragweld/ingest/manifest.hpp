#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ragweld/core/language.hpp"

namespace ragweld::ingest {

struct ManifestEntry {
  Modality modality = Modality::kText;
  LanguageTag language;
  std::string source_uri;
  std::optional<std::string> media_uri;
  std::string title;
  std::filesystem::path body_path;
  /// One-based manifest line; item ids derive from it.
  std::size_t line = 0;
};

struct EntryFailure {
  std::size_t line = 0;
  std::string source_uri;
  std::string reason;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  /// Lines that did not parse or name an unsupported language or modality.
  std::vector<EntryFailure> rejected;

  std::size_t total() const noexcept { return entries.size() + rejected.size(); }
};

/// Reads a JSON Lines manifest. Relative body paths resolve against the
/// manifest's directory. Blank lines are skipped but still count toward line
/// numbering. Throws kIoFailure when the file cannot be read.
Manifest load_manifest(const std::filesystem::path& path);

/// Parses one manifest line; throws kInvalidArgument on a malformed entry.
ManifestEntry parse_manifest_entry(std::string_view line, const std::filesystem::path& base_dir);

/// Checks the entry invariants except body existence: media_uri for IMAGE
/// and VIDEO, a supported language. Returns the violation or "".
std::string check_manifest_entry(const ManifestEntry& entry);

}  // namespace ragweld::ingest
