#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "ragweld/ingest/chunker.hpp"
#include "ragweld/ingest/manifest.hpp"
#include "ragweld/ingest/summarizer.hpp"
#include "ragweld/providers/providers.hpp"
#include "ragweld/vindex/registry.hpp"

namespace ragweld::ingest {

struct BuildConfig {
  ChunkingPolicy chunking;
  /// The build fails when more than this fraction of entries fail.
  double max_failure_rate = 0.20;
  /// Written into every store header; fixed values make rebuilds byte-identical.
  std::int64_t built_at = 0;
};

struct IngestProviders {
  std::shared_ptr<const Summarizer> summarizer;
  std::shared_ptr<const providers::Translator> translator;
  std::shared_ptr<const providers::Embedder> embedder;
};

struct BuildReport {
  std::size_t entries = 0;
  std::size_t failed = 0;
  double failure_rate = 0.0;
  double max_failure_rate = 0.0;
  bool passed = true;
  std::map<std::string, std::size_t> store_counts;  // "en/text" -> items
  std::vector<EntryFailure> failures;
};

nlohmann::json to_json(const BuildReport& report);

struct BuildResult {
  vindex::StoreRegistry registry;
  BuildReport report;
};

/// Turns one entry into its corpus items: TEXT bodies are chunked, IMAGE and
/// VIDEO bodies become one item. Each item's English index summary is the
/// summary of its raw text, translated unless the entry is English, and its
/// embedding is that summary's embedding. Throws on any failure.
std::vector<CorpusItem> build_entry_items(const ManifestEntry& entry, const BuildConfig& config,
                                          const IngestProviders& providers);

/// Builds and seals one store per (language, modality) that received items.
/// Entries are processed in parallel; a failing entry contributes no items
/// and is recorded in the report. Item ids are "<lang>-<modality>-<line>"
/// with a "-<chunk>" suffix for text.
BuildResult build_corpus(std::span<const ManifestEntry> entries, const BuildConfig& config,
                         const IngestProviders& providers);
BuildResult build_corpus(const Manifest& manifest, const BuildConfig& config,
                         const IngestProviders& providers);

}  // namespace ragweld::ingest
