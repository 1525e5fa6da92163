#include "ragweld/ingest/builder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"
#include "ragweld/vindex/kernels.hpp"

namespace ragweld::ingest {

using nlohmann::json;

namespace {

std::string read_body(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(Errc::kIoFailure, "body file missing: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoFailure, "cannot open body file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string body = ss.str();
  if (utf8::is_blank(body)) throw Error(Errc::kEmptyBody, "body file is empty: " + path.string());
  return body;
}

std::string item_id(const ManifestEntry& e, std::optional<std::size_t> chunk) {
  char buf[64];
  if (chunk) {
    std::snprintf(buf, sizeof buf, "-%04zu-%03zu", e.line, *chunk);
  } else {
    std::snprintf(buf, sizeof buf, "-%04zu", e.line);
  }
  return e.language.iso() + "-" + std::string(modality_name(e.modality)) + buf;
}

// Embeddings from external providers are not necessarily normalized; scale
// them into the unit ball. Cosine scores are unaffected.
void bound_components(std::vector<double>& v) {
  bool out_of_range = false;
  for (double x : v) out_of_range = out_of_range || x < -1.0 || x > 1.0;
  if (!out_of_range) return;
  const double n = vindex::kernels::l2_norm(v);
  for (double& x : v) x /= n;
}

}  // namespace

json to_json(const BuildReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"line", f.line}, {"source_uri", f.source_uri}, {"reason", f.reason}});
  }
  return {
      {"entries", r.entries},
      {"failed", r.failed},
      {"failure_rate", r.failure_rate},
      {"max_failure_rate", r.max_failure_rate},
      {"passed", r.passed},
      {"stores", r.store_counts},
      {"failures", failures},
  };
}

std::vector<CorpusItem> build_entry_items(const ManifestEntry& entry, const BuildConfig& config,
                                          const IngestProviders& providers) {
  if (std::string problem = check_manifest_entry(entry); !problem.empty()) {
    throw Error(Errc::kInvalidArgument, problem);
  }
  const std::string body = read_body(entry.body_path);

  std::vector<std::string> texts;
  if (entry.modality == Modality::kText) {
    texts = chunk_text(body, config.chunking);
  } else {
    texts.emplace_back(utf8::trim(body));
  }

  const std::size_t dim = providers.embedder->dim();
  std::vector<CorpusItem> items;
  items.reserve(texts.size());
  for (std::size_t c = 0; c < texts.size(); ++c) {
    CorpusItem item;
    item.id = item_id(entry, entry.modality == Modality::kText ? std::optional(c) : std::nullopt);
    item.modality = entry.modality;
    item.language = entry.language;
    item.source_uri = entry.source_uri;
    item.media_uri = entry.media_uri;
    item.title = entry.title;
    item.raw_text = std::move(texts[c]);

    std::string summary = providers.summarizer->summarize(item.raw_text, item.modality);
    if (entry.language.code() != Language::kEn) {
      summary = providers.translator->translate(summary, entry.language, Language::kEn);
    }
    item.index_summary_en = std::move(summary);
    item.embedding = providers.embedder->embed(item.index_summary_en);
    bound_components(item.embedding);

    if (const Validation v = validate_corpus_item(item, dim); !v.ok()) {
      throw Error(Errc::kInvalidItem, "item " + item.id + ": " + v.violation);
    }
    if (!(vindex::kernels::l2_norm(item.embedding) > 0.0)) {
      throw Error(Errc::kZeroVector, "item " + item.id + " has a zero embedding");
    }
    items.push_back(std::move(item));
  }
  return items;
}

BuildResult build_corpus(std::span<const ManifestEntry> entries, const BuildConfig& config,
                         const IngestProviders& providers) {
  Manifest m;
  m.entries.assign(entries.begin(), entries.end());
  return build_corpus(m, config, providers);
}

BuildResult build_corpus(const Manifest& manifest, const BuildConfig& config,
                         const IngestProviders& providers) {
  config.chunking.validate();
  if (!providers.summarizer || !providers.translator || !providers.embedder) {
    throw Error(Errc::kInvalidArgument, "ingest needs a summarizer, translator and embedder");
  }

  const auto& entries = manifest.entries;
  const auto n = static_cast<std::int64_t>(entries.size());
  std::vector<std::vector<CorpusItem>> produced(entries.size());
  std::vector<std::string> errors(entries.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      produced[i] = build_entry_items(entries[i], config, providers);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  BuildResult result;
  BuildReport& report = result.report;
  report.failures = manifest.rejected;
  std::map<StoreKey, std::shared_ptr<vindex::VectorStore>> stores;
  const std::size_t dim = providers.embedder->dim();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!errors[i].empty()) {
      report.failures.push_back({entries[i].line, entries[i].source_uri, errors[i]});
      continue;
    }
    const StoreKey key{entries[i].language.code(), entries[i].modality};
    auto& store = stores[key];
    if (!store) store = std::make_shared<vindex::VectorStore>(key, dim, config.built_at);
    for (auto& item : produced[i]) store->append(std::move(item));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const EntryFailure& a, const EntryFailure& b) { return a.line < b.line; });

  for (auto& [key, store] : stores) {
    store->seal();
    report.store_counts[store_key_label(key)] = store->size();
    result.registry.add(store);
  }
  report.entries = manifest.total();
  report.failed = report.failures.size();
  report.failure_rate =
      report.entries == 0 ? 0.0 : static_cast<double>(report.failed) / static_cast<double>(report.entries);
  report.max_failure_rate = config.max_failure_rate;
  report.passed = report.failure_rate <= config.max_failure_rate;
  return result;
}

}  // namespace ragweld::ingest
