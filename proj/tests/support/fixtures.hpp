#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "ragweld/core/types.hpp"
#include "ragweld/evalkit/faq.hpp"
#include "ragweld/providers/providers.hpp"
#include "ragweld/vindex/registry.hpp"

namespace ragweld::testing {

inline constexpr std::size_t kDim = 256;

struct SeedDoc {
  const char* lang;
  Modality modality;
  const char* title;
  const char* text;
};

/// Builds a corpus item the way ingest does with offline providers:
/// head-sentence summary, tagged translation to English, hashed embedding.
CorpusItem make_item(std::string id, LanguageTag lang, Modality modality, std::string title,
                     std::string raw_text, const providers::Embedder& embedder);

/// 30 items: per language 6 text passages, 2 images, 2 videos.
const std::vector<SeedDoc>& seed_documents();
std::vector<CorpusItem> seeded_items(const providers::Embedder& embedder);
std::shared_ptr<vindex::StoreRegistry> seeded_registry(const providers::Embedder& embedder);

/// Registry built from `items`, one sealed store per key.
std::shared_ptr<vindex::StoreRegistry> registry_from(const std::vector<CorpusItem>& items,
                                                     std::size_t dim = kDim);

/// The scripted six-turn conversation, two queries per language.
const std::vector<std::string>& golden_queries();

/// Synthetic FAQ whose reference answers are planted verbatim as TEXT
/// chunks. Every pair carries its own pseudo-words.
struct PlantedFaq {
  std::vector<evalkit::FaqPair> pairs;
  std::vector<CorpusItem> chunks;
};
PlantedFaq planted_faq(LanguageTag lang, std::size_t n, const providers::Embedder& embedder,
                       unsigned seed = 1);

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "ragweld-test");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace ragweld::testing
