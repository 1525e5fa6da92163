#pragma once

#include <string>
#include <string_view>

#include "ragweld/providers/providers.hpp"

namespace ragweld::providers {

/// Hashed character-trigram bag over lowercased, whitespace-collapsed text,
/// FNV-1a into `dim` buckets, L2-normalized.
class HashingEmbedder final : public Embedder {
 public:
  explicit HashingEmbedder(std::size_t dim);

  std::size_t dim() const noexcept override { return dim_; }
  std::vector<double> embed(std::string_view text) const override;

 private:
  std::size_t dim_;
};

// Section headers the offline generators look for. They match the default
// prompt template.
inline constexpr std::string_view kContextHeader = "CONTEXT:\n";
inline constexpr std::string_view kHistoryHeader = "\n\nCHAT HISTORY:\n";
inline constexpr std::string_view kQueryHeader = "QUERY:\n";
inline constexpr std::string_view kAnswerHeader = "\n\nANSWER:";

/// Returns the prompt's CONTEXT block verbatim; "" when the block is empty
/// or missing.
class ExtractiveGenerator final : public Generator {
 public:
  std::string generate(std::string_view prompt) const override;
};

/// Returns the prompt's QUERY block verbatim.
class EchoGenerator final : public Generator {
 public:
  std::string generate(std::string_view prompt) const override;
};

std::string_view extract_context_block(std::string_view prompt);
std::string_view extract_query_block(std::string_view prompt);

/// Reversible tagged transform: src->tgt prefixes "⟦src→tgt⟧", unless the
/// text already starts with "⟦tgt→src⟧", in which case that tag is removed.
/// Only EN, FR and AR are supported.
class TaggedTranslator final : public Translator {
 public:
  std::string translate(std::string_view text, const LanguageTag& source,
                        const LanguageTag& target) const override;

  static std::string tag(const LanguageTag& source, const LanguageTag& target);
};

/// Arabic-script share above 40% of letters means AR; otherwise French and
/// English stopword/diacritic profiles are compared, and a weak or tied
/// result means OTHER.
class StopwordDetector final : public LanguageDetector {
 public:
  static constexpr double kArabicShare = 0.40;
  static constexpr double kMinWinnerShare = 0.60;

  LanguageTag detect(std::string_view text) const override;

  struct Profile {
    std::size_t letters = 0;
    std::size_t arabic_letters = 0;
    double en_score = 0.0;
    double fr_score = 0.0;
  };
  static Profile profile(std::string_view text);
};

enum class GeneratorVariant { kExtractive, kEcho };

ProviderSet make_offline_providers(std::size_t dim,
                                   GeneratorVariant variant = GeneratorVariant::kExtractive);

}  // namespace ragweld::providers
