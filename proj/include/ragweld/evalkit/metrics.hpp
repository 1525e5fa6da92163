#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ragweld::evalkit {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const Prf&, const Prf&) = default;
};

/// Harmonic mean, 0 when both are 0.
Prf make_prf(double precision, double recall) noexcept;

/// Clipped n-gram overlap. Throws kEmptyAfterTokenization when either side
/// has no tokens and kInvalidArgument unless n is 1 or 2.
Prf rouge_n(std::string_view candidate, std::string_view reference, int n);
Prf rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n);

/// Longest-common-subsequence precision/recall/f1.
Prf rouge_l(std::string_view candidate, std::string_view reference);
Prf rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

/// LCS length over interned token ids. Uses the bit-vector recurrence when
/// the shorter side has at most 64 tokens and every id is below 256, the
/// row-by-row DP otherwise.
std::size_t lcs_length(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
/// Row-by-row dynamic programming, for any input.
std::size_t lcs_length_dp(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

enum class BleuSmoothing { kNone, kAddOne };

struct BleuOptions {
  BleuSmoothing smoothing = BleuSmoothing::kNone;
  /// Mean of per-sentence scores instead of the corpus-level score.
  bool sentence_level = false;
};

/// Corpus-level BLEU components for n = 1..4. Orders with no candidate
/// n-grams are excluded from the geometric mean.
struct BleuStats {
  std::array<std::size_t, 4> matches{};  // clipped n-gram matches
  std::array<std::size_t, 4> totals{};   // candidate n-grams
  std::array<double, 4> precisions{};    // after smoothing
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
  double brevity_penalty = 0.0;
  double score = 0.0;
};

/// Throws kLengthMismatch for unequal or empty lists and
/// kEmptyAfterTokenization when a candidate or reference has no tokens.
BleuStats bleu_stats(std::span<const std::string> candidates, std::span<const std::string> references,
                     BleuSmoothing smoothing = BleuSmoothing::kNone);

double bleu(std::span<const std::string> candidates, std::span<const std::string> references,
            const BleuOptions& options = {});

}  // namespace ragweld::evalkit
