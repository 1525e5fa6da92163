#include "ragweld/evalkit/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

#include "ragweld/core/error.hpp"
#include "ragweld/evalkit/tokenize.hpp"

namespace ragweld::evalkit {

namespace {

using NgramCounts = std::unordered_map<std::string, std::size_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  std::string key;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    key.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t clipped_overlap(const NgramCounts& cand, const NgramCounts& ref) {
  std::size_t overlap = 0;
  for (const auto& [gram, c] : cand) {
    if (auto it = ref.find(gram); it != ref.end()) overlap += std::min(c, it->second);
  }
  return overlap;
}

void require_tokens(std::span<const std::string> tokens, const char* what) {
  if (tokens.empty()) throw Error(Errc::kEmptyAfterTokenization, std::string(what) + " has no tokens");
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Prf make_prf(double precision, double recall) noexcept {
  const double f1 = (precision + recall) > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
  return {precision, recall, f1};
}

Prf rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n) {
  if (n != 1 && n != 2) throw Error(Errc::kInvalidArgument, "rouge_n supports n = 1 or 2");
  require_tokens(candidate, "candidate");
  require_tokens(reference, "reference");
  const auto un = static_cast<std::size_t>(n);
  const NgramCounts cand = count_ngrams(candidate, un);
  const NgramCounts ref = count_ngrams(reference, un);
  const std::size_t overlap = clipped_overlap(cand, ref);
  const std::size_t cand_total = candidate.size() >= un ? candidate.size() - un + 1 : 0;
  const std::size_t ref_total = reference.size() >= un ? reference.size() - un + 1 : 0;
  return make_prf(ratio(overlap, cand_total), ratio(overlap, ref_total));
}

Prf rouge_n(std::string_view candidate, std::string_view reference, int n) {
  const auto c = tokenize(candidate);
  const auto r = tokenize(reference);
  return rouge_n(c, r, n);
}

std::size_t lcs_length_dp(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) return 0;
  // One rolling row over b, branch-free update.
  std::vector<std::uint32_t> row(b.size() + 1, 0);
  for (const std::uint32_t x : a) {
    std::uint32_t diag = 0;
    std::uint32_t left = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint32_t up = row[j + 1];
      const std::uint32_t eq = 0u - static_cast<std::uint32_t>(x == b[j]);
      left = ((diag + 1) & eq) | (std::max(up, left) & ~eq);
      diag = up;
      row[j + 1] = left;
    }
  }
  return row[b.size()];
}

namespace {

constexpr std::size_t kBitWidth = 64;
constexpr std::uint32_t kBitAlphabet = 256;

// Bit-vector form of the same recurrence: bit j of v is clear where the DP
// row steps up at column j.
std::size_t lcs_length_bits(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::array<std::uint64_t, kBitAlphabet> match;
  for (const std::uint32_t x : a) match[x] = 0;
  for (const std::uint32_t y : b) match[y] = 0;
  for (std::size_t j = 0; j < b.size(); ++j) match[b[j]] |= std::uint64_t{1} << j;
  const std::uint64_t live = b.size() == kBitWidth ? ~std::uint64_t{0} : (std::uint64_t{1} << b.size()) - 1;
  std::uint64_t v = live;
  for (const std::uint32_t x : a) {
    const std::uint64_t u = v & match[x];
    v = ((v + u) | (v - u)) & live;
  }
  return b.size() - static_cast<std::size_t>(__builtin_popcountll(v));
}

std::uint32_t max_id(std::span<const std::uint32_t> s) {
  std::uint32_t m = 0;
  for (const std::uint32_t x : s) m = std::max(m, x);
  return m;
}

}  // namespace

std::size_t lcs_length(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.empty() || b.empty()) return 0;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() <= kBitWidth && std::max(max_id(a), max_id(b)) < kBitAlphabet) return lcs_length_bits(a, b);
  return lcs_length_dp(a, b);
}

Prf rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  require_tokens(candidate, "candidate");
  require_tokens(reference, "reference");
  std::unordered_map<std::string_view, std::uint32_t> ids;
  auto intern = [&](std::span<const std::string> tokens) {
    std::vector<std::uint32_t> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
      auto [it, _] = ids.emplace(t, static_cast<std::uint32_t>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  const auto c = intern(candidate);
  const auto r = intern(reference);
  const std::size_t l = lcs_length(c, r);
  return make_prf(ratio(l, c.size()), ratio(l, r.size()));
}

Prf rouge_l(std::string_view candidate, std::string_view reference) {
  const auto c = tokenize(candidate);
  const auto r = tokenize(reference);
  return rouge_l(c, r);
}

BleuStats bleu_stats(std::span<const std::string> candidates, std::span<const std::string> references,
                     BleuSmoothing smoothing) {
  if (candidates.size() != references.size() || candidates.empty()) {
    throw Error(Errc::kLengthMismatch, "bleu needs equally many candidates and references (>= 1)");
  }
  BleuStats s;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto cand = tokenize(candidates[i]);
    const auto ref = tokenize(references[i]);
    require_tokens(cand, "candidate");
    require_tokens(ref, "reference");
    s.candidate_length += cand.size();
    s.reference_length += ref.size();
    for (std::size_t n = 1; n <= 4; ++n) {
      s.matches[n - 1] += clipped_overlap(count_ngrams(cand, n), count_ngrams(ref, n));
      s.totals[n - 1] += cand.size() >= n ? cand.size() - n + 1 : 0;
    }
  }

  // Orders the candidates are too short to contain are left out of the
  // geometric mean (effective order).
  double log_sum = 0.0;
  std::size_t orders = 0;
  bool zero = false;
  for (std::size_t k = 0; k < 4; ++k) {
    if (s.totals[k] == 0) continue;
    ++orders;
    double p = ratio(s.matches[k], s.totals[k]);
    if (smoothing == BleuSmoothing::kAddOne && k > 0) {
      p = static_cast<double>(s.matches[k] + 1) / static_cast<double>(s.totals[k] + 1);
    }
    s.precisions[k] = p;
    if (p <= 0.0) {
      zero = true;
    } else {
      log_sum += std::log(p);
    }
  }
  const double c = static_cast<double>(s.candidate_length);
  const double r = static_cast<double>(s.reference_length);
  s.brevity_penalty = c > r ? 1.0 : std::exp(1.0 - r / c);
  s.score = zero ? 0.0 : s.brevity_penalty * std::exp(log_sum / static_cast<double>(orders));
  return s;
}

double bleu(std::span<const std::string> candidates, std::span<const std::string> references,
            const BleuOptions& options) {
  if (!options.sentence_level) return bleu_stats(candidates, references, options.smoothing).score;
  if (candidates.size() != references.size() || candidates.empty()) {
    throw Error(Errc::kLengthMismatch, "bleu needs equally many candidates and references (>= 1)");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    sum += bleu_stats(candidates.subspan(i, 1), references.subspan(i, 1), options.smoothing).score;
  }
  return sum / static_cast<double>(candidates.size());
}

}  // namespace ragweld::evalkit
