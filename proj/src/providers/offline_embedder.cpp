#include <cmath>
#include <cstdint>

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"
#include "ragweld/providers/offline.hpp"

namespace ragweld::providers {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace

HashingEmbedder::HashingEmbedder(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(Errc::kInvalidArgument, "embedding dimension must be positive");
}

std::vector<double> HashingEmbedder::embed(std::string_view text) const {
  require_text(text, "embedding input");

  // Lowercase, collapse whitespace runs, pad with one space on each side.
  std::u32string norm = U" ";
  bool in_space = true;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) {
      if (!in_space) norm.push_back(U' ');
      in_space = true;
      continue;
    }
    norm.push_back(utf8::to_lower(cp));
    in_space = false;
  }
  if (!in_space) norm.push_back(U' ');

  std::vector<double> v(dim_, 0.0);
  std::string gram;
  for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
    gram.clear();
    for (std::size_t k = 0; k < 3; ++k) utf8::append(gram, norm[i + k]);
    v[fnv1a(gram) % dim_] += 1.0;
  }

  double sq = 0.0;
  for (double x : v) sq += x * x;
  const double norm_l2 = std::sqrt(sq);
  for (double& x : v) x /= norm_l2;
  return v;
}

}  // namespace ragweld::providers
