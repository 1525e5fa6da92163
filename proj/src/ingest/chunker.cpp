#include "ragweld/ingest/chunker.hpp"

#include <algorithm>

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::ingest {

void ChunkingPolicy::validate() const {
  if (max_chunk_tokens == 0) throw Error(Errc::kInvalidConfig, "max_chunk_tokens must be positive");
  if (overlap_tokens >= max_chunk_tokens) {
    throw Error(Errc::kInvalidConfig, "overlap_tokens must be smaller than max_chunk_tokens");
  }
}

std::vector<std::string> split_tokens(std::string_view body) {
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t cp : utf8::decode(body)) {
    if (utf8::is_space(cp)) {
      if (!current.empty()) tokens.push_back(utf8::encode(current));
      current.clear();
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) tokens.push_back(utf8::encode(current));
  return tokens;
}

std::vector<std::string> chunk_text(std::string_view body, const ChunkingPolicy& policy) {
  policy.validate();
  const std::vector<std::string> tokens = split_tokens(body);
  if (tokens.empty()) throw Error(Errc::kEmptyBody, "body has no tokens");

  const std::size_t step = policy.max_chunk_tokens - policy.overlap_tokens;
  std::vector<std::string> chunks;
  for (std::size_t start = 0;; start += step) {
    const std::size_t end = std::min(start + policy.max_chunk_tokens, tokens.size());
    std::string chunk;
    for (std::size_t i = start; i < end; ++i) {
      if (i > start) chunk.push_back(' ');
      chunk += tokens[i];
    }
    chunks.push_back(std::move(chunk));
    if (end == tokens.size()) break;
  }
  return chunks;
}

}  // namespace ragweld::ingest
