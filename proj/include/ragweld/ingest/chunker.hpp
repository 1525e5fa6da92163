#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ragweld::ingest {

/// Token-window chunking. A token is a whitespace-delimited word.
struct ChunkingPolicy {
  std::size_t max_chunk_tokens = 256;
  std::size_t overlap_tokens = 32;

  /// Throws kInvalidConfig unless 0 < max and overlap < max.
  void validate() const;
};

std::vector<std::string> split_tokens(std::string_view body);

/// Sliding windows of at most `max_chunk_tokens` tokens, consecutive windows
/// sharing `overlap_tokens`; tokens rejoined with single spaces. Throws
/// kEmptyBody for a blank body.
std::vector<std::string> chunk_text(std::string_view body, const ChunkingPolicy& policy);

}  // namespace ragweld::ingest
