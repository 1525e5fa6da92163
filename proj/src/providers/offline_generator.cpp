#include "ragweld/providers/offline.hpp"

namespace ragweld::providers {

std::string_view extract_context_block(std::string_view prompt) {
  const auto start = prompt.find(kContextHeader);
  if (start == std::string_view::npos) return {};
  const auto body = start + kContextHeader.size();
  const auto end = prompt.find(kHistoryHeader, body);
  if (end == std::string_view::npos) return {};
  return prompt.substr(body, end - body);
}

std::string_view extract_query_block(std::string_view prompt) {
  const auto start = prompt.rfind(kQueryHeader);
  if (start == std::string_view::npos) return {};
  const auto body = start + kQueryHeader.size();
  auto end = prompt.rfind(kAnswerHeader);
  if (end == std::string_view::npos || end < body) end = prompt.size();
  return prompt.substr(body, end - body);
}

std::string ExtractiveGenerator::generate(std::string_view prompt) const {
  require_text(prompt, "prompt");
  return std::string(extract_context_block(prompt));
}

std::string EchoGenerator::generate(std::string_view prompt) const {
  require_text(prompt, "prompt");
  return std::string(extract_query_block(prompt));
}

}  // namespace ragweld::providers
