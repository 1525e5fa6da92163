#include "ragweld/evalkit/tokenize.hpp"

#include "ragweld/core/utf8.hpp"

namespace ragweld::evalkit {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_letter(cp) || utf8::is_digit(cp)) {
      current.push_back(utf8::to_lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(utf8::encode(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(utf8::encode(current));
  return tokens;
}

}  // namespace ragweld::evalkit
