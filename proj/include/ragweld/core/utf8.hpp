#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ragweld::utf8 {

/// Decodes UTF-8; malformed sequences become U+FFFD.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

bool is_space(char32_t cp) noexcept;
/// Letters in the Latin, Greek, Cyrillic, Hebrew and Arabic blocks plus CJK
/// ideographs. Good enough for tokenization over the shipped languages.
bool is_letter(char32_t cp) noexcept;
bool is_digit(char32_t cp) noexcept;
bool is_arabic_letter(char32_t cp) noexcept;
/// Simple one-to-one lowercase mapping (ASCII, Latin-1, Latin Extended-A,
/// Greek, Cyrillic); other code points are returned unchanged.
char32_t to_lower(char32_t cp) noexcept;

std::string_view trim(std::string_view s) noexcept;
bool is_blank(std::string_view s) noexcept;

}  // namespace ragweld::utf8
