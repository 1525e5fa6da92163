#include "ragweld/core/utf8.hpp"

namespace ragweld::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool in(char32_t cp, char32_t lo, char32_t hi) noexcept { return cp >= lo && cp <= hi; }

}  // namespace

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    int extra = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + extra >= text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

bool is_space(char32_t cp) noexcept {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0x00A0 || cp == 0x2028 || cp == 0x2029 || in(cp, 0x2000, 0x200A) || cp == 0x3000;
}

bool is_arabic_letter(char32_t cp) noexcept {
  // Arabic block minus punctuation, digits and combining marks.
  if (in(cp, 0x0620, 0x064A)) return true;
  if (in(cp, 0x066E, 0x06D3) || cp == 0x06D5) return true;
  if (in(cp, 0x06EE, 0x06EF) || in(cp, 0x06FA, 0x06FC) || cp == 0x06FF) return true;
  if (in(cp, 0x0750, 0x077F) || in(cp, 0x08A0, 0x08C9)) return true;
  if (in(cp, 0xFB50, 0xFDFB) || in(cp, 0xFE70, 0xFEFC)) return true;
  return false;
}

bool is_letter(char32_t cp) noexcept {
  if (in(cp, 'a', 'z') || in(cp, 'A', 'Z')) return true;
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (in(cp, 0xC0, 0x24F)) return cp != 0xD7 && cp != 0xF7;
  if (in(cp, 0x370, 0x3FF)) return cp != 0x37E && cp != 0x387 && !in(cp, 0x375, 0x375);
  if (in(cp, 0x400, 0x481) || in(cp, 0x48A, 0x52F)) return true;
  if (in(cp, 0x5D0, 0x5EA)) return true;
  if (is_arabic_letter(cp)) return true;
  if (in(cp, 0x1E00, 0x1EFF)) return true;
  if (in(cp, 0x3040, 0x30FF) || in(cp, 0x4E00, 0x9FFF) || in(cp, 0xAC00, 0xD7A3)) return true;
  return false;
}

bool is_digit(char32_t cp) noexcept {
  return in(cp, '0', '9') || in(cp, 0x0660, 0x0669) || in(cp, 0x06F0, 0x06F9);
}

char32_t to_lower(char32_t cp) noexcept {
  if (in(cp, 'A', 'Z')) return cp + 32;
  if (cp < 0xC0) return cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (in(cp, 0x100, 0x17F)) {
    // Latin Extended-A alternates upper/lower, with a shifted run 0x139-0x148
    // and 0x179-0x17E.
    if (cp == 0x130) return 'i';
    if (cp == 0x178) return 0xFF;
    if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 32;
  if (in(cp, 0x410, 0x42F)) return cp + 32;
  if (in(cp, 0x400, 0x40F)) return cp + 80;
  return cp;
}

std::string_view trim(std::string_view s) noexcept {
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) noexcept {
  for (char32_t cp : decode(s)) {
    if (!is_space(cp)) return false;
  }
  return true;
}

}  // namespace ragweld::utf8
