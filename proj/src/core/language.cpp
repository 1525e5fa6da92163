#include "ragweld/core/language.hpp"

#include <algorithm>
#include <cctype>

#include "ragweld/core/error.hpp"

namespace ragweld {

namespace {

std::string lowercase_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

LanguageTag LanguageTag::other(std::string iso_code) {
  LanguageTag tag;
  tag.code_ = Language::kOther;
  tag.other_ = lowercase_ascii(iso_code);
  return tag;
}

LanguageTag LanguageTag::parse(std::string_view code) {
  const std::string lower = lowercase_ascii(code);
  if (lower == "en") return Language::kEn;
  if (lower == "fr") return Language::kFr;
  if (lower == "ar") return Language::kAr;
  return other(lower);
}

std::string LanguageTag::iso() const {
  if (code_ != Language::kOther) return std::string(language_code(code_));
  return other_.empty() ? std::string("und") : other_;
}

std::string_view language_code(Language lang) noexcept {
  switch (lang) {
    case Language::kEn: return "en";
    case Language::kFr: return "fr";
    case Language::kAr: return "ar";
    case Language::kOther: return "und";
  }
  return "und";
}

std::string_view modality_name(Modality m) noexcept {
  switch (m) {
    case Modality::kText: return "text";
    case Modality::kImage: return "image";
    case Modality::kVideo: return "video";
  }
  return "text";
}

Modality parse_modality(std::string_view name) {
  const std::string lower = lowercase_ascii(name);
  if (lower == "text") return Modality::kText;
  if (lower == "image") return Modality::kImage;
  if (lower == "video") return Modality::kVideo;
  throw Error(Errc::kInvalidArgument, "unknown modality '" + std::string(name) + "'");
}

std::string store_key_label(const StoreKey& key) {
  return std::string(language_code(key.language)) + "/" + std::string(modality_name(key.modality));
}

}  // namespace ragweld
