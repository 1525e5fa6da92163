#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ragweld {

enum class Language : std::uint8_t { kEn, kFr, kAr, kOther };

/// A language code. EN, FR and AR have vector stores; any other ISO 639-1
/// code is carried as kOther with its original code so detection stays total.
class LanguageTag {
 public:
  LanguageTag() = default;
  LanguageTag(Language code) : code_(code) {}  // NOLINT: implicit by intent

  static LanguageTag other(std::string iso_code);
  /// Parses "en", "fr", "ar" (case-insensitive); anything else becomes kOther.
  static LanguageTag parse(std::string_view code);

  Language code() const noexcept { return code_; }
  bool supported() const noexcept { return code_ != Language::kOther; }
  /// Lowercase ISO code ("en", "fr", "ar", or the stored other code; "und"
  /// when the other code is unknown).
  std::string iso() const;

  friend bool operator==(const LanguageTag& a, const LanguageTag& b) {
    return a.code_ == b.code_ && a.other_ == b.other_;
  }

 private:
  Language code_ = Language::kEn;
  std::string other_;
};

inline constexpr std::array<Language, 3> kSupportedLanguages = {Language::kEn, Language::kFr,
                                                                Language::kAr};

std::string_view language_code(Language lang) noexcept;

enum class Modality : std::uint8_t { kText = 0, kImage = 1, kVideo = 2 };

inline constexpr std::array<Modality, 3> kAllModalities = {Modality::kText, Modality::kImage,
                                                           Modality::kVideo};

std::string_view modality_name(Modality m) noexcept;
/// Accepts "text", "image", "video" (case-insensitive); throws kInvalidArgument.
Modality parse_modality(std::string_view name);

/// (language, modality) pair identifying one of the nine stores.
struct StoreKey {
  Language language = Language::kEn;
  Modality modality = Modality::kText;

  friend auto operator<=>(const StoreKey&, const StoreKey&) = default;
};

/// "en/text" style label used in reports and file names.
std::string store_key_label(const StoreKey& key);

}  // namespace ragweld
