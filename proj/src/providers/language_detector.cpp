#include <algorithm>
#include <span>
#include <string>

#include "ragweld/core/utf8.hpp"
#include "ragweld/providers/offline.hpp"

namespace ragweld::providers {

namespace {

constexpr std::string_view kEnglishStopwords[] = {
    "a",     "about", "after", "all",   "an",    "and",   "are",    "as",    "at",
    "be",    "been",  "but",   "by",    "can",   "could", "do",     "does",  "for",
    "from",  "get",   "had",   "has",   "have",  "how",   "i",      "if",    "in",
    "is",    "it",    "its",   "my",    "not",   "of",    "on",     "or",    "should",
    "so",    "than",  "that",  "the",   "their", "there", "these",  "they",  "this",
    "to",    "was",   "we",    "were",  "what",  "when",  "where",  "which", "who",
    "why",   "will",  "with",  "would", "you",   "your", 
};

constexpr std::string_view kFrenchStopwords[] = {
    "au",    "aux",   "avec",  "ce",    "ces",   "comme", "comment", "dans",  "de",
    "des",   "du",    "elle",  "en",    "est",   "et",    "eux",     "il",    "ils",
    "je",    "l",     "la",    "le",    "les",   "leur",  "lui",     "ma",    "mais",
    "me",    "mes",   "moi",   "mon",   "ne",    "nos",   "notre",   "nous",  "on",
    "ou",    "où",    "par",   "pas",   "peut",  "pour",  "pourquoi","qu",    "quand",
    "que",   "quel",  "quelle","qui",   "sa",    "se",    "ses",     "son",   "sont",
    "sur",   "ta",    "te",    "tu",    "un",    "une",   "vos",     "votre", "vous",
    "à",     "ça",    "être",
};

constexpr std::u32string_view kFrenchDiacritics = U"àâæçéèêëîïôœùûüÿ";
constexpr double kDiacriticWeight = 0.5;

bool contains(std::span<const std::string_view> words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

}  // namespace

StopwordDetector::Profile StopwordDetector::profile(std::string_view text) {
  Profile p;
  std::u32string word;
  auto flush = [&] {
    if (word.empty()) return;
    const std::string w = utf8::encode(word);
    if (contains(kEnglishStopwords, w)) p.en_score += 1.0;
    if (contains(kFrenchStopwords, w)) p.fr_score += 1.0;
    word.clear();
  };
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_letter(cp)) {
      ++p.letters;
      if (utf8::is_arabic_letter(cp)) ++p.arabic_letters;
      const char32_t lower = utf8::to_lower(cp);
      if (kFrenchDiacritics.find(lower) != std::u32string_view::npos) p.fr_score += kDiacriticWeight;
      word.push_back(lower);
    } else {
      // Apostrophes end a word too, so l'asthme yields "l" and "asthme".
      flush();
    }
  }
  flush();
  return p;
}

LanguageTag StopwordDetector::detect(std::string_view text) const {
  require_text(text, "detection input");
  const Profile p = profile(text);
  if (p.letters == 0) return LanguageTag::other("und");
  if (static_cast<double>(p.arabic_letters) > kArabicShare * static_cast<double>(p.letters)) {
    return Language::kAr;
  }
  const double total = p.en_score + p.fr_score;
  if (total <= 0.0) return LanguageTag::other("und");
  if (p.en_score >= kMinWinnerShare * total && p.en_score > p.fr_score) return Language::kEn;
  if (p.fr_score >= kMinWinnerShare * total && p.fr_score > p.en_score) return Language::kFr;
  return LanguageTag::other("und");
}

}  // namespace ragweld::providers
