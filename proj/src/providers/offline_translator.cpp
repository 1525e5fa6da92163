#include "ragweld/core/error.hpp"
#include "ragweld/providers/offline.hpp"

namespace ragweld::providers {

std::string TaggedTranslator::tag(const LanguageTag& source, const LanguageTag& target) {
  return "⟦" + source.iso() + "→" + target.iso() + "⟧";
}

std::string TaggedTranslator::translate(std::string_view text, const LanguageTag& source,
                                        const LanguageTag& target) const {
  require_text(text, "translation input");
  if (source == target) return std::string(text);
  if (!source.supported() || !target.supported()) {
    throw Error(Errc::kUnsupportedPair,
                "offline translator has no " + source.iso() + "->" + target.iso() + " pair");
  }
  const std::string reverse = tag(target, source);
  if (text.substr(0, reverse.size()) == reverse) return std::string(text.substr(reverse.size()));
  return tag(source, target) + std::string(text);
}

}  // namespace ragweld::providers
