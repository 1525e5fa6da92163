#include "ragweld/ingest/summarizer.hpp"

#include "ragweld/core/error.hpp"
#include "ragweld/core/utf8.hpp"

namespace ragweld::ingest {

HeadSentenceSummarizer::HeadSentenceSummarizer(std::size_t max_sentences)
    : max_sentences_(max_sentences) {
  if (max_sentences == 0) throw Error(Errc::kInvalidArgument, "max_sentences must be positive");
}

std::string HeadSentenceSummarizer::summarize(std::string_view raw_text, Modality) const {
  providers::require_text(raw_text, "summary input");
  const std::string_view text = utf8::trim(raw_text);
  const std::u32string cps = utf8::decode(text);

  auto terminator = [](char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == U'؟' || cp == U'…';
  };
  std::size_t sentences = 0;
  std::size_t byte_pos = 0;
  std::string scratch;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    scratch.clear();
    utf8::append(scratch, cps[i]);
    byte_pos += scratch.size();
    if (!terminator(cps[i])) continue;
    // Runs like "?!" or "..." close a single sentence.
    if (i + 1 < cps.size() && terminator(cps[i + 1])) continue;
    if (i + 1 == cps.size() || utf8::is_space(cps[i + 1])) {
      if (++sentences == max_sentences_) return std::string(text.substr(0, byte_pos));
    }
  }
  return std::string(text);
}

GeneratorSummarizer::GeneratorSummarizer(std::shared_ptr<const providers::Generator> generator)
    : generator_(std::move(generator)) {}

std::string GeneratorSummarizer::prompt_for(std::string_view raw_text, Modality modality) {
  std::string_view what = "document passage";
  if (modality == Modality::kImage) what = "text of the web page an image was published on";
  if (modality == Modality::kVideo) what = "video transcript";
  std::string prompt = "Summarize the following ";
  prompt += what;
  prompt += " in at most three sentences, keeping the facts it states.\n\nTEXT:\n";
  prompt += raw_text;
  prompt += "\n\nSUMMARY:";
  return prompt;
}

std::string GeneratorSummarizer::summarize(std::string_view raw_text, Modality modality) const {
  providers::require_text(raw_text, "summary input");
  std::string summary = generator_->generate(prompt_for(raw_text, modality));
  if (utf8::is_blank(summary)) throw Error(Errc::kEmptyGeneration, "generator returned an empty summary");
  return std::string(utf8::trim(summary));
}

}  // namespace ragweld::ingest
