#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ragweld/core/language.hpp"
#include "ragweld/providers/providers.hpp"

namespace ragweld::ingest {

/// Produces the index description of a document chunk, an image's source
/// page text or a video transcript.
class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual std::string summarize(std::string_view raw_text, Modality modality) const = 0;
};

/// Offline summarizer: the first `max_sentences` sentences, cut from the
/// original text. Sentences end at '.', '!', '?', '؟' or '…' followed by
/// whitespace or end of text.
class HeadSentenceSummarizer final : public Summarizer {
 public:
  explicit HeadSentenceSummarizer(std::size_t max_sentences = 3);

  std::string summarize(std::string_view raw_text, Modality modality) const override;

 private:
  std::size_t max_sentences_;
};

/// Summarizes through a generator with a fixed prompt.
class GeneratorSummarizer final : public Summarizer {
 public:
  explicit GeneratorSummarizer(std::shared_ptr<const providers::Generator> generator);

  std::string summarize(std::string_view raw_text, Modality modality) const override;

  static std::string prompt_for(std::string_view raw_text, Modality modality);

 private:
  std::shared_ptr<const providers::Generator> generator_;
};

}  // namespace ragweld::ingest
