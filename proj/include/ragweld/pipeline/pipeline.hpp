#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ragweld/core/error.hpp"
#include "ragweld/core/types.hpp"
#include "ragweld/pipeline/prompt.hpp"
#include "ragweld/providers/providers.hpp"
#include "ragweld/vindex/registry.hpp"

namespace ragweld::pipeline {

enum class PipelineMode {
  kRag,             // translate the query to English, retrieve, generate
  kNoRag,           // no retrieval, empty context
  kRagNativeQuery,  // retrieve and prompt with the untranslated query
};

std::string_view pipeline_mode_name(PipelineMode mode) noexcept;

struct PipelineConfig {
  RetrievalConfig retrieval;
  PromptTemplate prompt;
  std::size_t history_max_turns = 5;
  LanguageTag pivot = Language::kEn;
  PipelineMode mode = PipelineMode::kRag;
  /// Which retrieved modality fills {context}. TEXT in normal operation;
  /// IMAGE and VIDEO substitute index summaries for evaluation.
  Modality context_modality = Modality::kText;

  /// Throws kInvalidConfig.
  void validate() const;
};

enum class Stage { kDetect, kTranslateIn, kEmbed, kGenerate, kTranslateOut };

std::string_view stage_name(Stage stage) noexcept;  // "DETECT", ...

/// A provider failure, labelled with the pipeline stage it happened in.
class StageError : public Error {
 public:
  StageError(Stage stage, Errc code, const std::string& message);

  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

struct Route {
  LanguageTag detected;
  std::string english_query;
  /// No stores exist for the detected language; English stores are used.
  bool fallback = false;

  /// Language whose stores serve this query.
  Language store_language() const noexcept;
};

struct Retrieval {
  std::vector<RetrievedItem> texts;
  std::vector<RetrievedItem> images;
  std::vector<RetrievedItem> videos;

  const std::vector<RetrievedItem>& for_modality(Modality m) const noexcept;
};

/// What the last answer() call sent to the generator.
struct PromptTrace {
  Route route;
  std::string prompt;
};

/// detect -> translate query -> retrieve per modality -> prompt -> generate
/// -> translate answer back. Stateless apart from the shared read-only
/// registry, so one instance serves any number of sessions concurrently.
class Pipeline {
 public:
  Pipeline(std::shared_ptr<const vindex::StoreRegistry> registry, providers::ProviderSet providers);

  /// Throws kEmptyInput for a blank query, StageError for provider failures.
  Route route(std::string_view query, PipelineMode mode) const;

  /// One search per modality in the stores of `language`; a missing store
  /// yields an empty list. Throws StageError(kEmbed).
  Retrieval retrieve_all(Language language, std::string_view english_query,
                         const RetrievalConfig& cfg) const;

  /// Runs one turn and appends it to `session`. On failure the session is
  /// left unchanged.
  MultiModalAnswer answer(ChatSession& session, std::string_view query, const PipelineConfig& cfg,
                          PromptTrace* trace = nullptr) const;

  const vindex::StoreRegistry& registry() const noexcept { return *registry_; }
  const providers::ProviderSet& providers() const noexcept { return providers_; }

 private:
  std::shared_ptr<const vindex::StoreRegistry> registry_;
  providers::ProviderSet providers_;
};

}  // namespace ragweld::pipeline
