#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "ragweld/evalkit/faq.hpp"
#include "ragweld/evalkit/metrics.hpp"
#include "ragweld/pipeline/pipeline.hpp"

namespace ragweld::evalkit {

enum class EvalArm { kNoRag, kText, kImage, kVideo };
/// TQ routes the translated query, NQ the native one.
enum class QueryMode { kTq, kNq };

std::string_view eval_arm_name(EvalArm arm) noexcept;  // "norag", "text", "image", "video"
EvalArm parse_eval_arm(std::string_view name);
std::string_view query_mode_name(QueryMode mode) noexcept;  // "tq", "nq"
QueryMode parse_query_mode(std::string_view name);

struct EvalSetting {
  LanguageTag language;
  EvalArm arm = EvalArm::kText;
  QueryMode query_mode = QueryMode::kTq;

  friend bool operator==(const EvalSetting&, const EvalSetting&) = default;
};

struct EvalReport {
  EvalSetting setting;
  Prf rouge1;
  Prf rouge2;
  Prf rouge_l;
  double bleu = 0.0;
  std::size_t n_pairs = 0;   // pairs run
  std::size_t n_failed = 0;  // pairs whose pipeline run failed or produced no tokens
};

nlohmann::json to_json(const EvalReport& report);

/// Per-pair record, filled when EvalOptions::outcomes is set.
struct PairOutcome {
  std::string id;
  std::string candidate;
  std::string error;  // empty on success
  pipeline::PromptTrace trace;
};

struct EvalOptions {
  BleuOptions bleu;
  std::vector<PairOutcome>* outcomes = nullptr;
};

/// The pipeline configuration an evaluation setting runs under: NO_RAG
/// disables retrieval (and ignores the query mode), IMAGE and VIDEO put the
/// retrieved index summaries of that modality into the prompt context, NQ
/// skips query translation.
pipeline::PipelineConfig eval_pipeline_config(const pipeline::PipelineConfig& base,
                                              const EvalSetting& setting);

/// Answers every FAQ question in a fresh session and scores the answer
/// against the reference. ROUGE values are means over all pairs with failed
/// pairs scoring zero; BLEU covers the scored pairs and is corpus-level
/// unless sentence-level is requested. Throws kInvalidArgument
/// for an empty set or a pair in another language.
EvalReport run_eval(std::span<const FaqPair> faqs, const pipeline::Pipeline& pipeline,
                    const pipeline::PipelineConfig& base, const EvalSetting& setting,
                    const EvalOptions& options = {});

}  // namespace ragweld::evalkit
