#include "ragweld/evalkit/runner.hpp"

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"
#include "ragweld/evalkit/tokenize.hpp"

namespace ragweld::evalkit {

using nlohmann::json;

std::string_view eval_arm_name(EvalArm arm) noexcept {
  switch (arm) {
    case EvalArm::kNoRag: return "norag";
    case EvalArm::kText: return "text";
    case EvalArm::kImage: return "image";
    case EvalArm::kVideo: return "video";
  }
  return "text";
}

EvalArm parse_eval_arm(std::string_view name) {
  if (name == "norag") return EvalArm::kNoRag;
  if (name == "text") return EvalArm::kText;
  if (name == "image") return EvalArm::kImage;
  if (name == "video") return EvalArm::kVideo;
  throw Error(Errc::kInvalidArgument, "unknown arm '" + std::string(name) + "'");
}

std::string_view query_mode_name(QueryMode mode) noexcept {
  return mode == QueryMode::kNq ? "nq" : "tq";
}

QueryMode parse_query_mode(std::string_view name) {
  if (name == "tq") return QueryMode::kTq;
  if (name == "nq") return QueryMode::kNq;
  throw Error(Errc::kInvalidArgument, "unknown query mode '" + std::string(name) + "'");
}

json to_json(const EvalReport& r) {
  auto prf = [](const Prf& p) {
    return json{{"precision", p.precision}, {"recall", p.recall}, {"f1", p.f1}};
  };
  return {
      {"setting",
       {{"language", r.setting.language},
        {"arm", eval_arm_name(r.setting.arm)},
        {"query_mode", query_mode_name(r.setting.query_mode)}}},
      {"rouge1", prf(r.rouge1)},
      {"rouge2", prf(r.rouge2)},
      {"rougeL", prf(r.rouge_l)},
      {"bleu", r.bleu},
      {"n_pairs", r.n_pairs},
      {"n_failed", r.n_failed},
  };
}

pipeline::PipelineConfig eval_pipeline_config(const pipeline::PipelineConfig& base,
                                              const EvalSetting& setting) {
  pipeline::PipelineConfig cfg = base;
  switch (setting.arm) {
    case EvalArm::kNoRag:
      cfg.mode = pipeline::PipelineMode::kNoRag;
      cfg.context_modality = Modality::kText;
      return cfg;
    case EvalArm::kText: cfg.context_modality = Modality::kText; break;
    case EvalArm::kImage: cfg.context_modality = Modality::kImage; break;
    case EvalArm::kVideo: cfg.context_modality = Modality::kVideo; break;
  }
  cfg.mode = setting.query_mode == QueryMode::kNq ? pipeline::PipelineMode::kRagNativeQuery
                                                  : pipeline::PipelineMode::kRag;
  return cfg;
}

EvalReport run_eval(std::span<const FaqPair> faqs, const pipeline::Pipeline& pipeline,
                    const pipeline::PipelineConfig& base, const EvalSetting& setting,
                    const EvalOptions& options) {
  if (faqs.empty()) throw Error(Errc::kInvalidArgument, "evaluation needs at least one FAQ pair");
  for (const auto& p : faqs) {
    if (!(p.language == setting.language)) {
      throw Error(Errc::kInvalidArgument, "FAQ '" + p.id + "' is " + p.language.iso() +
                                              ", setting is " + setting.language.iso());
    }
  }
  const pipeline::PipelineConfig cfg = eval_pipeline_config(base, setting);
  cfg.validate();

  const auto n = static_cast<std::int64_t>(faqs.size());
  std::vector<PairOutcome> outcomes(faqs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    PairOutcome& out = outcomes[i];
    out.id = faqs[i].id;
    try {
      ChatSession session;
      out.candidate = pipeline.answer(session, faqs[i].question, cfg, &out.trace).text;
      if (tokenize(out.candidate).empty()) out.error = "candidate has no tokens";
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  }

  EvalReport report;
  report.setting = setting;
  std::vector<std::string> candidates;
  std::vector<std::string> references;
  Prf r1, r2, rl;
  for (std::size_t i = 0; i < faqs.size(); ++i) {
    PairOutcome& out = outcomes[i];
    if (out.error.empty()) {
      try {
        const auto c = tokenize(out.candidate);
        const auto ref = tokenize(faqs[i].reference_answer);
        const Prf a = rouge_n(c, ref, 1);
        const Prf b = rouge_n(c, ref, 2);
        const Prf l = rouge_l(c, ref);
        r1 = {r1.precision + a.precision, r1.recall + a.recall, r1.f1 + a.f1};
        r2 = {r2.precision + b.precision, r2.recall + b.recall, r2.f1 + b.f1};
        rl = {rl.precision + l.precision, rl.recall + l.recall, rl.f1 + l.f1};
        candidates.push_back(out.candidate);
        references.push_back(faqs[i].reference_answer);
      } catch (const Error& e) {
        out.error = e.what();
      }
    }
    if (!out.error.empty()) ++report.n_failed;
  }
  // Failed pairs score zero in the ROUGE means; BLEU covers scored pairs.
  report.n_pairs = faqs.size();
  const double k = static_cast<double>(report.n_pairs);
  auto mean = [k](const Prf& s) { return Prf{s.precision / k, s.recall / k, s.f1 / k}; };
  report.rouge1 = mean(r1);
  report.rouge2 = mean(r2);
  report.rouge_l = mean(rl);
  if (!candidates.empty()) report.bleu = bleu(candidates, references, options.bleu);
  if (options.outcomes) *options.outcomes = std::move(outcomes);
  return report;
}

}  // namespace ragweld::evalkit
