#include "ragweld/pipeline/pipeline.hpp"

#include <array>
#include <exception>

#include "ragweld/core/utf8.hpp"

namespace ragweld::pipeline {

std::string_view pipeline_mode_name(PipelineMode mode) noexcept {
  switch (mode) {
    case PipelineMode::kRag: return "rag";
    case PipelineMode::kNoRag: return "norag";
    case PipelineMode::kRagNativeQuery: return "rag_native_query";
  }
  return "rag";
}

void PipelineConfig::validate() const {
  retrieval.validate();
  if (mode == PipelineMode::kRag && pivot.code() != Language::kEn) {
    throw Error(Errc::kInvalidConfig, "RAG mode pivots through English");
  }
}

std::string_view stage_name(Stage stage) noexcept {
  switch (stage) {
    case Stage::kDetect: return "DETECT";
    case Stage::kTranslateIn: return "TRANSLATE_IN";
    case Stage::kEmbed: return "EMBED";
    case Stage::kGenerate: return "GENERATE";
    case Stage::kTranslateOut: return "TRANSLATE_OUT";
  }
  return "DETECT";
}

StageError::StageError(Stage stage, Errc code, const std::string& message)
    : Error(code, std::string(stage_name(stage)) + ": " + message), stage_(stage) {}

Language Route::store_language() const noexcept {
  return fallback ? Language::kEn : detected.code();
}

const std::vector<RetrievedItem>& Retrieval::for_modality(Modality m) const noexcept {
  switch (m) {
    case Modality::kImage: return images;
    case Modality::kVideo: return videos;
    case Modality::kText: break;
  }
  return texts;
}

namespace {

template <typename F>
auto at_stage(Stage stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e.code(), e.what());
  } catch (const std::exception& e) {
    throw StageError(stage, Errc::kProviderUnavailable, e.what());
  }
}

}  // namespace

Pipeline::Pipeline(std::shared_ptr<const vindex::StoreRegistry> registry,
                   providers::ProviderSet providers)
    : registry_(std::move(registry)), providers_(std::move(providers)) {
  if (!registry_) registry_ = std::make_shared<vindex::StoreRegistry>();
  if (!providers_.embedder || !providers_.generator || !providers_.translator ||
      !providers_.detector) {
    throw Error(Errc::kInvalidArgument, "pipeline needs all four providers");
  }
}

Route Pipeline::route(std::string_view query, PipelineMode mode) const {
  providers::require_text(query, "query");
  Route r;
  r.detected = at_stage(Stage::kDetect, [&] { return providers_.detector->detect(query); });
  r.fallback = !r.detected.supported();
  if (mode == PipelineMode::kRagNativeQuery || r.fallback || r.detected.code() == Language::kEn) {
    r.english_query = std::string(query);
  } else {
    r.english_query = at_stage(Stage::kTranslateIn, [&] {
      return providers_.translator->translate(query, r.detected, Language::kEn);
    });
  }
  return r;
}

Retrieval Pipeline::retrieve_all(Language language, std::string_view english_query,
                                 const RetrievalConfig& cfg) const {
  providers::require_text(english_query, "english query");
  std::array<std::shared_ptr<const vindex::VectorStore>, 3> stores;
  bool any = false;
  for (Modality m : kAllModalities) {
    stores[static_cast<std::size_t>(m)] = registry_->find({language, m});
    any = any || stores[static_cast<std::size_t>(m)] != nullptr;
  }
  Retrieval out;
  if (!any) return out;

  const std::vector<double> query_vec =
      at_stage(Stage::kEmbed, [&] { return providers_.embedder->embed(english_query); });

  std::array<std::vector<RetrievedItem>, 3> lists;
  std::array<std::exception_ptr, 3> failures;
  std::size_t total_items = 0;
  for (const auto& s : stores) total_items += s ? s->size() * s->dim() : 0;
  // The three modality searches are independent.
#pragma omp parallel for num_threads(3) if (total_items >= 1 << 16)
  for (int mi = 0; mi < 3; ++mi) {
    const auto& store = stores[static_cast<std::size_t>(mi)];
    if (!store) continue;
    const auto m = static_cast<Modality>(mi);
    try {
      lists[static_cast<std::size_t>(mi)] = store->search(query_vec, cfg.top_k(m), cfg.lambda(m));
    } catch (...) {
      failures[static_cast<std::size_t>(mi)] = std::current_exception();
    }
  }
  for (const auto& f : failures) {
    if (f) at_stage(Stage::kEmbed, [&] { std::rethrow_exception(f); });
  }
  out.texts = std::move(lists[0]);
  out.images = std::move(lists[1]);
  out.videos = std::move(lists[2]);
  return out;
}

MultiModalAnswer Pipeline::answer(ChatSession& session, std::string_view query,
                                  const PipelineConfig& cfg, PromptTrace* trace) const {
  cfg.validate();
  const Route r = route(query, cfg.mode);

  Retrieval retrieved;
  if (cfg.mode != PipelineMode::kNoRag) {
    retrieved = retrieve_all(r.store_language(), r.english_query, cfg.retrieval);
  }

  const std::string prompt = build_prompt(cfg.prompt, retrieved.for_modality(cfg.context_modality),
                                          session.turns, r.english_query, cfg.history_max_turns);
  if (trace) *trace = {r, prompt};

  std::string text_en = at_stage(Stage::kGenerate, [&] { return providers_.generator->generate(prompt); });
  if (utf8::is_blank(text_en)) {
    throw StageError(Stage::kGenerate, Errc::kEmptyGeneration, "generator returned an empty answer");
  }

  MultiModalAnswer ans;
  ans.detected_language = r.detected;
  ans.language_fallback = r.fallback;
  if (r.fallback || r.detected.code() == Language::kEn) {
    ans.text = text_en;
  } else {
    ans.text = at_stage(Stage::kTranslateOut, [&] {
      return providers_.translator->translate(text_en, Language::kEn, r.detected);
    });
  }
  if (utf8::is_blank(ans.text)) {
    throw StageError(Stage::kTranslateOut, Errc::kEmptyGeneration, "translated answer is empty");
  }
  ans.text_en = std::move(text_en);
  ans.documents = std::move(retrieved.texts);
  ans.images = std::move(retrieved.images);
  ans.videos = std::move(retrieved.videos);

  ChatTurn turn;
  turn.question = std::string(query);
  turn.answer = ans.text;
  turn.question_en = r.english_query;
  turn.answer_en = ans.text_en;
  turn.timestamp_us = session.next_timestamp(now_us());
  if (session.created_at_us == 0) session.created_at_us = turn.timestamp_us;
  session.updated_at_us = turn.timestamp_us;
  session.turns.push_back(std::move(turn));
  return ans;
}

}  // namespace ragweld::pipeline
