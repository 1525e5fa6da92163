#include "ragweld/core/serialize.hpp"

namespace ragweld {

using nlohmann::json;

void to_json(json& j, const LanguageTag& tag) { j = tag.iso(); }

void from_json(const json& j, LanguageTag& tag) { tag = LanguageTag::parse(j.get<std::string>()); }

void to_json(json& j, Modality m) { j = std::string(modality_name(m)); }

void from_json(const json& j, Modality& m) { m = parse_modality(j.get<std::string>()); }

json item_metadata(const CorpusItem& item) {
  json j = {
      {"modality", item.modality},
      {"language", item.language},
      {"source_uri", item.source_uri},
      {"title", item.title},
      {"raw_text", item.raw_text},
      {"index_summary_en", item.index_summary_en},
  };
  if (item.media_uri) j["media_uri"] = *item.media_uri;
  return j;
}

void apply_item_metadata(const json& j, CorpusItem& item) {
  item.modality = j.at("modality").get<Modality>();
  item.language = j.at("language").get<LanguageTag>();
  item.source_uri = j.at("source_uri").get<std::string>();
  item.title = j.at("title").get<std::string>();
  item.raw_text = j.at("raw_text").get<std::string>();
  item.index_summary_en = j.at("index_summary_en").get<std::string>();
  if (auto it = j.find("media_uri"); it != j.end() && !it->is_null()) {
    item.media_uri = it->get<std::string>();
  } else {
    item.media_uri.reset();
  }
}

void to_json(json& j, const CorpusItem& item) {
  j = item_metadata(item);
  j["id"] = item.id;
  j["embedding"] = item.embedding;
}

void from_json(const json& j, CorpusItem& item) {
  apply_item_metadata(j, item);
  item.id = j.at("id").get<std::string>();
  item.embedding = j.value("embedding", std::vector<double>{});
}

void to_json(json& j, const RetrievalConfig& cfg) {
  j = {
      {"lambda_text", cfg.lambda_text},   {"lambda_image", cfg.lambda_image},
      {"lambda_video", cfg.lambda_video}, {"top_k_text", cfg.top_k_text},
      {"top_k_image", cfg.top_k_image},   {"top_k_video", cfg.top_k_video},
  };
}

void from_json(const json& j, RetrievalConfig& cfg) {
  RetrievalConfig d;
  cfg.lambda_text = j.value("lambda_text", d.lambda_text);
  cfg.lambda_image = j.value("lambda_image", d.lambda_image);
  cfg.lambda_video = j.value("lambda_video", d.lambda_video);
  cfg.top_k_text = j.value("top_k_text", d.top_k_text);
  cfg.top_k_image = j.value("top_k_image", d.top_k_image);
  cfg.top_k_video = j.value("top_k_video", d.top_k_video);
}

void to_json(json& j, const RetrievedItem& r) {
  j = {{"item", r.item ? json(*r.item) : json(nullptr)}, {"score", r.score}};
}

void from_json(const json& j, RetrievedItem& r) {
  r.item = std::make_shared<const CorpusItem>(j.at("item").get<CorpusItem>());
  r.score = j.at("score").get<double>();
}

void to_json(json& j, const ChatTurn& turn) {
  j = {
      {"question", turn.question},       {"answer", turn.answer},
      {"question_en", turn.question_en}, {"answer_en", turn.answer_en},
      {"timestamp_us", turn.timestamp_us},
  };
}

void from_json(const json& j, ChatTurn& turn) {
  turn.question = j.at("question").get<std::string>();
  turn.answer = j.at("answer").get<std::string>();
  turn.question_en = j.at("question_en").get<std::string>();
  turn.answer_en = j.at("answer_en").get<std::string>();
  turn.timestamp_us = j.at("timestamp_us").get<std::int64_t>();
}

void to_json(json& j, const ChatSession& session) {
  j = {
      {"session_id", session.session_id},
      {"turns", session.turns},
      {"created_at_us", session.created_at_us},
      {"updated_at_us", session.updated_at_us},
  };
}

void from_json(const json& j, ChatSession& session) {
  session.session_id = j.at("session_id").get<std::string>();
  session.turns = j.at("turns").get<std::vector<ChatTurn>>();
  session.created_at_us = j.at("created_at_us").get<std::int64_t>();
  session.updated_at_us = j.at("updated_at_us").get<std::int64_t>();
}

void to_json(json& j, const MultiModalAnswer& answer) {
  j = {
      {"text", answer.text},
      {"text_en", answer.text_en},
      {"documents", answer.documents},
      {"images", answer.images},
      {"videos", answer.videos},
      {"detected_language", answer.detected_language},
      {"language_fallback", answer.language_fallback},
  };
}

void from_json(const json& j, MultiModalAnswer& answer) {
  answer.text = j.at("text").get<std::string>();
  answer.text_en = j.at("text_en").get<std::string>();
  answer.documents = j.at("documents").get<std::vector<RetrievedItem>>();
  answer.images = j.at("images").get<std::vector<RetrievedItem>>();
  answer.videos = j.at("videos").get<std::vector<RetrievedItem>>();
  answer.detected_language = j.at("detected_language").get<LanguageTag>();
  answer.language_fallback = j.value("language_fallback", false);
}

}  // namespace ragweld
