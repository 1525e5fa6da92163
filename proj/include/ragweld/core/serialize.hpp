#pragma once

#include <nlohmann/json.hpp>

#include "ragweld/core/types.hpp"

// JSON forms of the core value types. Every encoding is lossless: decoding
// an encoded value yields an equal value.
namespace ragweld {

void to_json(nlohmann::json& j, const LanguageTag& tag);
void from_json(const nlohmann::json& j, LanguageTag& tag);

void to_json(nlohmann::json& j, Modality m);
void from_json(const nlohmann::json& j, Modality& m);

void to_json(nlohmann::json& j, const CorpusItem& item);
void from_json(const nlohmann::json& j, CorpusItem& item);

void to_json(nlohmann::json& j, const RetrievalConfig& cfg);
void from_json(const nlohmann::json& j, RetrievalConfig& cfg);

void to_json(nlohmann::json& j, const RetrievedItem& r);
void from_json(const nlohmann::json& j, RetrievedItem& r);

void to_json(nlohmann::json& j, const ChatTurn& turn);
void from_json(const nlohmann::json& j, ChatTurn& turn);

void to_json(nlohmann::json& j, const ChatSession& session);
void from_json(const nlohmann::json& j, ChatSession& session);

void to_json(nlohmann::json& j, const MultiModalAnswer& answer);
void from_json(const nlohmann::json& j, MultiModalAnswer& answer);

/// Item metadata without id and embedding, as stored next to each vector in
/// a store file.
nlohmann::json item_metadata(const CorpusItem& item);
void apply_item_metadata(const nlohmann::json& j, CorpusItem& item);

}  // namespace ragweld
