#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "ragweld/vindex/registry.hpp"

// Store file layout, all integers little-endian:
//
//   "RGWD" | u16 version | body | u32 CRC-32 of body
//   body   = u32 len, header JSON {key, dim, count, built_at}
//            then per item: u32 len, id | u32 len, metadata JSON | dim x f64
namespace ragweld::vindex {

inline constexpr std::string_view kStoreMagic = "RGWD";
inline constexpr std::uint16_t kStoreFormatVersion = 1;
inline constexpr std::string_view kStoreFileExtension = ".rgwd";

/// Throws kNotSealed for an unsealed store.
std::string encode_store(const VectorStore& store);
/// Throws kCorruptFile, kFormatVersionMismatch or kChecksumMismatch. The
/// returned store is sealed.
std::shared_ptr<VectorStore> decode_store(std::string_view bytes);

void save_store(const VectorStore& store, const std::filesystem::path& path);
std::shared_ptr<VectorStore> load_store(const std::filesystem::path& path);

/// "<lang>_<modality>.rgwd"
std::string store_file_name(const StoreKey& key);

/// Writes every store to `dir` (created if needed).
void save_registry(const StoreRegistry& registry, const std::filesystem::path& dir);
/// Loads every *.rgwd file in `dir`.
StoreRegistry load_registry(const std::filesystem::path& dir);

}  // namespace ragweld::vindex
