#include "ragweld/vindex/persist.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ragweld/core/error.hpp"
#include "ragweld/core/serialize.hpp"

namespace ragweld::vindex {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f64(std::string& out, double x) {
  const auto bits = std::bit_cast<std::uint64_t>(x);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xFF));
}

void put_blob(std::string& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.append(s);
}

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  crc = ::crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t uint(int width) {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= std::uint64_t{static_cast<unsigned char>(bytes_[pos_ + i])} << (8 * i);
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  double f64() { return std::bit_cast<double>(uint(8)); }
  std::string_view blob() {
    const auto len = static_cast<std::size_t>(uint(4));
    need(len);
    auto s = bytes_.substr(pos_, len);
    pos_ += len;
    return s;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw Error(Errc::kCorruptFile, "store file truncated");
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string encode_store(const VectorStore& store) {
  if (!store.sealed()) throw Error(Errc::kNotSealed, "only sealed stores can be saved");
  std::string body;
  const json header = {
      {"key",
       {{"language", std::string(language_code(store.key().language))},
        {"modality", std::string(modality_name(store.key().modality))}}},
      {"dim", store.dim()},
      {"count", store.size()},
      {"built_at", store.built_at()},
  };
  put_blob(body, header.dump());
  for (const auto& item : store.items()) {
    put_blob(body, item->id);
    put_blob(body, item_metadata(*item).dump());
    for (double x : item->embedding) put_f64(body, x);
  }

  std::string out(kStoreMagic);
  put_u16(out, kStoreFormatVersion);
  out += body;
  put_u32(out, crc32_of(body));
  return out;
}

std::shared_ptr<VectorStore> decode_store(std::string_view bytes) {
  const std::size_t prefix = kStoreMagic.size() + 2;
  if (bytes.size() < prefix + 4 || bytes.substr(0, kStoreMagic.size()) != kStoreMagic) {
    throw Error(Errc::kCorruptFile, "not a store file");
  }
  const auto version = static_cast<std::uint16_t>(static_cast<unsigned char>(bytes[4]) |
                                                   (static_cast<unsigned char>(bytes[5]) << 8));
  if (version != kStoreFormatVersion) {
    throw Error(Errc::kFormatVersionMismatch, "store format version " + std::to_string(version) +
                                                  ", supported " +
                                                  std::to_string(kStoreFormatVersion));
  }
  const std::string_view body = bytes.substr(prefix, bytes.size() - prefix - 4);
  Reader trailer(bytes.substr(bytes.size() - 4));
  if (static_cast<std::uint32_t>(trailer.uint(4)) != crc32_of(body)) {
    throw Error(Errc::kChecksumMismatch, "store checksum mismatch");
  }

  Reader in(body);
  try {
    const json header = json::parse(in.blob());
    const StoreKey key{LanguageTag::parse(header.at("key").at("language").get<std::string>()).code(),
                       parse_modality(header.at("key").at("modality").get<std::string>())};
    const auto dim = header.at("dim").get<std::size_t>();
    const auto count = header.at("count").get<std::size_t>();
    auto store = std::make_shared<VectorStore>(key, dim, header.at("built_at").get<std::int64_t>());
    for (std::size_t i = 0; i < count; ++i) {
      CorpusItem item;
      item.id = std::string(in.blob());
      apply_item_metadata(json::parse(in.blob()), item);
      item.embedding.resize(dim);
      for (double& x : item.embedding) x = in.f64();
      store->append(std::move(item));
    }
    if (!in.done()) throw Error(Errc::kCorruptFile, "trailing bytes after last item");
    store->seal();
    return store;
  } catch (const json::exception& e) {
    throw Error(Errc::kCorruptFile, std::string("store metadata: ") + e.what());
  }
}

void save_store(const VectorStore& store, const fs::path& path) {
  const std::string bytes = encode_store(store);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::kIoFailure, "cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(Errc::kIoFailure, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(Errc::kIoFailure, "rename to " + path.string() + ": " + ec.message());
}

std::shared_ptr<VectorStore> load_store(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIoFailure, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(Errc::kIoFailure, "read failed: " + path.string());
  return decode_store(ss.str());
}

std::string store_file_name(const StoreKey& key) {
  return std::string(language_code(key.language)) + "_" + std::string(modality_name(key.modality)) +
         std::string(kStoreFileExtension);
}

void save_registry(const StoreRegistry& registry, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::kIoFailure, "cannot create " + dir.string() + ": " + ec.message());
  for (const StoreKey& key : registry.keys()) {
    save_store(registry.at(key), dir / store_file_name(key));
  }
}

StoreRegistry load_registry(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(Errc::kIoFailure, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == kStoreFileExtension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  StoreRegistry registry;
  for (const auto& f : files) registry.add(load_store(f));
  return registry;
}

}  // namespace ragweld::vindex
