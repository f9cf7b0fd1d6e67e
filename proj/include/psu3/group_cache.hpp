#ifndef PSU3_GROUP_CACHE_HPP_
#define PSU3_GROUP_CACHE_HPP_

/**
 * @file group_cache.hpp
 * @brief Versioned binary cache for brute-force groups and their catalogs.
 *
 * Every file starts with an 8-byte magic, a format version, a record tag
 * and the key (kind, q, modulus code of GF(q^2)). Integers are written
 * little-endian. A file whose header does not match the requested key or
 * the current version is ignored and rebuilt.
 */

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psu3/brute_group.hpp"

namespace psu3 {

inline constexpr std::uint32_t kCacheFormatVersion = 1;
inline constexpr std::string_view kCacheMagic{"PSU3KIT\n", 8};
inline constexpr const char* kCacheDirEnv = "PSU3KIT_CACHE_DIR";

enum class CacheRecord : std::uint8_t { Group = 1, Catalog = 2 };

namespace detail {

class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void raw(std::string_view s) { out_.append(s); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view in) : in_(in) {}
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(in_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
    return v;
  }
  std::string_view raw(std::size_t n) {
    need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > in_.size()) throw std::runtime_error("cache record is truncated");
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

struct CacheHeader {
  CacheRecord record;
  GroupKind kind;
  std::uint64_t q;
  std::uint64_t modulus;
};

inline void write_header(ByteWriter& w, const CacheHeader& h) {
  w.raw(kCacheMagic);
  w.u32(kCacheFormatVersion);
  w.u8(static_cast<std::uint8_t>(h.record));
  w.u8(static_cast<std::uint8_t>(h.kind));
  w.u64(h.q);
  w.u64(h.modulus);
}

inline CacheHeader read_header(ByteReader& r) {
  if (r.raw(kCacheMagic.size()) != kCacheMagic) throw std::runtime_error("not a psu3kit cache file");
  if (auto v = r.u32(); v != kCacheFormatVersion) {
    throw std::runtime_error("cache format version " + std::to_string(v) + " != " +
                             std::to_string(kCacheFormatVersion));
  }
  CacheHeader h{};
  h.record = static_cast<CacheRecord>(r.u8());
  const auto kind = r.u8();
  if (kind > static_cast<std::uint8_t>(GroupKind::PSU3)) throw std::runtime_error("cache: bad group kind");
  h.kind = static_cast<GroupKind>(kind);
  h.q = r.u64();
  h.modulus = r.u64();
  return h;
}

inline void expect_header(const CacheHeader& h, CacheRecord rec, GroupKind kind, std::uint64_t q,
                          std::uint64_t modulus) {
  if (h.record != rec || h.kind != kind || h.q != q || h.modulus != modulus) {
    throw std::runtime_error("cache record key does not match the request");
  }
}

}  // namespace detail

inline std::string serialize_group(const GroupTable& g) {
  detail::ByteWriter w;
  detail::write_header(w, {CacheRecord::Group, g.kind(), g.q().value, g.field().modulus_code()});
  w.u32(static_cast<std::uint32_t>(g.generator_keys().size()));
  for (auto k : g.generator_keys()) w.u64(k);
  w.u64(g.size());
  for (auto k : g.keys()) w.u64(k);
  return w.take();
}

inline GroupTable deserialize_group(std::string_view bytes) {
  detail::ByteReader r(bytes);
  const auto h = detail::read_header(r);
  if (h.record != CacheRecord::Group) throw std::runtime_error("cache record is not a group");
  const auto q = PrimePower::from_value(h.q);
  std::vector<std::uint64_t> gens(r.u32());
  for (auto& k : gens) k = r.u64();
  std::vector<std::uint64_t> keys(r.u64());
  for (auto& k : keys) k = r.u64();
  if (!r.done()) throw std::runtime_error("cache record has trailing bytes");
  auto g = GroupTable::from_keys(h.kind, q, std::move(gens), std::move(keys));
  detail::expect_header(h, CacheRecord::Group, g.kind(), g.q().value, g.field().modulus_code());
  return g;
}

inline std::string serialize_catalog(const GroupTable& g, const MaximalAbelianCatalog& cat) {
  detail::ByteWriter w;
  detail::write_header(w, {CacheRecord::Catalog, g.kind(), g.q().value, g.field().modulus_code()});
  w.u64(cat.nodes);
  w.u32(static_cast<std::uint32_t>(cat.representatives.size()));
  for (const auto& s : cat.representatives) {
    w.u32(static_cast<std::uint32_t>(s.size()));
    for (auto x : s) w.u32(x);
  }
  return w.take();
}

inline MaximalAbelianCatalog deserialize_catalog(const GroupTable& g, std::string_view bytes) {
  detail::ByteReader r(bytes);
  const auto h = detail::read_header(r);
  detail::expect_header(h, CacheRecord::Catalog, g.kind(), g.q().value, g.field().modulus_code());
  MaximalAbelianCatalog cat;
  cat.kind = g.kind();
  cat.q = g.q().value;
  cat.nodes = r.u64();
  const std::uint32_t n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    Subgroup s(r.u32());
    for (auto& x : s) {
      x = r.u32();
      if (x >= g.size()) throw std::runtime_error("cache catalog refers to a missing element");
    }
    ++cat.class_counts[s.size()];
    cat.representatives.push_back(std::move(s));
  }
  if (!r.done()) throw std::runtime_error("cache record has trailing bytes");
  return cat;
}

/**
 * Directory-backed cache. Misses and unreadable files fall back to a fresh
 * build, which is then written back.
 */
class GroupCache {
 public:
  explicit GroupCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// $PSU3KIT_CACHE_DIR, else $XDG_CACHE_HOME/psu3kit, else ~/.cache/psu3kit.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "psu3kit";
    if (const char* home = std::getenv("HOME"); home && *home) {
      return std::filesystem::path(home) / ".cache" / "psu3kit";
    }
    return std::filesystem::temp_directory_path() / "psu3kit";
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path group_path(GroupKind kind, const PrimePower& q, std::uint64_t modulus) const {
    return dir_ / (stem(kind, q, modulus) + ".group");
  }

  std::filesystem::path catalog_path(GroupKind kind, const PrimePower& q, std::uint64_t modulus) const {
    return dir_ / (stem(kind, q, modulus) + ".catalog");
  }

  GroupTable group(GroupKind kind, const PrimePower& q) {
    const auto modulus = FiniteField::build(q.p, 2 * q.alpha).modulus_code();
    const auto path = group_path(kind, q, modulus);
    if (auto bytes = read_file(path)) {
      try {
        auto g = deserialize_group(*bytes);
        if (g.kind() == kind && g.q() == q) return g;
      } catch (const std::exception&) {
        // stale or corrupt; rebuild below
      }
    }
    auto g = build_group(kind, q);
    write_file(path, serialize_group(g));
    return g;
  }

  MaximalAbelianCatalog catalog(const GroupTable& g, std::uint64_t node_budget = kDefaultNodeBudget) {
    const auto path = catalog_path(g.kind(), g.q(), g.field().modulus_code());
    if (auto bytes = read_file(path)) {
      try {
        return deserialize_catalog(g, *bytes);
      } catch (const std::exception&) {
        // stale or corrupt; rebuild below
      }
    }
    auto cat = maximal_abelian_orders(g, node_budget);
    write_file(path, serialize_catalog(g, cat));
    return cat;
  }

 private:
  static std::string stem(GroupKind kind, const PrimePower& q, std::uint64_t modulus) {
    return group_kind_name(kind) + "_q" + std::to_string(q.value) + "_m" + std::to_string(modulus) + "_v" +
           std::to_string(kCacheFormatVersion);
  }

  static std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  /// Best effort: a read-only cache directory only costs rebuild time.
  static void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return;
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
  }

  std::filesystem::path dir_;
};

}  // namespace psu3

#endif  // PSU3_GROUP_CACHE_HPP_
