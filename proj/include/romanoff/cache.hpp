#pragma once

// On-disk memo of smallest-prime-factor tables, keyed by limit.
//
// File <dir>/spf-<limit>.bin:
//   8 bytes  magic "RLSPFTAB"
//   u32      format version (1)
//   u32      entry width in bytes (4)
//   u64      limit
//   u64      FNV-1a 64 of the table bytes
//   u32[limit + 1] table, host byte order
// Anything that does not match is ignored and rebuilt.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "romanoff/arith.hpp"
#include "romanoff/sieve.hpp"

namespace romanoff {

inline constexpr char kCacheMagic[8] = {'R', 'L', 'S', 'P', 'F', 'T', 'A', 'B'};
inline constexpr u32 kCacheVersion = 1;

inline u64 fnv1a64(const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  u64 h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::filesystem::path sieve_cache_path(const std::filesystem::path& dir, u64 limit) {
  return dir / ("spf-" + std::to_string(limit) + ".bin");
}

inline std::optional<FactorSieve> read_sieve_cache(const std::filesystem::path& file, u64 limit) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  u32 version = 0;
  u32 width = 0;
  u64 stored_limit = 0;
  u64 checksum = 0;
  in.read(magic, sizeof magic);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(reinterpret_cast<char*>(&width), sizeof width);
  in.read(reinterpret_cast<char*>(&stored_limit), sizeof stored_limit);
  in.read(reinterpret_cast<char*>(&checksum), sizeof checksum);
  if (!in || std::memcmp(magic, kCacheMagic, sizeof magic) != 0 || version != kCacheVersion ||
      width != sizeof(u32) || stored_limit != limit) {
    return std::nullopt;
  }
  std::vector<u32> table(limit + 1);
  in.read(reinterpret_cast<char*>(table.data()), static_cast<std::streamsize>(table.size() * sizeof(u32)));
  if (!in || in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  if (fnv1a64(table.data(), table.size() * sizeof(u32)) != checksum) return std::nullopt;
  try {
    return FactorSieve::from_table(std::move(table));
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

// Writes through a temporary file and renames, so readers never see a partial table.
inline bool write_sieve_cache(const std::filesystem::path& file, const FactorSieve& sieve) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    const auto& table = sieve.table();
    const u32 version = kCacheVersion;
    const u32 width = sizeof(u32);
    const u64 limit = sieve.limit();
    const u64 checksum = fnv1a64(table.data(), table.size() * sizeof(u32));
    out.write(kCacheMagic, sizeof kCacheMagic);
    out.write(reinterpret_cast<const char*>(&version), sizeof version);
    out.write(reinterpret_cast<const char*>(&width), sizeof width);
    out.write(reinterpret_cast<const char*>(&limit), sizeof limit);
    out.write(reinterpret_cast<const char*>(&checksum), sizeof checksum);
    out.write(reinterpret_cast<const char*>(table.data()), static_cast<std::streamsize>(table.size() * sizeof(u32)));
    if (!out) return false;
  }
  std::filesystem::rename(tmp, file, ec);
  return !ec;
}

// Sieve from ROMANOFF_LAB_CACHE when present and valid, otherwise built and stored.
inline FactorSieve load_or_build_sieve(u64 limit, u64 cap = kDefaultSieveCap) {
  const char* dir = std::getenv("ROMANOFF_LAB_CACHE");
  if (dir == nullptr || *dir == '\0') return FactorSieve(limit, cap);
  if (limit < 2 || limit > cap) return FactorSieve(limit, cap);  // throws
  const auto file = sieve_cache_path(dir, limit);
  if (auto cached = read_sieve_cache(file, limit)) return std::move(*cached);
  FactorSieve sieve(limit, cap);
  write_sieve_cache(file, sieve);
  return sieve;
}

}  // namespace romanoff
