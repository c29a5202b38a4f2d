#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtk/chartab.hpp"
#include "dtk/ydcat.hpp"

namespace dtk {

/// Canonical cache key: a 64-bit FNV-1a hash over the degree, the sorted
/// generator image arrays, and the cache format version, in hex.
std::string group_cache_key(const PermGroup& g);

/// On-disk character-table and modular-data cache for one group, stored as a
/// single JSON file <key>.json in the cache directory. Loads lazily, records
/// everything computed, and writes atomically (temp file + rename). Entries
/// are validated against recomputed class data before use.
class TableCache {
public:
  TableCache(std::filesystem::path dir, const PermGroup& g);
  ~TableCache();

  static std::string subgroup_key(const std::vector<std::uint32_t>& element_indices);

  std::optional<CharacterTable> load_table(const std::string& key, const GroupClassesPtr& host,
                                           std::uint64_t conductor) const;
  void store_table(const std::string& key, const CharacterTable& table) const;

  std::optional<ModularData> load_modular() const;
  void store_modular(const ModularData& md) const;

  void save() const;
  const std::filesystem::path& file() const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Cache directory from the environment (DOUBLE_TOOLKIT_CACHE), if set.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace dtk
