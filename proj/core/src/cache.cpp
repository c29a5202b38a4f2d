#include "dtk/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>

#include "dtk/error.hpp"
#include "dtk/serialize.hpp"

namespace dtk {

namespace {

constexpr const char* kFormatVersion = "double-toolkit-cache-v1";

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string group_cache_key(const PermGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char* c = kFormatVersion; *c; ++c) h = fnv1a(h, static_cast<std::uint64_t>(*c));
  h = fnv1a(h, g.degree());
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& p : g.generators()) gens.push_back(p.images());
  std::sort(gens.begin(), gens.end());
  for (const auto& images : gens)
    for (std::uint32_t v : images) h = fnv1a(h, v);
  return hex64(h);
}

struct TableCache::Impl {
  std::filesystem::path file;
  mutable std::mutex mu;
  mutable Json data;
  mutable bool dirty = false;
};

TableCache::TableCache(std::filesystem::path dir, const PermGroup& g)
    : impl_(std::make_unique<Impl>()) {
  std::filesystem::create_directories(dir);
  impl_->file = dir / (group_cache_key(g) + ".json");
  impl_->data = Json{{"format", kFormatVersion},
                     {"group",
                      Json{{"degree", g.degree()},
                           {"generators", Json::array()}}},
                     {"tables", Json::object()},
                     {"modular", nullptr}};
  for (const auto& p : g.generators())
    impl_->data["group"]["generators"].push_back(permutation_to_json(p));
  if (std::filesystem::exists(impl_->file)) {
    try {
      std::ifstream in(impl_->file);
      Json loaded = Json::parse(in);
      if (loaded.value("format", "") == kFormatVersion &&
          loaded.at("group").at("degree") == g.degree())
        impl_->data = std::move(loaded);
    } catch (...) {
      // Unreadable cache files are ignored and rewritten on save.
    }
  }
}

TableCache::~TableCache() = default;

const std::filesystem::path& TableCache::file() const { return impl_->file; }

std::string TableCache::subgroup_key(const std::vector<std::uint32_t>& element_indices) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : element_indices) h = fnv1a(h, v);
  return hex64(h);
}

std::optional<CharacterTable> TableCache::load_table(const std::string& key,
                                                     const GroupClassesPtr& host,
                                                     std::uint64_t conductor) const {
  Json entry;
  {
    std::lock_guard lk(impl_->mu);
    auto& tables = impl_->data["tables"];
    auto it = tables.find(key);
    if (it == tables.end()) return std::nullopt;
    entry = *it;
  }
  try {
    if (entry.at("conductor").get<std::uint64_t>() != conductor) return std::nullopt;
    const Json& reps = entry.at("class_reps");
    if (reps.size() != host->classes.count()) return std::nullopt;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (permutation_from_json(reps[c]) != host->classes.reps[c]) return std::nullopt;
    CharacterTable table;
    table.host = host;
    for (const auto& row : entry.at("irreducibles"))
      table.irreducibles.emplace_back(host, cyclo_vector_from_json(row));
    table.degrees = entry.at("degrees").get<std::vector<std::uint64_t>>();
    if (table.irreducibles.size() != host->classes.count() ||
        table.degrees.size() != table.irreducibles.size())
      return std::nullopt;
    return table;
  } catch (...) {
    return std::nullopt;
  }
}

void TableCache::store_table(const std::string& key, const CharacterTable& table) const {
  Json entry;
  entry["conductor"] = table.irreducibles.empty()
                           ? 1
                           : table.irreducibles[0].values()[0].conductor();
  entry["class_reps"] = Json::array();
  for (const auto& rep : table.host->classes.reps)
    entry["class_reps"].push_back(permutation_to_json(rep));
  entry["degrees"] = table.degrees;
  entry["irreducibles"] = Json::array();
  for (const auto& chi : table.irreducibles)
    entry["irreducibles"].push_back(cyclo_vector_to_json(chi.values()));
  std::lock_guard lk(impl_->mu);
  impl_->data["tables"][key] = std::move(entry);
  impl_->dirty = true;
}

std::optional<ModularData> TableCache::load_modular() const {
  Json entry;
  {
    std::lock_guard lk(impl_->mu);
    entry = impl_->data.value("modular", Json());
  }
  if (entry.is_null() || !entry.is_object()) return std::nullopt;
  try {
    ModularData md;
    md.s = cyclo_matrix_from_json(entry.at("smatrix"));
    md.t = cyclo_vector_from_json(entry.at("tmatrix"));
    md.dims = entry.at("dims").get<std::vector<std::uint64_t>>();
    if (md.s.size() != md.t.size() || md.s.size() != md.dims.size()) return std::nullopt;
    return md;
  } catch (...) {
    return std::nullopt;
  }
}

void TableCache::store_modular(const ModularData& md) const {
  Json entry;
  entry["smatrix"] = cyclo_matrix_to_json(md.s);
  entry["tmatrix"] = cyclo_vector_to_json(md.t);
  entry["dims"] = md.dims;
  std::lock_guard lk(impl_->mu);
  impl_->data["modular"] = std::move(entry);
  impl_->dirty = true;
}

void TableCache::save() const {
  std::lock_guard lk(impl_->mu);
  if (!impl_->dirty) return;
  std::filesystem::path tmp = impl_->file;
  std::random_device rd;
  tmp += ".tmp-" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cache: cannot write " + tmp.string());
    out << impl_->data.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, impl_->file);
  impl_->dirty = false;
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  if (const char* env = std::getenv("DOUBLE_TOOLKIT_CACHE"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace dtk
