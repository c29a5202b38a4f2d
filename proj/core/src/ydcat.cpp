#include "dtk/ydcat.hpp"

#include <algorithm>

#include "dtk/cache.hpp"
#include "dtk/error.hpp"
#include "dtk/numutil.hpp"
#include "dtk/parallel.hpp"

namespace dtk {

struct DoubleCategory::CentralizerData {
  std::vector<std::uint32_t> element_indices;  // in the ambient group, ascending
  GroupClassesPtr host;
  std::shared_ptr<const CharacterTable> table;
};

struct DoubleCategory::PairData {
  std::vector<std::vector<std::uint32_t>> class_elems;  // element indices per class of G
  // Per element g: C(g) ascending, the same list grouped by class of h, and
  // the centralizer-local class of w_g^{-1} h w_g aligned with the sorted list.
  std::vector<std::vector<std::uint32_t>> commuting_sorted;
  std::vector<std::vector<std::uint32_t>> local_cls;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_class;
};

DoubleCategory::DoubleCategory(PermGroup g)
    : group_(std::move(g)), classes_(conjugacy_classes(group_)), conductor_(group_.exponent()) {
  by_class_.resize(classes_.count());
}

DoubleCategory::DoubleCategory(PermGroup g, std::filesystem::path cache_dir) : DoubleCategory(std::move(g)) {
  cache_ = std::make_unique<TableCache>(std::move(cache_dir), group_);
}

DoubleCategory::~DoubleCategory() = default;

bool DoubleCategory::cache_enabled() const { return cache_ != nullptr; }

const TableCache* DoubleCategory::cache() const { return cache_.get(); }

void DoubleCategory::save_cache() const {
  if (cache_) cache_->save();
}

const DoubleCategory::CentralizerData& DoubleCategory::centralizer_data(
    std::uint32_t class_index) const {
  {
    std::lock_guard lk(mu_);
    if (by_class_[class_index]) return *by_class_[class_index];
  }
  // Collect the centralizer's elements outside the lock; the scan is cheap
  // and deterministic, so duplicated work is harmless.
  const Permutation& rep = classes_.reps[class_index];
  std::vector<std::uint32_t> idx;
  std::vector<Permutation> elems;
  for (std::uint32_t ei = 0; ei < group_.order(); ++ei) {
    const Permutation& x = group_.elements()[ei];
    if (x * rep == rep * x) {
      idx.push_back(ei);
      elems.push_back(x);
    }
  }

  std::shared_future<std::shared_ptr<const CentralizerData>> fut;
  std::promise<std::shared_ptr<const CentralizerData>> prom;
  bool owner = false;
  {
    std::lock_guard lk(mu_);
    auto it = by_subgroup_.find(idx);
    if (it == by_subgroup_.end()) {
      owner = true;
      fut = prom.get_future().share();
      by_subgroup_.emplace(idx, fut);
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      auto data = std::make_shared<CentralizerData>();
      data->element_indices = idx;
      data->host = make_group_classes(PermGroup::from_elements(group_.degree(), std::move(elems)));
      std::shared_ptr<const CharacterTable> tab;
      if (cache_) {
        std::string key = TableCache::subgroup_key(idx);
        if (auto loaded = cache_->load_table(key, data->host, conductor_))
          tab = std::make_shared<const CharacterTable>(std::move(*loaded));
        if (!tab) {
          tab = std::make_shared<const CharacterTable>(
              character_table(data->host, conductor_, group_.order()));
          cache_->store_table(key, *tab);
        }
      } else {
        tab = std::make_shared<const CharacterTable>(
            character_table(data->host, conductor_, group_.order()));
      }
      data->table = std::move(tab);
      prom.set_value(std::move(data));
    } catch (...) {
      prom.set_exception(std::current_exception());
    }
  }
  auto data = fut.get();
  {
    std::lock_guard lk(mu_);
    by_class_[class_index] = data;
  }
  return *data;
}

const GroupClassesPtr& DoubleCategory::centralizer_host(std::uint32_t class_index) const {
  return centralizer_data(class_index).host;
}

const CharacterTable& DoubleCategory::table(std::uint32_t class_index) const {
  return *centralizer_data(class_index).table;
}

const std::vector<SimpleYD>& DoubleCategory::simples() const {
  std::call_once(simples_once_, [&] {
    simple_base_.resize(classes_.count());
    for (std::uint32_t a = 0; a < classes_.count(); ++a) {
      simple_base_[a] = static_cast<std::uint32_t>(simples_.size());
      const CharacterTable& tab = table(a);
      std::uint64_t coset_count = group_.order() / centralizer_host(a)->group.order();
      for (std::uint32_t irr = 0; irr < tab.size(); ++irr)
        simples_.push_back(SimpleYD{a, irr, static_cast<std::uint32_t>(simples_.size()),
                                    coset_count * tab.degrees[irr]});
    }
  });
  return simples_;
}

std::uint32_t DoubleCategory::simple_index(std::uint32_t class_index,
                                           std::uint32_t irr_index) const {
  simples();
  if (class_index >= classes_.count() || irr_index >= table(class_index).size())
    throw InputError("simple_index: label out of range");
  return simple_base_[class_index] + irr_index;
}

const DoubleCategory::PairData& DoubleCategory::pair_data() const {
  std::call_once(pair_once_, [&] {
    simples();
    auto pd = std::make_unique<PairData>();
    const std::uint64_t n = group_.order();
    const std::size_t k = classes_.count();
    pd->class_elems.resize(k);
    for (std::uint32_t ei = 0; ei < n; ++ei)
      pd->class_elems[classes_.class_of_element[ei]].push_back(ei);
    pd->commuting_sorted.resize(n);
    pd->local_cls.resize(n);
    pd->by_class.resize(n);
    for (std::uint32_t gi = 0; gi < n; ++gi) {
      const Permutation& g = group_.elements()[gi];
      std::uint32_t a = classes_.class_of_element[gi];
      const auto& data = centralizer_data(a);
      Permutation w = group_.elements()[classes_.conjugator_of_element[gi]];
      Permutation winv = w.inverse();
      pd->by_class[gi].resize(k);
      for (std::uint32_t hi = 0; hi < n; ++hi) {
        const Permutation& h = group_.elements()[hi];
        if (!(g * h == h * g)) continue;
        pd->commuting_sorted[gi].push_back(hi);
        Permutation local = winv * h * w;
        pd->local_cls[gi].push_back(
            data.host->classes.class_of_element[data.host->group.index_of(local)]);
        pd->by_class[gi][classes_.class_of_element[hi]].push_back(hi);
      }
    }
    pair_ = std::move(pd);
  });
  return *pair_;
}

std::uint32_t DoubleCategory::local_class(std::uint32_t g_elem, std::uint32_t h_elem) const {
  const PairData& pd = pair_data();
  const auto& lst = pd.commuting_sorted[g_elem];
  auto it = std::lower_bound(lst.begin(), lst.end(), h_elem);
  if (it == lst.end() || *it != h_elem)
    throw InputError("local_class: elements do not commute");
  return pd.local_cls[g_elem][static_cast<std::size_t>(it - lst.begin())];
}

const std::vector<std::uint32_t>& DoubleCategory::class_elements(std::uint32_t class_index) const {
  return pair_data().class_elems[class_index];
}

const std::vector<std::uint32_t>& DoubleCategory::commuting(std::uint32_t g_elem,
                                                            std::uint32_t class_of_h) const {
  return pair_data().by_class[g_elem][class_of_h];
}

const std::vector<std::uint32_t>& DoubleCategory::commuting_all(std::uint32_t g_elem) const {
  return pair_data().commuting_sorted[g_elem];
}

const Cyclotomic& DoubleCategory::yd_value(std::uint32_t i, std::uint32_t g_elem,
                                           std::uint32_t h_elem) const {
  const SimpleYD& s = simples()[i];
  return table(s.class_index).irreducibles[s.irr_index].values()[local_class(g_elem, h_elem)];
}

Cyclotomic DoubleCategory::yd_character(std::uint32_t i, const Permutation& g,
                                        const Permutation& h) const {
  if (!(g * h == h * g)) throw InputError("yd_character: degree and action must commute");
  std::uint32_t gi = group_.index_of(g);
  std::uint32_t hi = group_.index_of(h);
  const SimpleYD& s = simples()[i];
  if (classes_.class_of_element[gi] != s.class_index) return Cyclotomic::zero(conductor_);
  return yd_value(i, gi, hi);
}

const std::vector<std::uint64_t>& DoubleCategory::counting_classwise(std::uint32_t class_index,
                                                                     std::uint64_t m) const {
  std::uint64_t m_norm = m % conductor_;
  auto key = std::make_pair(class_index, m_norm);
  std::shared_future<std::shared_ptr<const std::vector<std::uint64_t>>> fut;
  std::promise<std::shared_ptr<const std::vector<std::uint64_t>>> prom;
  bool owner = false;
  {
    std::lock_guard lk(mu_);
    auto it = counting_.find(key);
    if (it == counting_.end()) {
      owner = true;
      fut = prom.get_future().share();
      counting_.emplace(key, fut);
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      const auto& data = centralizer_data(class_index);
      const Permutation& rep = classes_.reps[class_index];
      auto counts =
          std::make_shared<std::vector<std::uint64_t>>(data.host->classes.count(), 0);
      std::int64_t mm = static_cast<std::int64_t>(m_norm);
      for (const auto& x : group_.elements()) {
        Permutation u = x.power(mm);
        if (u != (rep * x).power(mm)) continue;
        // u = x^m commutes with x and with rep*x, hence with rep itself,
        // so the solution count vanishes off the centralizer.
        auto pos = data.host->group.find(u);
        if (!pos) throw ConsistencyError("counting: solution outside the centralizer");
        (*counts)[data.host->classes.class_of_element[*pos]] += 1;
      }
      prom.set_value(std::move(counts));
    } catch (...) {
      prom.set_exception(std::current_exception());
    }
  }
  // The shared state owned by the futures map keeps the vector alive.
  return *fut.get();
}

std::vector<Cyclotomic> tmatrix(const DoubleCategory& cat) {
  std::vector<Cyclotomic> out;
  out.reserve(cat.simples().size());
  for (const auto& s : cat.simples()) {
    const CharacterTable& tab = cat.table(s.class_index);
    const Cyclotomic& top = tab.irreducibles[s.irr_index].at(cat.classes().reps[s.class_index]);
    out.push_back(top.div_by_integer(static_cast<std::int64_t>(tab.degrees[s.irr_index])));
  }
  return out;
}

std::vector<std::vector<Cyclotomic>> smatrix_unnormalized(const DoubleCategory& cat,
                                                          unsigned jobs) {
  const auto& simples = cat.simples();
  const std::size_t m = simples.size();
  std::vector<std::vector<Cyclotomic>> s(m);
  parallel_for(m, jobs, [&](std::size_t i) {
    std::vector<Cyclotomic> row(m, Cyclotomic::zero(cat.conductor()));
    std::uint32_t a = simples[i].class_index;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint32_t b = simples[j].class_index;
      Cyclotomic acc = Cyclotomic::zero(cat.conductor());
      for (std::uint32_t ge : cat.class_elements(a)) {
        for (std::uint32_t he : cat.commuting(ge, b))
          acc += cat.yd_value(static_cast<std::uint32_t>(i), ge, he) *
                 cat.yd_value(static_cast<std::uint32_t>(j), he, ge);
      }
      row[j] = std::move(acc);
    }
    s[i] = std::move(row);
  });
  return s;
}

ModularData modular_data(const DoubleCategory& cat, unsigned jobs) {
  std::vector<std::uint64_t> dims;
  dims.reserve(cat.simples().size());
  for (const auto& s : cat.simples()) dims.push_back(s.dim);
  if (cat.cache()) {
    if (auto loaded = cat.cache()->load_modular())
      if (loaded->dims == dims) return *loaded;
  }
  ModularData md;
  md.dims = std::move(dims);
  md.t = tmatrix(cat);
  md.s = smatrix_unnormalized(cat, jobs);
  if (cat.cache()) cat.cache()->store_modular(md);
  return md;
}

std::uint64_t verlinde(const DoubleCategory& cat, const ModularData& md, std::uint32_t i,
                       std::uint32_t j, std::uint32_t k) {
  const std::size_t m = md.s.size();
  Cyclotomic acc = Cyclotomic::zero(cat.conductor());
  for (std::size_t l = 0; l < m; ++l) {
    Cyclotomic term = md.s[i][l] * md.s[j][l] * md.s[k][l].conjugate();
    acc += term.div_by_integer(static_cast<std::int64_t>(md.dims[l]));
  }
  std::int64_t order = static_cast<std::int64_t>(cat.group().order());
  acc = acc.div_by_integer(order).div_by_integer(order);
  auto value = acc.as_integer();
  if (!value || *value < 0)
    throw ConsistencyError("verlinde: non-integer or negative multiplicity (convention bug)");
  return static_cast<std::uint64_t>(value->get_ui());
}

VerlindeTable::VerlindeTable(const DoubleCategory& cat, const ModularData& md)
    : md_(md), conductor_(cat.conductor()) {
  const std::size_t m = md.s.size();
  s_conj_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    s_conj_[k].reserve(m);
    for (std::size_t l = 0; l < m; ++l) s_conj_[k].push_back(md.s[k][l].conjugate());
  }
  Integer order_sq = Integer(cat.group().order()) * Integer(cat.group().order());
  column_scale_.reserve(m);
  for (std::size_t l = 0; l < m; ++l)
    column_scale_.emplace_back(Integer(1), Integer(md.dims[l]) * order_sq);
}

std::vector<std::uint64_t> VerlindeTable::row(std::uint32_t i, std::uint32_t j) const {
  const std::size_t m = md_.s.size();
  std::vector<Cyclotomic> acc(m, Cyclotomic::zero(conductor_));
  for (std::size_t l = 0; l < m; ++l) {
    Cyclotomic p = (md_.s[i][l] * md_.s[j][l]).scaled(column_scale_[l]);
    if (p.is_zero()) continue;
    for (std::size_t k = 0; k < m; ++k) acc[k] += p * s_conj_[k][l];
  }
  std::vector<std::uint64_t> out(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    auto value = acc[k].as_integer();
    if (!value || *value < 0)
      throw ConsistencyError("verlinde: non-integer or negative multiplicity (convention bug)");
    out[k] = static_cast<std::uint64_t>(value->get_ui());
  }
  return out;
}

std::uint64_t tensor_multiplicity_direct(const DoubleCategory& cat, std::uint32_t i,
                                         std::uint32_t j, std::uint32_t k) {
  const auto& simples = cat.simples();
  std::uint32_t ai = simples[i].class_index;
  std::uint32_t aj = simples[j].class_index;
  std::uint32_t ak = simples[k].class_index;
  const PermGroup& g = cat.group();
  Cyclotomic acc = Cyclotomic::zero(cat.conductor());
  for (std::uint32_t ge : cat.class_elements(ak)) {
    const Permutation& gp = g.elements()[ge];
    for (std::uint32_t he : cat.commuting_all(ge)) {
      // chi~_{i (x) j}(g, h) = sum over factorizations g = g1 g2 with h
      // commuting with both parts.
      Cyclotomic inner = Cyclotomic::zero(cat.conductor());
      for (std::uint32_t g1e : cat.commuting(he, ai)) {
        Permutation g2 = g.elements()[g1e].inverse() * gp;
        std::uint32_t g2e = g.index_of(g2);
        if (cat.classes().class_of_element[g2e] != aj) continue;
        inner += cat.yd_value(i, g1e, he) * cat.yd_value(j, g2e, he);
      }
      if (!inner.is_zero()) acc += inner * cat.yd_value(k, ge, he).conjugate();
    }
  }
  acc = acc.div_by_integer(static_cast<std::int64_t>(g.order()));
  auto value = acc.as_integer();
  if (!value || *value < 0)
    throw ConsistencyError("tensor_multiplicity_direct: non-integer multiplicity");
  return static_cast<std::uint64_t>(value->get_ui());
}

std::vector<std::uint64_t> tensor_decomposition_direct(const DoubleCategory& cat,
                                                       std::uint32_t i, std::uint32_t j) {
  const auto& simples = cat.simples();
  std::uint32_t ai = simples[i].class_index;
  std::uint32_t aj = simples[j].class_index;
  const PermGroup& g = cat.group();
  const std::size_t m = simples.size();
  std::vector<Cyclotomic> acc(m, Cyclotomic::zero(cat.conductor()));
  for (std::uint32_t b = 0; b < cat.classes().count(); ++b) {
    for (std::uint32_t ge : cat.class_elements(b)) {
      const Permutation& gp = g.elements()[ge];
      for (std::uint32_t he : cat.commuting_all(ge)) {
        Cyclotomic inner = Cyclotomic::zero(cat.conductor());
        for (std::uint32_t g1e : cat.commuting(he, ai)) {
          Permutation g2 = g.elements()[g1e].inverse() * gp;
          std::uint32_t g2e = g.index_of(g2);
          if (cat.classes().class_of_element[g2e] != aj) continue;
          inner += cat.yd_value(i, g1e, he) * cat.yd_value(j, g2e, he);
        }
        if (inner.is_zero()) continue;
        for (std::uint32_t irr = 0; irr < cat.table(b).size(); ++irr) {
          std::uint32_t k = cat.simple_index(b, irr);
          acc[k] += inner * cat.yd_value(k, ge, he).conjugate();
        }
      }
    }
  }
  std::vector<std::uint64_t> out(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    auto value = acc[k].div_by_integer(static_cast<std::int64_t>(g.order())).as_integer();
    if (!value || *value < 0)
      throw ConsistencyError("tensor_decomposition_direct: non-integer multiplicity");
    out[k] = static_cast<std::uint64_t>(value->get_ui());
  }
  return out;
}

}  // namespace dtk
