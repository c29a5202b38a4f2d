#include "dtk/indicators.hpp"

#include <algorithm>
#include <map>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"
#include "dtk/parallel.hpp"

namespace dtk {

std::uint64_t counting_function(const PermGroup& g, const Permutation& gg, std::int64_t m,
                                const Permutation& y) {
  if (!g.contains(gg) || !g.contains(y)) throw InputError("counting_function: not in group");
  std::uint64_t count = 0;
  for (const auto& x : g.elements())
    if (x.power(m) == y && (gg * x).power(m) == y) ++count;
  return count;
}

std::vector<std::uint64_t> counting_table_full(const PermGroup& g, const Permutation& gg,
                                               std::int64_t m) {
  if (!g.contains(gg)) throw InputError("counting_table_full: not in group");
  std::vector<std::uint64_t> table(g.order(), 0);
  for (const auto& x : g.elements()) {
    Permutation u = x.power(m);
    if (u == (gg * x).power(m)) table[g.index_of(u)] += 1;
  }
  return table;
}

Cyclotomic indicator(const DoubleCategory& cat, std::uint32_t class_index,
                     std::uint32_t irr_index, std::uint64_t m) {
  const auto& totals = cat.counting_classwise(class_index, m);
  const CharacterTable& tab = cat.table(class_index);
  const ClassFunction& chi = tab.irreducibles[irr_index];
  Cyclotomic acc = Cyclotomic::zero(cat.conductor());
  for (std::size_t c = 0; c < totals.size(); ++c) {
    if (totals[c] == 0) continue;
    acc += chi.at_class(c).conjugate().scaled(Rational(static_cast<long>(totals[c])));
  }
  return acc.div_by_integer(static_cast<std::int64_t>(tab.host->group.order()));
}

IndicatorVector indicator_vector(const DoubleCategory& cat, std::uint32_t simple,
                                 std::uint64_t m_max) {
  if (m_max == 0) m_max = cat.conductor();
  const SimpleYD& s = cat.simples()[simple];
  IndicatorVector out{simple, m_max, {}};
  out.values.reserve(m_max);
  for (std::uint64_t m = 1; m <= m_max; ++m)
    out.values.push_back(indicator(cat, s.class_index, s.irr_index, m));
  return out;
}

std::vector<IndicatorVector> all_indicator_vectors(const DoubleCategory& cat,
                                                   std::uint64_t m_max, unsigned jobs) {
  if (m_max == 0) m_max = cat.conductor();
  // Warm the per-(class, m) counting tables in parallel; the per-simple
  // assembly afterwards is cheap.
  const std::size_t k = cat.classes().count();
  cat.simples();
  parallel_for(k * m_max, jobs, [&](std::size_t idx) {
    cat.counting_classwise(static_cast<std::uint32_t>(idx / m_max), 1 + idx % m_max);
  });
  std::vector<IndicatorVector> out(cat.simples().size());
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    out[i] = indicator_vector(cat, static_cast<std::uint32_t>(i), m_max);
  });
  return out;
}

bool check_counting_identity(const PermGroup& g, const Permutation& gg, const Permutation& y,
                             std::int64_t m, std::int64_t r) {
  if (std::gcd(normalize_mod(r, g.exponent()), g.exponent()) != 1)
    throw InputError("check_counting_identity: r not coprime to the exponent");
  return counting_function(g, gg, m, y) == counting_function(g, gg.power(r), m, y.power(r));
}

std::vector<std::vector<std::uint32_t>> i_equivalence_classes(const DoubleCategory& cat,
                                                              std::uint64_t m_max,
                                                              unsigned jobs) {
  auto vectors = all_indicator_vectors(cat, m_max, jobs);
  std::map<std::vector<Cyclotomic>, std::vector<std::uint32_t>, CycloLess> buckets;
  for (std::uint32_t i = 0; i < vectors.size(); ++i)
    buckets[vectors[i].values].push_back(i);
  std::vector<std::vector<std::uint32_t>> parts;
  parts.reserve(buckets.size());
  for (auto& [key, members] : buckets) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

}  // namespace dtk
