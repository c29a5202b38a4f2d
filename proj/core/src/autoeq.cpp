#include "dtk/autoeq.hpp"

#include <algorithm>
#include <numeric>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"

namespace dtk {

namespace {

std::uint64_t unit_residue(const DoubleCategory& cat, std::int64_t r) {
  std::uint64_t e = cat.conductor();
  std::uint64_t rn = normalize_mod(r, e);
  if (std::gcd(rn, e) != 1) throw InputError("autoequivalence: r not coprime to exp(G)");
  return rn;
}

SimplePermutation build(const DoubleCategory& cat, const std::string& label, std::int64_t r,
                        std::uint32_t (*image)(const DoubleCategory&, std::uint32_t,
                                               std::int64_t)) {
  SimplePermutation out{label, r, {}};
  const std::size_t m = cat.simples().size();
  out.images.resize(m);
  std::vector<bool> hit(m, false);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t img = image(cat, i, r);
    out.images[i] = img;
    if (hit[img]) throw ConsistencyError("autoequivalence is not injective on simples");
    hit[img] = true;
  }
  return out;
}

}  // namespace

std::uint32_t sigma_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r) {
  unit_residue(cat, r);
  const SimpleYD& s = cat.simples()[i];
  const CharacterTable& tab = cat.table(s.class_index);
  ClassFunction moved = adams(tab.irreducibles[s.irr_index], r);
  auto idx = tab.index_of(moved);
  if (!idx) throw ConsistencyError("sigma: Adams image is not an irreducible of the table");
  return cat.simple_index(s.class_index, static_cast<std::uint32_t>(*idx));
}

std::uint32_t tau_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r) {
  unit_residue(cat, r);
  const SimpleYD& s = cat.simples()[i];
  const Permutation& rep = cat.classes().reps[s.class_index];
  Permutation powered = rep.power(r);
  std::uint32_t target = cat.classes().class_of(cat.group(), powered);
  auto x = conjugating_element(cat.group(), powered, cat.classes().reps[target]);
  if (!x) throw ConsistencyError("tau: power not conjugate to its class representative");
  const CharacterTable& src = cat.table(s.class_index);
  const CharacterTable& dst = cat.table(target);
  ClassFunction moved = transport(src.irreducibles[s.irr_index], *x, dst.host);
  auto idx = dst.index_of(moved);
  if (!idx) throw ConsistencyError("tau: transported character is not in the target table");
  return cat.simple_index(target, static_cast<std::uint32_t>(*idx));
}

std::uint32_t psi_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r) {
  std::uint64_t rn = unit_residue(cat, r);
  std::uint64_t s = invmod(rn, cat.conductor());
  return tau_image(cat, sigma_image(cat, i, static_cast<std::int64_t>(rn)),
                   static_cast<std::int64_t>(s));
}

std::uint32_t galois_symmetry_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r) {
  return tau_image(cat, sigma_image(cat, i, r), r);
}

SimplePermutation sigma(const DoubleCategory& cat, std::int64_t r) {
  return build(cat, "sigma", r, sigma_image);
}
SimplePermutation tau(const DoubleCategory& cat, std::int64_t r) {
  return build(cat, "tau", r, tau_image);
}
SimplePermutation psi(const DoubleCategory& cat, std::int64_t r) {
  return build(cat, "psi", r, psi_image);
}
SimplePermutation galois_symmetry(const DoubleCategory& cat, std::int64_t r) {
  return build(cat, "galois_symmetry", r, galois_symmetry_image);
}

std::vector<std::vector<std::uint32_t>> orbits(const DoubleCategory& cat,
                                               const std::set<AutoeqOp>& ops,
                                               std::vector<std::int64_t> residues) {
  const std::size_t m = cat.simples().size();
  if (residues.empty())
    for (std::uint64_t r : prime_residue_generators(cat.conductor()))
      residues.push_back(static_cast<std::int64_t>(r));

  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  for (std::int64_t r : residues) {
    for (AutoeqOp op : ops) {
      SimplePermutation p = op == AutoeqOp::sigma ? sigma(cat, r)
                            : op == AutoeqOp::tau ? tau(cat, r)
                                                  : psi(cat, r);
      for (std::uint32_t i = 0; i < m; ++i) unite(i, p.images[i]);
    }
  }

  std::vector<std::vector<std::uint32_t>> parts(m);
  for (std::uint32_t i = 0; i < m; ++i) parts[find(i)].push_back(i);
  std::erase_if(parts, [](const auto& v) { return v.empty(); });
  return parts;
}

}  // namespace dtk
