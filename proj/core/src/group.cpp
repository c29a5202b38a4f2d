#include "dtk/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"

namespace dtk {

namespace {

std::vector<Permutation> close_under_products(std::size_t degree,
                                              const std::vector<Permutation>& gens,
                                              std::uint64_t cap) {
  std::unordered_set<Permutation, PermHash> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      Permutation next = g * cur;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("group too large: order exceeds cap");
        todo.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

void PermGroup::finish(std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  elems_ = std::move(elems);
  index_.reserve(elems_.size() * 2);
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
  exponent_ = 1;
  for (const auto& p : elems_) exponent_ = checked_lcm(exponent_, p.order());
}

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens,
                                     std::uint64_t order_cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  PermGroup out;
  out.degree_ = degree;
  out.gens_ = std::move(gens);
  out.finish(close_under_products(degree, out.gens_, order_cap));
  return out;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elems) {
  for (const auto& g : elems)
    if (g.degree() != degree) throw InputError("element degree mismatch");
  PermGroup out;
  out.degree_ = degree;
  out.finish(std::move(elems));
  if (out.elems_.empty() || !out.elems_[0].is_identity())
    throw InputError("element list does not contain the identity");
  // Greedy small generating set, scanning in the canonical element order.
  std::unordered_set<Permutation, PermHash> closed;
  closed.insert(out.elems_[0]);
  for (const auto& e : out.elems_) {
    if (closed.count(e)) continue;
    out.gens_.push_back(e);
    auto cl = close_under_products(degree, out.gens_, out.elems_.size());
    closed = {cl.begin(), cl.end()};
    if (closed.size() == out.elems_.size()) break;
  }
  if (closed.size() != out.elems_.size())
    throw InputError("element list is not closed under products");
  return out;
}

std::optional<std::uint32_t> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw InputError("permutation is not a group element");
  return it->second;
}

std::uint32_t ConjugacyClasses::class_of(const PermGroup& g, const Permutation& p) const {
  return class_of_element[g.index_of(p)];
}

ConjugacyClasses conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  ConjugacyClasses out;
  out.class_of_element.assign(elems.size(), UINT32_MAX);
  out.conjugator_of_element.assign(elems.size(), 0);
  const auto& gens = g.generators();
  std::vector<std::uint32_t> queue;
  for (std::uint32_t seed = 0; seed < elems.size(); ++seed) {
    if (out.class_of_element[seed] != UINT32_MAX) continue;
    // The seed is the smallest unassigned element, hence the smallest of its
    // class: earlier members would already have been assigned.
    std::uint32_t cls = static_cast<std::uint32_t>(out.reps.size());
    out.reps.push_back(elems[seed]);
    out.class_of_element[seed] = cls;
    out.conjugator_of_element[seed] = 0;  // identity
    queue.assign(1, seed);
    std::uint64_t size = 1;
    while (!queue.empty()) {
      std::uint32_t cur = queue.back();
      queue.pop_back();
      for (const auto& x : gens) {
        Permutation moved = conjugated(x, elems[cur]);
        std::uint32_t mi = g.index_of(moved);
        if (out.class_of_element[mi] != UINT32_MAX) continue;
        out.class_of_element[mi] = cls;
        out.conjugator_of_element[mi] = g.index_of(x * elems[out.conjugator_of_element[cur]]);
        queue.push_back(mi);
        ++size;
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

Subgroup::Subgroup(const PermGroup* parent, PermGroup sub) : parent_(parent), sub_(std::move(sub)) {
  for (const auto& e : sub_.elements())
    if (!parent_->contains(e)) throw InputError("subgroup element outside parent group");
}

Subgroup Subgroup::from_generators(const PermGroup& parent, std::vector<Permutation> gens) {
  return Subgroup(&parent,
                  PermGroup::from_generators(parent.degree(), std::move(gens), parent.order()));
}

Subgroup centralizer(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw InputError("centralizer: element not in group");
  std::vector<Permutation> elems;
  for (const auto& e : g.elements())
    if (e * x == x * e) elems.push_back(e);
  return Subgroup(&g, PermGroup::from_elements(g.degree(), std::move(elems)));
}

std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a,
                                               const Permutation& b) {
  if (!g.contains(a) || !g.contains(b)) throw InputError("conjugating_element: not in group");
  for (const auto& t : g.elements())
    if (conjugated(t, a) == b) return t;
  return std::nullopt;
}

bool is_conjugate_in(const Subgroup& h, const Permutation& a, const Permutation& b) {
  if (!h.group().contains(a) || !h.group().contains(b))
    throw InputError("is_conjugate_in: not a subgroup member");
  for (const auto& t : h.group().elements())
    if (conjugated(t, a) == b) return true;
  return false;
}

}  // namespace dtk
