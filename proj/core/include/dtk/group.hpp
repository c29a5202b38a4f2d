#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dtk/perm.hpp"

namespace dtk {

inline constexpr std::uint64_t kDefaultOrderCap = 200000;

/// A finite permutation group with its full element list, sorted
/// lexicographically by image arrays. The identity is always element 0.
/// Immutable after construction.
class PermGroup {
public:
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                   std::uint64_t order_cap = kDefaultOrderCap);
  /// The list must already be closed under products and inverses; a small
  /// generating subset is recomputed greedily.
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elems);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  std::uint64_t order() const { return elems_.size(); }
  std::uint64_t exponent() const { return exponent_; }
  const Permutation& identity() const { return elems_[0]; }

  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  std::optional<std::uint32_t> find(const Permutation& p) const;
  std::uint32_t index_of(const Permutation& p) const;  // InputError when absent

private:
  PermGroup() = default;
  void finish(std::vector<Permutation> elems);

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::uint64_t exponent_ = 1;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
};

/// Partition of a group into conjugacy classes. Classes are ordered by their
/// lexicographically minimal representative, so the identity class is first.
struct ConjugacyClasses {
  std::vector<Permutation> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of_element;       // indexed by element index
  std::vector<std::uint32_t> conjugator_of_element;  // w with w rep w^{-1} = element

  std::size_t count() const { return reps.size(); }
  std::uint32_t class_of(const PermGroup& g, const Permutation& p) const;
};

ConjugacyClasses conjugacy_classes(const PermGroup& g);

/// A subgroup together with the group it lives in. The parent must outlive
/// the subgroup.
class Subgroup {
public:
  Subgroup(const PermGroup* parent, PermGroup sub);
  static Subgroup from_generators(const PermGroup& parent, std::vector<Permutation> gens);

  const PermGroup& group() const { return sub_; }
  const PermGroup& parent() const { return *parent_; }

private:
  const PermGroup* parent_;
  PermGroup sub_;
};

/// {x in G : xg = gx}; g must belong to G.
Subgroup centralizer(const PermGroup& g, const Permutation& x);

/// Some t with t a t^{-1} = b, the first under the element order, or nullopt
/// when a and b are not conjugate.
std::optional<Permutation> conjugating_element(const PermGroup& g, const Permutation& a,
                                               const Permutation& b);

/// True iff a and b are conjugate by an element of H; both must lie in H.
bool is_conjugate_in(const Subgroup& h, const Permutation& a, const Permutation& b);

}  // namespace dtk
