#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dtk/cyclo.hpp"
#include "dtk/group.hpp"

namespace dtk {

/// A group bundled with its conjugacy class partition. Shared immutably so
/// class functions can reference their host cheaply.
struct GroupClasses {
  PermGroup group;
  ConjugacyClasses classes;
};
using GroupClassesPtr = std::shared_ptr<const GroupClasses>;

GroupClassesPtr make_group_classes(PermGroup g);

/// An exact class function: one cyclotomic value per conjugacy class of the
/// host group.
class ClassFunction {
public:
  ClassFunction(GroupClassesPtr host, std::vector<Cyclotomic> values);

  const GroupClassesPtr& host() const { return host_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_class(std::size_t c) const { return values_[c]; }
  const Cyclotomic& at(const Permutation& h) const;

  bool operator==(const ClassFunction& o) const;

private:
  GroupClassesPtr host_;
  std::vector<Cyclotomic> values_;
};

struct CharacterTable {
  GroupClassesPtr host;
  std::vector<ClassFunction> irreducibles;  // trivial first, then by (degree, values)
  std::vector<std::uint64_t> degrees;

  std::size_t size() const { return irreducibles.size(); }
  std::optional<std::size_t> index_of(const ClassFunction& f) const;
};

/// Exact irreducible character table, computed with the Dixon-Schneider
/// class-matrix method over a prime field and lifted to Q(zeta). Values are
/// embedded into Q(zeta_conductor); conductor 0 means exp(H). Row and column
/// orthogonality are verified before returning.
CharacterTable character_table(GroupClassesPtr host, std::uint64_t conductor = 0,
                               std::uint64_t cap = kDefaultOrderCap);

/// (1/|H|) sum_h f(h) conj(g(h)), computed classwise.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// chi(h) -> chi(h^r); requires gcd(r, exp(H)) = 1.
ClassFunction adams(const ClassFunction& chi, std::int64_t r);

/// The class function h -> chi(x^{-1} h x) on the target host, which must be
/// the conjugate x H x^{-1} of chi's host.
ClassFunction transport(const ClassFunction& chi, const Permutation& x, GroupClassesPtr target);

ClassFunction trivial_character(GroupClassesPtr host, std::uint64_t conductor = 1);
ClassFunction regular_character(GroupClassesPtr host, std::uint64_t conductor = 1);

/// f = sum m_i chi_i with m_i = <f, chi_i>; nonzero terms only.
std::vector<std::pair<std::size_t, Cyclotomic>> decompose(const ClassFunction& f,
                                                          const CharacterTable& table);

}  // namespace dtk
