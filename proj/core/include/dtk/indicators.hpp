#pragma once

#include <cstdint>
#include <vector>

#include "dtk/ydcat.hpp"

namespace dtk {

/// |{x in G : x^m = (gx)^m = y}| by direct enumeration.
std::uint64_t counting_function(const PermGroup& g, const Permutation& gg, std::int64_t m,
                                const Permutation& y);

/// The same counts for every y at once, indexed by element index; zero rows
/// are kept so callers can scan the whole group.
std::vector<std::uint64_t> counting_table_full(const PermGroup& g, const Permutation& gg,
                                               std::int64_t m);

/// The m-th Frobenius-Schur indicator of the simple (class a, irreducible
/// chi), via the solution-counting identity inverted by orthogonality.
Cyclotomic indicator(const DoubleCategory& cat, std::uint32_t class_index,
                     std::uint32_t irr_index, std::uint64_t m);

struct IndicatorVector {
  std::uint32_t simple;
  std::uint64_t m_max;
  std::vector<Cyclotomic> values;  // nu_1 ... nu_{m_max}
  bool operator==(const IndicatorVector& o) const { return values == o.values; }
};

/// nu_1..nu_M for a simple; M = 0 means exp(G), which is a full period.
IndicatorVector indicator_vector(const DoubleCategory& cat, std::uint32_t simple,
                                 std::uint64_t m_max = 0);

std::vector<IndicatorVector> all_indicator_vectors(const DoubleCategory& cat,
                                                   std::uint64_t m_max = 0, unsigned jobs = 1);

/// True iff |{x : x^m = (gx)^m = y}| = |{x : x^m = (g^r x)^m = y^r}|.
bool check_counting_identity(const PermGroup& g, const Permutation& gg, const Permutation& y,
                             std::int64_t m, std::int64_t r);

/// Partition of the simple indices by exact equality of indicator vectors.
/// Parts are sorted by smallest member.
std::vector<std::vector<std::uint32_t>> i_equivalence_classes(const DoubleCategory& cat,
                                                              std::uint64_t m_max = 0,
                                                              unsigned jobs = 1);

}  // namespace dtk
