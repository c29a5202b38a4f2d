#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtk/perm.hpp"

namespace dtk::snconj {

/// A partition of n: part sizes in weakly decreasing order.
using CycleType = std::vector<unsigned>;

std::vector<CycleType> partitions_of(unsigned n);

/// Canonical representative: cycles on consecutive points, largest part first.
Permutation class_rep(const CycleType& lambda);

/// prod_k k^{a_k} a_k!; the order of the centralizer in S_n.
std::uint64_t centralizer_order(const CycleType& lambda);

/// Generators of C_{S_n}(class_rep(lambda)): one cycle per distinct part
/// size, plus block swaps and block rotations between equal-size cycles.
std::vector<Permutation> centralizer_generators(const CycleType& lambda, unsigned n);

/// t with t g t^{-1} = g^r, built cycle by cycle and verified before return.
Permutation power_conjugator(const Permutation& g, std::uint64_t r);

/// lcm(1..n) = exp(S_n).
std::uint64_t sn_exponent(unsigned n);

/// Complete conjugacy invariant of x in C(g): for every g-cycle length k,
/// the multiset of (k, block-cycle length, displacement sum mod k) over the
/// cycles of the induced block permutation.
using WreathKey = std::vector<std::array<std::uint64_t, 3>>;
WreathKey conjugacy_invariant(const Permutation& x, const Permutation& g);

/// One representative per conjugacy class of C(g), constructed from colored
/// partitions, without enumerating the centralizer.
std::vector<Permutation> centralizer_class_reps(const CycleType& lambda, unsigned n);

enum class Method { enumerate, classes };
enum class Outcome { passed, skipped, failed };

struct PartitionResult {
  CycleType lambda;
  std::uint64_t centralizer_order;
  Outcome outcome;
  std::uint64_t reps_checked;
};

struct Counterexample {
  CycleType lambda;
  std::uint64_t r;
  Permutation g, t, x;  // x^r and t x t^{-1} are not conjugate in C(g)
};

struct CheckReport {
  unsigned n = 0;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> residues;
  Method method = Method::enumerate;
  std::uint64_t cap = 0;
  std::vector<PartitionResult> results;
  std::optional<Counterexample> counterexample;
  double seconds = 0;

  bool all_passed() const;
  bool any_skipped() const;
  /// 0 all pass, 1 counterexample found, 3 passes with skips.
  int exit_code() const;
};

/// Tests, partition by partition, whether the r-th power of every centralizer
/// class representative is centralizer-conjugate to its image under a fixed
/// conjugator realizing g -> g^r, for r over generators of the prime residues
/// mod exp(S_n). "enumerate" materializes centralizers up to `cap` elements
/// and skips larger ones; "classes" decides conjugacy by wreath invariants
/// and never skips.
CheckReport check_sn(unsigned n, Method method = Method::enumerate,
                     std::uint64_t cap = 1000000, unsigned jobs = 1);

}  // namespace dtk::snconj
