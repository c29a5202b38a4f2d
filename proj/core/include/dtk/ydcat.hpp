#pragma once

#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dtk/chartab.hpp"
#include "dtk/cyclo.hpp"
#include "dtk/group.hpp"

namespace dtk {

/// Label of a simple object: a conjugacy class of G and an irreducible
/// character of the centralizer of its representative.
struct SimpleYD {
  std::uint32_t class_index;
  std::uint32_t irr_index;
  std::uint32_t simple_index;
  std::uint64_t dim;  // [G : C] * chi(1)
};

struct ModularData {
  std::vector<std::vector<Cyclotomic>> s;  // unnormalized: S~ . conj(S~) = |G|^2 I
  std::vector<Cyclotomic> t;               // ribbon twists theta_i
  std::vector<std::uint64_t> dims;
};

class TableCache;

/// The simple-object registry of the Yetter-Drinfeld category of a finite
/// group, with compute-once centralizer data, character tables and counting
/// tables. Safe for concurrent use once constructed.
class DoubleCategory {
public:
  explicit DoubleCategory(PermGroup g);
  DoubleCategory(PermGroup g, std::filesystem::path cache_dir);
  ~DoubleCategory();
  DoubleCategory(const DoubleCategory&) = delete;
  DoubleCategory& operator=(const DoubleCategory&) = delete;

  const PermGroup& group() const { return group_; }
  const ConjugacyClasses& classes() const { return classes_; }
  std::uint64_t conductor() const { return conductor_; }

  const GroupClassesPtr& centralizer_host(std::uint32_t class_index) const;
  const CharacterTable& table(std::uint32_t class_index) const;

  const std::vector<SimpleYD>& simples() const;
  std::uint32_t simple_index(std::uint32_t class_index, std::uint32_t irr_index) const;

  /// Trace of h on the degree-g component of simple i; zero when g lies
  /// outside the simple's class. g and h must commute.
  Cyclotomic yd_character(std::uint32_t i, const Permutation& g, const Permutation& h) const;

  /// Fast path by element indices; requires commuting elements with g in the
  /// class of simple i.
  const Cyclotomic& yd_value(std::uint32_t i, std::uint32_t g_elem, std::uint32_t h_elem) const;

  /// Element indices of the conjugacy class, ascending.
  const std::vector<std::uint32_t>& class_elements(std::uint32_t class_index) const;

  /// Element indices of C(g) whose class is class_of_h, ascending.
  const std::vector<std::uint32_t>& commuting(std::uint32_t g_elem,
                                              std::uint32_t class_of_h) const;

  /// All element indices of C(g), ascending.
  const std::vector<std::uint32_t>& commuting_all(std::uint32_t g_elem) const;

  /// Class (in the centralizer table host of class(g)) of w^{-1} h w, where
  /// w conjugates the class representative to g.
  std::uint32_t local_class(std::uint32_t g_elem, std::uint32_t h_elem) const;

  /// Counts |{x in G : x^m = (g_a x)^m = y}| for y in C(g_a), collected per
  /// conjugacy class of the centralizer. Cached per (class, m mod e).
  const std::vector<std::uint64_t>& counting_classwise(std::uint32_t class_index,
                                                       std::uint64_t m) const;

  bool cache_enabled() const;
  const TableCache* cache() const;
  void save_cache() const;  // atomic write of everything computed so far

private:
  friend class TableCache;
  struct CentralizerData;
  struct PairData;
  const CentralizerData& centralizer_data(std::uint32_t class_index) const;
  const PairData& pair_data() const;

  PermGroup group_;
  ConjugacyClasses classes_;
  std::uint64_t conductor_;
  std::unique_ptr<TableCache> cache_;

  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const CentralizerData>> by_class_;
  mutable std::map<std::vector<std::uint32_t>,
                   std::shared_future<std::shared_ptr<const CentralizerData>>>
      by_subgroup_;
  mutable std::map<std::pair<std::uint32_t, std::uint64_t>,
                   std::shared_future<std::shared_ptr<const std::vector<std::uint64_t>>>>
      counting_;
  mutable std::once_flag simples_once_;
  mutable std::vector<SimpleYD> simples_;
  mutable std::vector<std::uint32_t> simple_base_;  // per class
  mutable std::once_flag pair_once_;
  mutable std::unique_ptr<PairData> pair_;
};

std::vector<Cyclotomic> tmatrix(const DoubleCategory& cat);
std::vector<std::vector<Cyclotomic>> smatrix_unnormalized(const DoubleCategory& cat,
                                                          unsigned jobs = 1);
ModularData modular_data(const DoubleCategory& cat, unsigned jobs = 1);

/// Verlinde multiplicity N_{ij}^k from the unnormalized S-matrix; certified
/// to be a nonnegative integer, otherwise a ConsistencyError is thrown.
std::uint64_t verlinde(const DoubleCategory& cat, const ModularData& md, std::uint32_t i,
                       std::uint32_t j, std::uint32_t k);

/// Bulk Verlinde evaluation with the conjugated S-matrix precomputed once.
class VerlindeTable {
public:
  VerlindeTable(const DoubleCategory& cat, const ModularData& md);
  /// N_{ij}^k for every k, integer-certified.
  std::vector<std::uint64_t> row(std::uint32_t i, std::uint32_t j) const;

private:
  const ModularData& md_;
  std::uint64_t conductor_;
  std::vector<std::vector<Cyclotomic>> s_conj_;
  std::vector<Rational> column_scale_;  // 1 / (d_l |G|^2)
};

/// Independent oracle: multiplicity of X_k in X_i (x) X_j via the character
/// of the tensor product, summed over commuting pairs.
std::uint64_t tensor_multiplicity_direct(const DoubleCategory& cat, std::uint32_t i,
                                         std::uint32_t j, std::uint32_t k);

/// The whole decomposition row at once: multiplicities of every simple in
/// X_i (x) X_j, sharing the tensor character across targets.
std::vector<std::uint64_t> tensor_decomposition_direct(const DoubleCategory& cat,
                                                       std::uint32_t i, std::uint32_t j);

}  // namespace dtk
