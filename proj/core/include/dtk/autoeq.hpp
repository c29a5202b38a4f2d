#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dtk/ydcat.hpp"

namespace dtk {

/// One of the power-map autoequivalences as a permutation of the simple
/// registry.
struct SimplePermutation {
  std::string label;  // "sigma", "tau", "psi", "galois_symmetry"
  std::int64_t r;
  std::vector<std::uint32_t> images;
};

/// sigma_r: (class a, chi) -> (class a, chi(.^r)); the class part is fixed.
std::uint32_t sigma_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r);

/// tau_r: regrade by the r-th power map; (class of g, chi) moves to the class
/// of g^r with chi transported along a conjugator back to the representative.
std::uint32_t tau_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r);

/// psi_r = tau_s o sigma_r with sr = 1 mod e; preserves indicators.
std::uint32_t psi_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r);

/// tau_r o sigma_r, the Galois symmetry of the modular data.
std::uint32_t galois_symmetry_image(const DoubleCategory& cat, std::uint32_t i, std::int64_t r);

SimplePermutation sigma(const DoubleCategory& cat, std::int64_t r);
SimplePermutation tau(const DoubleCategory& cat, std::int64_t r);
SimplePermutation psi(const DoubleCategory& cat, std::int64_t r);
SimplePermutation galois_symmetry(const DoubleCategory& cat, std::int64_t r);

enum class AutoeqOp { sigma, tau, psi };

/// Orbit partition of the simple indices under the chosen maps for every
/// listed residue; an empty residue list means prime_residue_generators(e).
/// Parts are sorted by smallest member.
std::vector<std::vector<std::uint32_t>> orbits(const DoubleCategory& cat,
                                               const std::set<AutoeqOp>& ops,
                                               std::vector<std::int64_t> residues = {});

}  // namespace dtk
