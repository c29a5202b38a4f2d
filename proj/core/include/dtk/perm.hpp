#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dtk {

/// A permutation of {0, ..., degree-1}, stored by its image array.
/// Composition acts on the left: (a*b)(p) = a(b(p)).
class Permutation {
public:
  Permutation() = default;  // the empty (degree 0) permutation
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);
  /// 0-based cycles; points absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t p) const { return img_[p]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation power(std::int64_t n) const;  // cycle-wise, so any n is cheap
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  /// All cycles including fixed points, in the same order.
  std::vector<std::vector<std::uint32_t>> all_cycles() const;
  std::string cycle_string() const;  // 1-based, "()" for the identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<std::uint32_t> img_;
};

/// x g x^{-1}
Permutation conjugated(const Permutation& x, const Permutation& g);

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace dtk
