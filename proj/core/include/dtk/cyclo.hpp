#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dtk {

using Rational = mpq_class;
using Integer = mpz_class;

/// An invertible residue r mod e, the index of the field automorphism
/// sending zeta_e to zeta_e^r.
struct GaloisIndex {
  std::uint64_t e;
  std::uint64_t r;  // normalized to [0, e), coprime to e
  GaloisIndex(std::uint64_t conductor, std::int64_t residue);
};

/// An element of Q(zeta_e) as a polynomial in zeta_e of degree < phi(e),
/// canonically reduced modulo the e-th cyclotomic polynomial. Conductors are
/// coerced to their lcm when two values meet, so equality is well defined
/// across conductors. Immutable value type.
class Cyclotomic {
public:
  Cyclotomic();  // zero, conductor 1
  explicit Cyclotomic(Rational q);
  explicit Cyclotomic(long v);
  static Cyclotomic zero(std::uint64_t e);
  static Cyclotomic one() { return Cyclotomic(1L); }
  static Cyclotomic root_of_unity(std::uint64_t e, std::int64_t k);
  /// Reduces an arbitrary-length polynomial in zeta_e.
  static Cyclotomic from_poly(std::uint64_t e, std::vector<Rational> coeffs);

  std::uint64_t conductor() const { return e_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic scaled(const Rational& q) const;
  Cyclotomic div_by_integer(std::int64_t n) const;

  /// zeta_e -> zeta_e^r; requires gcd(r, conductor) = 1.
  Cyclotomic galois(std::int64_t r) const;
  Cyclotomic galois(const GaloisIndex& idx) const;
  Cyclotomic conjugate() const;
  /// Re-express in Q(zeta_big_e); conductor() must divide big_e.
  Cyclotomic embedded(std::uint64_t big_e) const;

  std::optional<Rational> as_rational() const;
  std::optional<Integer> as_integer() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  /// Total order used for canonical labelings: by conductor-coerced
  /// coefficient vectors, lexicographically.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;  // e.g. "1 - 2*z9 + z9^7"

private:
  Cyclotomic(std::uint64_t e, std::vector<Rational> canonical);

  std::uint64_t e_ = 1;
  std::vector<Rational> c_;  // size phi(e_)
};

Cyclotomic operator*(const Rational& q, const Cyclotomic& z);

struct CycloLess {
  bool operator()(const Cyclotomic& a, const Cyclotomic& b) const {
    return Cyclotomic::compare(a, b) < 0;
  }
  bool operator()(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
};

/// Coefficients of the e-th cyclotomic polynomial, monic of degree phi(e).
const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t e);

/// A small set of residues generating the unit group (Z/e)^*. Result is
/// verified by closure enumeration when phi(e) is small enough to enumerate.
std::vector<std::uint64_t> prime_residue_generators(std::uint64_t e);

/// All units mod e, ascending. Guarded by a size cap on e.
std::vector<std::uint64_t> units_mod(std::uint64_t e, std::uint64_t cap = 1u << 22);

}  // namespace dtk
