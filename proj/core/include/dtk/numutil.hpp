#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dtk/error.hpp"

namespace dtk {

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > UINT64_MAX / b) throw InputError("lcm overflows 64 bits");
  return q * b;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw InputError("invmod: arguments are not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

/// Residue in [0, m) congruent to r.
inline std::uint64_t normalize_mod(std::int64_t r, std::uint64_t m) {
  if (m == 0) throw InputError("normalize_mod: zero modulus");
  std::int64_t mm = static_cast<std::int64_t>(m);
  std::int64_t v = r % mm;
  if (v < 0) v += mm;
  return static_cast<std::uint64_t>(v);
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
  return r;
}

}  // namespace dtk
