#include "dtk/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"

namespace dtk {

namespace {

// Exact division of polynomials over Z with a monic divisor.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  std::size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<Integer> quot(dn - dd + 1);
  for (std::size_t d = dn; d + 1 > dd; --d) {
    Integer c = num[d];
    quot[d - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[d - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw ConsistencyError("cyclotomic polynomial division not exact");
  return quot;
}

std::vector<Integer> compute_cyclotomic_poly(std::uint64_t e,
                                             std::map<std::uint64_t, std::vector<Integer>>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  // x^e - 1 divided by Phi_d for every proper divisor d of e.
  std::vector<Integer> num(e + 1);
  num[0] = -1;
  num[e] = 1;
  for (std::uint64_t d = 1; d < e; ++d) {
    if (e % d) continue;
    num = divide_exact(std::move(num), compute_cyclotomic_poly(d, memo));
  }
  memo[e] = num;
  return num;
}

struct Basis {
  std::uint64_t e = 1;
  std::size_t phi = 1;
  std::vector<Integer> poly;                 // Phi_e, monic, degree phi
  std::vector<std::vector<Rational>> power;  // canonical coeffs of zeta^k, k < e
};

const Basis& basis(std::uint64_t e) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<Basis>> cache;
  std::lock_guard lk(mu);
  auto& slot = cache[e];
  if (slot) return *slot;
  if (e == 0) throw InputError("conductor must be positive");
  auto b = std::make_unique<Basis>();
  b->e = e;
  std::map<std::uint64_t, std::vector<Integer>> memo;
  b->poly = compute_cyclotomic_poly(e, memo);
  b->phi = b->poly.size() - 1;
  b->power.resize(e);
  for (std::size_t k = 0; k < e; ++k) {
    if (k < b->phi) {
      b->power[k].assign(b->phi, Rational(0));
      b->power[k][k] = 1;
    } else {
      // zeta^k = zeta * zeta^(k-1), reduced by one step of division.
      std::vector<Rational> v(b->phi + 1, Rational(0));
      for (std::size_t j = 0; j < b->phi; ++j) v[j + 1] = b->power[k - 1][j];
      Rational top = v[b->phi];
      if (top != 0)
        for (std::size_t j = 0; j < b->phi; ++j) v[j] -= top * Rational(b->poly[j]);
      v.resize(b->phi);
      b->power[k] = std::move(v);
    }
  }
  slot = std::move(b);
  return *slot;
}

std::vector<Rational> reduce_poly(const Basis& b, std::vector<Rational> v) {
  if (v.size() < b.phi) {
    v.resize(b.phi, Rational(0));
    return v;
  }
  for (std::size_t d = v.size() - 1; d + 1 > b.phi; --d) {
    Rational c = v[d];
    if (c == 0) continue;
    v[d] = 0;
    for (std::size_t j = 0; j < b.phi; ++j) v[d - b.phi + j] -= c * Rational(b.poly[j]);
  }
  v.resize(b.phi);
  return v;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::uint64_t e) { return basis(e).poly; }

GaloisIndex::GaloisIndex(std::uint64_t conductor, std::int64_t residue) : e(conductor) {
  if (e == 0) throw InputError("GaloisIndex: conductor must be positive");
  r = normalize_mod(residue, e);
  if (std::gcd(r, e) != 1) throw InputError("GaloisIndex: residue not coprime to conductor");
}

Cyclotomic::Cyclotomic() : e_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(Rational q) : e_(1), c_(1, std::move(q)) { c_[0].canonicalize(); }

Cyclotomic::Cyclotomic(long v) : e_(1), c_(1, Rational(v)) {}

Cyclotomic::Cyclotomic(std::uint64_t e, std::vector<Rational> canonical)
    : e_(e), c_(std::move(canonical)) {}

Cyclotomic Cyclotomic::zero(std::uint64_t e) {
  return Cyclotomic(e, std::vector<Rational>(basis(e).phi, Rational(0)));
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t e, std::int64_t k) {
  if (e < 1) throw InputError("root_of_unity: order must be positive");
  const Basis& b = basis(e);
  return Cyclotomic(e, b.power[normalize_mod(k, e)]);
}

Cyclotomic Cyclotomic::from_poly(std::uint64_t e, std::vector<Rational> coeffs) {
  const Basis& b = basis(e);
  for (auto& q : coeffs) q.canonicalize();
  return Cyclotomic(e, reduce_poly(b, std::move(coeffs)));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

Cyclotomic Cyclotomic::embedded(std::uint64_t big_e) const {
  if (big_e == e_) return *this;
  if (big_e % e_) throw InputError("embedded: conductor does not divide target");
  const Basis& b = basis(big_e);
  std::uint64_t step = big_e / e_;
  std::vector<Rational> acc(b.phi, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = b.power[(j * step) % big_e];
    for (std::size_t t = 0; t < b.phi; ++t) acc[t] += c_[j] * row[t];
  }
  return Cyclotomic(big_e, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] = -c_[j];
  return Cyclotomic(e_, std::move(v));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic out(*this);
  out += o;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic out(*this);
  out -= o;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (e_ == o.e_) {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }
  std::uint64_t L = checked_lcm(e_, o.e_);
  *this = embedded(L);
  Cyclotomic rhs = o.embedded(L);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (e_ != o.e_) {
    std::uint64_t L = checked_lcm(e_, o.e_);
    return embedded(L) * o.embedded(L);
  }
  if (is_zero() || o.is_zero()) return zero(e_);
  const Basis& b = basis(e_);
  std::vector<Rational> prod(2 * b.phi - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  return Cyclotomic(e_, reduce_poly(b, std::move(prod)));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  std::vector<Rational> v(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j] * q;
  return Cyclotomic(e_, std::move(v));
}

Cyclotomic Cyclotomic::div_by_integer(std::int64_t n) const {
  if (n == 0) throw InputError("division by zero integer");
  return scaled(Rational(1, n));
}

Cyclotomic Cyclotomic::galois(std::int64_t r) const { return galois(GaloisIndex(e_, r)); }

Cyclotomic Cyclotomic::galois(const GaloisIndex& idx) const {
  if (idx.e != e_) throw InputError("galois: index conductor mismatch");
  const Basis& b = basis(e_);
  std::vector<Rational> acc(b.phi, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& row = b.power[(j * idx.r) % e_];
    for (std::size_t t = 0; t < b.phi; ++t) acc[t] += c_[j] * row[t];
  }
  return Cyclotomic(e_, std::move(acc));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (e_ <= 2) return *this;
  return galois(static_cast<std::int64_t>(e_) - 1);
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

std::optional<Integer> Cyclotomic::as_integer() const {
  auto q = as_rational();
  if (!q || q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return compare(*this, o) == 0; }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ != b.e_) {
    std::uint64_t L = checked_lcm(a.e_, b.e_);
    return compare(a.embedded(L), b.embedded(L));
  }
  for (std::size_t j = 0; j < a.c_.size(); ++j) {
    int s = cmp(a.c_[j], b.c_[j]);
    if (s != 0) return s;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::string sym = "z" + std::to_string(e_);
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational q = c_[j];
    bool neg = q < 0;
    if (neg) q = -q;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = q.get_str();
    if (j == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += sym;
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic operator*(const Rational& q, const Cyclotomic& z) { return z.scaled(q); }

bool CycloLess::operator()(const std::vector<Cyclotomic>& a,
                           const std::vector<Cyclotomic>& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Cyclotomic& x, const Cyclotomic& y) {
                                        return Cyclotomic::compare(x, y) < 0;
                                      });
}

namespace {

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, k] : fac)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ConsistencyError("no primitive root found");
}

}  // namespace

std::vector<std::uint64_t> prime_residue_generators(std::uint64_t e) {
  if (e == 0) throw InputError("prime_residue_generators: e must be positive");
  if (e <= 2) return {};
  std::vector<std::uint64_t> gens;
  for (auto [p, k] : factorize(e)) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < k; ++i) m *= p;
    std::vector<std::uint64_t> local;
    if (p == 2) {
      if (k == 2) local = {3};
      if (k >= 3) local = {m - 1, 3};
    } else {
      std::uint64_t g = primitive_root_mod_prime(p);
      if (k >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
      local = {g % m};
    }
    // CRT each local generator against 1 on the complementary factor.
    std::uint64_t rest = e / m;
    for (std::uint64_t g : local) {
      if (rest == 1) {
        gens.push_back(g % m);
        continue;
      }
      std::uint64_t inv = invmod(rest % m, m);
      std::uint64_t t = mulmod(normalize_mod(static_cast<std::int64_t>(g) - 1, m), inv, m);
      gens.push_back((1 + rest * t) % e);
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase(gens, 1);
  // Verify by closure when the unit group is small enough to enumerate.
  std::uint64_t phi = euler_phi(e);
  if (phi <= (1u << 20)) {
    std::unordered_set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> todo{1};
    while (!todo.empty()) {
      std::uint64_t cur = todo.back();
      todo.pop_back();
      for (std::uint64_t g : gens) {
        std::uint64_t nx = mulmod(cur, g, e);
        if (seen.insert(nx).second) todo.push_back(nx);
      }
    }
    if (seen.size() != phi)
      throw ConsistencyError("prime_residue_generators: closure does not reach phi(e)");
  }
  return gens;
}

std::vector<std::uint64_t> units_mod(std::uint64_t e, std::uint64_t cap) {
  if (e == 0 || e > cap) throw InputError("units_mod: modulus out of range");
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; u < e; ++u)
    if (std::gcd(u, e) == 1) out.push_back(u);
  if (e == 1) out.push_back(0);  // the trivial unit group, represented by 0 = 1 mod 1
  return out;
}

}  // namespace dtk
