#include "dtk/chartab.hpp"

#include <algorithm>
#include <cmath>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"

namespace dtk {

GroupClassesPtr make_group_classes(PermGroup g) {
  auto classes = conjugacy_classes(g);
  return std::make_shared<const GroupClasses>(GroupClasses{std::move(g), std::move(classes)});
}

ClassFunction::ClassFunction(GroupClassesPtr host, std::vector<Cyclotomic> values)
    : host_(std::move(host)), values_(std::move(values)) {
  if (values_.size() != host_->classes.count())
    throw InputError("class function length does not match class count");
}

const Cyclotomic& ClassFunction::at(const Permutation& h) const {
  return values_[host_->classes.class_of(host_->group, h)];
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (host_ != o.host_ && host_->group.elements() != o.host_->group.elements()) return false;
  return values_ == o.values_;
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    if (irreducibles[i].values() == f.values()) return i;
  return std::nullopt;
}

namespace {

using u64 = std::uint64_t;

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p == 1 mod e with p > bound. Such p splits the e-th
// cyclotomic polynomial, so F_p contains all character values mod p.
u64 dixon_prime(u64 e, u64 bound) {
  for (u64 p = e + 1;; p += e) {
    if (p > bound && is_prime(p)) return p;
  }
}

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }  // p < 2^31
  u64 inv(u64 a) const { return invmod(a % p, p); }
};

using Row = std::vector<u64>;
using Matrix = std::vector<Row>;

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, const Fp& f) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  if (rows == 0) return pivots;
  std::size_t cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    u64 iv = f.inv(m[r][c]);
    for (auto& v : m[r]) v = f.mul(v, iv);
    for (std::size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == r || m[r2][c] == 0) continue;
      u64 factor = m[r2][c];
      for (std::size_t j = 0; j < cols; ++j) m[r2][j] = f.sub(m[r2][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Characteristic polynomial mod p via Hessenberg reduction; coefficients
// ascending, monic of degree d.
Row charpoly(Matrix h, const Fp& f) {
  std::size_t d = h.size();
  for (std::size_t j = 0; j + 2 < d + 1 && j + 1 < d; ++j) {
    std::size_t piv = j + 1;
    while (piv < d && h[piv][j] == 0) ++piv;
    if (piv == d) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r2 = 0; r2 < d; ++r2) std::swap(h[r2][piv], h[r2][j + 1]);
    }
    u64 iv = f.inv(h[j + 1][j]);
    for (std::size_t r2 = j + 2; r2 < d; ++r2) {
      if (h[r2][j] == 0) continue;
      u64 factor = f.mul(h[r2][j], iv);
      for (std::size_t c = 0; c < d; ++c) h[r2][c] = f.sub(h[r2][c], f.mul(factor, h[j + 1][c]));
      for (std::size_t r3 = 0; r3 < d; ++r3)
        h[r3][j + 1] = f.add(h[r3][j + 1], f.mul(factor, h[r3][r2]));
    }
  }
  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
  //          - sum_i h[i-1][m-1] (prod_{j=i}^{m-2} h[j+1][j]) p_{i-1}(x)
  std::vector<Row> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    Row cur(m + 1, 0);
    for (std::size_t t = 0; t < m; ++t) {
      cur[t + 1] = f.add(cur[t + 1], p[m - 1][t]);
      cur[t] = f.sub(cur[t], f.mul(h[m - 1][m - 1], p[m - 1][t]));
    }
    u64 run = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      run = f.mul(run, h[i][i - 1]);
      if (run == 0) break;
      u64 coeff = f.mul(run, h[i - 1][m - 1]);
      if (coeff == 0) continue;
      for (std::size_t t = 0; t < i; ++t) cur[t] = f.sub(cur[t], f.mul(coeff, p[i - 1][t]));
    }
    p[m] = std::move(cur);
  }
  return p[d];
}

// Basis of ker(a - lambda I), rows of coordinates.
Matrix eigen_kernel(Matrix a, u64 lambda, const Fp& f) {
  std::size_t d = a.size();
  for (std::size_t i = 0; i < d; ++i) a[i][i] = f.sub(a[i][i], lambda);
  auto pivots = rref(a, f);
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix ker;
  for (std::size_t c = 0; c < d; ++c) {
    if (is_pivot[c]) continue;
    Row v(d, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][c]);
    ker.push_back(std::move(v));
  }
  return ker;
}

struct DixonContext {
  const GroupClasses& bundle;
  Fp f;
  std::size_t k;
  std::vector<std::vector<std::uint32_t>> class_elems;  // element indices per class
  std::vector<std::uint32_t> inverse_class;
  std::vector<std::uint32_t> rep_index;
};

// M_i with M_i[l][j] = #{(x, y) in C_i x C_l : x y = g_j}; the common
// eigenvectors are the central character vectors omega mod p.
Matrix class_matrix(const DixonContext& ctx, std::size_t i) {
  Matrix m(ctx.k, Row(ctx.k, 0));
  const auto& g = ctx.bundle.group;
  for (std::uint32_t xi : ctx.class_elems[i]) {
    Permutation xinv = g.elements()[xi].inverse();
    for (std::size_t j = 0; j < ctx.k; ++j) {
      std::uint32_t yi = g.index_of(xinv * g.elements()[ctx.rep_index[j]]);
      m[ctx.bundle.classes.class_of_element[yi]][j] += 1;
    }
  }
  return m;
}

}  // namespace

CharacterTable character_table(GroupClassesPtr host, std::uint64_t conductor, std::uint64_t cap) {
  const PermGroup& H = host->group;
  const ConjugacyClasses& cls = host->classes;
  if (H.order() > cap) throw CapExceeded("character_table: group order exceeds cap");
  const u64 n = H.order();
  const u64 expo = H.exponent();
  const u64 target_e = conductor ? conductor : expo;
  if (target_e % expo) throw InputError("character_table: conductor not divisible by exp(H)");
  const std::size_t k = cls.count();

  DixonContext ctx{*host, Fp{dixon_prime(expo, static_cast<u64>(2.0 * std::sqrt(double(n))) + 1)},
                   k,     {},
                   {},    {}};
  const Fp& f = ctx.f;
  ctx.class_elems.resize(k);
  for (std::uint32_t ei = 0; ei < n; ++ei)
    ctx.class_elems[cls.class_of_element[ei]].push_back(ei);
  ctx.rep_index.resize(k);
  ctx.inverse_class.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    ctx.rep_index[j] = H.index_of(cls.reps[j]);
    ctx.inverse_class[j] = cls.class_of_element[H.index_of(cls.reps[j].inverse())];
  }

  // Split F_p^k into the common eigenspaces of the class matrices.
  std::vector<Matrix> working;
  std::vector<Row> finished;
  {
    Matrix whole(k, Row(k, 0));
    for (std::size_t i = 0; i < k; ++i) whole[i][i] = 1;
    if (k == 1)
      finished.push_back(whole[0]);
    else
      working.push_back(std::move(whole));
  }
  for (std::size_t i = 1; i < k && !working.empty(); ++i) {
    Matrix mi = class_matrix(ctx, i);
    std::vector<Matrix> next;
    for (auto& basis : working) {
      std::size_t d = basis.size();
      auto pivots = rref(basis, f);
      // Restriction of M_i to the invariant subspace: coordinates transform
      // by a[t][s] = (M_i v_s)[pivot_t], the operator matrix on columns.
      Matrix a(d, Row(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        Row w(k, 0);
        for (std::size_t l = 0; l < k; ++l) {
          u64 acc = 0;
          for (std::size_t j = 0; j < k; ++j)
            if (mi[l][j] && basis[s][j]) acc = f.add(acc, f.mul(mi[l][j] % f.p, basis[s][j]));
          w[l] = acc;
        }
        for (std::size_t t = 0; t < d; ++t) a[t][s] = w[pivots[t]];
      }
      // One distinct eigenvalue means M_i does not split this subspace.
      Row cp = charpoly(a, f);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < f.p; ++lam) {
        u64 acc = 0;
        for (std::size_t t = cp.size(); t-- > 0;) acc = f.add(f.mul(acc, lam), cp[t]);
        if (acc == 0) roots.push_back(lam);
      }
      if (roots.size() <= 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (u64 lam : roots) {
        Matrix ker = eigen_kernel(a, lam, f);
        Matrix abs;
        for (const auto& coeffs : ker) {
          Row v(k, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (coeffs[t] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
              v[j] = f.add(v[j], f.mul(coeffs[t], basis[t][j]));
          }
          abs.push_back(std::move(v));
        }
        if (abs.size() == 1)
          finished.push_back(std::move(abs[0]));
        else if (!abs.empty())
          next.push_back(std::move(abs));
      }
    }
    working = std::move(next);
  }
  if (!working.empty() || finished.size() != k)
    throw ConsistencyError("character_table: class matrices failed to split the algebra");

  // Recover degrees and values mod p from each central character vector.
  u64 gen = 0;
  {
    auto fac = factorize(f.p - 1);
    for (u64 cand = 2; cand < f.p; ++cand) {
      bool ok = true;
      for (auto [q, kk] : fac)
        if (powmod(cand, (f.p - 1) / q, f.p) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = cand;
        break;
      }
    }
  }
  const u64 zeta_p = powmod(gen, (f.p - 1) / expo, f.p);  // primitive exp(H)-th root mod p

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<u64> row_degrees;
  const u64 sqrt_n = static_cast<u64>(std::sqrt(double(n))) + 1;
  u64 degree_square_sum = 0;
  for (auto& v : finished) {
    if (v[0] == 0) throw ConsistencyError("character_table: eigenvector vanishes at the identity");
    u64 scale = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, scale);
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j)
      s = f.add(s, f.mul(f.mul(v[j], v[ctx.inverse_class[j]]), f.inv(cls.sizes[j] % f.p)));
    u64 dd = f.mul(n % f.p, f.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d <= sqrt_n; ++d)
      if (f.mul(d, d) == dd) {
        deg = d;
        break;
      }
    if (deg == 0) throw ConsistencyError("character_table: no integer degree matches");
    row_degrees.push_back(deg);
    degree_square_sum += deg * deg;

    std::vector<u64> value_mod(k);
    for (std::size_t j = 0; j < k; ++j)
      value_mod[j] = f.mul(f.mul(deg % f.p, v[j]), f.inv(cls.sizes[j] % f.p));

    // Lift each value: recover the multiplicities of the eigenvalues of g_j.
    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < k; ++j) {
      u64 o = cls.reps[j].order();
      u64 z = powmod(zeta_p, expo / o, f.p);
      u64 zinv = f.inv(z);
      std::vector<Rational> poly(target_e, Rational(0));
      u64 inv_o = f.inv(o % f.p);
      std::vector<u64> fval(o);
      for (u64 l = 0; l < o; ++l)
        fval[l] = value_mod[cls.class_of(H, cls.reps[j].power(static_cast<std::int64_t>(l)))];
      for (u64 t = 0; t < o; ++t) {
        u64 acc = 0;
        for (u64 l = 0; l < o; ++l)
          acc = f.add(acc, f.mul(fval[l], powmod(zinv, t * l % (f.p - 1), f.p)));
        u64 mult = f.mul(acc, inv_o);
        if (mult > n) throw ConsistencyError("character_table: multiplicity out of range");
        if (mult) poly[(target_e / o) * t] += Rational(static_cast<long>(mult));
      }
      row.push_back(Cyclotomic::from_poly(target_e, std::move(poly)));
    }
    rows.push_back(std::move(row));
  }
  if (degree_square_sum != n)
    throw ConsistencyError("character_table: degrees do not sum to the group order");

  // Canonical order: the trivial character first, the rest by (degree, values).
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  Cyclotomic one = Cyclotomic::one();
  auto is_trivial = [&](std::size_t i) {
    return std::all_of(rows[i].begin(), rows[i].end(),
                       [&](const Cyclotomic& v) { return v == one; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (row_degrees[a] != row_degrees[b]) return row_degrees[a] < row_degrees[b];
    return CycloLess{}(rows[a], rows[b]);
  });
  if (!is_trivial(order[0]))
    throw ConsistencyError("character_table: trivial character not found");

  CharacterTable table;
  table.host = host;
  for (std::size_t i : order) {
    table.irreducibles.emplace_back(host, std::move(rows[i]));
    table.degrees.push_back(row_degrees[i]);
  }

  // Exact orthonormality check of the finished table.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      if (ip != (i == j ? Cyclotomic::one() : Cyclotomic()))
        throw ConsistencyError("character_table: row orthogonality failed");
    }
  return table;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.host() != g.host() && f.host()->group.elements() != g.host()->group.elements())
    throw InputError("inner_product: class functions on different groups");
  const auto& cls = f.host()->classes;
  Cyclotomic acc;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    Cyclotomic term = f.at_class(c) * g.at_class(c).conjugate();
    acc += term.scaled(Rational(static_cast<long>(cls.sizes[c])));
  }
  return acc.div_by_integer(static_cast<std::int64_t>(f.host()->group.order()));
}

ClassFunction adams(const ClassFunction& chi, std::int64_t r) {
  const auto& host = chi.host();
  if (std::gcd(normalize_mod(r, host->group.exponent()), host->group.exponent()) != 1)
    throw InputError("adams: power not coprime to the group exponent");
  std::vector<Cyclotomic> vals;
  vals.reserve(host->classes.count());
  for (const auto& rep : host->classes.reps) vals.push_back(chi.at(rep.power(r)));
  return ClassFunction(host, std::move(vals));
}

ClassFunction transport(const ClassFunction& chi, const Permutation& x, GroupClassesPtr target) {
  Permutation xinv = x.inverse();
  std::vector<Cyclotomic> vals;
  vals.reserve(target->classes.count());
  for (const auto& rep : target->classes.reps) vals.push_back(chi.at(conjugated(xinv, rep)));
  return ClassFunction(std::move(target), std::move(vals));
}

ClassFunction trivial_character(GroupClassesPtr host, std::uint64_t conductor) {
  std::vector<Cyclotomic> vals(host->classes.count(),
                               Cyclotomic(1L).embedded(conductor ? conductor : 1));
  return ClassFunction(std::move(host), std::move(vals));
}

ClassFunction regular_character(GroupClassesPtr host, std::uint64_t conductor) {
  std::vector<Cyclotomic> vals(host->classes.count(), Cyclotomic().embedded(conductor ? conductor : 1));
  vals[0] = Cyclotomic(Rational(static_cast<long>(host->group.order()))).embedded(conductor ? conductor : 1);
  return ClassFunction(std::move(host), std::move(vals));
}

std::vector<std::pair<std::size_t, Cyclotomic>> decompose(const ClassFunction& f,
                                                          const CharacterTable& table) {
  std::vector<std::pair<std::size_t, Cyclotomic>> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Cyclotomic m = inner_product(f, table.irreducibles[i]);
    if (!m.is_zero()) out.emplace_back(i, std::move(m));
  }
  return out;
}

}  // namespace dtk
