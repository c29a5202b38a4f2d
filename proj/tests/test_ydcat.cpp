#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dtk/error.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/ydcat.hpp"

using namespace dtk;

namespace {

std::unique_ptr<DoubleCategory> category(const char* spec) {
  return std::make_unique<DoubleCategory>(build_group(spec));
}

const std::vector<std::uint32_t> kQ8i{2, 3, 1, 0, 6, 7, 5, 4};
const std::vector<std::uint32_t> kQ8j{4, 5, 7, 6, 1, 0, 2, 3};

PermGroup quaternion_group() {
  return PermGroup::from_generators(8, {Permutation(kQ8i), Permutation(kQ8j)});
}

}  // namespace

TEST_CASE("simple registries") {
  CHECK(category("cyclic:1")->simples().size() == 1);
  CHECK(category("cyclic:2")->simples().size() == 4);
  auto s3 = category("sym:3");
  CHECK(s3->simples().size() == 8);
  // Index 0 is the unit object: identity class, trivial character, dim 1.
  const SimpleYD& unit = s3->simples()[0];
  CHECK(unit.class_index == 0);
  CHECK(unit.irr_index == 0);
  CHECK(unit.dim == 1);
  // Registry is ordered by class then irreducible, and indices are coherent.
  for (const auto& s : s3->simples())
    CHECK(s3->simple_index(s.class_index, s.irr_index) == s.simple_index);
  std::uint64_t dim_sq = 0;
  for (const auto& s : s3->simples()) dim_sq += s.dim * s.dim;
  CHECK(dim_sq == 36);
}

TEST_CASE("two-variable characters") {
  auto z2 = category("cyclic:2");
  const PermGroup& g = z2->group();
  Permutation flip = g.elements()[1];
  REQUIRE_FALSE(flip.is_identity());

  // Identity-class simples: value at (1,1) is the centralizer degree.
  for (const auto& s : z2->simples())
    if (s.class_index == 0)
      CHECK(z2->yd_character(s.simple_index, g.identity(), g.identity()) ==
            Cyclotomic(static_cast<long>(s.dim)));
  // Degree outside the simple's class gives zero.
  CHECK(z2->yd_character(z2->simple_index(1, 0), g.identity(), flip).is_zero());
  // The sign character at (z, z).
  CHECK(z2->yd_character(z2->simple_index(1, 1), flip, flip) == Cyclotomic(-1L));

  auto s3 = category("sym:3");
  Permutation rot = parse_cycles("(1,2,3)", 3);
  Permutation swap = parse_cycles("(1,2)", 3);
  CHECK_THROWS_AS(s3->yd_character(0, rot, swap), InputError);  // non-commuting pair
}

TEST_CASE("T-matrix") {
  auto z3 = category("cyclic:3");
  auto t = tmatrix(*z3);
  CHECK(t[0] == Cyclotomic(1L));
  std::multiset<std::string> at_g;
  for (const auto& s : z3->simples()) {
    if (s.class_index == 0) CHECK(t[s.simple_index] == Cyclotomic(1L));
    if (s.class_index == 1) at_g.insert(t[s.simple_index].str());
    // theta is a root of unity of order dividing ord(g_a).
    std::uint64_t o = z3->classes().reps[s.class_index].order();
    Cyclotomic power = Cyclotomic(1L);
    for (std::uint64_t i = 0; i < o; ++i) power *= t[s.simple_index];
    CHECK(power == Cyclotomic(1L));
  }
  std::multiset<std::string> expected{Cyclotomic(1L).str(),
                                      Cyclotomic::root_of_unity(3, 1).str(),
                                      Cyclotomic::root_of_unity(3, 2).str()};
  CHECK(at_g == expected);
}

TEST_CASE("S-matrix of the trivial group and of Z2") {
  auto triv = category("cyclic:1");
  auto s_triv = smatrix_unnormalized(*triv);
  REQUIRE(s_triv.size() == 1);
  CHECK(s_triv[0][0] == Cyclotomic(1L));

  auto z2 = category("cyclic:2");
  auto s = smatrix_unnormalized(*z2);
  // Canonical order: (1,triv), (1,sgn), (z,triv), (z,sgn).
  long expected[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  REQUIRE(s.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(s[i][j] == Cyclotomic(expected[i][j]));
}

TEST_CASE("modular data identities") {
  for (const char* spec : {"cyclic:2", "sym:3", "dihedral:4"}) {
    auto cat = category(spec);
    ModularData md = modular_data(*cat, 2);
    const std::size_t m = md.s.size();
    const std::uint64_t order = cat->group().order();
    std::uint64_t dim_sq = 0;
    for (auto d : md.dims) dim_sq += d * d;
    CHECK(dim_sq == order * order);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        CHECK(md.s[i][j] == md.s[j][i]);
        if (i == 0) CHECK(md.s[0][j] == Cyclotomic(static_cast<long>(md.dims[j])));
        Cyclotomic acc;
        for (std::size_t l = 0; l < m; ++l) acc += md.s[i][l] * md.s[j][l].conjugate();
        CHECK(acc == (i == j ? Cyclotomic(static_cast<long>(order * order)) : Cyclotomic()));
      }
  }

  DoubleCategory q8(quaternion_group());
  CHECK(q8.group().exponent() == 4);
  ModularData md = modular_data(q8, 2);
  std::uint64_t dim_sq = 0;
  for (auto d : md.dims) dim_sq += d * d;
  CHECK(dim_sq == 64);
}

TEST_CASE("Verlinde fusion against the direct oracle") {
  auto z2 = category("cyclic:2");
  ModularData md2 = modular_data(*z2);
  // (z,triv) (x) (z,triv) contains the unit exactly once.
  CHECK(verlinde(*z2, md2, 2, 2, 0) == 1);
  CHECK(tensor_multiplicity_direct(*z2, 2, 2, 0) == 1);

  auto s3 = category("sym:3");
  ModularData md = modular_data(*s3, 2);
  const std::uint32_t m = static_cast<std::uint32_t>(md.s.size());
  for (std::uint32_t j = 0; j < m; ++j)
    for (std::uint32_t k = 0; k < m; ++k)
      CHECK(verlinde(*s3, md, 0, j, k) == (j == k ? 1 : 0));
  VerlindeTable vt(*s3, md);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      std::uint64_t total = 0;
      auto bulk = tensor_decomposition_direct(*s3, i, j);
      auto vrow = vt.row(i, j);
      for (std::uint32_t k = 0; k < m; ++k) {
        std::uint64_t n = verlinde(*s3, md, i, j, k);
        CHECK(n == tensor_multiplicity_direct(*s3, i, j, k));
        CHECK(n == bulk[k]);
        CHECK(n == vrow[k]);
        CHECK(n == verlinde(*s3, md, j, i, k));
        total += n * md.dims[k];
      }
      CHECK(total == md.dims[i] * md.dims[j]);
    }
}

TEST_CASE("twist relation smoke test: (ST)^3 proportional to S^2") {
  for (const char* spec : {"cyclic:2", "sym:3"}) {
    auto cat = category(spec);
    ModularData md = modular_data(*cat, 2);
    const std::size_t m = md.s.size();
    auto mul = [&](const std::vector<std::vector<Cyclotomic>>& a,
                   const std::vector<std::vector<Cyclotomic>>& b) {
      std::vector<std::vector<Cyclotomic>> out(
          m, std::vector<Cyclotomic>(m, Cyclotomic::zero(cat->conductor())));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l) {
          if (a[i][l].is_zero()) continue;
          for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
      return out;
    };
    auto st = md.s;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) st[i][j] *= md.t[j];
    auto st3 = mul(mul(st, st), st);
    auto s2 = mul(md.s, md.s);
    // Proportionality by cross-multiplication; s2[0][0] = |G|^2 != 0.
    REQUIRE_FALSE(s2[0][0].is_zero());
    CHECK_FALSE(st3[0][0].is_zero());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        CHECK(st3[i][j] * s2[0][0] == s2[i][j] * st3[0][0]);
    MESSAGE("proportionality constant for ", std::string(spec), ": (", st3[0][0].str(),
            ") / (", s2[0][0].str(), ")");
  }
}
