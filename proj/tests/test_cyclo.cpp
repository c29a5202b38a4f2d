#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "dtk/cyclo.hpp"
#include "dtk/error.hpp"

using namespace dtk;

namespace {

Cyclotomic zeta(std::uint64_t e, std::int64_t k) { return Cyclotomic::root_of_unity(e, k); }

Cyclotomic random_cyclo(std::mt19937& rng, std::uint64_t e) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> coeffs;
  for (std::uint64_t j = 0; j < e; ++j) coeffs.emplace_back(num(rng), den(rng));
  return Cyclotomic::from_poly(e, std::move(coeffs));
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(zeta(1, 0) == Cyclotomic(1L));
  CHECK(zeta(4, 2) == Cyclotomic(-1L));
  CHECK(zeta(3, 0) + zeta(3, 1) + zeta(3, 2) == Cyclotomic());
  CHECK(zeta(6, 1) == Cyclotomic::from_poly(3, {Rational(1), Rational(1)}));  // 1 + zeta_3
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), InputError);
}

TEST_CASE("ring operations") {
  Cyclotomic z = zeta(5, 1) + zeta(5, 3).scaled(Rational(2, 7));
  CHECK(z * Cyclotomic(1L) == z);
  CHECK((z + (-z)).is_zero());
  CHECK((zeta(3, 1) + zeta(3, 2)) * Cyclotomic(1L) == Cyclotomic(-1L));
  CHECK(z.div_by_integer(3).scaled(Rational(3)) == z);
  CHECK_THROWS_AS(z.div_by_integer(0), InputError);
}

TEST_CASE("galois action") {
  CHECK(zeta(3, 1).galois(2) == zeta(3, 2));
  CHECK(zeta(3, 1).galois(2) == Cyclotomic::from_poly(3, {Rational(-1), Rational(-1)}));
  CHECK(Cyclotomic(Rational(7, 3)).galois(1) == Cyclotomic(Rational(7, 3)));
  Cyclotomic mixed = zeta(9, 1) + zeta(9, 8);
  CHECK(mixed.galois(2) == zeta(9, 2) + zeta(9, 7));
  CHECK(mixed.galois(1) == mixed);
  CHECK_THROWS_AS(zeta(9, 1).galois(3), InputError);
  // gamma_r gamma_s = gamma_{rs}
  CHECK(mixed.galois(2).galois(4) == mixed.galois(8));
  // rationals are fixed by every galois index
  Cyclotomic q = Cyclotomic(Rational(-5, 2)).embedded(12);
  CHECK(q.galois(5) == q);
  CHECK(q.galois(7) == q);
}

TEST_CASE("complex conjugation") {
  CHECK(Cyclotomic(1L).conjugate() == Cyclotomic(1L));
  CHECK(zeta(4, 1).conjugate() == -zeta(4, 1));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Cyclotomic z = random_cyclo(rng, 12);
    CHECK(z.conjugate().conjugate() == z);
    CHECK(z.conjugate() == z.galois(11));
  }
}

TEST_CASE("rational and integer detection") {
  CHECK(Cyclotomic(5L).as_integer().value() == 5);
  CHECK_FALSE(zeta(3, 1).as_rational().has_value());
  Cyclotomic sum = zeta(3, 1) + zeta(3, 2) + Cyclotomic(1L);
  REQUIRE(sum.as_integer().has_value());
  CHECK(sum.as_integer().value() == 0);
  CHECK(Cyclotomic(Rational(3, 2)).as_rational().value() == Rational(3, 2));
  CHECK_FALSE(Cyclotomic(Rational(3, 2)).as_integer().has_value());
}

TEST_CASE("canonical form is construction independent") {
  std::mt19937 rng(12345);
  for (std::uint64_t e : {4u, 9u, 12u}) {
    for (int trial = 0; trial < 25; ++trial) {
      Cyclotomic a = random_cyclo(rng, e);
      Cyclotomic b = random_cyclo(rng, e);
      Cyclotomic c = random_cyclo(rng, e);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a - a == Cyclotomic::zero(e));
      for (std::int64_t r : {5, 7}) {
        if (std::gcd<std::uint64_t>(r, e) != 1) continue;
        CHECK((a * b).galois(r) == a.galois(r) * b.galois(r));
        CHECK((a + b).galois(r) == a.galois(r) + b.galois(r));
      }
    }
  }
}

TEST_CASE("conductor embedding and comparison") {
  Cyclotomic z3 = zeta(3, 1);
  CHECK(z3.embedded(12) == z3);
  CHECK(zeta(12, 4) == z3);
  CHECK(Cyclotomic::compare(z3, z3) == 0);
  CHECK(Cyclotomic::compare(Cyclotomic(0L), Cyclotomic(1L)) < 0);
  // zeta_2 is -1 in every conductor
  CHECK(zeta(2, 1) == Cyclotomic(-1L));
  CHECK(zeta(6, 3) == Cyclotomic(-1L));
}

TEST_CASE("cyclotomic polynomial table") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<Integer>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("prime residue generators") {
  CHECK(prime_residue_generators(1).empty());
  CHECK(prime_residue_generators(2).empty());
  CHECK(prime_residue_generators(9) == std::vector<std::uint64_t>{2});

  auto closure = [](std::uint64_t e, const std::vector<std::uint64_t>& gens) {
    std::set<std::uint64_t> seen{1 % e};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<std::uint64_t> snapshot = seen;
      for (std::uint64_t s : snapshot)
        for (std::uint64_t g : gens)
          if (seen.insert(s * g % e).second) grew = true;
    }
    return seen;
  };
  for (std::uint64_t e : {8u, 12u, 27u, 60u, 2520u}) {
    auto gens = closure(e, prime_residue_generators(e));
    CHECK(gens.size() == units_mod(e).size());
  }
  CHECK(closure(8, prime_residue_generators(8)) == std::set<std::uint64_t>{1, 3, 5, 7});
  CHECK(units_mod(12) == std::vector<std::uint64_t>{1, 5, 7, 11});
}
