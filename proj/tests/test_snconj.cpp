#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <unordered_set>

#include "dtk/autoeq.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/snconj.hpp"

using namespace dtk;
using namespace dtk::snconj;

namespace {

std::uint64_t closure_size(const std::vector<Permutation>& gens, unsigned n) {
  std::unordered_set<Permutation, PermHash> seen{Permutation::identity(n)};
  std::vector<Permutation> todo{Permutation::identity(n)};
  while (!todo.empty()) {
    Permutation cur = std::move(todo.back());
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation nx = g * cur;
      if (seen.insert(nx).second) todo.push_back(nx);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("partitions and class representatives") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(10).size() == 42);
  CHECK(class_rep({1, 1, 1}).is_identity());
  CHECK(class_rep({5}) == parse_cycles("(1,2,3,4,5)", 5));
  CHECK(class_rep({2, 2}) == parse_cycles("(1,2)(3,4)", 4));
}

TEST_CASE("centralizer orders and generators") {
  CHECK(centralizer_order({1, 1, 1, 1}) == 24);
  CHECK(centralizer_order({4}) == 4);
  CHECK(centralizer_order({2, 2}) == 8);
  CHECK(centralizer_order({2, 1, 1, 1, 1, 1, 1, 1, 1}) == 2 * 40320);
  for (unsigned n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      std::uint64_t expected = centralizer_order(lambda);
      if (expected > 100000) continue;
      CHECK(closure_size(centralizer_generators(lambda, n), n) == expected);
      // Every generator actually centralizes the representative.
      Permutation g = class_rep(lambda);
      std::vector<std::uint32_t> img(n);
      for (std::uint32_t p = 0; p < n; ++p) img[p] = p < g.degree() ? g(p) : p;
      Permutation padded{img};
      for (const auto& gen : centralizer_generators(lambda, n))
        CHECK(gen * padded == padded * gen);
    }
}

TEST_CASE("power conjugator") {
  Permutation id = Permutation::identity(6);
  CHECK(power_conjugator(id, 5).is_identity());
  Permutation five = parse_cycles("(1,2,3,4,5)", 5);
  Permutation t = power_conjugator(five, 2);
  CHECK(conjugated(t, five) == five.power(2));
  Permutation mixed = parse_cycles("(1,2,3,4,5,6)(7,8,9)(10,11)", 12);
  for (std::uint64_t r : {5, 7, 11}) {
    Permutation tr = power_conjugator(mixed, r);
    CHECK(conjugated(tr, mixed) == mixed.power(static_cast<std::int64_t>(r)));
  }
}

TEST_CASE("wreath invariants agree with brute-force centralizer conjugacy") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      Permutation g = class_rep(lambda);
      std::vector<std::uint32_t> img(n);
      for (std::uint32_t p = 0; p < n; ++p) img[p] = p < g.degree() ? g(p) : p;
      Permutation padded{img};
      PermGroup c = PermGroup::from_generators(n, centralizer_generators(lambda, n));
      // Brute-force class partition of the centralizer.
      std::map<WreathKey, std::set<Permutation>> by_key;
      for (const auto& x : c.elements()) by_key[conjugacy_invariant(x, padded)].insert(x);
      auto cls = conjugacy_classes(c);
      CHECK(by_key.size() == cls.count());
      for (const auto& [key, members] : by_key) {
        std::set<std::uint32_t> classes;
        for (const auto& x : members) classes.insert(cls.class_of(c, x));
        CHECK(classes.size() == 1);  // invariant-equal implies conjugate
      }
      auto reps = centralizer_class_reps(lambda, n);
      CHECK(reps.size() == cls.count());
      std::set<WreathKey> rep_keys;
      for (const auto& x : reps) {
        CHECK(x * padded == padded * x);
        rep_keys.insert(conjugacy_invariant(x, padded));
      }
      CHECK(rep_keys.size() == reps.size());  // one representative per class
    }
  }
}

TEST_CASE("check_sn passes on small degrees with both methods") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto enumerated = check_sn(n, Method::enumerate, 1000000, 2);
    CHECK(enumerated.all_passed());
    CHECK_FALSE(enumerated.any_skipped());
    CHECK(enumerated.exit_code() == 0);
    auto classified = check_sn(n, Method::classes, 1000000, 2);
    CHECK(classified.all_passed());
    CHECK(classified.exit_code() == 0);
    REQUIRE(enumerated.results.size() == classified.results.size());
    for (std::size_t i = 0; i < enumerated.results.size(); ++i)
      CHECK(enumerated.results[i].outcome == classified.results[i].outcome);
  }
}

TEST_CASE("skipped partitions are reported, never silently passed") {
  auto report = check_sn(7, Method::enumerate, 100, 2);
  CHECK(report.all_passed());
  CHECK(report.any_skipped());
  CHECK(report.exit_code() == 3);
  bool found_skip = false;
  for (const auto& res : report.results)
    if (res.centralizer_order > 100) {
      CHECK(res.outcome == Outcome::skipped);
      found_skip = true;
    }
  CHECK(found_skip);
  CHECK_FALSE(check_sn(7, Method::classes, 100, 2).any_skipped());
}

TEST_CASE("criterion holds for non-generator residues on small n") {
  // The generator reduction is sound; spot-check every unit directly.
  for (unsigned n : {4u, 5u}) {
    std::uint64_t e = sn_exponent(n);
    for (std::uint64_t r : units_mod(e)) {
      for (const auto& lambda : partitions_of(n)) {
        Permutation g = class_rep(lambda);
        std::vector<std::uint32_t> img(n);
        for (std::uint32_t p = 0; p < n; ++p) img[p] = p < g.degree() ? g(p) : p;
        Permutation padded{img};
        Permutation t = power_conjugator(padded, r);
        for (const auto& x : centralizer_class_reps(lambda, n))
          CHECK(conjugacy_invariant(x.power(static_cast<std::int64_t>(r)), padded) ==
                conjugacy_invariant(conjugated(t, x), padded));
      }
    }
  }
}

TEST_CASE("end-to-end agreement with the category-level autoequivalences") {
  for (unsigned n = 2; n <= 5; ++n) {
    DoubleCategory cat(build_group("sym:" + std::to_string(n)));
    auto report = check_sn(n, Method::enumerate, 1000000, 2);
    REQUIRE(report.all_passed());
    for (std::uint64_t r : report.residues) {
      SimplePermutation sg = sigma(cat, static_cast<std::int64_t>(r));
      SimplePermutation tu = tau(cat, static_cast<std::int64_t>(r));
      CHECK(sg.images == tu.images);
    }
  }
}
