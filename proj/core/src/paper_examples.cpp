#include "dtk/paper_examples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dtk/autoeq.hpp"
#include "dtk/error.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/ydcat.hpp"

namespace dtk {

namespace {

// Rows of the centralizer table labeled chi_{uv} by prescribed values on two
// commuting generators: chi(x^i y^j) = zeta^(cu*u*i + cv*v*j) with zeta of
// the given order.
std::map<std::pair<unsigned, unsigned>, std::uint32_t> label_by_characters(
    const CharacterTable& tab, const Permutation& x, unsigned ord_x, const Permutation& y,
    unsigned ord_y, std::uint64_t zeta_order, unsigned cu, unsigned cv) {
  const auto& host = tab.host;
  std::map<std::pair<unsigned, unsigned>, std::uint32_t> out;
  for (unsigned u = 0; u < ord_x; ++u)
    for (unsigned v = 0; v < ord_y; ++v) {
      std::vector<Cyclotomic> values;
      for (const auto& rep : host->classes.reps) {
        bool found = false;
        for (unsigned i = 0; i < ord_x && !found; ++i)
          for (unsigned j = 0; j < ord_y && !found; ++j) {
            if (x.power(i) * y.power(j) == rep) {
              values.push_back(Cyclotomic::root_of_unity(
                  zeta_order, static_cast<std::int64_t>(cu * u * i + cv * v * j)));
              found = true;
            }
          }
        if (!found) throw ConsistencyError("labeling: class rep not of the form x^i y^j");
      }
      auto idx = tab.index_of(ClassFunction(host, std::move(values)));
      if (!idx) throw ConsistencyError("labeling: chi_uv not found in the table");
      out[{u, v}] = static_cast<std::uint32_t>(*idx);
    }
  return out;
}

std::size_t orbit_count_restricted(const std::vector<std::vector<std::uint32_t>>& parts,
                                   const std::set<std::uint32_t>& keep) {
  std::size_t count = 0;
  for (const auto& part : parts) {
    bool inside = keep.count(part.front()) != 0;
    for (std::uint32_t m : part)
      if ((keep.count(m) != 0) != inside)
        throw ConsistencyError("orbit leaves the selected family of simples");
    if (inside) ++count;
  }
  return count;
}

void check_ex1(std::vector<CheckResult>& out) {
  PermGroup g = build_group("paper:ex1");
  DoubleCategory cat(std::move(g));
  Permutation a = parse_cycles("(1,2,3)", 6);
  Permutation b = parse_cycles("(4,5,6)", 6);
  std::uint32_t cls = cat.classes().class_of(cat.group(), a);
  const CharacterTable& tab = cat.table(cls);
  auto row = label_by_characters(tab, a, 3, b, 3, 3, 1, 1);
  auto simple = [&](unsigned u, unsigned v) { return cat.simple_index(cls, row[{u, v}]); };

  bool pair_ok = true;
  auto expect = [&](std::uint32_t got, unsigned u, unsigned v) {
    pair_ok = pair_ok && got == simple(u, v);
  };
  expect(sigma_image(cat, simple(0, 1), -1), 0, 2);
  expect(sigma_image(cat, simple(1, 1), -1), 2, 2);
  expect(sigma_image(cat, simple(2, 1), -1), 1, 2);
  expect(sigma_image(cat, simple(1, 0), -1), 2, 0);
  expect(tau_image(cat, simple(1, 0), -1), 2, 0);
  expect(tau_image(cat, simple(1, 1), -1), 2, 1);
  expect(tau_image(cat, simple(2, 2), -1), 1, 2);
  expect(sigma_image(cat, simple(0, 0), -1), 0, 0);
  expect(tau_image(cat, simple(0, 0), -1), 0, 0);
  out.push_back({"ex1: sigma_-1 and tau_-1 pairings on the chi_uv family", pair_ok, ""});

  auto parts = orbits(cat, {AutoeqOp::sigma, AutoeqOp::tau}, {-1});
  std::set<std::uint32_t> family;
  for (unsigned u = 0; u < 3; ++u)
    for (unsigned v = 0; v < 3; ++v) family.insert(simple(u, v));
  std::size_t cnt = orbit_count_restricted(parts, family);
  out.push_back({"ex1: nine simples at the class of a fall in 4 orbit classes", cnt == 4,
                 "got " + std::to_string(cnt)});
}

void check_ex2(std::vector<CheckResult>& out) {
  PermGroup g = build_group("paper:ex2");
  DoubleCategory cat(std::move(g));
  Permutation a = parse_cycles("(1,2,3)", 7);
  std::uint32_t cls = cat.classes().class_of(cat.group(), a);
  std::size_t family_size = cat.table(cls).size();
  std::set<std::uint32_t> family;
  for (std::uint32_t irr = 0; irr < family_size; ++irr)
    family.insert(cat.simple_index(cls, irr));
  auto parts = orbits(cat, {AutoeqOp::sigma, AutoeqOp::tau}, {-1});
  std::size_t cnt = orbit_count_restricted(parts, family);
  out.push_back({"ex2: twelve simples at the class of a fall in 6 orbits",
                 family_size == 12 && cnt == 6,
                 "family " + std::to_string(family_size) + ", orbits " + std::to_string(cnt)});
}

void check_ex3(std::vector<CheckResult>& out, unsigned jobs) {
  (void)jobs;
  PermGroup grp = build_group("paper:ex3");
  DoubleCategory cat(std::move(grp));
  const PermGroup& g = cat.group();
  Permutation a = g.elements()[0];
  {
    std::vector<std::uint32_t> ia(27), ib(27);
    for (std::uint32_t x = 0; x < 27; ++x) {
      ia[x] = (x + 1) % 27;
      ib[x] = (19 * x) % 27;
    }
    a = Permutation(ia);
    Permutation b{ib};
    Permutation t = a.power(2) * b;        // t = a^2 b
    Permutation gg = a.power(3) * b;       // g = a^3 b
    std::uint32_t cls_g = cat.classes().class_of(g, gg);
    const CharacterTable& tab = cat.table(cls_g);
    // chi_uv(a^3) = zeta9^u, chi_uv(b) = zeta9^(3v); transport by t must send
    // chi_uv to chi_{u, v+u}.
    auto row = label_by_characters(tab, a.power(3), 9, b, 3, 9, 1, 3);
    bool ok = conjugated(t, gg.power(4)) == gg;
    for (unsigned u = 0; u < 9 && ok; ++u)
      for (unsigned v = 0; v < 3 && ok; ++v) {
        ClassFunction moved = transport(tab.irreducibles[row[{u, v}]], t, tab.host);
        auto idx = tab.index_of(moved);
        ok = idx && *idx == row[{u, (v + u) % 3}];
      }
    out.push_back({"ex3: t = a^2 b realizes g^4 -> g and t . chi_uv = chi_{u,v+u}", ok, ""});

    auto parts = orbits(cat, {AutoeqOp::sigma, AutoeqOp::tau}, {2});
    auto family_of = [&](const Permutation& elem) {
      std::set<std::uint32_t> fam;
      for (const Permutation& power : {elem, elem.power(2)}) {
        std::uint32_t c = cat.classes().class_of(g, power);
        for (std::uint32_t irr = 0; irr < cat.table(c).size(); ++irr)
          fam.insert(cat.simple_index(c, irr));
      }
      return fam;
    };
    std::set<std::uint32_t> fam_g = family_of(gg);
    std::size_t cnt_g = orbit_count_restricted(parts, fam_g);
    out.push_back({"ex3: 54 simples over classes of a^3 b and its square fall in 6 orbits",
                   fam_g.size() == 54 && cnt_g == 6,
                   "family " + std::to_string(fam_g.size()) + ", orbits " + std::to_string(cnt_g)});
    std::set<std::uint32_t> fam_b = family_of(b);
    std::size_t cnt_b = orbit_count_restricted(parts, fam_b);
    out.push_back({"ex3: 54 simples over classes of b and b^2 fall into 8 orbits",
                   fam_b.size() == 54 && cnt_b == 8,
                   "family " + std::to_string(fam_b.size()) + ", orbits " + std::to_string(cnt_b)});
  }
}

}  // namespace

std::vector<CheckResult> verify_paper_ex1() {
  std::vector<CheckResult> out;
  check_ex1(out);
  return out;
}

std::vector<CheckResult> verify_paper_ex2() {
  std::vector<CheckResult> out;
  check_ex2(out);
  return out;
}

std::vector<CheckResult> verify_paper_ex3(unsigned jobs) {
  std::vector<CheckResult> out;
  check_ex3(out, jobs);
  return out;
}

std::vector<CheckResult> verify_paper_examples(unsigned jobs) {
  std::vector<CheckResult> out;
  check_ex1(out);
  check_ex2(out);
  check_ex3(out, jobs);
  return out;
}

}  // namespace dtk
