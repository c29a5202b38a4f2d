// Acceptance suite: runs every contract criterion at its stated tolerance
// (all equalities exact) and prints one PASS/FAIL line per criterion.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtk/autoeq.hpp"
#include "dtk/error.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/indicators.hpp"
#include "dtk/paper_examples.hpp"
#include "dtk/parallel.hpp"
#include "dtk/serialize.hpp"
#include "dtk/snconj.hpp"
#include "dtk/ydcat.hpp"

using namespace dtk;

namespace {

int g_failures = 0;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void criterion(int num, const std::string& label, bool ok, double seconds,
               const std::string& detail = "") {
  if (!ok) ++g_failures;
  std::printf("%s  criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(),
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

struct Suite {
  // The order follows the criterion-5 group list.
  std::vector<std::pair<std::string, std::unique_ptr<DoubleCategory>>> cats;

  DoubleCategory& at(const std::string& name) {
    for (auto& [n, cat] : cats)
      if (n == name) return *cat;
    throw InputError("unknown suite group " + name);
  }
};

Suite build_suite() {
  Suite suite;
  auto add = [&](const std::string& name, PermGroup g) {
    suite.cats.emplace_back(name, std::make_unique<DoubleCategory>(std::move(g)));
  };
  add("Z2", build_group("cyclic:2"));
  add("Z3", build_group("cyclic:3"));
  add("S3", build_group("sym:3"));
  add("D4", build_group("dihedral:4"));
  add("Q8", PermGroup::from_generators(8, {Permutation({2, 3, 1, 0, 6, 7, 5, 4}),
                                           Permutation({4, 5, 7, 6, 1, 0, 2, 3})}));
  add("ex1", build_group("paper:ex1"));
  add("ex2", build_group("paper:ex2"));
  add("ex3", build_group("paper:ex3"));
  add("S4", build_group("sym:4"));
  return suite;
}

bool all_ok(const std::vector<CheckResult>& results, std::string& detail) {
  bool ok = true;
  for (const auto& r : results) {
    if (r.ok) continue;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + r.name +
              (r.detail.empty() ? "" : " [" + r.detail + "]");
  }
  return ok;
}

void criterion_1_to_3(unsigned jobs) {
  {
    Timer t;
    std::string detail;
    bool ok = all_ok(verify_paper_ex1(), detail);
    double sec = t.seconds();
    criterion(1, "order-18 example: sigma/tau pairings and 4 orbit classes",
              ok && sec < 10.0, sec, detail);
  }
  {
    Timer t;
    std::string detail;
    bool ok = all_ok(verify_paper_ex2(), detail);
    double sec = t.seconds();
    criterion(2, "order-24 example: 12 simples at the class of a in 6 orbits",
              ok && sec < 10.0, sec, detail);
  }
  {
    Timer t;
    std::string detail;
    bool ok = all_ok(verify_paper_ex3(jobs), detail);
    double sec = t.seconds();
    criterion(3, "order-81 example: transport identity, 6 and 8 orbits", ok && sec < 60.0, sec,
              detail);
  }
}

void criterion_4(unsigned jobs) {
  Timer t;
  bool ok = true;
  std::string detail;
  double n10_seconds = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    auto report = snconj::check_sn(n, snconj::Method::enumerate, 1000000, jobs);
    if (!report.all_passed()) {
      ok = false;
      detail += "failure at n=" + std::to_string(n) + "; ";
    }
    if (n == 10) n10_seconds = report.seconds;
    for (const auto& res : report.results)
      if (res.outcome == snconj::Outcome::skipped)
        detail += "skipped |C|=" + std::to_string(res.centralizer_order) +
                  " at n=" + std::to_string(n) + "; ";
  }
  ok = ok && n10_seconds < 300.0;
  criterion(4, "sn-check passes with zero failures for n <= 10 at cap 10^6", ok, t.seconds(),
            detail);
}

void criterion_5(Suite& suite, unsigned jobs) {
  Timer t;
  bool ok = true;
  std::string detail;
  for (auto& [name, catp] : suite.cats) {
    DoubleCategory& cat = *catp;
    std::uint64_t e = cat.conductor();
    auto vectors = all_indicator_vectors(cat, e, jobs);
    for (std::uint64_t r : prime_residue_generators(e)) {
      SimplePermutation sg = sigma(cat, static_cast<std::int64_t>(r));
      SimplePermutation tu = tau(cat, static_cast<std::int64_t>(r));
      SimplePermutation ps = psi(cat, static_cast<std::int64_t>(r));
      for (std::uint32_t i = 0; i < vectors.size() && ok; ++i)
        for (std::uint64_t m = 1; m <= e; ++m) {
          const Cyclotomic& base = vectors[i].values[m - 1];
          Cyclotomic gal = base.galois(static_cast<std::int64_t>(r));
          std::uint64_t mr = (m * r) % e;
          if (mr == 0) mr = e;
          if (vectors[tu.images[i]].values[m - 1] != gal ||
              vectors[i].values[mr - 1] != gal ||
              vectors[sg.images[i]].values[m - 1] != gal ||
              vectors[ps.images[i]].values[m - 1] != base) {
            ok = false;
            detail = name + ": law fails at simple " + std::to_string(i) +
                     ", m=" + std::to_string(m) + ", r=" + std::to_string(r);
            break;
          }
        }
    }
  }
  criterion(5, "indicator laws for tau, sigma and psi on all nine groups", ok, t.seconds(),
            detail);
}

void criterion_6(Suite& suite) {
  Timer t;
  bool ok = true;
  std::string detail;
  for (auto& [name, catp] : suite.cats) {
    const PermGroup& g = catp->group();
    std::uint64_t e = g.exponent();
    auto gens = prime_residue_generators(e);
    if (gens.empty()) continue;
    if (g.order() <= 30) {
      for (const auto& gg : g.elements())
        for (std::uint64_t m = 1; m <= e && ok; ++m) {
          auto lhs = counting_table_full(g, gg, static_cast<std::int64_t>(m));
          for (std::uint64_t r : gens) {
            auto rhs = counting_table_full(g, gg.power(static_cast<std::int64_t>(r)),
                                           static_cast<std::int64_t>(m));
            for (std::uint32_t yi = 0; yi < g.order(); ++yi) {
              std::uint32_t yr =
                  g.index_of(g.elements()[yi].power(static_cast<std::int64_t>(r)));
              if (lhs[yi] != rhs[yr]) ok = false;
            }
          }
        }
    } else {
      std::mt19937_64 rng(20250809);
      for (int s = 0; s < 500 && ok; ++s) {
        const Permutation& gg = g.elements()[rng() % g.order()];
        const Permutation& y = g.elements()[rng() % g.order()];
        std::int64_t m = static_cast<std::int64_t>(1 + rng() % e);
        std::uint64_t r = gens[rng() % gens.size()];
        if (!check_counting_identity(g, gg, y, m, static_cast<std::int64_t>(r))) ok = false;
      }
    }
    if (!ok && detail.empty()) detail = "failure in " + name;
  }
  criterion(6, "power-map counting identity, exhaustive to |G|<=30, sampled beyond", ok,
            t.seconds(), detail);
}

void criterion_7_and_8(Suite& suite, unsigned jobs) {
  Timer t;
  bool ok7 = true, ok8 = true;
  std::string detail7, detail8;
  for (auto& [name, catp] : suite.cats) {
    DoubleCategory& cat = *catp;
    if (cat.group().order() > 60) continue;
    ModularData md = modular_data(cat, jobs);
    const std::size_t m = md.s.size();
    const std::uint64_t order = cat.group().order();

    for (std::size_t i = 0; i < m && ok7; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (md.s[i][j] != md.s[j][i]) ok7 = false;
    for (std::size_t j = 0; j < m && ok7; ++j)
      if (md.s[0][j] != Cyclotomic(static_cast<long>(md.dims[j]))) ok7 = false;
    std::atomic<bool> mod_ok{true};
    parallel_for(m, jobs, [&](std::size_t i) {
      Cyclotomic order_sq(static_cast<long>(order * order));
      for (std::size_t j = 0; j < m; ++j) {
        Cyclotomic acc = Cyclotomic::zero(cat.conductor());
        for (std::size_t l = 0; l < m; ++l) acc += md.s[i][l] * md.s[j][l].conjugate();
        if (acc != (i == j ? order_sq : Cyclotomic())) mod_ok = false;
      }
    });
    if (!mod_ok) ok7 = false;
    std::atomic<bool> fusion_ok{true};
    try {
      VerlindeTable vt(cat, md);
      parallel_for(m, jobs, [&](std::size_t i) {
        for (std::uint32_t j = 0; j < m; ++j) {
          auto from_s = vt.row(static_cast<std::uint32_t>(i), j);
          auto direct = tensor_decomposition_direct(cat, static_cast<std::uint32_t>(i), j);
          if (from_s != direct) fusion_ok = false;
        }
      });
    } catch (const ConsistencyError&) {
      fusion_ok = false;
    }
    if (!fusion_ok) ok7 = false;
    if (!ok7 && detail7.empty()) detail7 = "failure in " + name;

    for (std::uint64_t r : prime_residue_generators(cat.conductor())) {
      SimplePermutation tu = tau(cat, static_cast<std::int64_t>(r));
      for (std::uint32_t i = 0; i < m && ok8; ++i) {
        Cyclotomic theta_pow = Cyclotomic(1L);
        for (std::uint64_t p = 0; p < r; ++p) theta_pow *= md.t[i];
        if (md.t[tu.images[i]] != md.t[i].galois(static_cast<std::int64_t>(r)) ||
            md.t[tu.images[i]] != theta_pow)
          ok8 = false;
        for (std::uint32_t j = 0; j < m; ++j)
          if (md.s[tu.images[i]][tu.images[j]] !=
              md.s[i][j].galois(static_cast<std::int64_t>(r)))
            ok8 = false;
      }
      if (!ok8 && detail8.empty()) detail8 = "failure in " + name;
    }
  }
  double sec = t.seconds();
  criterion(7, "modular data laws and Verlinde = direct oracle for |G| <= 60", ok7, sec,
            detail7);
  criterion(8, "galois law on S and T under tau for the same groups", ok8, 0.0, detail8);
}

void criterion_9(Suite& suite) {
  Timer t;
  bool ok = true;
  std::string detail;
  for (auto& [name, catp] : suite.cats) {
    DoubleCategory& cat = *catp;
    const PermGroup& g = cat.group();
    for (std::uint32_t a = 0; a < cat.classes().count() && ok; ++a) {
      const CharacterTable& tab = cat.table(a);
      const auto& host = cat.centralizer_host(a);
      const Permutation& rep = cat.classes().reps[a];
      for (std::uint64_t m = 1; m <= cat.conductor() && ok; ++m) {
        std::vector<Cyclotomic> nu;
        for (std::uint32_t irr = 0; irr < tab.size(); ++irr)
          nu.push_back(indicator(cat, a, irr, m));
        // lhs is a class function; evaluate once per centralizer class.
        std::vector<Cyclotomic> lhs;
        for (std::size_t c = 0; c < host->classes.count(); ++c) {
          Cyclotomic acc = Cyclotomic::zero(cat.conductor());
          for (std::uint32_t irr = 0; irr < tab.size(); ++irr)
            acc += nu[irr] * tab.irreducibles[irr].at_class(c);
          lhs.push_back(std::move(acc));
        }
        auto counts = counting_table_full(g, rep, static_cast<std::int64_t>(m));
        for (std::uint32_t yi = 0; yi < g.order(); ++yi) {
          const Permutation& y = g.elements()[yi];
          auto pos = host->group.find(y);
          if (!pos) continue;  // reconstruction quantifies over y in C_G(g)
          std::uint32_t c = host->classes.class_of_element[*pos];
          if (lhs[c] != Cyclotomic(static_cast<long>(counts[yi]))) {
            ok = false;
            detail = name + ": mismatch at class " + std::to_string(a) +
                     ", m=" + std::to_string(m);
            break;
          }
        }
      }
    }
  }
  criterion(9, "reconstruction: sum of nu_m(chi) chi(y) equals the solution count", ok,
            t.seconds(), detail);
}

void criterion_10(Suite& suite) {
  Timer t;
  bool ok = true;
  std::string detail;
  for (auto& [name, catp] : suite.cats) {
    DoubleCategory& cat = *catp;
    for (std::uint32_t a = 0; a < cat.classes().count() && ok; ++a) {
      const CharacterTable& tab = cat.table(a);
      const auto& host = cat.centralizer_host(a);
      std::uint64_t sq = 0;
      for (auto d : tab.degrees) sq += d * d;
      if (sq != host->group.order()) ok = false;
      for (std::size_t i = 0; i < tab.size() && ok; ++i)
        for (std::size_t j = 0; j < tab.size(); ++j) {
          Cyclotomic ip = inner_product(tab.irreducibles[i], tab.irreducibles[j]);
          if (ip != (i == j ? Cyclotomic(1L) : Cyclotomic())) ok = false;
        }
      for (std::size_t c1 = 0; c1 < host->classes.count() && ok; ++c1)
        for (std::size_t c2 = 0; c2 < host->classes.count(); ++c2) {
          Cyclotomic acc = Cyclotomic::zero(cat.conductor());
          for (const auto& chi : tab.irreducibles)
            acc += chi.at_class(c1) * chi.at_class(c2).conjugate();
          Cyclotomic expected =
              c1 == c2 ? Cyclotomic(static_cast<long>(host->group.order() /
                                                      host->classes.sizes[c1]))
                       : Cyclotomic();
          if (acc != expected) ok = false;
        }
      for (std::uint64_t r : prime_residue_generators(host->group.exponent())) {
        std::set<std::size_t> hit;
        for (std::size_t i = 0; i < tab.size() && ok; ++i) {
          auto idx = tab.index_of(adams(tab.irreducibles[i], static_cast<std::int64_t>(r)));
          if (!idx)
            ok = false;
          else
            hit.insert(*idx);
        }
        if (ok && hit.size() != tab.size()) ok = false;
      }
      if (!ok && detail.empty())
        detail = name + ": table of class " + std::to_string(a);
    }
  }
  criterion(10, "centralizer tables: orthogonality, degree sums, Adams row permutation", ok,
            t.seconds(), detail);
}

}  // namespace

int main() {
  unsigned jobs = default_jobs();
  std::printf("acceptance suite, %u worker threads\n", jobs);
  Suite suite = build_suite();
  criterion_1_to_3(jobs);
  criterion_4(jobs);
  criterion_5(suite, jobs);
  criterion_6(suite);
  criterion_7_and_8(suite, jobs);
  criterion_9(suite);
  criterion_10(suite);
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
