// Command-line front end: exact modular data, Frobenius-Schur indicators and
// power-map autoequivalences for the Yetter-Drinfeld category of a finite
// permutation group.

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dtk/autoeq.hpp"
#include "dtk/cache.hpp"
#include "dtk/error.hpp"
#include "dtk/groupspec.hpp"
#include "dtk/indicators.hpp"
#include "dtk/paper_examples.hpp"
#include "dtk/parallel.hpp"
#include "dtk/serialize.hpp"
#include "dtk/snconj.hpp"
#include "dtk/ydcat.hpp"

namespace {

using namespace dtk;

struct Config {
  std::string group_spec;
  std::string format = "text";
  std::uint64_t m_max = 0;  // 0: exp(G)
  std::string cache_dir;
  unsigned jobs = default_jobs();
  std::uint64_t cap = kDefaultOrderCap;
};

std::unique_ptr<DoubleCategory> open_category(const Config& cfg) {
  if (cfg.group_spec.empty()) throw InputError("--group is required for this command");
  PermGroup g = build_group(cfg.group_spec, cfg.cap);
  std::optional<std::filesystem::path> dir;
  if (!cfg.cache_dir.empty())
    dir = cfg.cache_dir;
  else
    dir = cache_dir_from_env();
  if (dir) return std::make_unique<DoubleCategory>(std::move(g), *dir);
  return std::make_unique<DoubleCategory>(std::move(g));
}

std::string simple_label(const DoubleCategory& cat, std::uint32_t i) {
  const SimpleYD& s = cat.simples()[i];
  return cat.classes().reps[s.class_index].cycle_string() + " / " +
         std::to_string(s.irr_index) + " / " + std::to_string(s.dim);
}

std::string render_value(const Cyclotomic& z) {
  if (auto n = z.as_integer()) return n->get_str();
  if (auto q = z.as_rational()) return q->get_str();
  return z.str();
}

void emit(const Json& j) { std::cout << j.dump(1) << "\n"; }

int cmd_simples(const Config& cfg) {
  auto cat = open_category(cfg);
  const auto& simples = cat->simples();
  auto thetas = tmatrix(*cat);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& s : simples)
      rows.push_back(Json{{"index", s.simple_index},
                          {"class_rep", cat->classes().reps[s.class_index].cycle_string()},
                          {"class_index", s.class_index},
                          {"irr_index", s.irr_index},
                          {"dim", s.dim},
                          {"theta", cyclo_to_json(thetas[s.simple_index])}});
    emit(Json{{"group", cfg.group_spec},
              {"order", cat->group().order()},
              {"exponent", cat->conductor()},
              {"simples", std::move(rows)}});
  } else {
    const char* sep = cfg.format == "csv" ? "," : "  ";
    if (cfg.format == "csv") std::cout << "index,class_rep,class_index,irr_index,dim,theta\n";
    for (const auto& s : simples)
      std::cout << s.simple_index << sep << cat->classes().reps[s.class_index].cycle_string()
                << sep << s.class_index << sep << s.irr_index << sep << s.dim << sep
                << render_value(thetas[s.simple_index]) << "\n";
  }
  cat->save_cache();
  return 0;
}

int cmd_indicators(const Config& cfg) {
  auto cat = open_category(cfg);
  std::uint64_t m_max = cfg.m_max ? cfg.m_max : cat->conductor();
  auto vectors = all_indicator_vectors(*cat, m_max, cfg.jobs);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < vectors.size(); ++i) {
      Json vals = Json::array();
      for (const auto& v : vectors[i].values) vals.push_back(cyclo_to_json(v));
      rows.push_back(Json{{"index", i},
                          {"label", simple_label(*cat, i)},
                          {"indicators", std::move(vals)}});
    }
    emit(Json{{"group", cfg.group_spec}, {"m_max", m_max}, {"rows", std::move(rows)}});
  } else {
    const char* sep = cfg.format == "csv" ? "," : "  ";
    if (cfg.format == "csv") {
      std::cout << "label";
      for (std::uint64_t m = 1; m <= m_max; ++m) std::cout << ",nu_" << m;
      std::cout << "\n";
    }
    for (std::uint32_t i = 0; i < vectors.size(); ++i) {
      std::cout << simple_label(*cat, i);
      for (const auto& v : vectors[i].values) std::cout << sep << render_value(v);
      std::cout << "\n";
    }
  }
  cat->save_cache();
  return 0;
}

int cmd_matrix(const Config& cfg, bool smatrix) {
  auto cat = open_category(cfg);
  if (smatrix) {
    auto s = smatrix_unnormalized(*cat, cfg.jobs);
    if (cfg.format == "json") {
      emit(Json{{"group", cfg.group_spec},
                {"conductor", cat->conductor()},
                {"smatrix", cyclo_matrix_to_json(s)}});
    } else {
      const char* sep = cfg.format == "csv" ? "," : "  ";
      for (const auto& row : s) {
        for (std::size_t j = 0; j < row.size(); ++j)
          std::cout << (j ? sep : "") << render_value(row[j]);
        std::cout << "\n";
      }
    }
  } else {
    auto t = tmatrix(*cat);
    if (cfg.format == "json") {
      emit(Json{{"group", cfg.group_spec},
                {"conductor", cat->conductor()},
                {"tmatrix", cyclo_vector_to_json(t)}});
    } else {
      const char* sep = cfg.format == "csv" ? "," : "  ";
      for (std::size_t j = 0; j < t.size(); ++j) std::cout << (j ? sep : "") << render_value(t[j]);
      std::cout << "\n";
    }
  }
  cat->save_cache();
  return 0;
}

int cmd_fusion(const Config& cfg, std::uint32_t i, std::uint32_t j, std::int64_t k) {
  auto cat = open_category(cfg);
  std::size_t m = cat->simples().size();
  if (i >= m || j >= m || k >= static_cast<std::int64_t>(m))
    throw InputError("fusion: simple index out of range (0.." + std::to_string(m - 1) + ")");
  ModularData md = modular_data(*cat, cfg.jobs);
  if (k >= 0) {
    std::uint64_t n = verlinde(*cat, md, i, j, static_cast<std::uint32_t>(k));
    if (cfg.format == "json")
      emit(Json{{"i", i}, {"j", j}, {"k", k}, {"multiplicity", n}});
    else
      std::cout << n << "\n";
  } else {
    Json row = Json::array();
    for (std::uint32_t kk = 0; kk < m; ++kk) {
      std::uint64_t n = verlinde(*cat, md, i, j, kk);
      if (cfg.format == "json")
        row.push_back(Json{{"k", kk}, {"multiplicity", n}});
      else if (n)
        std::cout << "X_" << kk << " [" << simple_label(*cat, kk) << "]: " << n << "\n";
    }
    if (cfg.format == "json") emit(Json{{"i", i}, {"j", j}, {"row", std::move(row)}});
  }
  cat->save_cache();
  return 0;
}

int cmd_verify_modular(const Config& cfg, bool with_oracle) {
  auto cat = open_category(cfg);
  ModularData md = modular_data(*cat, cfg.jobs);
  const std::size_t m = md.s.size();
  const std::uint64_t order = cat->group().order();
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  };

  bool sym = true, dims = true;
  for (std::size_t i = 0; i < m && sym; ++i)
    for (std::size_t j = i + 1; j < m && sym; ++j) sym = md.s[i][j] == md.s[j][i];
  for (std::size_t j = 0; j < m && dims; ++j)
    dims = md.s[0][j] == Cyclotomic(static_cast<long>(md.dims[j]));
  report("S symmetric", sym);
  report("first row equals the dimension vector", dims);

  std::atomic<bool> unitary{true};
  Cyclotomic order_sq(static_cast<long>(order));
  order_sq *= Cyclotomic(static_cast<long>(order));
  parallel_for(m, cfg.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      Cyclotomic acc = Cyclotomic::zero(cat->conductor());
      for (std::size_t l = 0; l < m; ++l) acc += md.s[i][l] * md.s[j][l].conjugate();
      if (acc != (i == j ? order_sq : Cyclotomic())) unitary = false;
    }
  });
  report("S . conj(S) = |G|^2 I", unitary);

  std::atomic<bool> verlinde_ok{true}, oracle_ok{true};
  try {
    parallel_for(m, cfg.jobs, [&](std::size_t i) {
      for (std::uint32_t j = 0; j < m; ++j) {
        std::vector<std::uint64_t> direct;
        if (with_oracle)
          direct = tensor_decomposition_direct(*cat, static_cast<std::uint32_t>(i), j);
        for (std::uint32_t k = 0; k < m; ++k) {
          std::uint64_t n = verlinde(*cat, md, static_cast<std::uint32_t>(i), j, k);
          if (with_oracle && n != direct[k]) oracle_ok = false;
        }
      }
    });
  } catch (const ConsistencyError&) {
    verlinde_ok = false;
  }
  report("Verlinde multiplicities are nonnegative integers", verlinde_ok);
  if (with_oracle) report("Verlinde agrees with the direct tensor decomposition", oracle_ok);

  cat->save_cache();
  return all_ok ? 0 : 1;
}

int cmd_orbits(const Config& cfg, const std::string& ops_str, const std::string& r_str,
               bool all_residues) {
  auto cat = open_category(cfg);
  std::set<AutoeqOp> ops;
  std::stringstream ss(ops_str);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "sigma")
      ops.insert(AutoeqOp::sigma);
    else if (tok == "tau")
      ops.insert(AutoeqOp::tau);
    else if (tok == "psi")
      ops.insert(AutoeqOp::psi);
    else if (!tok.empty())
      throw InputError("--ops expects a comma list of sigma,tau,psi");
  }
  std::vector<std::int64_t> residues;
  if (all_residues) {
    for (std::uint64_t u : units_mod(cat->conductor()))
      residues.push_back(static_cast<std::int64_t>(u));
  } else if (r_str != "auto") {
    std::stringstream rs(r_str);
    while (std::getline(rs, tok, ','))
      if (!tok.empty()) {
        try {
          residues.push_back(std::stoll(tok));
        } catch (const std::exception&) {
          throw InputError("--r expects integers or 'auto', got \"" + tok + "\"");
        }
      }
  }
  auto parts = orbits(*cat, ops, residues);

  if (residues.empty())
    for (std::uint64_t r : prime_residue_generators(cat->conductor()))
      residues.push_back(static_cast<std::int64_t>(r));

  if (cfg.format == "json") {
    Json jparts = Json::array();
    for (const auto& part : parts) jparts.push_back(part);
    emit(Json{{"group", cfg.group_spec},
              {"orbit_count", parts.size()},
              {"orbits", std::move(jparts)}});
  } else if (cfg.format == "dot-like-edge-list") {
    for (AutoeqOp op : ops) {
      std::string name = op == AutoeqOp::sigma ? "sigma" : op == AutoeqOp::tau ? "tau" : "psi";
      for (std::int64_t r : residues) {
        SimplePermutation p = op == AutoeqOp::sigma ? sigma(*cat, r)
                              : op == AutoeqOp::tau ? tau(*cat, r)
                                                    : psi(*cat, r);
        for (std::uint32_t i = 0; i < p.images.size(); ++i)
          if (p.images[i] != i)
            std::cout << "(" << simple_label(*cat, i) << ") --" << name << "_" << r << "--> ("
                      << simple_label(*cat, p.images[i]) << ")\n";
      }
    }
  } else {
    std::cout << parts.size() << " orbits\n";
    for (const auto& part : parts) {
      std::cout << "{";
      for (std::size_t idx = 0; idx < part.size(); ++idx)
        std::cout << (idx ? ", " : "") << part[idx];
      std::cout << "}\n";
    }
  }
  cat->save_cache();
  return 0;
}

int cmd_i_classes(const Config& cfg) {
  auto cat = open_category(cfg);
  auto parts = i_equivalence_classes(*cat, cfg.m_max, cfg.jobs);
  if (cfg.format == "json") {
    Json jparts = Json::array();
    for (const auto& part : parts) jparts.push_back(part);
    emit(Json{{"group", cfg.group_spec},
              {"class_count", parts.size()},
              {"classes", std::move(jparts)}});
  } else {
    std::cout << parts.size() << " I-equivalence classes\n";
    for (const auto& part : parts) {
      std::cout << "{";
      for (std::size_t idx = 0; idx < part.size(); ++idx)
        std::cout << (idx ? ", " : "") << part[idx] << " [" << simple_label(*cat, part[idx])
                  << "]";
      std::cout << "}\n";
    }
  }
  cat->save_cache();
  return 0;
}

int cmd_counting_check(const Config& cfg, bool exhaustive, bool sampled, std::uint64_t samples,
                       std::uint64_t seed) {
  auto cat = open_category(cfg);
  const PermGroup& g = cat->group();
  std::uint64_t e = cat->conductor();
  auto gens = prime_residue_generators(e);
  if (gens.empty()) gens.push_back(1);
  if (!exhaustive && !sampled) exhaustive = g.order() <= 30;
  std::uint64_t failures = 0, checked = 0;
  if (exhaustive) {
    for (const auto& gg : g.elements())
      for (std::uint64_t m = 1; m <= e; ++m) {
        auto lhs = counting_table_full(g, gg, static_cast<std::int64_t>(m));
        for (std::uint64_t r : gens) {
          auto rhs = counting_table_full(g, gg.power(static_cast<std::int64_t>(r)),
                                         static_cast<std::int64_t>(m));
          for (std::uint32_t yi = 0; yi < g.order(); ++yi) {
            ++checked;
            std::uint32_t yr = g.index_of(g.elements()[yi].power(static_cast<std::int64_t>(r)));
            if (lhs[yi] != rhs[yr]) ++failures;
          }
        }
      }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Permutation& gg = g.elements()[rng() % g.order()];
      const Permutation& y = g.elements()[rng() % g.order()];
      std::int64_t m = static_cast<std::int64_t>(1 + rng() % e);
      std::uint64_t r = gens[rng() % gens.size()];
      ++checked;
      if (!check_counting_identity(g, gg, y, m, static_cast<std::int64_t>(r))) ++failures;
    }
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << "  counting identity: " << checked
            << " comparisons, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_sn_check(unsigned n, const std::string& method_str, std::uint64_t cap,
                 const std::string& json_out, unsigned jobs) {
  snconj::Method method = snconj::Method::enumerate;
  if (method_str == "classes")
    method = snconj::Method::classes;
  else if (method_str != "enumerate")
    throw InputError("--method expects enumerate or classes");
  auto report = snconj::check_sn(n, method, cap, jobs);
  for (const auto& res : report.results) {
    std::cout << (res.outcome == snconj::Outcome::passed    ? "PASS"
                  : res.outcome == snconj::Outcome::skipped ? "SKIP"
                                                            : "FAIL")
              << "  lambda = (";
    for (std::size_t i = 0; i < res.lambda.size(); ++i)
      std::cout << (i ? "," : "") << res.lambda[i];
    std::cout << "), |C| = " << res.centralizer_order << ", reps checked " << res.reps_checked
              << "\n";
  }
  std::cout << "S_" << n << ": exponent " << report.exponent << ", residues {";
  for (std::size_t i = 0; i < report.residues.size(); ++i)
    std::cout << (i ? "," : "") << report.residues[i];
  std::cout << "}, " << report.seconds << " s\n";
  if (report.counterexample) {
    const auto& w = *report.counterexample;
    std::cout << "counterexample: r = " << w.r << ", g = " << w.g.cycle_string()
              << ", t = " << w.t.cycle_string() << ", x = " << w.x.cycle_string() << "\n";
  }
  if (!json_out.empty()) {
    Json jres = Json::array();
    for (const auto& res : report.results)
      jres.push_back(Json{{"lambda", res.lambda},
                          {"centralizer_order", res.centralizer_order},
                          {"outcome", res.outcome == snconj::Outcome::passed    ? "passed"
                                      : res.outcome == snconj::Outcome::skipped ? "skipped"
                                                                                : "failed"},
                          {"reps_checked", res.reps_checked}});
    Json j{{"n", report.n},
           {"exponent", report.exponent},
           {"residues", report.residues},
           {"method", method_str},
           {"cap", report.cap},
           {"seconds", report.seconds},
           {"results", std::move(jres)}};
    if (report.counterexample) {
      const auto& w = *report.counterexample;
      j["counterexample"] = Json{{"lambda", w.lambda},
                                 {"r", w.r},
                                 {"g", permutation_to_json(w.g)},
                                 {"t", permutation_to_json(w.t)},
                                 {"x", permutation_to_json(w.x)}};
    }
    std::ofstream out(json_out);
    if (!out) throw InputError("cannot write " + json_out);
    out << j.dump(1) << "\n";
  }
  return report.exit_code();
}

int cmd_verify_paper_examples(const Config& cfg) {
  auto results = verify_paper_examples(cfg.jobs);
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.ok && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular data, higher indicators and power-map autoequivalences\n"
               "of Yetter-Drinfeld module categories over finite groups"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--group", cfg.group_spec,
                 "group spec: sym:n, cyclic:n, dihedral:n, paper:ex1..3, inline JSON, or a file");
  app.add_option("--format", cfg.format, "text, json, csv (orbits also: dot-like-edge-list)")
      ->check(CLI::IsMember({"text", "json", "csv", "dot-like-edge-list"}));
  app.add_option("--m-max", cfg.m_max, "highest indicator order (default exp(G))");
  app.add_option("--cache-dir", cfg.cache_dir,
                 "character-table cache directory (or env DOUBLE_TOOLKIT_CACHE)");
  app.add_option("--jobs", cfg.jobs, "worker thread count");
  app.add_option("--cap", cfg.cap, "group order cap");

  auto* simples_cmd = app.add_subcommand("simples", "list the simple objects");
  auto* indicators_cmd =
      app.add_subcommand("indicators", "higher Frobenius-Schur indicator table");
  auto* smatrix_cmd = app.add_subcommand("smatrix", "unnormalized S-matrix");
  auto* tmatrix_cmd = app.add_subcommand("tmatrix", "T-matrix (ribbon twists)");

  std::uint32_t fi = 0, fj = 0;
  std::int64_t fk = -1;
  auto* fusion_cmd = app.add_subcommand("fusion", "Verlinde fusion multiplicities N_ij^k");
  fusion_cmd->add_option("i", fi, "first simple index")->required();
  fusion_cmd->add_option("j", fj, "second simple index")->required();
  fusion_cmd->add_option("k", fk, "target simple index (omit for the whole row)");

  bool with_oracle = false;
  auto* verify_cmd = app.add_subcommand("verify-modular", "check the modular-data identities");
  verify_cmd->add_flag("--with-oracle", with_oracle,
                       "also compare Verlinde against the direct tensor decomposition");

  std::string ops_str = "sigma,tau";
  std::string r_str = "auto";
  bool all_residues = false;
  auto* orbits_cmd = app.add_subcommand("orbits", "orbits of simples under sigma/tau/psi");
  orbits_cmd->add_option("--ops", ops_str, "comma list from sigma,tau,psi");
  orbits_cmd->add_option("--r", r_str, "residue list or 'auto' for unit-group generators");
  orbits_cmd->add_flag("--all-residues", all_residues, "use every unit mod exp(G)");

  auto* iclasses_cmd = app.add_subcommand("i-classes", "I-equivalence classes of simples");

  bool exhaustive = false, sampled = false;
  std::uint64_t samples = 500, seed = 12345;
  auto* counting_cmd =
      app.add_subcommand("counting-check", "solution-count identity under r-th powers");
  counting_cmd->add_flag("--exhaustive", exhaustive, "check every (g, y, m <= e, generator r)");
  counting_cmd->add_flag("--sampled", sampled, "random sampling mode");
  counting_cmd->add_option("--samples", samples, "sample count (default 500)");
  counting_cmd->add_option("--seed", seed, "sampling seed (default 12345)");

  unsigned sn_n = 0;
  std::string sn_method = "enumerate";
  std::uint64_t sn_cap = 1000000;
  std::string sn_json;
  auto* sn_cmd = app.add_subcommand("sn-check",
                                    "compare the two power-map autoequivalences on S_n classwise");
  sn_cmd->add_option("n", sn_n, "symmetric group degree")->required();
  sn_cmd->add_option("--method", sn_method, "enumerate or classes");
  sn_cmd->add_option("--cap", sn_cap, "centralizer enumeration cap (default 10^6)");
  sn_cmd->add_option("--json", sn_json, "write the report to a JSON file");

  auto* paper_cmd =
      app.add_subcommand("verify-paper-examples", "run the built-in worked-example suite");

  for (CLI::App* sub : {simples_cmd, indicators_cmd, smatrix_cmd, tmatrix_cmd, fusion_cmd,
                        verify_cmd, orbits_cmd, iclasses_cmd, counting_cmd, sn_cmd, paper_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*simples_cmd) return cmd_simples(cfg);
    if (*indicators_cmd) return cmd_indicators(cfg);
    if (*smatrix_cmd) return cmd_matrix(cfg, true);
    if (*tmatrix_cmd) return cmd_matrix(cfg, false);
    if (*fusion_cmd) return cmd_fusion(cfg, fi, fj, fk);
    if (*verify_cmd) return cmd_verify_modular(cfg, with_oracle);
    if (*orbits_cmd) return cmd_orbits(cfg, ops_str, r_str, all_residues);
    if (*iclasses_cmd) return cmd_i_classes(cfg);
    if (*counting_cmd)
      return cmd_counting_check(cfg,
                                exhaustive,
                                sampled || counting_cmd->count("--samples") > 0 ||
                                    counting_cmd->count("--seed") > 0,
                                samples, seed);
    if (*sn_cmd) return cmd_sn_check(sn_n, sn_method, sn_cap, sn_json, cfg.jobs);
    if (*paper_cmd) return cmd_verify_paper_examples(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
