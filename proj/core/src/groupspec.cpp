#include "dtk/groupspec.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>

#include "dtk/error.hpp"
#include "dtk/serialize.hpp"

namespace dtk {

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("cycle parse error at position " + std::to_string(i) + ": " + msg);
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point number");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v < 1 || v > degree) fail("point out of range 1.." + std::to_string(degree));
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InputError& e) {
    throw InputError(std::string("cycle parse error: ") + e.what());
  }
}

namespace {

PermGroup from_json_spec(const Json& j, std::uint64_t cap) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InputError("group spec JSON needs \"degree\" and \"generators\"");
  std::size_t degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& item : j.at("generators")) {
    if (item.is_string())
      gens.push_back(parse_cycles(item.get<std::string>(), degree));
    else
      gens.push_back(permutation_from_json(item));
  }
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("paper builder relation check failed: " + what);
}

PermGroup build_paper_ex1(std::uint64_t cap) {
  // Z_3^2 x| Z_2 of order 18: tau inverts a and fixes b.
  Permutation a = parse_cycles("(1,2,3)", 6);
  Permutation b = parse_cycles("(4,5,6)", 6);
  Permutation tau = parse_cycles("(2,3)", 6);
  require(a.power(3).is_identity() && b.power(3).is_identity() && tau.power(2).is_identity(),
          "ex1 generator orders");
  require(conjugated(tau, a) == a.power(2), "ex1: tau a tau^-1 = a^2");
  require(conjugated(tau, b) == b, "ex1: tau b tau^-1 = b");
  require(a * b == b * a, "ex1: ab = ba");
  PermGroup g = PermGroup::from_generators(6, {a, b, tau}, cap);
  require(g.order() == 18, "ex1 order 18");
  return g;
}

PermGroup build_paper_ex2(std::uint64_t cap) {
  // (C_3 x C_2^2) x| C_2 of order 24: tau inverts a and swaps b and c.
  Permutation a = parse_cycles("(1,2,3)", 7);
  Permutation b = parse_cycles("(4,5)", 7);
  Permutation c = parse_cycles("(6,7)", 7);
  Permutation tau = parse_cycles("(2,3)(4,6)(5,7)", 7);
  require(a.power(3).is_identity() && b.power(2).is_identity() && c.power(2).is_identity() &&
              tau.power(2).is_identity(),
          "ex2 generator orders");
  require(conjugated(tau, a) == a.power(2), "ex2: tau a tau^-1 = a^2");
  require(conjugated(tau, b) == c, "ex2: tau b tau^-1 = c");
  require(a * b == b * a && b * c == c * b && a * c == c * a, "ex2: a, b, c commute");
  PermGroup g = PermGroup::from_generators(7, {a, b, c, tau}, cap);
  require(g.order() == 24, "ex2 order 24");
  return g;
}

PermGroup build_paper_ex3(std::uint64_t cap) {
  // C_27 x| C_3 of order 81 on Z/27: a: x+1, b: 19x.
  std::vector<std::uint32_t> ia(27), ib(27);
  for (std::uint32_t x = 0; x < 27; ++x) {
    ia[x] = (x + 1) % 27;
    ib[x] = (19 * x) % 27;
  }
  Permutation a{ia}, b{ib};
  require(a.power(27).is_identity() && b.power(3).is_identity(), "ex3 generator orders");
  require(conjugated(b, a) == a.power(19), "ex3: b a b^-1 = a^19");
  PermGroup g = PermGroup::from_generators(27, {a, b}, cap);
  require(g.order() == 81, "ex3 order 81");
  return g;
}

PermGroup build_named(const std::string& name, const std::string& arg, std::uint64_t cap) {
  auto parse_n = [&]() -> unsigned {
    if (arg.empty()) throw InputError("builder " + name + " needs a numeric argument");
    unsigned long v = std::stoul(arg);
    if (v < 1) throw InputError("builder argument must be positive");
    return static_cast<unsigned>(v);
  };
  if (name == "sym") {
    unsigned n = parse_n();
    std::vector<Permutation> gens;
    if (n >= 2) {
      std::vector<std::uint32_t> cyc(n);
      for (unsigned i = 0; i < n; ++i) cyc[i] = i;
      gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
      if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return PermGroup::from_generators(n, std::move(gens), cap);
  }
  if (name == "cyclic") {
    unsigned n = parse_n();
    std::vector<Permutation> gens;
    if (n >= 2) {
      std::vector<std::uint32_t> cyc(n);
      for (unsigned i = 0; i < n; ++i) cyc[i] = i;
      gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return PermGroup::from_generators(n, std::move(gens), cap);
  }
  if (name == "dihedral") {
    unsigned n = parse_n();
    if (n < 3) throw InputError("dihedral:n needs n >= 3");
    std::vector<std::uint32_t> rot(n), refl(n);
    for (unsigned i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      refl[i] = (n - i) % n;
    }
    return PermGroup::from_generators(n, {Permutation{rot}, Permutation{refl}}, cap);
  }
  if (name == "paper") {
    if (arg == "ex1") return build_paper_ex1(cap);
    if (arg == "ex2") return build_paper_ex2(cap);
    if (arg == "ex3") return build_paper_ex3(cap);
    throw InputError("unknown paper example \"" + arg + "\" (ex1, ex2, ex3)");
  }
  throw InputError("unknown group builder \"" + name + "\"");
}

}  // namespace

PermGroup build_group(const std::string& spec, std::uint64_t order_cap) {
  if (spec.empty()) throw InputError("empty group spec");
  if (spec.front() == '{') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const std::exception& e) {
      throw InputError(std::string("group spec JSON: ") + e.what());
    }
    return from_json_spec(j, order_cap);
  }
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string name = spec.substr(0, colon);
    if (name == "sym" || name == "cyclic" || name == "dihedral" || name == "paper")
      return build_named(name, spec.substr(colon + 1), order_cap);
  }
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const std::exception& e) {
      throw InputError("group spec file " + spec + ": " + e.what());
    }
    return from_json_spec(j, order_cap);
  }
  throw InputError("unrecognized group spec \"" + spec + "\"");
}

}  // namespace dtk
