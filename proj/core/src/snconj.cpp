#include "dtk/snconj.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "dtk/cyclo.hpp"
#include "dtk/error.hpp"
#include "dtk/numutil.hpp"
#include "dtk/parallel.hpp"

namespace dtk::snconj {

namespace {

void partitions_rec(unsigned n, unsigned max_part, CycleType& cur,
                    std::vector<CycleType>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Blocks of g's cycles grouped by length: for each point its (cycle id,
// position), and per length the cycle lists in order of their minimum point.
struct CycleIndex {
  std::vector<std::vector<std::uint32_t>> cycles;          // point lists, position order
  std::vector<std::uint32_t> cycle_of_point, pos_of_point;
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_length;  // length -> cycle ids
  std::vector<std::uint32_t> block_index;                  // cycle id -> index within its length
};

CycleIndex index_cycles(const Permutation& g) {
  CycleIndex ix;
  ix.cycles = g.all_cycles();
  ix.cycle_of_point.resize(g.degree());
  ix.pos_of_point.resize(g.degree());
  ix.block_index.resize(ix.cycles.size());
  for (std::uint32_t c = 0; c < ix.cycles.size(); ++c)
    for (std::uint32_t p = 0; p < ix.cycles[c].size(); ++p) {
      ix.cycle_of_point[ix.cycles[c][p]] = c;
      ix.pos_of_point[ix.cycles[c][p]] = p;
    }
  for (std::uint32_t c = 0; c < ix.cycles.size(); ++c) {
    auto& lst = ix.by_length[static_cast<std::uint32_t>(ix.cycles[c].size())];
    ix.block_index[c] = static_cast<std::uint32_t>(lst.size());
    lst.push_back(c);
  }
  return ix;
}

// Colored partitions of m with colors 0..k-1, parts listed with weakly
// decreasing (length, color).
void colored_partitions_rec(unsigned m, unsigned k, unsigned max_len, unsigned max_color,
                            std::vector<std::pair<unsigned, unsigned>>& cur,
                            std::vector<std::vector<std::pair<unsigned, unsigned>>>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned len = std::min(m, max_len); len >= 1; --len) {
    unsigned color_start = (len == max_len) ? max_color : k - 1;
    for (unsigned color = color_start + 1; color-- > 0;) {
      cur.emplace_back(len, color);
      colored_partitions_rec(m - len, k, len, color, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<std::vector<std::pair<unsigned, unsigned>>> colored_partitions(unsigned m,
                                                                           unsigned k) {
  std::vector<std::vector<std::pair<unsigned, unsigned>>> out;
  std::vector<std::pair<unsigned, unsigned>> cur;
  colored_partitions_rec(m, k, m, k - 1, cur, out);
  return out;
}

// Saturates at UINT64_MAX, which any realistic cap treats as "too large".
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(p);
}

}  // namespace

std::vector<CycleType> partitions_of(unsigned n) {
  std::vector<CycleType> out;
  CycleType cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Permutation class_rep(const CycleType& lambda) {
  unsigned n = 0;
  for (unsigned p : lambda) n += p;
  std::vector<std::vector<std::uint32_t>> cycles;
  std::uint32_t next = 0;
  for (unsigned p : lambda) {
    std::vector<std::uint32_t> cyc(p);
    for (unsigned i = 0; i < p; ++i) cyc[i] = next++;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(n, cycles);
}

std::uint64_t centralizer_order(const CycleType& lambda) {
  std::map<unsigned, unsigned> mult;
  for (unsigned p : lambda) mult[p] += 1;
  std::uint64_t ord = 1;
  for (auto [k, a] : mult) {
    for (unsigned i = 0; i < a; ++i) ord = saturating_mul(ord, k);
    for (unsigned i = 2; i <= a; ++i) ord = saturating_mul(ord, i);
  }
  return ord;
}

std::vector<Permutation> centralizer_generators(const CycleType& lambda, unsigned n) {
  Permutation g = class_rep(lambda);
  if (g.degree() > n) throw InputError("centralizer_generators: partition exceeds degree");
  CycleIndex ix = index_cycles(g);
  std::vector<Permutation> gens;
  for (const auto& [len, blocks] : ix.by_length) {
    const auto& first = ix.cycles[blocks[0]];
    if (len > 1) gens.push_back(Permutation::from_cycles(n, {first}));
    if (blocks.size() >= 2) {
      // Swap of the first two equal-length cycles, pointwise.
      std::vector<std::vector<std::uint32_t>> swap_cycles;
      const auto& second = ix.cycles[blocks[1]];
      for (std::uint32_t p = 0; p < len; ++p) swap_cycles.push_back({first[p], second[p]});
      gens.push_back(Permutation::from_cycles(n, swap_cycles));
    }
    if (blocks.size() >= 3) {
      // Rotation of all equal-length cycles.
      std::vector<std::vector<std::uint32_t>> rot_cycles(len);
      for (std::uint32_t p = 0; p < len; ++p)
        for (std::uint32_t b = 0; b < blocks.size(); ++b)
          rot_cycles[p].push_back(ix.cycles[blocks[b]][p]);
      gens.push_back(Permutation::from_cycles(n, rot_cycles));
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return gens;
}

Permutation power_conjugator(const Permutation& g, std::uint64_t r) {
  std::vector<std::uint32_t> img(g.degree());
  for (const auto& cyc : g.all_cycles()) {
    std::uint64_t k = cyc.size();
    std::uint64_t shift = r % k;
    for (std::uint64_t i = 0; i < k; ++i) img[cyc[i]] = cyc[(i * shift) % k];
  }
  Permutation t{std::move(img)};
  std::int64_t rr = static_cast<std::int64_t>(r % std::max<std::uint64_t>(g.order(), 1));
  if (conjugated(t, g) != g.power(rr))
    throw ConsistencyError("power_conjugator: verification failed");
  return t;
}

std::uint64_t sn_exponent(unsigned n) {
  std::uint64_t e = 1;
  for (unsigned k = 2; k <= n; ++k) e = checked_lcm(e, k);
  return e;
}

WreathKey conjugacy_invariant(const Permutation& x, const Permutation& g) {
  CycleIndex ix = index_cycles(g);
  WreathKey key;
  for (const auto& [len, blocks] : ix.by_length) {
    std::vector<bool> seen(blocks.size(), false);
    for (std::uint32_t start = 0; start < blocks.size(); ++start) {
      if (seen[start]) continue;
      std::uint64_t cycle_len = 0, disp_sum = 0;
      std::uint32_t b = start;
      for (;;) {
        seen[b] = true;
        ++cycle_len;
        std::uint32_t image_point = x(ix.cycles[blocks[b]][0]);
        std::uint32_t target_cycle = ix.cycle_of_point[image_point];
        if (ix.cycles[target_cycle].size() != len)
          throw InputError("conjugacy_invariant: x does not centralize g");
        disp_sum += ix.pos_of_point[image_point];
        std::uint32_t nb = ix.block_index[target_cycle];
        if (nb == start) break;
        b = nb;
      }
      key.push_back({len, cycle_len, disp_sum % len});
    }
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<Permutation> centralizer_class_reps(const CycleType& lambda, unsigned n) {
  Permutation g = class_rep(lambda);
  if (g.degree() > n) throw InputError("centralizer_class_reps: partition exceeds degree");
  CycleIndex ix = index_cycles(g);

  // Per cycle length: the list of class shapes of C_len wr S_m as colored
  // partitions of the multiplicity m.
  std::vector<std::uint32_t> lengths;
  std::vector<std::vector<std::vector<std::pair<unsigned, unsigned>>>> shapes;
  for (const auto& [len, blocks] : ix.by_length) {
    lengths.push_back(len);
    shapes.push_back(colored_partitions(static_cast<unsigned>(blocks.size()), len));
  }

  std::vector<Permutation> reps;
  std::vector<std::size_t> pick(lengths.size(), 0);
  for (;;) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t p = 0; p < n; ++p) img[p] = p;
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      const auto& blocks = ix.by_length.at(lengths[li]);
      const auto& shape = shapes[li][pick[li]];
      std::uint32_t next_block = 0;
      for (auto [plen, color] : shape) {
        // Blocks b_0 .. b_{plen-1} cycle into each other; the color is the
        // leftover g-power picked up when wrapping around.
        for (unsigned s = 0; s < plen; ++s) {
          std::uint32_t from = blocks[next_block + s];
          std::uint32_t to = blocks[next_block + (s + 1) % plen];
          unsigned off = (s + 1 == plen) ? color : 0;
          const auto& fc = ix.cycles[from];
          const auto& tc = ix.cycles[to];
          for (std::uint32_t p = 0; p < fc.size(); ++p)
            img[fc[p]] = tc[(p + off) % tc.size()];
        }
        next_block += plen;
      }
    }
    reps.emplace_back(std::move(img));
    std::size_t li = 0;
    while (li < pick.size() && ++pick[li] == shapes[li].size()) pick[li++] = 0;
    if (li == pick.size()) break;
  }
  return reps;
}

bool CheckReport::all_passed() const {
  return !counterexample &&
         std::none_of(results.begin(), results.end(),
                      [](const PartitionResult& r) { return r.outcome == Outcome::failed; });
}

bool CheckReport::any_skipped() const {
  return std::any_of(results.begin(), results.end(),
                     [](const PartitionResult& r) { return r.outcome == Outcome::skipped; });
}

int CheckReport::exit_code() const {
  if (!all_passed()) return 1;
  return any_skipped() ? 3 : 0;
}

CheckReport check_sn(unsigned n, Method method, std::uint64_t cap, unsigned jobs) {
  if (n < 1) throw InputError("check_sn: n must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.n = n;
  report.exponent = sn_exponent(n);
  report.residues = prime_residue_generators(report.exponent);
  report.method = method;
  report.cap = cap;
  auto lambdas = partitions_of(n);
  report.results.resize(lambdas.size());
  std::mutex witness_mu;

  parallel_for(lambdas.size(), jobs, [&](std::size_t li) {
    const CycleType& lambda = lambdas[li];
    PartitionResult res{lambda, centralizer_order(lambda), Outcome::passed, 0};
    Permutation g = class_rep(lambda);
    if (g.degree() < n) {
      // Pad to degree n with fixed points.
      std::vector<std::uint32_t> img(n);
      for (std::uint32_t p = 0; p < n; ++p) img[p] = p < g.degree() ? g(p) : p;
      g = Permutation(std::move(img));
    }
    auto record_failure = [&](std::uint64_t r, const Permutation& t, const Permutation& x) {
      res.outcome = Outcome::failed;
      std::lock_guard lk(witness_mu);
      if (!report.counterexample)
        report.counterexample = Counterexample{lambda, r, g, t, x};
    };

    if (method == Method::enumerate) {
      if (res.centralizer_order > cap) {
        res.outcome = Outcome::skipped;
        report.results[li] = std::move(res);
        return;
      }
      auto gens = centralizer_generators(lambda, n);
      std::vector<Permutation> elems;
      {
        std::unordered_set<Permutation, PermHash> seen;
        std::vector<Permutation> todo{Permutation::identity(n)};
        seen.insert(todo[0]);
        while (!todo.empty()) {
          Permutation cur = std::move(todo.back());
          todo.pop_back();
          for (const auto& gen : gens) {
            Permutation nx = gen * cur;
            if (seen.insert(nx).second) todo.push_back(nx);
          }
        }
        if (seen.size() != res.centralizer_order)
          throw ConsistencyError("check_sn: centralizer closure does not match its order");
        elems.assign(seen.begin(), seen.end());
      }
      std::sort(elems.begin(), elems.end());
      std::unordered_map<Permutation, std::uint32_t, PermHash> class_of;
      class_of.reserve(elems.size() * 2);
      std::vector<Permutation> reps;
      for (const auto& seed : elems) {
        if (class_of.count(seed)) continue;
        std::uint32_t cid = static_cast<std::uint32_t>(reps.size());
        reps.push_back(seed);
        std::vector<Permutation> todo{seed};
        class_of.emplace(seed, cid);
        while (!todo.empty()) {
          Permutation cur = std::move(todo.back());
          todo.pop_back();
          for (const auto& gen : gens) {
            Permutation moved = conjugated(gen, cur);
            if (class_of.emplace(moved, cid).second) todo.push_back(moved);
          }
        }
      }
      for (std::uint64_t r : report.residues) {
        Permutation t = power_conjugator(g, r);
        for (const auto& x : reps) {
          ++res.reps_checked;
          Permutation xr = x.power(static_cast<std::int64_t>(r % report.exponent));
          Permutation tx = conjugated(t, x);
          auto it_a = class_of.find(xr);
          auto it_b = class_of.find(tx);
          if (it_a == class_of.end() || it_b == class_of.end())
            throw ConsistencyError("check_sn: centralizer is not closed under the test maps");
          if (it_a->second != it_b->second) {
            record_failure(r, t, x);
            break;
          }
        }
        if (res.outcome == Outcome::failed) break;
      }
    } else {
      auto reps = centralizer_class_reps(lambda, n);
      for (std::uint64_t r : report.residues) {
        Permutation t = power_conjugator(g, r);
        for (const auto& x : reps) {
          ++res.reps_checked;
          Permutation xr = x.power(static_cast<std::int64_t>(r % report.exponent));
          Permutation tx = conjugated(t, x);
          if (conjugacy_invariant(xr, g) != conjugacy_invariant(tx, g)) {
            record_failure(r, t, x);
            break;
          }
        }
        if (res.outcome == Outcome::failed) break;
      }
    }
    report.results[li] = std::move(res);
  });

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace dtk::snconj
