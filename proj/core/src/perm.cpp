#include "dtk/perm.hpp"

#include <algorithm>
#include <numeric>

#include "dtk/error.hpp"
#include "dtk/numutil.hpp"

namespace dtk {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v]) throw InputError("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t from = cyc[i];
      std::uint32_t to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw InputError("cycle point out of range");
      if (used[from]) throw InputError("point repeated across cycles");
      used[from] = true;
      p.img_[from] = to;
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw InputError("permutation degrees differ");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[rhs.img_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::uint32_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = i;
  return out;
}

Permutation Permutation::power(std::int64_t n) const {
  Permutation out = identity(degree());
  std::vector<bool> seen(degree(), false);
  std::vector<std::uint32_t> cyc;
  for (std::uint32_t s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    cyc.clear();
    for (std::uint32_t p = s; !seen[p]; p = img_[p]) {
      seen[p] = true;
      cyc.push_back(p);
    }
    std::int64_t k = static_cast<std::int64_t>(cyc.size());
    std::int64_t shift = ((n % k) + k) % k;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      out.img_[cyc[i]] = cyc[(i + static_cast<std::size_t>(shift)) % cyc.size()];
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& cyc : cycles()) ord = checked_lcm(ord, cyc.size());
  return ord;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& cyc : all_cycles())
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::all_cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t s = 0; s < degree(); ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t p = s; !seen[p]; p = img_[p]) {
      seen[p] = true;
      cyc.push_back(p);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation conjugated(const Permutation& x, const Permutation& g) {
  return x * g * x.inverse();
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dtk
