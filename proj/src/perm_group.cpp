#include "delforge/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "delforge/errors.hpp"

namespace delforge {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint32_t>(i);
  return q;
}

void validate_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) throw PreconditionError("malformed permutation: wrong degree");
  std::vector<bool> seen(degree, false);
  for (auto x : p) {
    if (x >= degree || seen[x]) throw PreconditionError("malformed permutation: not a bijection");
    seen[x] = true;
  }
}

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                                 const std::vector<std::uint32_t>& base_hint)
    : degree_(degree), base_hint_(base_hint) {
  for (const auto& g : generators) validate_permutation(g, degree);
  for (const auto& g : generators) {
    Sifted s = sift(g, 0);
    if (s.level == levels_.size() && is_identity(s.residue)) continue;
    add_strong_generator(s.residue, 0, s.level);
    for (std::size_t l = s.level + 1; l-- > 0;) complete(l);
  }
}

std::uint32_t StabilizerChain::pick_base_point(const Permutation& h) const {
  for (auto b : base_hint_) {
    if (b < degree_ && h[b] != b) return b;
  }
  for (std::uint32_t x = 0; x < degree_; ++x)
    if (h[x] != x) return x;
  return 0;
}

StabilizerChain::Sifted StabilizerChain::sift(Permutation h, std::size_t start) const {
  Permutation tmp(degree_);
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const std::uint32_t image = h[lv.base_point];
    const std::int32_t k = lv.slot[image];
    if (k < 0) return {std::move(h), l};
    if (image == lv.base_point) continue;
    const Permutation& inv = lv.transversal_inv[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < degree_; ++x) tmp[x] = inv[h[x]];
    h.swap(tmp);
  }
  return {std::move(h), levels_.size()};
}

void StabilizerChain::extend_orbit(Level& lv) {
  // Breadth-first closure; earlier orbit points keep their transversals.
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const auto& g : lv.gens) {
      const std::uint32_t q = g[lv.orbit[k]];
      if (lv.slot[q] >= 0) continue;
      lv.slot[q] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(q);
      Permutation t = compose(lv.transversal[k], g);
      lv.transversal_inv.push_back(inverse(t));
      lv.transversal.push_back(std::move(t));
    }
  }
  for (auto& row : lv.checked) row.resize(lv.orbit.size(), false);
}

void StabilizerChain::add_strong_generator(const Permutation& h, std::size_t from, std::size_t to) {
  if (to == levels_.size()) {
    Level lv;
    lv.base_point = pick_base_point(h);
    lv.slot.assign(degree_, -1);
    lv.slot[lv.base_point] = 0;
    lv.orbit.push_back(lv.base_point);
    lv.transversal.push_back(identity_permutation(degree_));
    lv.transversal_inv.push_back(identity_permutation(degree_));
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = from; l <= to; ++l) {
    Level& lv = levels_[l];
    lv.gens.push_back(h);
    lv.checked.emplace_back(lv.orbit.size(), false);
    extend_orbit(lv);
  }
}

// Sifts every Schreier generator of level `l` through the deeper levels.
// Residues only ever join deeper levels, so level `l` itself never grows here.
void StabilizerChain::complete(std::size_t l) {
  Permutation h(degree_);
  for (std::size_t s = 0; s < levels_[l].gens.size(); ++s) {
    for (std::size_t k = 0; k < levels_[l].orbit.size(); ++k) {
      Level& lv = levels_[l];
      if (lv.checked[s][k]) continue;
      lv.checked[s][k] = true;
      const Permutation& g = lv.gens[s];
      const std::uint32_t target = g[lv.orbit[k]];
      const Permutation& t = lv.transversal[k];
      const Permutation& back = lv.transversal_inv[static_cast<std::size_t>(lv.slot[target])];
      for (std::size_t x = 0; x < degree_; ++x) h[x] = back[g[t[x]]];
      if (is_identity(h)) continue;
      Sifted r = sift(h, l + 1);
      if (r.level == levels_.size() && is_identity(r.residue)) continue;
      add_strong_generator(r.residue, l + 1, r.level);
      for (std::size_t m = r.level + 1; m-- > l + 1;) complete(m);
    }
  }
}

Integer StabilizerChain::order() const {
  Integer o = 1;
  for (const auto& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.size() != degree_) return false;
  Sifted s = sift(p, 0);
  return s.level == levels_.size() && is_identity(s.residue);
}

std::vector<std::uint32_t> StabilizerChain::base() const {
  std::vector<std::uint32_t> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

Integer group_order(const std::vector<Permutation>& generators, std::size_t degree) {
  return StabilizerChain(degree, generators).order();
}

std::vector<std::vector<std::size_t>> group_orbits(const std::vector<Permutation>& generators,
                                                   std::size_t degree) {
  for (const auto& g : generators) validate_permutation(g, degree);
  std::vector<std::size_t> parent(degree);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    for (std::size_t x = 0; x < degree; ++x) {
      const auto a = find(x);
      const auto b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> by_root(degree);
  for (std::size_t x = 0; x < degree; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& o : by_root)
    if (!o.empty()) out.push_back(std::move(o));
  return out;
}

}  // namespace delforge
