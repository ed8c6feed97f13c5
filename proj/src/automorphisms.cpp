#include "delforge/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

// Ordered partition of {0..n−1}. Cells are contiguous ranges of `elems`
// and are named by their first position.
struct Partition {
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> where;       // vertex -> position
  std::vector<std::uint32_t> cell_start;  // position -> start of its cell
  std::vector<std::uint32_t> cell_end;    // start -> one past the end
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : elems(n), where(n), cell_start(n, 0), cell_end(n, 0) {
    for (std::uint32_t i = 0; i < n; ++i) elems[i] = where[i] = i;
    if (n > 0) {
      cell_end[0] = static_cast<std::uint32_t>(n);
      cells = 1;
    }
  }

  std::size_t size() const { return elems.size(); }
  bool discrete() const { return cells == elems.size(); }
  std::uint32_t cell_size(std::uint32_t s) const { return cell_end[s] - s; }

  // First largest non-singleton cell.
  std::uint32_t target_cell() const {
    std::uint32_t best = 0, best_size = 1;
    for (std::uint32_t s = 0; s < size(); s = cell_end[s]) {
      if (cell_size(s) > best_size) {
        best = s;
        best_size = cell_size(s);
      }
    }
    return best;
  }

  // Splits v off the front of its cell; returns the singleton's start.
  std::uint32_t individualize(std::uint32_t v) {
    const std::uint32_t s = cell_start[where[v]];
    const std::uint32_t e = cell_end[s];
    if (e - s == 1) return s;
    const std::uint32_t p = where[v];
    std::swap(elems[p], elems[s]);
    where[elems[p]] = p;
    where[elems[s]] = s;
    cell_end[s] = s + 1;
    cell_end[s + 1] = e;
    for (std::uint32_t q = s + 1; q < e; ++q) cell_start[q] = s + 1;
    ++cells;
    return s;
  }
};

constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + kMix + (h << 6) + (h >> 2);
  return h;
}

// Refinement to an equitable partition with respect to a distance-class
// matrix. Everything depends only on positions and class values, so the
// result and the trace hash are invariant under relabelling.
class Refiner {
 public:
  Refiner(std::vector<std::uint16_t> classes, std::size_t n, std::size_t num_classes)
      : cls_(std::move(classes)), n_(n), nc_(num_classes) {}

  std::size_t size() const { return n_; }
  std::uint16_t cls(std::uint32_t u, std::uint32_t v) const { return cls_[u * n_ + v]; }

  std::uint64_t refine(Partition& p, std::deque<std::uint32_t> queue) const {
    std::vector<bool> queued(n_, false);
    for (auto s : queue) queued[s] = true;
    std::uint64_t trace = 0;
    std::vector<std::uint32_t> splitter;
    std::vector<std::uint32_t> keys;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> block;
    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t w = queue.front();
      queue.pop_front();
      queued[w] = false;
      splitter.assign(p.elems.begin() + w, p.elems.begin() + p.cell_end[w]);
      trace = mix(trace, w);
      for (std::uint32_t s = 0; s < n_;) {
        const std::uint32_t e = p.cell_end[s];
        const std::uint32_t len = e - s;
        if (len == 1) {
          s = e;
          continue;
        }
        keys.assign(static_cast<std::size_t>(len) * nc_, 0);
        for (std::uint32_t i = 0; i < len; ++i) {
          const std::uint32_t v = p.elems[s + i];
          std::uint32_t* row = keys.data() + static_cast<std::size_t>(i) * nc_;
          for (auto u : splitter) ++row[cls(v, u)];
        }
        auto key_less = [&](std::uint32_t a, std::uint32_t b) {
          return std::lexicographical_compare(keys.begin() + a * nc_, keys.begin() + (a + 1) * nc_,
                                              keys.begin() + b * nc_, keys.begin() + (b + 1) * nc_);
        };
        auto key_equal = [&](std::uint32_t a, std::uint32_t b) {
          return std::equal(keys.begin() + a * nc_, keys.begin() + (a + 1) * nc_, keys.begin() + b * nc_);
        };
        bool uniform = true;
        for (std::uint32_t i = 1; i < len && uniform; ++i) uniform = key_equal(0, i);
        if (uniform) {
          s = e;
          continue;
        }
        order.resize(len);
        for (std::uint32_t i = 0; i < len; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), key_less);
        block.resize(len);
        for (std::uint32_t i = 0; i < len; ++i) block[i] = p.elems[s + order[i]];
        trace = mix(trace, s);
        std::uint32_t start = s;
        for (std::uint32_t i = 0; i < len; ++i) {
          const std::uint32_t pos = s + i;
          p.elems[pos] = block[i];
          p.where[block[i]] = pos;
          const bool new_group = i > 0 && !key_equal(order[i - 1], order[i]);
          if (new_group) {
            p.cell_end[start] = pos;
            start = pos;
            ++p.cells;
          }
          p.cell_start[pos] = start;
          if (i == 0 || new_group) {
            const std::uint32_t* row = keys.data() + static_cast<std::size_t>(order[i]) * nc_;
            for (std::size_t c = 0; c < nc_; ++c) trace = mix(trace, row[c]);
          }
        }
        p.cell_end[start] = e;
        for (std::uint32_t q = s; q < e; q = p.cell_end[q]) {
          trace = mix(trace, p.cell_end[q] - q);
          if (!queued[q]) {
            queued[q] = true;
            queue.push_back(q);
          }
        }
        s = e;
      }
    }
    return mix(trace, p.cells);
  }

 private:
  std::vector<std::uint16_t> cls_;
  std::size_t n_;
  std::size_t nc_;
};

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Refiner& refiner) : refiner_(refiner), n_(refiner.size()) {}

  void run() {
    Partition p(n_);
    std::deque<std::uint32_t> all;
    if (n_ > 0) all.push_back(0);
    refiner_.refine(p, all);
    while (!p.discrete()) {
      const std::uint32_t t = p.target_cell();
      const std::uint32_t b = p.elems[t];
      path_.push_back(p);
      targets_.push_back(t);
      base_.push_back(b);
      p.individualize(b);
      traces_.push_back(refiner_.refine(p, {t}));
    }
    first_leaf_ = p.elems;

    orbit_lengths_.assign(base_.size(), 1);
    for (std::size_t k = base_.size(); k-- > 0;) {
      const Partition& node = path_[k];
      const std::uint32_t t = targets_[k];
      std::vector<std::uint32_t> cell(node.elems.begin() + t, node.elems.begin() + node.cell_end[t]);
      auto orbit = orbit_of(base_[k]);
      for (auto v : cell) {
        if (orbit[v]) continue;
        if (try_image(k, v)) orbit = orbit_of(base_[k]);
      }
      orbit_lengths_[k] = static_cast<std::size_t>(std::count(orbit.begin(), orbit.end(), true));
    }
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  Integer order_from_search() const {
    Integer o = 1;
    for (auto l : orbit_lengths_) o *= static_cast<unsigned long>(l);
    return o;
  }

 private:
  std::vector<bool> orbit_of(std::uint32_t x) const {
    std::vector<bool> seen(n_, false);
    std::vector<std::uint32_t> stack{x};
    seen[x] = true;
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        if (!seen[g[y]]) {
          seen[g[y]] = true;
          stack.push_back(g[y]);
        }
      }
    }
    return seen;
  }

  // Looks for an automorphism fixing base_[0..k) and sending base_[k] to v.
  bool try_image(std::size_t k, std::uint32_t v) {
    Partition p = path_[k];
    p.individualize(v);
    if (refiner_.refine(p, {targets_[k]}) != traces_[k]) return false;
    return descend(p, k + 1);
  }

  bool descend(const Partition& p, std::size_t depth) {
    if (depth == base_.size()) {
      if (!p.discrete()) return false;
      Permutation gamma(n_);
      for (std::size_t i = 0; i < n_; ++i) gamma[first_leaf_[i]] = p.elems[i];
      if (!is_automorphism(gamma)) return false;
      generators_.push_back(std::move(gamma));
      return true;
    }
    const std::uint32_t t = targets_[depth];
    if (p.cell_start[t] != t || p.cell_end[t] != path_[depth].cell_end[t]) return false;
    const std::vector<std::uint32_t> cell(p.elems.begin() + t, p.elems.begin() + p.cell_end[t]);
    for (auto u : cell) {
      Partition child = p;
      child.individualize(u);
      if (refiner_.refine(child, {t}) != traces_[depth]) continue;
      if (descend(child, depth + 1)) return true;
    }
    return false;
  }

  bool is_automorphism(const Permutation& g) const {
    for (std::uint32_t u = 0; u < n_; ++u)
      for (std::uint32_t v = u + 1; v < n_; ++v)
        if (refiner_.cls(g[u], g[v]) != refiner_.cls(u, v)) return false;
    return true;
  }

  const Refiner& refiner_;
  std::size_t n_;
  std::vector<Partition> path_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> base_;
  std::vector<std::uint64_t> traces_;
  std::vector<std::uint32_t> first_leaf_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> orbit_lengths_;
};

Refiner make_refiner(const RationalMatrix& d) {
  const std::size_t n = d.rows();
  std::map<Rational, std::uint16_t> ids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ids.emplace(d(i, j), 0);
  if (ids.size() > 0xFFFF) throw PreconditionError("too many distinct distances");
  std::uint16_t next = 0;
  for (auto& [value, id] : ids) id = next++;
  std::vector<std::uint16_t> cls(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cls[i * n + j] = ids.at(d(i, j));
  return Refiner(std::move(cls), n, ids.size());
}

}  // namespace

RationalMatrix distance_matrix(const DelaunayInstance& inst) {
  const std::size_t n = inst.vertices.size();
  RationalMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = inst.form.distance_sq(inst.vertices[i], inst.vertices[j]);
      d(j, i) = d(i, j);
    }
  return d;
}

bool preserves_distances(const Permutation& p, const RationalMatrix& distances) {
  const std::size_t n = distances.rows();
  if (p.size() != n) return false;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (distances(p[u], p[v]) != distances(u, v)) return false;
  return true;
}

SymmetryReport automorphisms(const RationalMatrix& distances) {
  if (!distances.is_symmetric()) throw PreconditionError("distance matrix must be symmetric");
  const Refiner refiner = make_refiner(distances);
  AutomorphismSearch search(refiner);
  search.run();

  const std::size_t n = distances.rows();
  SymmetryReport report;
  report.generators = search.generators();
  report.group_order = StabilizerChain(n, report.generators, search.base()).order();
  if (report.group_order != search.order_from_search()) {
    throw Error("internal: Schreier-Sims order " + report.group_order.get_str() +
                " disagrees with search order " + search.order_from_search().get_str());
  }
  report.orbits = group_orbits(report.generators, n);
  report.orbit_count = report.orbits.size();
  return report;
}

SymmetryReport automorphisms(const DelaunayInstance& inst) { return automorphisms(distance_matrix(inst)); }

}  // namespace delforge
