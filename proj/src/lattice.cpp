#include "delforge/lattice.hpp"

#include <algorithm>
#include <string>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

void sort_points(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return lex_less(a.point, b.point); });
}

void check_query(const Lattice& lattice, const BallQuery& query) {
  if (query.form.dim() != lattice.dim() || query.center.size() != lattice.dim()) {
    throw DimensionError("ball query dimension does not match lattice dimension");
  }
}

// State of the depth-first coefficient search.
class BallSearch {
 public:
  BallSearch(const Lattice& lattice, const BallQuery& query, const EnumerationOptions& options)
      : lattice_(lattice), query_(query), max_nodes_(options.max_nodes), n_(lattice.dim()) {
    const RationalMatrix gram = lattice.basis() * query.form.matrix() * lattice.basis().transpose();
    factor(gram);
    target_ = lattice.coordinates(query.center);
    coeffs_.assign(n_, 0);
    offsets_.assign(n_, 0);
  }

  std::vector<LatticePoint> run() {
    if (query_.radius_sq.sign() >= 0) descend(n_, query_.radius_sq);
    sort_points(found_);
    return std::move(found_);
  }

 private:
  // gram = L·D·Lᵀ with L unit lower triangular.
  void factor(const RationalMatrix& gram) {
    lower_ = RationalMatrix(n_, n_);
    diag_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      Rational d = gram(i, i);
      for (std::size_t k = 0; k < i; ++k) d -= lower_(i, k) * lower_(i, k) * diag_[k];
      if (d.sign() <= 0) throw PreconditionError("enumeration needs a positive definite form");
      diag_[i] = d;
      lower_(i, i) = 1;
      for (std::size_t j = i + 1; j < n_; ++j) {
        Rational s = gram(j, i);
        for (std::size_t k = 0; k < i; ++k) s -= lower_(j, k) * lower_(i, k) * diag_[k];
        lower_(j, i) = s / d;
      }
    }
  }

  // Chooses coefficient `level - 1` given the coefficients above it;
  // `budget` is r² minus the contribution of the fixed coordinates.
  void descend(std::size_t level, const Rational& budget) {
    if (level == 0) {
      found_.push_back({lattice_.point(coeffs_), query_.radius_sq - budget});
      return;
    }
    const std::size_t i = level - 1;
    Rational centre = target_[i];
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!lower_(j, i).is_zero()) centre -= lower_(j, i) * offsets_[j];
    }
    // Integers x with diag_i·(x − centre)² ≤ budget; the bound below is an
    // over-approximation, every candidate is re-checked exactly.
    const Rational ratio = budget / diag_[i];
    const Integer root = isqrt_floor(ratio.num() * ratio.den());
    const Rational reach(root + 1, ratio.den());
    const Integer lo = (centre - reach).ceil();
    const Integer hi = (centre + reach).floor();
    for (Integer x = lo; x <= hi; ++x) {
      if (++nodes_ > max_nodes_) {
        throw EnumerationLimitError("lattice enumeration exceeded " + std::to_string(max_nodes_) +
                                    " nodes");
      }
      const Rational delta = Rational(x) - centre;
      const Rational term = diag_[i] * delta * delta;
      if (term > budget) continue;
      coeffs_[i] = x;
      offsets_[i] = Rational(x) - target_[i];
      descend(i, budget - term);
    }
  }

  const Lattice& lattice_;
  const BallQuery& query_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::size_t n_;
  RationalMatrix lower_;
  RationalVector diag_;
  RationalVector target_;
  std::vector<Integer> coeffs_;
  RationalVector offsets_;  // coeffs_ − target_
  std::vector<LatticePoint> found_;
};

}  // namespace

Lattice::Lattice(RationalMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols()) throw DimensionError("lattice basis must be square");
  const std::size_t n = basis_.rows();
  if (rank(basis_) != n) throw PreconditionError("lattice basis is not full rank");
  // B·X = I column by column; coord_map_ = Xᵀ.
  coord_map_ = RationalMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = solve(basis_, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) coord_map_(j, i) = (*col)[i];
  }
}

RationalVector Lattice::coordinates(const RationalVector& v) const {
  if (v.size() != dim()) throw DimensionError("vector does not match lattice dimension");
  return coord_map_.apply(v);
}

RationalVector Lattice::point(const std::vector<Integer>& coeffs) const {
  if (coeffs.size() != dim()) throw DimensionError("coefficient count does not match lattice dimension");
  RationalVector v(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i] == 0) continue;
    const Rational c(coeffs[i]);
    for (std::size_t j = 0; j < dim(); ++j) v[j] += c * basis_(i, j);
  }
  return v;
}

bool membership(const Lattice& lattice, const RationalVector& v) {
  const auto y = lattice.coordinates(v);
  return std::all_of(y.begin(), y.end(), [](const Rational& x) { return x.is_integer(); });
}

std::vector<LatticePoint> enumerate_in_ball(const Lattice& lattice, const BallQuery& query,
                                            const EnumerationOptions& options) {
  check_query(lattice, query);
  if (!is_positive_definite(query.form)) throw PreconditionError("enumeration needs a positive definite form");
  return BallSearch(lattice, query, options).run();
}

std::vector<LatticePoint> enumerate_brute_force(const Lattice& lattice, const BallQuery& query,
                                                long box_bound) {
  check_query(lattice, query);
  std::vector<LatticePoint> out;
  if (query.radius_sq.sign() < 0 || box_bound < 0) return out;
  const std::size_t n = lattice.dim();
  std::vector<Integer> coeffs(n, -box_bound);
  while (true) {
    RationalVector v = lattice.point(coeffs);
    Rational value = query.form.distance_sq(v, query.center);
    if (value <= query.radius_sq) out.push_back({std::move(v), std::move(value)});
    std::size_t k = 0;
    while (k < n && coeffs[k] == box_bound) coeffs[k++] = -box_bound;
    if (k == n) break;
    ++coeffs[k];
  }
  sort_points(out);
  return out;
}

}  // namespace delforge
