#include "latproj/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace latproj {

Lattice::Lattice(std::size_t dim, std::vector<Vec> basis) : dim_(dim), basis_(std::move(basis)) {
  if (dim_ == 0) throw LatticeError("lattice dimension must be at least 1");
  if (basis_.size() > dim_) throw LatticeError("more basis vectors than the dimension");
  for (const auto& b : basis_)
    if (b.size() != dim_) throw LatticeError("basis vector length differs from the lattice dimension");
  if (!basis_.empty() && gram().determinant().is_zero())
    throw LatticeError("basis vectors are linearly dependent");
}

Matrix Lattice::gram() const {
  Matrix g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i; j < rank(); ++j) {
      g(i, j) = dot(basis_[i], basis_[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Vec Lattice::point(const IntVec& x) const {
  if (x.size() != rank()) throw std::invalid_argument("coordinate count differs from the lattice rank");
  Vec v(dim_);
  for (std::size_t j = 0; j < rank(); ++j) {
    if (x[j] == 0) continue;
    QuadScalar c{Rational(x[j])};
    for (std::size_t i = 0; i < dim_; ++i) v[i] += c * basis_[j][i];
  }
  return v;
}

Lattice dual_lattice(const Lattice& l) {
  if (!l.full_rank()) throw LatticeError("dual lattice requires a full-rank lattice");
  Matrix dual = l.generator().inverse().transpose();
  return Lattice(l.dim(), dual.columns());
}

std::optional<IntVec> member(const Lattice& l, const Vec& v) {
  if (v.size() != l.dim()) throw std::invalid_argument("vector dimension differs from the lattice dimension");
  if (l.rank() == 0) {
    if (is_zero(v)) return IntVec{};
    return std::nullopt;
  }
  auto x = l.generator().solve(v);
  if (!x) return std::nullopt;
  IntVec out;
  out.reserve(x->size());
  for (const auto& c : *x) {
    auto n = c.as_integer();
    if (!n) return std::nullopt;
    out.push_back(*n);
  }
  return out;
}

namespace {

// Largest n >= 0 with n^2 <= t.
Integer isqrt_floor(const QuadScalar& t) {
  if (t.sign() < 0) return 0;
  Integer n(std::floor(std::sqrt(std::max(0.0, t.to_double()))));
  auto sq = [](const Integer& a) { return QuadScalar(Rational(a * a)); };
  while (n > 0 && compare(sq(n), t) > 0) n -= 1;
  while (compare(sq(n + 1), t) <= 0) n += 1;
  return n;
}

}  // namespace

std::vector<Vec> shell(const Lattice& l, const QuadScalar& r2) {
  if (r2.sign() <= 0) throw std::invalid_argument("shell radius must be positive");
  const std::size_t m = l.rank();
  if (m == 0) return {};
  Matrix g = l.gram();
  Matrix ginv = g.inverse();
  std::vector<long> bound(m);
  for (std::size_t i = 0; i < m; ++i) bound[i] = isqrt_floor(r2 * ginv(i, i)).get_si();

  std::vector<Vec> out;
  IntVec x(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      Vec v = l.point(x);
      if (dot(v, v) == r2) out.push_back(std::move(v));
      return;
    }
    for (long t = -bound[i]; t <= bound[i]; ++t) {
      x[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::optional<IntegerSolution> solve_in_lattice(const Lattice& l, const std::vector<std::size_t>& rows,
                                                const Vec& target) {
  if (rows.size() != target.size()) throw std::invalid_argument("target length differs from the row count");
  const std::size_t m = l.rank();
  RatMatrix a;
  RatVec b;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int f = 0; f < 4; ++f) {
      auto basis_elem = static_cast<QuadScalar::Basis>(f);
      std::vector<Rational> eq(m);
      for (std::size_t j = 0; j < m; ++j) eq[j] = l.basis()[j][rows[r]].coord(basis_elem);
      a.push_back(std::move(eq));
      b.push_back(target[r].coord(basis_elem));
    }
  }
  return integer_solve(a, b, m);
}

namespace {

Lattice kernel_sublattice(const Lattice& l, const std::vector<std::size_t>& rows) {
  auto sol = solve_in_lattice(l, rows, Vec(rows.size()));
  std::vector<Vec> basis;
  for (const auto& k : sol->kernel) basis.push_back(l.point(k));
  return Lattice(l.dim(), std::move(basis));
}

}  // namespace

Lattice intersect_last_coord_zero(const Lattice& l) { return kernel_sublattice(l, {l.dim() - 1}); }

Lattice axis_sublattice(const Lattice& l) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i + 1 < l.dim(); ++i) rows.push_back(i);
  Lattice sub = kernel_sublattice(l, rows);
  if (sub.rank() == 1 && last_coord(sub.basis()[0]).sign() < 0) return Lattice(l.dim(), {-sub.basis()[0]});
  return sub;
}

Lattice project_lattice(const Lattice& l) {
  if (l.dim() < 2) throw LatticeError("cannot project a one-dimensional lattice");
  std::vector<Vec> basis;
  for (const auto& b : l.basis()) basis.push_back(project(b));
  return Lattice(l.dim() - 1, std::move(basis));
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  for (const auto& v : a.basis())
    if (!member(b, v)) return false;
  for (const auto& v : b.basis())
    if (!member(a, v)) return false;
  return true;
}

}  // namespace latproj
