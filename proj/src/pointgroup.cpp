#include "latproj/pointgroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace latproj {

OrthogonalMap::OrthogonalMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("orthogonal map must be square");
  if (!(m_.transpose() * m_).is_identity()) throw std::invalid_argument("matrix is not orthogonal");
}

OrthogonalMap OrthogonalMap::identity(std::size_t n) { return {Matrix::identity(n), Trusted{}}; }

OrthogonalMap OrthogonalMap::operator*(const OrthogonalMap& o) const { return {m_ * o.m_, Trusted{}}; }

OrthogonalMap OrthogonalMap::inverse() const { return {m_.transpose(), Trusted{}}; }

OrthogonalMap OrthogonalMap::operator-() const { return {-m_, Trusted{}}; }

int OrthogonalMap::determinant() const { return m_.determinant().sign(); }

bool OrthogonalMap::is_block() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!m_(n - 1, i).is_zero() || !m_(i, n - 1).is_zero()) return false;
  const QuadScalar& c = m_(n - 1, n - 1);
  return c == QuadScalar(1) || c == QuadScalar(-1);
}

OrthogonalMap OrthogonalMap::block() const {
  if (!is_block()) throw std::logic_error("map is not block structured");
  return {m_.leading_block(), Trusted{}};
}

int OrthogonalMap::corner() const { return m_(dim() - 1, dim() - 1).sign(); }

OrthogonalMap OrthogonalMap::lift(const OrthogonalMap& alpha, int corner) {
  const std::size_t n = alpha.dim() + 1;
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) m(i, j) = alpha.matrix()(i, j);
  m(n - 1, n - 1) = corner;
  return {std::move(m), Trusted{}};
}

MapList canonical_maps(MapList maps) {
  std::sort(maps.begin(), maps.end(),
            [](const OrthogonalMap& a, const OrthogonalMap& b) { return compare(a.matrix(), b.matrix()) < 0; });
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return maps;
}

bool contains(const MapList& maps, const OrthogonalMap& g) {
  return std::find(maps.begin(), maps.end(), g) != maps.end();
}

MapList set_product(const MapList& xs, const MapList& ys) {
  MapList out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) {
      OrthogonalMap p = x * y;
      if (!contains(out, p)) out.push_back(std::move(p));
    }
  return canonical_maps(std::move(out));
}

MapList set_intersection(const MapList& xs, const MapList& ys) {
  MapList out;
  for (const auto& x : xs)
    if (contains(ys, x)) out.push_back(x);
  return canonical_maps(std::move(out));
}

bool is_group(const MapList& maps) {
  if (maps.empty()) return false;
  if (!contains(maps, OrthogonalMap::identity(maps[0].dim()))) return false;
  for (const auto& g : maps) {
    if (!contains(maps, g.inverse())) return false;
    for (const auto& h : maps)
      if (!contains(maps, g * h)) return false;
  }
  return true;
}

PointGroup::PointGroup(MapList maps) : elements_(canonical_maps(std::move(maps))) {
  if (!is_group(elements_)) throw std::invalid_argument("maps do not form a group");
}

PointGroup holohedry(const Lattice& l) {
  if (!l.full_rank()) throw LatticeError("holohedry requires a full-rank lattice");
  const std::size_t m = l.rank();
  const Matrix g = l.gram();
  std::vector<std::vector<Vec>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) candidates[i] = shell(l, g(i, i));
  const Matrix binv = l.generator().inverse();

  MapList found;
  std::vector<const Vec*> chosen(m);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      std::vector<Vec> cols;
      for (const Vec* c : chosen) cols.push_back(*c);
      Matrix mm = Matrix::from_columns(cols, l.dim()) * binv;
      if ((mm.transpose() * mm).is_identity()) found.emplace_back(std::move(mm));
      return;
    }
    for (const Vec& c : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = dot(c, *chosen[j]) == g(i, j);
      if (!ok) continue;
      chosen[i] = &c;
      rec(i + 1);
    }
  };
  rec(0);
  return PointGroup(std::move(found));
}

PointGroup conjugate_group(const PointGroup& g, const OrthogonalMap& a) {
  MapList out;
  const OrthogonalMap ainv = a.inverse();
  for (const auto& x : g.elements()) out.push_back(a * x * ainv);
  return PointGroup(std::move(out));
}

std::vector<Vec> orbit(const MapList& g, const Vec& k) {
  std::vector<Vec> out;
  for (const auto& x : g) {
    if (x.dim() != k.size()) throw std::invalid_argument("vector dimension differs from the group dimension");
    out.push_back(x(k));
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointGroup stabilizer(const PointGroup& g, const Vec& k) {
  MapList out;
  for (const auto& x : g.elements())
    if (x(k) == k) out.push_back(x);
  return PointGroup(std::move(out));
}

namespace {

// R_v by angle 2pi/order about an integer axis v, for the cubic axes.
Matrix axis_rotation(int vx, int vy, int vz, int order) {
  const long v[3] = {vx, vy, vz};
  const long n2 = vx * vx + vy * vy + vz * vz;
  QuadScalar cos_t, sin_over_norm;
  switch (order) {
    case 2: cos_t = -1; sin_over_norm = 0; break;
    case 3: cos_t = QuadScalar::ratio(-1, 2); sin_over_norm = QuadScalar::ratio(1, 2); break;  // sin = sqrt3/2, |v| = sqrt3
    case 4: cos_t = 0; sin_over_norm = 1; break;
    default: throw std::logic_error("unsupported rotation order");
  }
  const QuadScalar one_minus_cos = QuadScalar(1) - cos_t;
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuadScalar e = QuadScalar::ratio(v[i] * v[j], n2) * one_minus_cos;
      if (i == j) e += cos_t;
      m(i, j) = e;
    }
  // Cross-product matrix [v]x scaled by sin/|v|.
  m(0, 1) -= sin_over_norm * QuadScalar(v[2]);
  m(0, 2) += sin_over_norm * QuadScalar(v[1]);
  m(1, 0) += sin_over_norm * QuadScalar(v[2]);
  m(1, 2) -= sin_over_norm * QuadScalar(v[0]);
  m(2, 0) -= sin_over_norm * QuadScalar(v[1]);
  m(2, 1) += sin_over_norm * QuadScalar(v[0]);
  return m;
}

std::vector<std::pair<std::string, OrthogonalMap>> build_named() {
  std::vector<std::pair<std::string, OrthogonalMap>> rot;
  rot.emplace_back("Id", OrthogonalMap::identity(3));
  const struct { const char* name; int x, y, z; } four[] = {{"Rx", 1, 0, 0}, {"Ry", 0, 1, 0}, {"Rz", 0, 0, 1}};
  for (const auto& a : four) {
    OrthogonalMap r(axis_rotation(a.x, a.y, a.z, 4));
    OrthogonalMap p = r;
    for (int k = 1; k <= 3; ++k) {
      rot.emplace_back(std::string(a.name) + (k > 1 ? "^" + std::to_string(k) : ""), p);
      p = p * r;
    }
  }
  const int three[][3] = {{1, 1, 1}, {1, -1, -1}, {1, -1, 1}, {1, 1, -1}};
  for (const auto& a : three) {
    std::string base = "R(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    OrthogonalMap r(axis_rotation(a[0], a[1], a[2], 3));
    rot.emplace_back(base, r);
    rot.emplace_back(base + "^2", r * r);
  }
  const int two[][3] = {{1, 0, 1}, {1, 0, -1}, {1, 1, 0}, {1, -1, 0}, {0, 1, 1}, {0, 1, -1}};
  for (const auto& a : two) {
    std::string base = "R(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
    rot.emplace_back(base, OrthogonalMap(axis_rotation(a[0], a[1], a[2], 2)));
  }
  std::vector<std::pair<std::string, OrthogonalMap>> all = rot;
  for (const auto& [name, g] : rot) all.emplace_back("-" + name, -g);
  return all;
}

}  // namespace

const std::vector<std::pair<std::string, OrthogonalMap>>& named_cubic_elements() {
  static const auto table = build_named();
  return table;
}

std::optional<OrthogonalMap> named_element(const std::string& name) {
  for (const auto& [n, g] : named_cubic_elements())
    if (n == name) return g;
  return std::nullopt;
}

std::optional<std::string> name_of(const OrthogonalMap& g) {
  for (const auto& [n, h] : named_cubic_elements())
    if (h == g) return n;
  return std::nullopt;
}

}  // namespace latproj
