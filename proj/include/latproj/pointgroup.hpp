#pragma once

// Finite groups of exact orthogonal maps: holohedry, orbits, stabilizers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latproj/lattice.hpp"

namespace latproj {

class OrthogonalMap {
public:
  /// Throws std::invalid_argument unless M^T M = I exactly.
  explicit OrthogonalMap(Matrix m);
  static OrthogonalMap identity(std::size_t n);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Vec operator()(const Vec& v) const { return m_ * v; }
  OrthogonalMap operator*(const OrthogonalMap& o) const;
  OrthogonalMap inverse() const;
  OrthogonalMap operator-() const;
  int determinant() const;

  /// True when the last row and column vanish except for a +-1 corner.
  bool is_block() const;
  /// The leading (d-1)x(d-1) block alpha; requires is_block().
  OrthogonalMap block() const;
  /// Sign of the corner entry of a block map.
  int corner() const;
  /// alpha_+ (corner +1) or alpha_- (corner -1) built from a (d-1)-map.
  static OrthogonalMap lift(const OrthogonalMap& alpha, int corner);

  friend bool operator==(const OrthogonalMap& a, const OrthogonalMap& b) { return a.m_ == b.m_; }

private:
  struct Trusted {};
  OrthogonalMap(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

using MapList = std::vector<OrthogonalMap>;

/// Sorts by the canonical (real lexicographic, row-major) matrix order and
/// removes duplicates.
MapList canonical_maps(MapList maps);
bool contains(const MapList& maps, const OrthogonalMap& g);
/// {x y : x in xs, y in ys}, canonical.
MapList set_product(const MapList& xs, const MapList& ys);
MapList set_intersection(const MapList& xs, const MapList& ys);
/// Identity present, closed under products and inverses.
bool is_group(const MapList& maps);

class PointGroup {
public:
  PointGroup() = default;
  /// Deduplicates and orders canonically; throws std::invalid_argument when
  /// the maps do not form a group.
  explicit PointGroup(MapList maps);

  std::size_t order() const { return elements_.size(); }
  std::size_t dim() const { return elements_.empty() ? 0 : elements_[0].dim(); }
  const MapList& elements() const { return elements_; }
  bool contains(const OrthogonalMap& g) const { return latproj::contains(elements_, g); }

private:
  MapList elements_;
};

/// {delta orthogonal : delta L = L}.
PointGroup holohedry(const Lattice& l);
PointGroup conjugate_group(const PointGroup& g, const OrthogonalMap& a);
/// Distinct images g k in canonical order.
std::vector<Vec> orbit(const MapList& g, const Vec& k);
inline std::vector<Vec> orbit(const PointGroup& g, const Vec& k) { return orbit(g.elements(), k); }
PointGroup stabilizer(const PointGroup& g, const Vec& k);

/// Named rotations R_v (right-handed, angle 2pi/order) and their negatives,
/// in the coordinates of the simple cubic lattice. 48 entries.
const std::vector<std::pair<std::string, OrthogonalMap>>& named_cubic_elements();
std::optional<OrthogonalMap> named_element(const std::string& name);
std::optional<std::string> name_of(const OrthogonalMap& g);

}  // namespace latproj
