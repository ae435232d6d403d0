#pragma once

// Projection of a lattice, its holohedry and its dual-lattice orbits onto the
// hyperplane y = 0 through the band 0 <= y <= y0.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latproj/lattice.hpp"
#include "latproj/pointgroup.hpp"

namespace latproj {

class ProjectionError : public std::runtime_error {
public:
  enum class Kind { kNonPositiveWidth, kDegenerateProjection, kNotInDual, kEmptyFiber, kNotFullRank };
  ProjectionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct ProjectionContext {
  QuadScalar y0;
  Lattice source;
  Lattice dual;
  PointGroup holohedry;
  /// (0, ..., 0, y0) lies in the source lattice.
  bool axis_point_in_L = false;
  Lattice projected;
  /// Induced group J~ acting on the projected space.
  PointGroup induced;
  /// J~ lifted back: all alpha_+ and alpha_- in the holohedry with alpha in J~.
  MapList lift;
  /// Holohedry of the projected lattice; contains the induced group.
  PointGroup projected_holohedry;

  bool induced_is_strict_subgroup() const { return induced.order() < projected_holohedry.order(); }
};

ProjectionContext make_context(const Lattice& l, const QuadScalar& y0);

/// z y0 is a nonzero integer, i.e. the band integral of exp(2 pi i z y) vanishes.
bool annihilates(const QuadScalar& z, const QuadScalar& y0);

/// {delta in H : P(delta k) = alpha P(k)}; alpha = identity gives J^Id_k.
MapList j_alpha_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k, const OrthogonalMap& alpha);
MapList j_id_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k);
/// S_k = J~^ J^Id_k.
MapList s_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k);

struct OrbitPart {
  Vec representative;  // u_i = P(k_i)
  QuadScalar z;        // last coordinate of k_i
  std::vector<Vec> members3d;
  std::vector<Vec> projected_orbit;
  bool annihilated = false;
};

struct OrbitDecomposition {
  Vec k;
  QuadScalar y0;
  std::vector<OrbitPart> parts;
};

/// Greedy split of H k: the canonically least unassigned k_i claims S_{k_i} k_i.
OrbitDecomposition decompose_orbit(const ProjectionContext& ctx, const PointGroup& h, const Vec& k);

struct ModeCount {
  std::size_t raw_orbits = 0;
  std::size_t surviving = 0;
  OrbitDecomposition parts;
};

ModeCount mode_count(const ProjectionContext& ctx, const PointGroup& h, const Vec& k);

/// |H| / |J~^| > |Sigma_k| / |J~^ n Sigma_k|, in integers.
bool more_orbits_predicate(const ProjectionContext& ctx, const PointGroup& h, const Vec& k);

struct Fiber {
  bool exists = false;
  /// Fiber element in [0, period) when periodic.
  QuadScalar z0;
  std::optional<QuadScalar> period;
};

/// {z : (ktilde, z) in L*} = z0 + period Z.
Fiber fiber_over(const ProjectionContext& ctx, const Vec& ktilde);

/// Per ktilde: some z in the fiber has z y0 outside Z \ {0}.
std::vector<bool> space_equality_check(const ProjectionContext& ctx, const std::vector<Vec>& ktildes);

struct BadSet {
  /// Distinct positive |z| over the orbit's last coordinates, ascending.
  std::vector<QuadScalar> moduli;
  bool contains(const QuadScalar& y0) const;
};

BadSet bad_y0(const Lattice& l, const Vec& k);
BadSet bad_y0(const PointGroup& h, const Vec& k);

}  // namespace latproj
