#include "latproj/projection.hpp"

#include <algorithm>

namespace latproj {

namespace {

Vec axis_point(std::size_t dim, const QuadScalar& y) {
  Vec v(dim);
  v.back() = y;
  return v;
}

Lattice projected_lattice(const Lattice& l, bool axis_in_l) {
  const std::size_t d = l.dim();
  if (axis_in_l) {
    Lattice axis = axis_sublattice(l);
    IntVec xg = *member(l, axis.basis()[0]);
    IntMatrix u = unimodular_completion(xg);
    std::vector<Vec> basis;
    for (std::size_t c = 0; c + 1 < d; ++c) {
      IntVec col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = u[r][c];
      basis.push_back(project(l.point(col)));
    }
    return Lattice(d - 1, std::move(basis));
  }
  Lattice sub = intersect_last_coord_zero(l);
  if (sub.rank() < d - 1)
    throw ProjectionError(ProjectionError::Kind::kDegenerateProjection,
                          "projected lattice has rank " + std::to_string(sub.rank()) + ", expected " +
                              std::to_string(d - 1));
  return project_lattice(sub);
}

void require_in_dual(const ProjectionContext& ctx, const Vec& k) {
  if (k.size() != ctx.source.dim())
    throw std::invalid_argument("wave vector dimension differs from the lattice dimension");
  if (!member(ctx.dual, k))
    throw ProjectionError(ProjectionError::Kind::kNotInDual, "wave vector " + to_string(k) + " is not in the dual lattice");
}

}  // namespace

ProjectionContext make_context(const Lattice& l, const QuadScalar& y0) {
  if (y0.sign() <= 0)
    throw ProjectionError(ProjectionError::Kind::kNonPositiveWidth, "band width y0 must be positive, got " + y0.to_string());
  if (!l.full_rank() || l.dim() < 2)
    throw ProjectionError(ProjectionError::Kind::kNotFullRank, "projection needs a full-rank lattice of dimension >= 2");
  ProjectionContext ctx;
  ctx.y0 = y0;
  ctx.source = l;
  ctx.dual = dual_lattice(l);
  ctx.holohedry = holohedry(l);
  ctx.axis_point_in_L = member(l, axis_point(l.dim(), y0)).has_value();
  ctx.projected = projected_lattice(l, ctx.axis_point_in_L);

  MapList induced;
  for (const auto& g : ctx.holohedry.elements()) {
    if (!g.is_block()) continue;
    if (g.corner() > 0 || ctx.axis_point_in_L) induced.push_back(g.block());
  }
  ctx.induced = PointGroup(std::move(induced));
  MapList lift;
  for (const auto& g : ctx.holohedry.elements())
    if (g.is_block() && ctx.induced.contains(g.block())) lift.push_back(g);
  ctx.lift = canonical_maps(std::move(lift));
  ctx.projected_holohedry = holohedry(ctx.projected);
  return ctx;
}

bool annihilates(const QuadScalar& z, const QuadScalar& y0) {
  auto n = (z * y0).as_integer();
  return n && *n != 0;
}

MapList j_alpha_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k, const OrthogonalMap& alpha) {
  require_in_dual(ctx, k);
  const Vec target = alpha(project(k));
  MapList out;
  for (const auto& g : h.elements())
    if (project(g(k)) == target) out.push_back(g);
  return canonical_maps(std::move(out));
}

MapList j_id_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  return j_alpha_set(ctx, h, k, OrthogonalMap::identity(k.size() - 1));
}

MapList s_set(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  return set_product(ctx.lift, j_id_set(ctx, h, k));
}

OrbitDecomposition decompose_orbit(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  require_in_dual(ctx, k);
  OrbitDecomposition dec{k, ctx.y0, {}};
  const std::vector<Vec> full = orbit(h, k);
  std::vector<bool> assigned(full.size(), false);
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (assigned[i]) continue;
    const Vec& ki = full[i];
    OrbitPart part;
    part.representative = project(ki);
    part.z = last_coord(ki);
    part.members3d = orbit(s_set(ctx, h, ki), ki);
    for (const auto& v : part.members3d) {
      auto it = std::lower_bound(full.begin(), full.end(), v, CanonicalLess{});
      if (it == full.end() || !(*it == v)) throw std::logic_error("orbit part escapes the holohedry orbit");
      auto idx = static_cast<std::size_t>(it - full.begin());
      if (assigned[idx]) throw std::logic_error("orbit parts overlap");
      assigned[idx] = true;
    }
    part.projected_orbit = orbit(ctx.induced, part.representative);
    part.annihilated = annihilates(part.z, ctx.y0);
    dec.parts.push_back(std::move(part));
  }
  return dec;
}

ModeCount mode_count(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  ModeCount mc;
  mc.parts = decompose_orbit(ctx, h, k);
  mc.raw_orbits = mc.parts.parts.size();
  for (const auto& p : mc.parts.parts)
    if (!p.annihilated) ++mc.surviving;
  return mc;
}

bool more_orbits_predicate(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  require_in_dual(ctx, k);
  const PointGroup sigma = stabilizer(h, k);
  const std::size_t meet = set_intersection(ctx.lift, sigma.elements()).size();
  return h.order() * meet > sigma.order() * ctx.lift.size();
}

Fiber fiber_over(const ProjectionContext& ctx, const Vec& ktilde) {
  const std::size_t d = ctx.dual.dim();
  if (ktilde.size() + 1 != d) throw std::invalid_argument("projected wave vector has the wrong dimension");
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i + 1 < d; ++i) rows.push_back(i);
  auto sol = solve_in_lattice(ctx.dual, rows, ktilde);
  Fiber f;
  if (!sol) return f;
  f.exists = true;
  f.z0 = last_coord(ctx.dual.point(sol->particular));
  if (!sol->kernel.empty()) {
    QuadScalar period = last_coord(ctx.dual.point(sol->kernel[0])).abs();
    QuadScalar q{Rational((f.z0 / period).floor())};
    f.z0 -= q * period;
    f.period = period;
  }
  return f;
}

std::vector<bool> space_equality_check(const ProjectionContext& ctx, const std::vector<Vec>& ktildes) {
  std::vector<bool> out;
  for (const auto& kt : ktildes) {
    Fiber f = fiber_over(ctx, kt);
    if (!f.exists)
      throw ProjectionError(ProjectionError::Kind::kEmptyFiber,
                            "no dual-lattice vector projects onto " + to_string(kt));
    const QuadScalar c = f.z0 * ctx.y0;
    if (!f.period) {
      out.push_back(!annihilates(f.z0, ctx.y0));
      continue;
    }
    auto ci = c.as_integer();
    auto wi = (*f.period * ctx.y0).as_integer();
    if (ci && wi) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), ci->get_mpz_t(), wi->get_mpz_t());
      out.push_back(r == 0);
    } else {
      out.push_back(true);
    }
  }
  return out;
}

bool BadSet::contains(const QuadScalar& y0) const {
  for (const auto& z : moduli)
    if (annihilates(z, y0)) return true;
  return false;
}

BadSet bad_y0(const PointGroup& h, const Vec& k) {
  BadSet bs;
  for (const auto& v : orbit(h, k)) {
    QuadScalar z = last_coord(v).abs();
    if (!z.is_zero() && std::find(bs.moduli.begin(), bs.moduli.end(), z) == bs.moduli.end()) bs.moduli.push_back(z);
  }
  std::sort(bs.moduli.begin(), bs.moduli.end(),
            [](const QuadScalar& a, const QuadScalar& b) { return compare(a, b) < 0; });
  return bs;
}

BadSet bad_y0(const Lattice& l, const Vec& k) {
  if (!member(dual_lattice(l), k))
    throw ProjectionError(ProjectionError::Kind::kNotInDual, "wave vector " + to_string(k) + " is not in the dual lattice");
  return bad_y0(holohedry(l), k);
}

}  // namespace latproj
