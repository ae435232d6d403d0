#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "latproj/presets.hpp"
#include "latproj/projection.hpp"

using namespace latproj;

namespace {

Vec v(const char* s) { return parse_vector(s); }
QuadScalar q(const char* s) { return parse_scalar(s); }

std::set<std::string> names(const MapList& maps) {
  std::set<std::string> out;
  for (const auto& g : maps) out.insert(name_of(g).value_or("?"));
  return out;
}

Vec to_l2(const Vec& k) { return q("sqrt2") * rotation_a()(k); }

// Dual vectors with small coordinates, deterministic.
std::vector<Vec> corpus(const Lattice& l, int count, unsigned seed) {
  Lattice d = dual_lattice(l);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> c(-3, 3);
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    IntVec x{c(rng), c(rng), c(rng)};
    Vec k = d.point(x);
    if (!is_zero(k)) out.push_back(k);
  }
  return out;
}

bool by_first(const std::vector<Vec>& a, const std::vector<Vec>& b) { return CanonicalLess{}(a[0], b[0]); }

// Brute-force split of H k by J~-orbits of projections.
std::vector<std::vector<Vec>> brute_parts(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  std::vector<std::vector<Vec>> parts;
  std::vector<std::vector<Vec>> keys;
  for (const auto& m : orbit(h, k)) {
    auto key = orbit(ctx.induced, project(m));
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      parts.push_back({m});
    } else {
      parts[it - keys.begin()].push_back(m);
    }
  }
  for (auto& p : parts) std::sort(p.begin(), p.end(), CanonicalLess{});
  std::sort(parts.begin(), parts.end(), by_first);
  return parts;
}

void check_decomposition(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  OrbitDecomposition dec = decompose_orbit(ctx, h, k);
  std::vector<Vec> all;
  std::vector<std::vector<Vec>> got;
  for (const auto& p : dec.parts) {
    all.insert(all.end(), p.members3d.begin(), p.members3d.end());
    auto m = p.members3d;
    std::sort(m.begin(), m.end(), CanonicalLess{});
    got.push_back(m);
    CHECK(p.projected_orbit == orbit(ctx.induced, p.representative));
    CHECK(p.annihilated == annihilates(p.z, ctx.y0));
    auto zy = qs_is_integer(p.z * ctx.y0);
    CHECK(p.annihilated == (zy.has_value() && *zy != 0));
  }
  std::sort(all.begin(), all.end(), CanonicalLess{});
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all == orbit(h, k));
  std::sort(got.begin(), got.end(), by_first);
  CHECK(got == brute_parts(ctx, h, k));
  ModeCount mc = mode_count(ctx, h, k);
  CHECK(more_orbits_predicate(ctx, h, k) == (mc.raw_orbits > 1));
}

void check_j_sets(const ProjectionContext& ctx, const PointGroup& h, const Vec& k) {
  const QuadScalar z = last_coord(k);
  MapList jid = j_id_set(ctx, h, k);
  for (const auto& d : jid) {
    QuadScalar w = last_coord(d(k));
    CHECK((w == z || w == -z));
  }
  MapList sigma = stabilizer(h, k).elements();
  for (const auto& s : sigma) CHECK(contains(jid, s));
  if (jid.size() != sigma.size()) {
    bool found = false;
    for (const auto& b : jid) {
      if (contains(sigma, b)) continue;
      MapList bs = set_product({b}, sigma);
      if (set_intersection(bs, sigma).empty() && canonical_maps([&] {
            MapList u = sigma;
            u.insert(u.end(), bs.begin(), bs.end());
            return u;
          }()) == jid)
        found = true;
    }
    CHECK(found);
    CHECK(jid.size() == 2 * sigma.size());
  }
  MapList s = s_set(ctx, h, k);
  CHECK(s == set_product(ctx.lift, jid));
  MapList union_alpha;
  for (const auto& alpha : ctx.induced.elements()) {
    MapList ja = j_alpha_set(ctx, h, k, alpha);
    union_alpha.insert(union_alpha.end(), ja.begin(), ja.end());
    for (int corner : {1, -1}) {
      OrthogonalMap gamma = OrthogonalMap::lift(alpha, corner);
      if (h.contains(gamma)) CHECK(ja == set_product({gamma}, jid));
    }
    for (const auto& d : ja) CHECK(project(d(k)) == alpha(project(k)));
  }
  CHECK(canonical_maps(union_alpha) == s);
  if (is_group(jid) && set_product(ctx.lift, jid) == set_product(jid, ctx.lift)) CHECK(is_group(s));
  std::vector<Vec> sk;
  for (const auto& g : s) sk.push_back(project(g(k)));
  std::sort(sk.begin(), sk.end(), CanonicalLess{});
  sk.erase(std::unique(sk.begin(), sk.end()), sk.end());
  CHECK(sk == orbit(ctx.induced, project(k)));
}

}  // namespace

TEST_SUITE("projection") {
  TEST_CASE("contexts for the simple cubic lattice") {
    for (const char* y0 : {"1/2*sqrt2", "1", "1/3", "sqrt3", "2"}) {
      ProjectionContext ctx = make_context(cubic_lattice(), q(y0));
      CHECK(ctx.induced.order() == 8);
      CHECK(ctx.lift.size() == 16);
      CHECK(ctx.projected.basis() == std::vector<Vec>{v("1,0"), v("0,1")});
    }
    ProjectionContext ctx = make_context(cubic_lattice(), q("1/2*sqrt2"));
    CHECK_FALSE(ctx.axis_point_in_L);
    CHECK(make_context(cubic_lattice(), q("1")).axis_point_in_L);
    CHECK_FALSE(ctx.induced_is_strict_subgroup());
  }

  TEST_CASE("contexts for the rotated cubic lattice") {
    ProjectionContext wide = make_context(cubic_rotated_lattice(), q("1/2*sqrt6"));
    CHECK(wide.axis_point_in_L);
    CHECK(same_lattice(wide.projected, Lattice(2, {v("1,0"), v("1/2,1/6*sqrt3")})));
    CHECK(wide.induced.order() == 12);
    CHECK(wide.lift.size() == 12);
    CHECK_FALSE(wide.induced_is_strict_subgroup());
    ProjectionContext unit = make_context(cubic_rotated_lattice(), q("1"));
    CHECK_FALSE(unit.axis_point_in_L);
    CHECK(same_lattice(unit.projected, Lattice(2, {v("1,0"), v("1/2,1/2*sqrt3")})));
    CHECK(unit.induced.order() == 6);
    CHECK(unit.lift.size() == 6);
    CHECK(unit.projected_holohedry.order() == 12);
    CHECK(unit.induced_is_strict_subgroup());
    CHECK(make_context(cubic_rotated_lattice(), q("3/2*sqrt6")).induced.order() == 12);
  }

  TEST_CASE("contexts for the body-centred lattice") {
    CHECK(make_context(bcc_rotated_lattice(), q("1/4*sqrt6")).induced.order() == 12);
    CHECK(make_context(bcc_rotated_lattice(), q("1/12*sqrt6")).induced.order() == 6);
    CHECK(make_context(bcc_rotated_lattice(), q("1")).induced.order() == 6);
  }

  TEST_CASE("context invariants") {
    for (const auto& name : preset_names()) {
      for (const char* y0 : {"1", "1/2*sqrt2", "1/4*sqrt6", "1/2*sqrt6"}) {
        Lattice l = preset_lattice(name);
        ProjectionContext ctx = make_context(l, q(y0));
        PointGroup h = holohedry(l);
        for (const auto& a : ctx.induced.elements()) {
          bool cond1 = h.contains(OrthogonalMap::lift(a, 1));
          bool cond2 = ctx.axis_point_in_L && h.contains(OrthogonalMap::lift(a, -1));
          CHECK((cond1 || cond2));
          CHECK(ctx.projected_holohedry.contains(a));
        }
        MapList expect;
        for (const auto& g : h.elements())
          if (g.is_block() && ctx.induced.contains(g.block())) expect.push_back(g);
        CHECK(canonical_maps(expect) == ctx.lift);
        CHECK(is_group(ctx.lift));
      }
    }
  }

  TEST_CASE("context errors") {
    auto kind_of = [](const char* y0) {
      try {
        make_context(cubic_lattice(), q(y0));
      } catch (const ProjectionError& e) {
        return e.kind();
      }
      return ProjectionError::Kind::kNotFullRank;
    };
    CHECK(kind_of("0") == ProjectionError::Kind::kNonPositiveWidth);
    CHECK(kind_of("-1/2*sqrt2") == ProjectionError::Kind::kNonPositiveWidth);
    CHECK_THROWS_AS(make_context(Lattice(3, {v("1,0,0"), v("0,1,0")}), q("1")), ProjectionError);
  }

  TEST_CASE("J^Id sets of the simple cubic table") {
    ProjectionContext ctx = make_context(cubic_lattice(), q("1/2*sqrt2"));
    PointGroup h = holohedry(cubic_lattice());
    using S = std::set<std::string>;
    CHECK(names(j_id_set(ctx, h, v("1,2,3"))) == S{"Id", "-Rz^2"});
    CHECK(names(j_id_set(ctx, h, v("1,2,2"))) == S{"Id", "-Rz^2", "Rx^3", "-R(0,1,-1)"});
    CHECK(names(j_id_set(ctx, h, v("1,0,0"))) ==
          S{"Id", "Rx", "Rx^2", "Rx^3", "-Ry^2", "-Rz^2", "-R(0,1,1)", "-R(0,1,-1)"});
    CHECK(names(j_id_set(ctx, h, v("1,1,2"))) == S{"Id", "-Rz^2", "R(1,1,0)", "-R(1,-1,0)"});
    CHECK(names(j_id_set(ctx, h, v("1,1,0"))) == S{"Id", "-Rz^2", "R(1,1,0)", "-R(1,-1,0)"});
    CHECK(names(j_id_set(ctx, h, v("1,2,0"))) == S{"Id", "-Rz^2"});
    CHECK(j_id_set(ctx, h, v("1,1,1")).size() == 12);
  }

  TEST_CASE("S sets of the simple cubic table") {
    ProjectionContext ctx = make_context(cubic_lattice(), q("1/2*sqrt2"));
    PointGroup h = holohedry(cubic_lattice());
    MapList s122 = s_set(ctx, h, v("1,2,2"));
    CHECK(s122.size() == 32);
    CHECK_FALSE(is_group(s122));
    CHECK(s_set(ctx, h, v("1,1,1")) == h.elements());
    CHECK(s_set(ctx, h, v("1,1,2")) == ctx.lift);
    const std::size_t expected[] = {32, 32, 16, 16, 16, 16, 48};
    const char* ks[] = {"1,0,0", "1,2,2", "1,1,2", "1,1,0", "1,2,0", "1,2,3", "1,1,1"};
    for (int i = 0; i < 7; ++i) CHECK(s_set(ctx, h, v(ks[i])).size() == expected[i]);
  }

  TEST_CASE("non-group witness on the rotated lattice") {
    PointGroup h = holohedry(cubic_rotated_lattice());
    OrthogonalMap a = rotation_a();
    OrthogonalMap ry = *named_element("Ry");
    OrthogonalMap w = a * ry * a.inverse();
    for (const char* y0 : {"1", "1/2*sqrt6"}) {
      ProjectionContext ctx = make_context(cubic_rotated_lattice(), q(y0));
      MapList s = s_set(ctx, h, v("2,0,0"));
      CHECK(contains(s, w));
      CHECK_FALSE(contains(s, w * w));
      CHECK_FALSE(contains(s, w * w * w));
      CHECK_FALSE(is_group(s));
      CHECK(project(w(v("2,0,0"))) == v("1,-sqrt3"));
      CHECK(j_id_set(ctx, h, v("2,0,0")) == stabilizer(h, v("2,0,0")).elements());
      CHECK(orbit(ctx.induced, v("2,0")) ==
            std::vector<Vec>{v("-2,0"), v("-1,-sqrt3"), v("-1,sqrt3"), v("1,-sqrt3"), v("1,sqrt3"), v("2,0")});
    }
  }

  TEST_CASE("orbit decomposition examples") {
    PointGroup h3 = holohedry(bcc_rotated_lattice());
    ProjectionContext c1 = make_context(bcc_rotated_lattice(), q("1"));
    OrbitDecomposition d1 = decompose_orbit(c1, h3, v("1,sqrt3,0"));
    REQUIRE(d1.parts.size() == 3);
    CHECK(d1.parts[0].z == q("0"));
    CHECK(d1.parts[1].z == q("2/3*sqrt6"));
    CHECK(d1.parts[2].z == q("-2/3*sqrt6"));
    CHECK(d1.parts[0].representative == v("-2,0"));
    CHECK(d1.parts[1].representative == v("-1,-1/3*sqrt3"));
    CHECK(d1.parts[2].representative == v("-1,1/3*sqrt3"));
    ProjectionContext c2 = make_context(bcc_rotated_lattice(), q("1/4*sqrt6"));
    OrbitDecomposition d2 = decompose_orbit(c2, h3, v("1,sqrt3,0"));
    CHECK(d2.parts.size() == 2);
    ModeCount m2 = mode_count(c2, h3, v("1,sqrt3,0"));
    CHECK(m2.raw_orbits == 2);
    CHECK(m2.surviving == 1);

    PointGroup h1 = holohedry(cubic_lattice());
    ProjectionContext c3 = make_context(cubic_lattice(), q("1/2*sqrt2"));
    OrbitDecomposition d3 = decompose_orbit(c3, h1, v("1,2,0"));
    REQUIRE(d3.parts.size() == 3);
    std::multiset<std::size_t> sizes;
    for (const auto& p : d3.parts) {
      CHECK_FALSE(p.annihilated);
      sizes.insert(p.projected_orbit.size());
      QuadScalar n2 = dot(p.representative, p.representative);
      CHECK((n2 == q("5") || n2 == q("1") || n2 == q("4")));
    }
    CHECK(sizes == std::multiset<std::size_t>{4, 4, 8});
  }

  TEST_CASE("mode counts") {
    PointGroup h1 = holohedry(cubic_lattice());
    ProjectionContext c = make_context(cubic_lattice(), q("1/2*sqrt2"));
    CHECK(mode_count(c, h1, v("1,2,0")).surviving == 3);
    CHECK(mode_count(c, h1, v("1,1,1")).surviving == 1);
    ProjectionContext c1 = make_context(cubic_lattice(), q("1"));
    ModeCount m = mode_count(c1, h1, v("1,0,0"));
    CHECK(m.raw_orbits == 2);
    CHECK(m.surviving == 1);
    CHECK(mode_count(c, h1, v("1,0,0")).surviving == 2);
  }

  TEST_CASE("corollary predicate examples") {
    PointGroup h1 = holohedry(cubic_lattice());
    ProjectionContext c = make_context(cubic_lattice(), q("1/2*sqrt2"));
    CHECK(more_orbits_predicate(c, h1, v("1,0,0")));
    CHECK_FALSE(more_orbits_predicate(c, h1, v("1,1,1")));
    PointGroup h2 = holohedry(cubic_rotated_lattice());
    ProjectionContext c2 = make_context(cubic_rotated_lattice(), q("1/2*sqrt6"));
    CHECK_FALSE(more_orbits_predicate(c2, h2, to_l2(v("1,0,0"))));
    CHECK(mode_count(c2, h2, to_l2(v("1,0,0"))).raw_orbits == 1);
  }

  TEST_CASE("fibers") {
    Fiber f1 = fiber_over(make_context(cubic_lattice(), q("1/2*sqrt2")), v("1,0"));
    CHECK(f1.exists);
    CHECK(f1.z0 == q("0"));
    REQUIRE(f1.period);
    CHECK(*f1.period == q("1"));
    Fiber f3 = fiber_over(make_context(bcc_rotated_lattice(), q("1/4*sqrt6")), v("2,0"));
    CHECK(f3.z0 == q("0"));
    REQUIRE(f3.period);
    CHECK(*f3.period == q("2*sqrt6"));
    Fiber f2 = fiber_over(make_context(cubic_rotated_lattice(), q("1")), v("-1,sqrt3"));
    CHECK(f2.z0 == q("0"));
    REQUIRE(f2.period);
    CHECK(*f2.period == q("sqrt6"));
    Fiber off = fiber_over(make_context(bcc_rotated_lattice(), q("1/4*sqrt6")), v("1,-1/3*sqrt3"));
    CHECK(off.exists);
    CHECK(off.z0 == q("2/3*sqrt6"));
    Fiber none = fiber_over(make_context(cubic_lattice(), q("1")), v("1/2,0"));
    CHECK_FALSE(none.exists);
  }

  TEST_CASE("fiber agrees with direct membership") {
    for (const auto& name : preset_names()) {
      Lattice l = preset_lattice(name);
      ProjectionContext ctx = make_context(l, q("1"));
      for (const auto& k : corpus(l, 25, 3)) {
        Fiber f = fiber_over(ctx, project(k));
        REQUIRE(f.exists);
        REQUIRE(f.period);
        CHECK(member(ctx.dual, extend(project(k), f.z0)));
        CHECK(member(ctx.dual, extend(project(k), f.z0 + *f.period)));
        CHECK(qs_sign(f.z0) >= 0);
        CHECK(qs_sign(f.z0 - *f.period) < 0);
        // The period is the smallest positive axis step.
        CHECK(*f.period == last_coord(axis_sublattice(ctx.dual).basis()[0]));
        QuadScalar steps = (last_coord(k) - f.z0) / *f.period;
        CHECK(qs_is_integer(steps).has_value());
      }
    }
  }

  TEST_CASE("space equality") {
    ProjectionContext c = make_context(cubic_lattice(), q("1/2*sqrt2"));
    std::vector<Vec> ks;
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) ks.push_back(Vec{QuadScalar(a), QuadScalar(b)});
    for (bool r : space_equality_check(c, ks)) CHECK(r);
    CHECK(space_equality_check(make_context(cubic_lattice(), q("1/2")), {v("1,0")}) == std::vector<bool>{true});
    ProjectionContext c3 = make_context(bcc_rotated_lattice(), q("1/4*sqrt6"));
    CHECK(space_equality_check(c3, {v("1,-1/3*sqrt3")}) == std::vector<bool>{false});
    CHECK(space_equality_check(c3, {v("2,0")}) == std::vector<bool>{true});
    CHECK_THROWS_AS(space_equality_check(make_context(cubic_lattice(), q("1")), {v("1/2,0")}), ProjectionError);
  }

  TEST_CASE("space equality matches a residue oracle") {
    // z y0 avoids Z \ {0} for some z in z0 + period * [-6, 6].
    for (const auto& name : preset_names()) {
      Lattice l = preset_lattice(name);
      for (const char* y0 : {"1", "1/4*sqrt6", "1/2*sqrt6", "1/2*sqrt2", "3/4*sqrt6"}) {
        ProjectionContext ctx = make_context(l, q(y0));
        for (const auto& k : corpus(l, 15, 11)) {
          Fiber f = fiber_over(ctx, project(k));
          bool any = false;
          for (long m = -6; m <= 6; ++m) any = any || !annihilates(f.z0 + QuadScalar(m) * *f.period, ctx.y0);
          CHECK(space_equality_check(ctx, {project(k)})[0] == any);
        }
      }
    }
  }

  TEST_CASE("bad widths") {
    BadSet b = bad_y0(cubic_lattice(), v("1,2,3"));
    CHECK(b.moduli == std::vector<QuadScalar>{q("1"), q("2"), q("3")});
    CHECK(bad_y0(cubic_lattice(), v("1,1,0")).moduli == std::vector<QuadScalar>{q("1")});
    CHECK(b.contains(q("1/2")));
    CHECK(b.contains(q("2/3")));
    CHECK_FALSE(b.contains(q("1/2*sqrt2")));
    CHECK_FALSE(b.contains(q("1/5")));
    BadSet b2 = bad_y0(cubic_rotated_lattice(), to_l2(v("1,1,1")));
    CHECK(b2.contains(q("1/2*sqrt6")));
    CHECK_THROWS_AS(bad_y0(cubic_lattice(), v("1/2,0,0")), ProjectionError);
  }

  TEST_CASE("decomposition and J-set properties over a corpus") {
    for (const auto& name : preset_names()) {
      Lattice l = preset_lattice(name);
      PointGroup h = holohedry(l);
      for (const char* y0 : {"1", "1/2*sqrt2", "1/4*sqrt6", "1/2*sqrt6"}) {
        ProjectionContext ctx = make_context(l, q(y0));
        for (const auto& k : corpus(l, 12, 17)) {
          check_decomposition(ctx, h, k);
          check_j_sets(ctx, h, k);
        }
      }
    }
  }

  TEST_CASE("annihilation") {
    CHECK(annihilates(q("2/3*sqrt6"), q("1/4*sqrt6")));
    CHECK_FALSE(annihilates(q("0"), q("1")));
    CHECK_FALSE(annihilates(q("1"), q("1/2")));
    CHECK(annihilates(q("-2"), q("1")));
  }
}
