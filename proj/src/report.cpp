#include "latproj/report.hpp"

#include <algorithm>
#include <sstream>

#include "latproj/presets.hpp"

namespace latproj {

Json scalar_json(const QuadScalar& s) { return s.to_string(); }

Json vector_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
  return a;
}

Json group_report(const PointGroup& g) {
  Json j;
  j["order"] = g.order();
  j["elements"] = Json::array();
  for (const auto& e : g.elements()) j["elements"].push_back(matrix_json(e.matrix()));
  return j;
}

Json analysis_report(const ProjectionContext& ctx, const Vec& k) {
  const PointGroup& h = ctx.holohedry;
  const MapList jid = j_id_set(ctx, h, k);
  const MapList s = s_set(ctx, h, k);
  const PointGroup sigma = stabilizer(h, k);
  const ModeCount mc = mode_count(ctx, h, k);

  Json j;
  j["y0"] = scalar_json(ctx.y0);
  j["k"] = vector_json(k);
  j["axis_point_in_L"] = ctx.axis_point_in_L;
  j["projected_basis"] = Json::array();
  for (const auto& b : ctx.projected.basis()) j["projected_basis"].push_back(vector_json(b));
  j["J_tilde_order"] = ctx.induced.order();
  j["J_lift_order"] = ctx.lift.size();
  j["projected_holohedry_order"] = ctx.projected_holohedry.order();
  j["stabilizer_order"] = sigma.order();
  j["lift_stabilizer_order"] = set_intersection(ctx.lift, sigma.elements()).size();
  j["J_id_order"] = jid.size();
  j["S_order"] = s.size();
  j["s_is_group"] = is_group(s);
  j["parts"] = Json::array();
  for (const auto& p : mc.parts.parts) {
    Json pj;
    pj["u"] = vector_json(p.representative);
    pj["z"] = scalar_json(p.z);
    pj["orbit_size"] = p.projected_orbit.size();
    pj["members"] = p.members3d.size();
    pj["annihilated"] = p.annihilated;
    j["parts"].push_back(pj);
  }
  j["raw_orbits"] = mc.raw_orbits;
  j["surviving"] = mc.surviving;
  j["corollary_predicate"] = more_orbits_predicate(ctx, h, k);
  j["bad_y0_moduli"] = Json::array();
  for (const auto& z : bad_y0(h, k).moduli) j["bad_y0_moduli"].push_back(scalar_json(z));
  return j;
}

namespace {

Vec ints(long x, long y, long z) { return {QuadScalar(x), QuadScalar(y), QuadScalar(z)}; }

}  // namespace

std::vector<KFamily> cubic_families(long a, long b, long c) {
  return {{"(a,0,0)", ints(a, 0, 0)}, {"(a,b,b)", ints(a, b, b)}, {"(a,a,b)", ints(a, a, b)},
          {"(a,a,0)", ints(a, a, 0)}, {"(a,b,0)", ints(a, b, 0)}, {"(a,b,c)", ints(a, b, c)},
          {"(a,a,a)", ints(a, a, a)}};
}

std::vector<KFamily> rotated_families(long a, long b, long c) {
  return {{"(a,0,0)", ints(a, 0, 0)},         {"(a,b,b)", ints(a, b, b)}, {"(0,a,a)", ints(0, a, a)},
          {"(a,b,0)", ints(a, b, 0)},         {"(a,b,c)", ints(a, b, c)}, {"(a,a,a)", ints(a, a, a)},
          {"(a,b,a+b)", ints(a, b, a + b)}, {"(a,0,a)", ints(a, 0, a)}, {"(a,a,2a)", ints(a, a, 2 * a)}};
}

Vec rotate_to_l2(const Vec& k) { return QuadScalar::sqrt2() * rotation_a()(k); }

std::vector<std::string> cubic_names(const MapList& maps, bool rotated) {
  const OrthogonalMap a = rotation_a();
  std::vector<std::string> out;
  for (const auto& g : maps) {
    if (g.dim() != 3) {
      out.push_back("?");
      continue;
    }
    auto n = name_of(rotated ? a.inverse() * g * a : g);
    out.push_back(n ? *n : "?");
  }
  return out;
}

Json table_report(const ProjectionContext& ctx, bool rotated, long a, long b, long c) {
  const PointGroup& h = ctx.holohedry;
  Json t;
  t["y0"] = scalar_json(ctx.y0);
  t["axis_point_in_L"] = ctx.axis_point_in_L;
  t["holohedry_order"] = h.order();
  t["J_tilde_order"] = ctx.induced.order();
  t["J_lift_order"] = ctx.lift.size();
  t["substitution"] = {{"a", a}, {"b", b}, {"c", c}};
  t["rows"] = Json::array();
  const auto families = rotated ? rotated_families(a, b, c) : cubic_families(a, b, c);
  for (const auto& f : families) {
    const Vec k = rotated ? rotate_to_l2(f.k) : f.k;
    Json r;
    r["family"] = f.label;
    if (rotated) r["k_cubic"] = vector_json(f.k);
    r["k"] = vector_json(k);
    const bool in_dual = k.size() == ctx.dual.dim() && member(ctx.dual, k).has_value();
    r["in_dual"] = in_dual;
    if (!in_dual) {
      t["rows"].push_back(r);
      continue;
    }
    const PointGroup sigma = stabilizer(h, k);
    const MapList meet = set_intersection(ctx.lift, sigma.elements());
    const MapList jid = j_id_set(ctx, h, k);
    const MapList s = s_set(ctx, h, k);
    const ModeCount mc = mode_count(ctx, h, k);
    r["sigma_order"] = sigma.order();
    r["sigma"] = cubic_names(sigma.elements(), rotated);
    r["lift_sigma_order"] = meet.size();
    r["lift_sigma"] = cubic_names(meet, rotated);
    if (sigma.order() % meet.size() == 0)
      r["ratio"] = sigma.order() / meet.size();
    else
      r["ratio"] = std::to_string(sigma.order()) + "/" + std::to_string(meet.size());
    r["J_id_order"] = jid.size();
    r["J_id"] = cubic_names(jid, rotated);
    r["S_order"] = s.size();
    r["s_is_group"] = is_group(s);
    std::string rel;
    if (s.size() == h.order()) rel = "H";
    else if (s == ctx.lift) rel = "J_lift";
    r["S_relation"] = rel;
    Json restr = Json::array();
    for (const auto& z : bad_y0(h, k).moduli) restr.push_back(scalar_json(z.inverse()));
    r["restriction"] = restr;
    r["raw_orbits"] = mc.raw_orbits;
    r["N"] = mc.surviving;
    r["corollary_predicate"] = more_orbits_predicate(ctx, h, k);
    t["rows"].push_back(r);
  }
  return t;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += cell(v[i]);
    }
    return s + "}";
  }
  return v.dump();
}

}  // namespace

std::string table_text(const Json& table) {
  std::ostringstream os;
  os << "y0 = " << table["y0"].get<std::string>() << "  |H| = " << table["holohedry_order"].dump()
     << "  |J~| = " << table["J_tilde_order"].dump() << "  |J~^| = " << table["J_lift_order"].dump() << "\n";
  std::vector<std::string> cols;
  for (const auto& row : table["rows"])
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : table["rows"]) {
    std::vector<std::string> line;
    for (const auto& c : cols) line.push_back(row.contains(c) ? cell(row[c]) : "-");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
  return os.str();
}

std::string report_text(const Json& report) {
  std::ostringstream os;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "parts") {
      os << "parts:\n";
      for (const auto& p : *it)
        os << "  u = " << cell(p["u"]) << "  z = " << p["z"].get<std::string>()
           << "  orbit_size = " << p["orbit_size"].dump() << (p["annihilated"].get<bool>() ? "  annihilated" : "")
           << "\n";
      continue;
    }
    os << it.key() << ": " << cell(*it) << "\n";
  }
  return os.str();
}

}  // namespace latproj
