#include "latproj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "latproj/planform.hpp"
#include "latproj/presets.hpp"
#include "latproj/report.hpp"

namespace latproj::cli {

namespace {

struct Options {
  std::string lattice = "cubic";
  std::string y0;
  std::string k;
  std::string out;
  std::string format = "json";
  std::string window = "0,0,2,2";
  std::string res = "512x512";
  bool orbit_sum = false;
  long a = 1, b = 2, c = 3;
  std::string table_kind = "auto";
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

QuadScalar parse_y0(const std::string& s) {
  if (s.empty()) throw ConfigError("--y0 is required");
  QuadScalar y = parse_scalar(s);
  if (y.sign() <= 0) throw ConfigError("--y0 must be positive, got " + y.to_string());
  return y;
}

Vec parse_k(const std::string& s, std::size_t dim) {
  if (s.empty()) throw ConfigError("--k is required");
  Vec k = parse_vector(s);
  if (k.size() != dim)
    throw ConfigError("--k has " + std::to_string(k.size()) + " entries, lattice dimension is " + std::to_string(dim));
  return k;
}

Window parse_window(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--window expects x0,y0,x1,y1, got '" + s + "'");
    }
  }
  if (v.size() != 4 || !(v[2] > v[0]) || !(v[3] > v[1])) throw ConfigError("--window expects x0,y0,x1,y1 with x1>x0, y1>y0");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<std::size_t, std::size_t> parse_res(const std::string& s) {
  auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t u1 = 0, u2 = 0;
    long w = std::stol(s.substr(0, x), &u1);
    long h = std::stol(s.substr(x + 1), &u2);
    if (u1 != x || u2 != s.size() - x - 1 || w < 1 || h < 1) throw std::invalid_argument(s);
    return {static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
  } catch (const std::exception&) {
    throw ConfigError("--res expects WxH with positive integers, got '" + s + "'");
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + o.out + "'");
  f << text;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

int cmd_holohedry(const Options& o, std::ostream& out) {
  Lattice l = load_lattice(o.lattice);
  PointGroup h = holohedry(l);
  Json j;
  j["lattice"] = o.lattice;
  Json g = group_report(h);
  for (auto it = g.begin(); it != g.end(); ++it) j[it.key()] = it.value();
  if (o.format == "text") {
    std::ostringstream os;
    os << "order " << h.order() << "\n";
    for (const auto& e : j["elements"]) {
      for (const auto& row : e) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "  [") << row[i].get<std::string>();
        os << "]\n";
      }
      os << "\n";
    }
    emit(o, os.str(), out);
  } else {
    emit(o, render_json(j), out);
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  Lattice l = load_lattice(o.lattice);
  QuadScalar y0 = parse_y0(o.y0);
  Vec k = parse_k(o.k, l.dim());
  ProjectionContext ctx = make_context(l, y0);
  Json j = analysis_report(ctx, k);
  emit(o, o.format == "text" ? report_text(j) : render_json(j), out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  Lattice l = load_lattice(o.lattice);
  if (l.dim() != 3) throw ConfigError("tables are defined for three-dimensional lattices");
  QuadScalar y0 = parse_y0(o.y0);
  bool rotated;
  if (o.table_kind == "auto") rotated = o.lattice == "cubic-rotated" || o.lattice == "bcc-rotated";
  else rotated = o.table_kind == "rotated";
  ProjectionContext ctx = make_context(l, y0);
  Json t = table_report(ctx, rotated, o.a, o.b, o.c);
  emit(o, o.format == "text" ? table_text(t) : render_json(t), out);
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) throw ConfigError("render needs --out");
  Lattice l = load_lattice(o.lattice);
  QuadScalar y0 = parse_y0(o.y0);
  Vec k = parse_k(o.k, l.dim());
  if (l.dim() != 3) throw ConfigError("rendering is defined for three-dimensional lattices");
  Window w = parse_window(o.window);
  auto [width, height] = parse_res(o.res);
  PointGroup h = holohedry(l);
  ProjectedWaveSum sum = project_sum(invariant_sum(h, k, o.orbit_sum), y0);
  Field f = sample_field(sum, w, width, height);

  bool zero = true;
  for (const auto& t : sum.terms)
    if (t.coeff != std::complex<double>(0.0, 0.0)) zero = false;
  if (zero) err << "warning: every projected mode is annihilated; the image is uniform\n";

  const bool csv = o.out.size() >= 4 && o.out.compare(o.out.size() - 4, 4, ".csv") == 0;
  if (csv) write_csv(f, o.out);
  else write_pgm(f, o.out);

  Json j;
  j["y0"] = scalar_json(y0);
  j["k"] = vector_json(k);
  j["projected_terms"] = sum.terms.size();
  j["annihilated_inputs"] = sum.dropped;
  Lattice dual = dual_lattice(l);
  const bool in_dual = member(dual, k).has_value();
  j["k_in_dual"] = in_dual;
  if (in_dual) {
    ProjectionContext ctx = make_context(l, y0);
    ModeCount mc = mode_count(ctx, ctx.holohedry, k);
    j["raw_orbits"] = mc.raw_orbits;
    j["surviving"] = mc.surviving;
  }
  j["output"] = o.out;
  j["width"] = width;
  j["height"] = height;
  if (!csv) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(encode_pgm(f))));
    j["fnv1a64"] = hex;
  }
  out << (o.format == "text" ? report_text(j) : render_json(j));
  return kOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  Lattice l = load_lattice(o.lattice);
  emit(o, lattice_to_json(l), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice projection analysis and planform rendering", "latproj"};
  app.require_subcommand(1);
  Options o;

  auto add_lattice = [&](CLI::App* s) {
    s->add_option("--lattice", o.lattice, "preset (cubic, cubic-rotated, bcc-rotated) or config path");
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* holo = app.add_subcommand("holohedry", "print the holohedry of a lattice");
  add_lattice(holo);
  add_format(holo);
  holo->add_option("--out", o.out, "output path");

  auto* analyze = app.add_subcommand("analyze", "projection report for one wave vector");
  add_lattice(analyze);
  add_format(analyze);
  analyze->add_option("--y0", o.y0, "band width (scalar literal)")->required();
  analyze->add_option("--k", o.k, "wave vector (comma-separated scalar literals)")->required();
  analyze->add_option("--out", o.out, "output path");

  auto* table = app.add_subcommand("table", "reports over the standard k-families");
  add_lattice(table);
  add_format(table);
  table->add_option("--y0", o.y0, "band width (scalar literal)")->required();
  table->add_option("--a", o.a, "substitution for a");
  table->add_option("--b", o.b, "substitution for b");
  table->add_option("--c", o.c, "substitution for c");
  table->add_option("--families", o.table_kind, "auto, cubic or rotated")
      ->check(CLI::IsMember({"auto", "cubic", "rotated"}));
  table->add_option("--out", o.out, "output path");

  auto* render = app.add_subcommand("render", "render a projected invariant planform");
  add_lattice(render);
  add_format(render);
  render->add_option("--y0", o.y0, "band width (scalar literal)")->required();
  render->add_option("--k", o.k, "wave vector (comma-separated scalar literals)")->required();
  render->add_option("--window", o.window, "x0,y0,x1,y1");
  render->add_option("--res", o.res, "WxH");
  render->add_flag("--orbit-sum", o.orbit_sum, "weight each orbit vector once");
  render->add_option("--out", o.out, "output .pgm or .csv path")->required();

  auto* lat = app.add_subcommand("lattice", "export a lattice as a JSON config");
  add_lattice(lat);
  lat->add_option("--out", o.out, "output path");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*holo) return cmd_holohedry(o, out);
    if (*analyze) return cmd_analyze(o, out);
    if (*table) return cmd_table(o, out);
    if (*render) return cmd_render(o, out, err);
    if (*lat) return cmd_lattice(o, out);
  } catch (const ProjectionError& e) {
    if (e.kind() == ProjectionError::Kind::kNonPositiveWidth) {
      err << "error: " << e.what() << "\n";
      return kConfigError;
    }
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const RealnessError& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace latproj::cli
