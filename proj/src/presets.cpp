#include "latproj/presets.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latproj {

namespace {

Vec vec(std::initializer_list<const char*> lits) {
  Vec v;
  for (const char* s : lits) v.push_back(parse_scalar(s));
  return v;
}

}  // namespace

Lattice cubic_lattice() { return Lattice(3, {vec({"1", "0", "0"}), vec({"0", "1", "0"}), vec({"0", "0", "1"})}); }

Lattice cubic_rotated_lattice() {
  return Lattice(3, {vec({"1", "0", "0"}), vec({"1/2", "1/2*sqrt3", "0"}), vec({"1/2", "1/6*sqrt3", "1/6*sqrt6"})});
}

Lattice bcc_rotated_lattice() {
  return Lattice(3, {vec({"1/2", "1/2*sqrt3", "0"}), vec({"1", "0", "0"}), vec({"1/2", "1/6*sqrt3", "-1/12*sqrt6"})});
}

OrthogonalMap rotation_a() {
  return OrthogonalMap(Matrix::from_rows({vec({"1/2*sqrt2", "-1/2*sqrt2", "0"}),
                                          vec({"1/6*sqrt6", "1/6*sqrt6", "1/3*sqrt6"}),
                                          vec({"1/3*sqrt3", "1/3*sqrt3", "-1/3*sqrt3"})}));
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"cubic", "cubic-rotated", "bcc-rotated"};
  return names;
}

Lattice preset_lattice(const std::string& name) {
  if (name == "cubic") return cubic_lattice();
  if (name == "cubic-rotated") return cubic_rotated_lattice();
  if (name == "bcc-rotated") return bcc_rotated_lattice();
  throw LatticeError("unknown lattice preset '" + name + "'");
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LatticeError(std::string("lattice config is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis"))
    throw LatticeError("lattice config needs \"dim\" and \"basis\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
    throw LatticeError("\"dim\" must be a positive integer");
  const auto dim = j["dim"].get<std::size_t>();
  if (!j["basis"].is_array()) throw LatticeError("\"basis\" must be an array of vectors");
  std::vector<Vec> basis;
  for (const auto& row : j["basis"]) {
    if (!row.is_array()) throw LatticeError("each basis vector must be an array of scalar literals");
    Vec v;
    for (const auto& s : row) {
      if (!s.is_string()) throw LatticeError("basis entries must be scalar literal strings");
      v.push_back(parse_scalar(s.get<std::string>()));
    }
    basis.push_back(std::move(v));
  }
  return Lattice(dim, std::move(basis));
}

std::string lattice_to_json(const Lattice& l) {
  nlohmann::ordered_json j;
  j["dim"] = l.dim();
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : l.basis()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : b) row.push_back(x.to_string());
    j["basis"].push_back(row);
  }
  return j.dump(2) + "\n";
}

Lattice load_lattice(const std::string& source) {
  for (const auto& n : preset_names())
    if (n == source) return preset_lattice(source);
  std::ifstream in(source);
  if (!in) throw LatticeError("'" + source + "' is neither a preset nor a readable config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return lattice_from_json(ss.str());
}

}  // namespace latproj
