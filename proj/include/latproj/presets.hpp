#pragma once

// Built-in lattices and the JSON lattice config format.

#include <string>
#include <vector>

#include "latproj/lattice.hpp"
#include "latproj/pointgroup.hpp"

namespace latproj {

/// Simple cubic lattice L1 = Z^3.
Lattice cubic_lattice();
/// Rotated cubic lattice L2 = (1/sqrt2) A L1.
Lattice cubic_rotated_lattice();
/// Body-centred lattice L3 containing L2.
Lattice bcc_rotated_lattice();

/// The rotation A with L2 = (1/sqrt2) A L1.
OrthogonalMap rotation_a();

/// Preset names: "cubic", "cubic-rotated", "bcc-rotated".
const std::vector<std::string>& preset_names();
/// Throws LatticeError for an unknown name.
Lattice preset_lattice(const std::string& name);

/// Parses `{ "dim": d, "basis": [[scalar, ...], ...] }`; throws LatticeError
/// (or ParseError for bad scalars).
Lattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const Lattice& l);

/// Preset name or path to a config file.
Lattice load_lattice(const std::string& source);

}  // namespace latproj
