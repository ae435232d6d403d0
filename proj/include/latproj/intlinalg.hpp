#pragma once

// Integer linear algebra: solving A x = b over Z and unimodular completion.

#include <optional>
#include <vector>

#include "latproj/qfield.hpp"

namespace latproj {

using IntVec = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;  // row-major
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVec = std::vector<Rational>;

struct IntegerSolution {
  IntVec particular;
  /// Kernel basis as rows, in row Hermite normal form with positive pivots.
  IntMatrix kernel;
};

/// All integer x with A x = b, or nullopt when there is none. `cols` gives the
/// number of unknowns (needed when A has no rows).
std::optional<IntegerSolution> integer_solve(const RatMatrix& a, const RatVec& b, std::size_t cols);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_rows(IntMatrix rows);

/// Unimodular U (columns) whose last column is the primitive vector x.
IntMatrix unimodular_completion(const IntVec& x);

Integer gcd_of(const IntVec& x);

}  // namespace latproj
