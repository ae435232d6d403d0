#pragma once

// Lattices with exact bases, duals, membership, shells and sublattices.

#include <optional>
#include <stdexcept>
#include <vector>

#include "latproj/intlinalg.hpp"
#include "latproj/linalg.hpp"

namespace latproj {

class LatticeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Lattice {
public:
  Lattice() = default;
  /// Basis vectors are columns of the generator matrix; each has length dim.
  /// Throws LatticeError when they are dependent or of the wrong length.
  Lattice(std::size_t dim, std::vector<Vec> basis);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool full_rank() const { return rank() == dim_; }
  const std::vector<Vec>& basis() const { return basis_; }
  /// dim x rank matrix B.
  Matrix generator() const { return Matrix::from_columns(basis_, dim_); }
  Matrix gram() const;

  /// Point with integer coordinates x.
  Vec point(const IntVec& x) const;

private:
  std::size_t dim_ = 0;
  std::vector<Vec> basis_;
};

/// Basis B^{-T}; requires full rank.
Lattice dual_lattice(const Lattice& l);

/// Integer coordinates of v, when v lies in the lattice.
std::optional<IntVec> member(const Lattice& l, const Vec& v);

/// All lattice vectors of squared norm exactly r2, in canonical order.
std::vector<Vec> shell(const Lattice& l, const QuadScalar& r2);

/// {v in L : last coordinate 0}, as a sublattice in the same dimension.
Lattice intersect_last_coord_zero(const Lattice& l);

/// {v in L : all but the last coordinate 0}; a generator, if any, has a
/// positive last coordinate.
Lattice axis_sublattice(const Lattice& l);

/// Lattice spanned by P(b) for each basis vector b (last coordinate dropped).
Lattice project_lattice(const Lattice& l);

/// Same dimension, same rank and mutual membership of bases.
bool same_lattice(const Lattice& a, const Lattice& b);

/// Solves for integer x with F(B x) = target, where F picks `rows` of B x;
/// each field-valued equation contributes four rational ones.
std::optional<IntegerSolution> solve_in_lattice(const Lattice& l, const std::vector<std::size_t>& rows,
                                                const Vec& target);

}  // namespace latproj
