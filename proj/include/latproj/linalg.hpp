#pragma once

// Dense vectors and matrices over Q(sqrt2, sqrt3).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latproj/qfield.hpp"

namespace latproj {

using Vec = std::vector<QuadScalar>;

QuadScalar dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const QuadScalar& s, const Vec& v);

/// The last coordinate, v_{|2} in the (x, y) split.
inline const QuadScalar& last_coord(const Vec& v) { return v.back(); }
/// Drops the last coordinate: P(x, y) = x.
Vec project(const Vec& v);
/// Appends a last coordinate: (x, z).
Vec extend(const Vec& x, const QuadScalar& z);

bool is_zero(const Vec& v);
std::vector<double> to_doubles(const Vec& v);

/// Real lexicographic order; coordinates compared by the sign of differences.
int compare(const Vec& a, const Vec& b);
struct CanonicalLess {
  bool operator()(const Vec& a, const Vec& b) const { return compare(a, b) < 0; }
};
/// Structural order on coordinates, for exact-equality containers only.
struct StructuralLess {
  bool operator()(const Vec& a, const Vec& b) const;
};

/// Parses a comma-separated list of scalar literals.
Vec parse_vector(std::string_view text);
std::string to_string(const Vec& v);

class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length `rows`).
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadScalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const QuadScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  std::vector<Vec> columns() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_identity() const;
  QuadScalar determinant() const;
  /// Inverse of a square nonsingular matrix; throws DivisionByZero otherwise.
  Matrix inverse() const;
  /// Rank over the field.
  std::size_t rank() const;
  /// The unique x with A x = b when A has full column rank; empty when the
  /// system is inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  /// Upper-left block of size (rows-1) x (cols-1).
  Matrix leading_block() const;

  const std::vector<QuadScalar>& data() const { return a_; }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<QuadScalar> a_;
};

/// Real lexicographic order on row-major entries.
int compare(const Matrix& a, const Matrix& b);
bool structural_less(const Matrix& a, const Matrix& b);

}  // namespace latproj
