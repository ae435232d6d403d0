#pragma once

// Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).
//
// Every element is stored by its rational coordinates over the basis
// {1, sqrt2, sqrt3, sqrt6}. The basis is linearly independent over Q, so the
// representation is unique and equality is coordinate-wise.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace latproj {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class PrecisionExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class QuadScalar {
public:
  /// Index of a coordinate in the basis {1, sqrt2, sqrt3, sqrt6}.
  enum Basis : int { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };

  QuadScalar() = default;
  QuadScalar(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(implicit)
  QuadScalar(const Rational& v) : c_{v, 0, 0, 0} {}  // NOLINT(implicit)
  QuadScalar(Rational c1, Rational c2, Rational c3, Rational c6)
      : c_{std::move(c1), std::move(c2), std::move(c3), std::move(c6)} {}

  static QuadScalar sqrt2() { return {0, 1, 0, 0}; }
  static QuadScalar sqrt3() { return {0, 0, 1, 0}; }
  static QuadScalar sqrt6() { return {0, 0, 0, 1}; }
  static QuadScalar ratio(long num, long den) { return make_rational(num, den); }

  const Rational& coord(Basis b) const { return c_[b]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const;
  /// True when the sqrt2, sqrt3 and sqrt6 coordinates all vanish.
  bool is_rational() const;
  /// The integer value when the element is a rational integer.
  std::optional<Integer> as_integer() const;

  /// Exact sign of the real embedding with positive square roots.
  int sign() const;
  double to_double() const;
  /// Largest integer n with n <= value.
  Integer floor() const;
  QuadScalar abs() const { return sign() < 0 ? -*this : *this; }
  QuadScalar inverse() const;

  /// Canonical literal in the scalar grammar, e.g. "1/2 + 1/6*sqrt3".
  std::string to_string() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b);
  friend QuadScalar operator/(const QuadScalar& a, const QuadScalar& b) { return a * b.inverse(); }
  friend bool operator==(const QuadScalar& a, const QuadScalar& b) { return a.c_ == b.c_; }

private:
  std::array<Rational, 4> c_{};
};

// Named operations matching the module contract.
inline QuadScalar qs_add(const QuadScalar& a, const QuadScalar& b) { return a + b; }
inline QuadScalar qs_mul(const QuadScalar& a, const QuadScalar& b) { return a * b; }
inline QuadScalar qs_inv(const QuadScalar& a) { return a.inverse(); }
inline int qs_sign(const QuadScalar& a) { return a.sign(); }
inline std::optional<Integer> qs_is_integer(const QuadScalar& a) { return a.as_integer(); }

/// Three-way comparison of real values (-1, 0, +1).
int compare(const QuadScalar& a, const QuadScalar& b);

/// Structural order on coordinates; cheap, but unrelated to real order.
bool structural_less(const QuadScalar& a, const QuadScalar& b);

/// Parses `scalar := term (('+'|'-') term)*` with
/// `term := rational ('*'? sqrtN)? | sqrtN` and `rational := int ('/' posint)?`.
QuadScalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const QuadScalar& a);

/// Interval-refinement depth cap, in bits, read once from LATPROJ_PRECISION.
int precision_cap_bits();

}  // namespace latproj
