#include "latproj/qfield.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace latproj {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool QuadScalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool QuadScalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

std::optional<Integer> QuadScalar::as_integer() const {
  if (!is_rational() || c_[0].get_den() != 1) return std::nullopt;
  return c_[0].get_num();
}

QuadScalar QuadScalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
  const auto& x = a.c_;
  const auto& y = b.c_;
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2.
  Rational one = x[0] * y[0] + 2 * x[1] * y[1] + 3 * x[2] * y[2] + 6 * x[3] * y[3];
  Rational s2 = x[0] * y[1] + x[1] * y[0] + 3 * (x[2] * y[3] + x[3] * y[2]);
  Rational s3 = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
  Rational s6 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  return {std::move(one), std::move(s2), std::move(s3), std::move(s6)};
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) { return *this = *this * o; }

QuadScalar QuadScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt2,sqrt3)");
  // Column j of the multiplication matrix is this * (basis element j); solve
  // M y = e_0 by Gauss-Jordan over Q.
  const std::array<QuadScalar, 4> basis = {QuadScalar(1), sqrt2(), sqrt3(), sqrt6()};
  std::array<std::array<Rational, 5>, 4> m;
  for (int j = 0; j < 4; ++j) {
    QuadScalar col = *this * basis[j];
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  for (int i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;  // nonsingular since the field has no zero divisors
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (int k = col; k < 5; ++k) m[col][k] *= inv;
    for (int i = 0; i < 4; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int k = col; k < 5; ++k) m[i][k] -= f * m[col][k];
    }
  }
  return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval scale(const Rational& c, const Interval& iv) {
  if (c >= 0) return {c * iv.lo, c * iv.hi};
  return {c * iv.hi, c * iv.lo};
}

// Continued-fraction convergents of sqrt(n) for non-square n. Consecutive
// convergents bracket sqrt(n), so (p_k/q_k, p_{k+1}/q_{k+1}) is an enclosure.
class SqrtConvergents {
public:
  explicit SqrtConvergents(long n) : n_(n) {
    a0_ = static_cast<long>(std::floor(std::sqrt(static_cast<double>(n))));
    p_ = {Integer(a0_)};
    q_ = {Integer(1)};
    m_ = 0;
    d_ = 1;
    a_ = a0_;
  }

  Interval enclosure(std::size_t depth) {
    std::lock_guard<std::mutex> lock(mu_);
    while (p_.size() < depth + 2) step();
    Rational x = make_rational(p_[depth], q_[depth]);
    Rational y = make_rational(p_[depth + 1], q_[depth + 1]);
    return x < y ? Interval{x, y} : Interval{y, x};
  }

  std::size_t bits_at(std::size_t depth) {
    std::lock_guard<std::mutex> lock(mu_);
    while (q_.size() < depth + 2) step();
    return mpz_sizeinbase(q_[depth].get_mpz_t(), 2);
  }

private:
  void step() {
    m_ = d_ * a_ - m_;
    d_ = (n_ - m_ * m_) / d_;
    a_ = (a0_ + m_) / d_;
    const std::size_t k = p_.size();
    Integer pm2 = k >= 2 ? p_[k - 2] : Integer(1);
    Integer qm2 = k >= 2 ? q_[k - 2] : Integer(0);
    p_.push_back(a_ * p_[k - 1] + pm2);
    q_.push_back(a_ * q_[k - 1] + qm2);
  }

  long n_, a0_, m_, d_, a_;
  std::vector<Integer> p_, q_;
  std::mutex mu_;
};

SqrtConvergents& convergents(long n) {
  static SqrtConvergents s2(2), s3(3);
  return n == 2 ? s2 : s3;
}

}  // namespace

int precision_cap_bits() {
  static const int cap = [] {
    if (const char* env = std::getenv("LATPROJ_PRECISION")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 256;
  }();
  return cap;
}

int QuadScalar::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(c_[0]);
  const int cap = precision_cap_bits();
  for (std::size_t depth = 4;; depth *= 2) {
    Interval r2 = convergents(2).enclosure(depth);
    Interval r3 = convergents(3).enclosure(depth);
    Interval r6{r2.lo * r3.lo, r2.hi * r3.hi};
    Interval t1 = scale(c_[1], r2), t2 = scale(c_[2], r3), t3 = scale(c_[3], r6);
    Rational lo = c_[0] + t1.lo + t2.lo + t3.lo;
    Rational hi = c_[0] + t1.hi + t2.hi + t3.hi;
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (static_cast<int>(convergents(2).bits_at(depth)) > cap) {
      throw PrecisionExhausted("sign undecided within " + std::to_string(cap) +
                               " bits; raise LATPROJ_PRECISION");
    }
  }
}

double QuadScalar::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(3.0) +
         c_[3].get_d() * std::sqrt(6.0);
}

Integer QuadScalar::floor() const {
  if (is_rational()) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), c_[0].get_num_mpz_t(), c_[0].get_den_mpz_t());
    return q;
  }
  Integer n(std::floor(to_double()));
  while (compare(QuadScalar(Rational(n)), *this) > 0) n -= 1;
  while (compare(QuadScalar(Rational(n + 1)), *this) <= 0) n += 1;
  return n;
}

int compare(const QuadScalar& a, const QuadScalar& b) {
  if (a == b) return 0;
  return (a - b).sign();
}

bool structural_less(const QuadScalar& a, const QuadScalar& b) {
  for (int i = 0; i < 4; ++i) {
    const auto& x = a.coords()[i];
    const auto& y = b.coords()[i];
    if (x != y) return x < y;
  }
  return false;
}

std::string QuadScalar::to_string() const {
  static const char* kSuffix[4] = {"", "*sqrt2", "*sqrt3", "*sqrt6"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = ::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    out += mag.get_str();
    out += kSuffix[i];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& a) { return os << a.to_string(); }

namespace {

class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QuadScalar parse() {
    skip_ws();
    if (at_end()) fail("empty scalar");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = (get() == '-') ? -1 : 1;
      skip_ws();
    }
    QuadScalar acc = term();
    if (sign < 0) acc = -acc;
    skip_ws();
    while (!at_end()) {
      char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      skip_ws();
      QuadScalar t = term();
      if (op == '+') acc += t; else acc -= t;
      skip_ws();
    }
    return acc;
  }

private:
  QuadScalar term() {
    if (peek_sqrt()) return radical();
    Rational coeff = rational();
    skip_ws();
    bool star = false;
    if (!at_end() && peek() == '*') {
      get();
      skip_ws();
      star = true;
    }
    if (peek_sqrt()) return QuadScalar(coeff) * radical();
    if (star) fail("expected sqrt2, sqrt3 or sqrt6 after '*'");
    return QuadScalar(coeff);
  }

  bool peek_sqrt() const { return s_.substr(pos_, 4) == "sqrt"; }

  QuadScalar radical() {
    pos_ += 4;
    if (at_end()) fail("truncated radical");
    switch (get()) {
      case '2': return QuadScalar::sqrt2();
      case '3': return QuadScalar::sqrt3();
      case '6': return QuadScalar::sqrt6();
      default: fail("only sqrt2, sqrt3 and sqrt6 are supported");
    }
  }

  Rational rational() {
    Integer num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      Integer den = digits();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad scalar literal \"" + std::string(s_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace latproj
