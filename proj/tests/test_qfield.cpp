#include <doctest.h>

#include <random>

#include "latproj/qfield.hpp"

using namespace latproj;

namespace {

QuadScalar q(const char* s) { return parse_scalar(s); }

// Sign of x + y*sqrt(n) for rationals x, y, decided by squaring.
int sign_quadratic(const Rational& x, const Rational& y, long n) {
  int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  Rational d = x * x - n * y * y;
  return sx * sgn(d);
}

// Independent sign oracle: a = p + sqrt3*q with p, q in Q(sqrt2).
int oracle_sign(const QuadScalar& a) {
  const auto& c = a.coords();
  // p = c1 + c2 sqrt2, q = c3 + c6 sqrt2.
  int sp = sign_quadratic(c[0], c[1], 2);
  int sq = sign_quadratic(c[2], c[3], 2);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // sign(p^2 - 3 q^2), with p^2 = c1^2 + 2c2^2 + 2c1c2 sqrt2 and q^2 likewise.
  Rational x = c[0] * c[0] + 2 * c[1] * c[1] - 3 * (c[2] * c[2] + 2 * c[3] * c[3]);
  Rational y = 2 * c[0] * c[1] - 3 * 2 * c[2] * c[3];
  return sp * sign_quadratic(x, y, 2);
}

mpf_class high_precision(const QuadScalar& a) {
  mpf_set_default_prec(512);
  mpf_class s2 = sqrt(mpf_class(2)), s3 = sqrt(mpf_class(3)), s6 = sqrt(mpf_class(6));
  const auto& c = a.coords();
  return mpf_class(c[0]) + mpf_class(c[1]) * s2 + mpf_class(c[2]) * s3 + mpf_class(c[3]) * s6;
}

QuadScalar random_scalar(std::mt19937_64& rng, long range, long den_max) {
  std::uniform_int_distribution<long> num(-range, range), den(1, den_max);
  auto r = [&] { return make_rational(num(rng), den(rng)); };
  return {r(), r(), r(), r()};
}

}  // namespace

TEST_SUITE("qfield") {
  TEST_CASE("addition examples") {
    CHECK(qs_add(q("1 + 1*sqrt2"), q("-1*sqrt2")) == QuadScalar(1));
    CHECK(qs_add(QuadScalar::sqrt2(), QuadScalar::sqrt3()) == QuadScalar(0, 1, 1, 0));
    CHECK(qs_add(q("1/2 + 1/6*sqrt3"), q("1/2 - 1/6*sqrt3")) == QuadScalar(1));
  }

  TEST_CASE("multiplication examples") {
    CHECK(qs_mul(QuadScalar::sqrt2(), QuadScalar::sqrt3()) == QuadScalar::sqrt6());
    CHECK(qs_mul(q("1+1*sqrt2"), q("1-1*sqrt2")) == QuadScalar(-1));
    QuadScalar third = q("1/6*sqrt6");
    CHECK(qs_mul(third, third) == QuadScalar::ratio(1, 6));
    CHECK(QuadScalar::sqrt6() * QuadScalar::sqrt6() == QuadScalar(6));
    CHECK(QuadScalar::sqrt2() * QuadScalar::sqrt6() == QuadScalar(2) * QuadScalar::sqrt3());
    CHECK(QuadScalar::sqrt3() * QuadScalar::sqrt6() == QuadScalar(3) * QuadScalar::sqrt2());
  }

  TEST_CASE("inverse examples") {
    CHECK(qs_inv(QuadScalar::sqrt6()) == q("1/6*sqrt6"));
    CHECK(qs_inv(QuadScalar(2)) == QuadScalar::ratio(1, 2));
    CHECK(qs_inv(q("1+sqrt2")) == q("-1+sqrt2"));
    CHECK(q("1+sqrt2") * q("-1+sqrt2") == QuadScalar(1));
    CHECK_THROWS_AS(qs_inv(QuadScalar()), DivisionByZero);
    CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), DivisionByZero);
  }

  TEST_CASE("sign examples") {
    CHECK(qs_sign(QuadScalar()) == 0);
    CHECK(qs_sign(q("sqrt3 - sqrt2")) == 1);
    QuadScalar a = q("1 + sqrt2 + sqrt3 - sqrt6");
    CHECK(qs_sign(a) == 1);
    CHECK(oracle_sign(a) == 1);
    CHECK(a.to_double() == doctest::Approx(1.697).epsilon(1e-3));
    CHECK(qs_sign(q("-1/1000000*sqrt2")) == -1);
  }

  TEST_CASE("sign of near-cancelling elements") {
    // Convergents of sqrt2 with p^2 - 2q^2 = 1 lie just above it.
    CHECK(qs_sign(q("sqrt2 - 99/70")) == oracle_sign(q("sqrt2 - 99/70")));
    CHECK(qs_sign(q("sqrt2 - 99/70")) == -1);
    CHECK(qs_sign(q("665857/470832 - sqrt2")) == 1);
    CHECK(qs_sign(q("sqrt6 - sqrt2 - sqrt3 + 3/4")) == oracle_sign(q("sqrt6 - sqrt2 - sqrt3 + 3/4")));
    QuadScalar tiny = q("5 - 2*sqrt6");  // 1/(5 + 2 sqrt6) ~ 0.101
    QuadScalar t = tiny;
    for (int i = 0; i < 6; ++i) t *= tiny;  // ~1e-7
    CHECK(qs_sign(t) == 1);
    CHECK(qs_sign(-t) == -1);
  }

  TEST_CASE("integer test examples") {
    CHECK(qs_is_integer(QuadScalar(3)) == Integer(3));
    CHECK(qs_is_integer(QuadScalar::sqrt2() * q("1/2*sqrt2")) == Integer(1));
    CHECK_FALSE(qs_is_integer(QuadScalar::ratio(1, 2)).has_value());
    CHECK_FALSE(qs_is_integer(QuadScalar::sqrt2()).has_value());
  }

  TEST_CASE("floor") {
    CHECK(q("sqrt2").floor() == 1);
    CHECK(q("-sqrt2").floor() == -2);
    CHECK(q("7/2").floor() == 3);
    CHECK(q("-7/2").floor() == -4);
    CHECK(q("2*sqrt6").floor() == 4);
    CHECK(q("3 - sqrt2 - sqrt3 + sqrt6").floor() == 2);  // 2.303...
  }

  TEST_CASE("literal grammar") {
    CHECK(q("1/2 + 1/6*sqrt3") == QuadScalar(Rational(1, 2), 0, Rational(1, 6), 0));
    CHECK(q("1/4*sqrt6") == QuadScalar(0, 0, 0, Rational(1, 4)));
    CHECK(q("-3") == QuadScalar(-3));
    CHECK(q("2 sqrt2") == QuadScalar(0, 2, 0, 0));
    CHECK(q(" 4/6 ") == QuadScalar::ratio(2, 3));
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK_THROWS_AS(q("sqrt5"), ParseError);
    CHECK_THROWS_AS(q("1*"), ParseError);
    CHECK_THROWS_AS(q("1.5"), ParseError);
    CHECK_THROWS_AS(q("1 2"), ParseError);
  }

  TEST_CASE("canonical text round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
      QuadScalar a = random_scalar(rng, 50, 12);
      CHECK(parse_scalar(a.to_string()) == a);
    }
    CHECK(QuadScalar().to_string() == "0");
    CHECK(q("1/2 + 1/6*sqrt3").to_string() == "1/2 + 1/6*sqrt3");
    CHECK(q("-1/3*sqrt6").to_string() == "-1/3*sqrt6");
  }

  TEST_CASE("rationals stay reduced") {
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    QuadScalar a = q("2/4*sqrt2") * QuadScalar(2);
    CHECK(a.coord(QuadScalar::kSqrt2).get_den() == 1);
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
      QuadScalar a = random_scalar(rng, 20, 9), b = random_scalar(rng, 20, 9), c = random_scalar(rng, 20, 9);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (b - a) == b);
      if (!a.is_zero()) CHECK(a * a.inverse() == QuadScalar(1));
    }
  }

  TEST_CASE("sign is multiplicative and matches the oracles") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
      QuadScalar a = random_scalar(rng, 30, 7), b = random_scalar(rng, 30, 7);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(qs_sign(a) * qs_sign(b) == qs_sign(a * b));
      CHECK(qs_sign(a) == oracle_sign(a));
    }
  }

  TEST_CASE("sign agrees with high-precision evaluation on 10^4 samples") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coord(-100, 100);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
      QuadScalar a(Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng)));
      mpf_class v = high_precision(a);
      int expected = a.is_zero() ? 0 : sgn(v);
      if (qs_sign(a) != expected) ++mismatches;
    }
    CHECK(mismatches == 0);
  }

  TEST_CASE("compare orders by real value") {
    CHECK(compare(q("sqrt2"), q("sqrt3")) < 0);
    CHECK(compare(q("sqrt6"), q("sqrt2 + 1")) > 0);
    CHECK(compare(q("1/2*sqrt2"), q("1/3*sqrt6 - 1/10")) != 0);
    CHECK(compare(q("1/2*sqrt2"), q("1/2*sqrt2")) == 0);
  }
}
