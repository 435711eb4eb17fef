#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace kakeya;
using testing::Gen;

namespace {

long long euclid_inverse(long long a, long long p) {
  long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return ((s0 % p) + p) % p;
}

BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

} // namespace

TEST_CASE("prime field arithmetic") {
  const auto f7 = FieldSpec::prime(7);
  CHECK(field_op(Scalar(f7, 4), Scalar(f7, 5), FieldOp::add) == Scalar(f7, 2));
  CHECK(field_op(Scalar(f7, 3), Scalar(f7, 3), FieldOp::div).is_one());
  CHECK(field_op(Scalar(f7, 1), Scalar(f7, 3), FieldOp::div).residue() == 5);
  CHECK(Scalar(f7, -1).residue() == 6);
  CHECK(scalar_eq(Scalar(f7, 8), Scalar(f7, 1)));
}

TEST_CASE("inverse agrees with extended Euclid") {
  for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 101ULL, 1000003ULL}) {
    const auto f = FieldSpec::prime(p);
    for (long long a = 1; a < static_cast<long long>(std::min<std::uint64_t>(p, 300)); ++a)
      CHECK(Scalar(f, a).inverse().residue() == static_cast<std::uint64_t>(euclid_inverse(a, static_cast<long long>(p))));
  }
}

TEST_CASE("rationals and reals") {
  const auto q = FieldSpec::rational();
  CHECK(scalar_eq(Scalar(q, Rational(2, 4)), Scalar(q, Rational(1, 2))));
  CHECK(Scalar(q, Rational(2, 4)).to_string() == "1/2");
  CHECK(Scalar(q, 3).to_string() == "3/1");
  CHECK(Scalar(q, Rational(-6, 4)).to_string() == "-3/2");

  const auto r = FieldSpec::real();
  CHECK(scalar_eq(Scalar::from_double(r, 0.3), Scalar::from_double(r, 0.3 + 1e-12)));
  CHECK_FALSE(scalar_eq(Scalar::from_double(r, 0.3), Scalar::from_double(r, 0.3 + 1e-6)));
  CHECK(Scalar::from_double(r, 0.1).to_string() == "0.1");
  CHECK(Scalar::from_double(r, 1e-12).is_zero());
}

TEST_CASE("field specs") {
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  try {
    FieldSpec::prime(1);
    FAIL("expected UnsupportedField");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedField);
  }
  CHECK(FieldSpec::prime(7) == FieldSpec::prime(7));
  CHECK_FALSE(FieldSpec::prime(7) == FieldSpec::prime(11));
  CHECK(FieldSpec::real().tolerance() == doctest::Approx(1e-9));
}

TEST_CASE("errors") {
  const auto f7 = FieldSpec::prime(7);
  const auto q = FieldSpec::rational();
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of([&] { return Scalar(f7, 3) / Scalar(f7, 7); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { return Scalar(q, 0).inverse(); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { return Scalar(f7, 1) + Scalar(q, 1); }) == ErrorCode::FieldMismatch);
  CHECK(code_of([&] { return Scalar::parse(q, "1/0"); }) == ErrorCode::DivisionByZero);
  CHECK_THROWS_AS(Scalar::parse(q, "abc"), Error);
}

TEST_CASE("parse and print round trip") {
  Gen g(11);
  for (const auto& f : {FieldSpec::prime(101), FieldSpec::rational(), FieldSpec::real()}) {
    for (int i = 0; i < 200; ++i) {
      Scalar x = g.scalar(f);
      Scalar y = Scalar::parse(f, x.to_string());
      CHECK(x == y);
      CHECK(y.to_string() == x.to_string());
    }
  }
  CHECK(Scalar::parse(FieldSpec::prime(7), "3/2").residue() == 5);
}

TEST_CASE("binomial") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(0, 0) == 1);
  for (unsigned a = 0; a <= 60; ++a)
    for (unsigned b = 0; b <= a; ++b)
      CHECK(binomial(a, b) == factorial(a) / (factorial(b) * factorial(a - b)));
}

TEST_CASE("Pascal's rule up to 200") {
  for (unsigned a = 1; a <= 200; ++a)
    for (unsigned b = 1; b <= a; ++b)
      REQUIRE(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("field axioms on random samples") {
  Gen g(2024);
  for (const auto& f : {FieldSpec::prime(2), FieldSpec::prime(5), FieldSpec::prime(101),
                        FieldSpec::prime(4294967291ULL), FieldSpec::rational()}) {
    CAPTURE(f.describe());
    for (int i = 0; i < 300; ++i) {
      Scalar a = g.scalar(f), b = g.scalar(f), c = g.scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  Gen g(5);
  const auto q = FieldSpec::rational();
  for (int i = 0; i < 100; ++i) {
    Scalar x = g.scalar(q);
    Scalar y(q, x.rational());
    CHECK(y.to_string() == x.to_string());
  }
  const auto f = FieldSpec::prime(13);
  for (long long v = -40; v < 40; ++v) CHECK(Scalar(f, static_cast<long long>(Scalar(f, v).residue())) == Scalar(f, v));
}

TEST_CASE("rational power") {
  CHECK(power(Rational(7, 2), 3) == Rational(343, 8));
  CHECK(power(Rational(5), 0) == 1);
}
