#ifndef KAKEYA_SCALAR_HPP
#define KAKEYA_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "kakeya/error.hpp"

namespace kakeya {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double default_real_tolerance = 1e-9;

// The field K the geometry lives over: F_p, Q, or R with an absolute tolerance.
class FieldSpec {
public:
  enum class Kind { prime, rational, real };

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec(Kind::rational, 0, 0.0); }
  static FieldSpec real(double tol = default_real_tolerance);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  double tolerance() const noexcept { return tol_; }
  bool is_exact() const noexcept { return kind_ != Kind::real; }

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.tol_ == b.tol_;
  }

private:
  FieldSpec(Kind k, std::uint64_t p, double tol) : kind_(k), p_(p), tol_(tol) {}

  Kind kind_;
  std::uint64_t p_;
  double tol_;
};

bool is_prime(std::uint64_t p);

// Element of a FieldSpec, always held in canonical form.
class Scalar {
public:
  using Value = std::variant<std::uint64_t, Rational, double>;

  explicit Scalar(const FieldSpec& field);  // zero
  Scalar(const FieldSpec& field, long long v);
  Scalar(const FieldSpec& field, const BigInt& v);
  Scalar(const FieldSpec& field, const Rational& v);

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1LL); }
  static Scalar from_double(const FieldSpec& f, double v);
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const noexcept { return field_; }
  const Value& value() const noexcept { return value_; }

  std::uint64_t residue() const;
  const Rational& rational() const;
  double real() const;
  // Best-effort numeric view; exact for rational/real up to double rounding.
  double to_double() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact equality for prime/rational, |a-b| <= tol for real.
  friend bool operator==(const Scalar& a, const Scalar& b);

  // prime -> decimal residue, rational -> "num/den", real -> shortest round-trip decimal.
  std::string to_string() const;

private:
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  Value value_;
};

enum class FieldOp { add, sub, mul, div };
Scalar field_op(const Scalar& a, const Scalar& b, FieldOp op);
bool scalar_eq(const Scalar& a, const Scalar& b);

namespace detail {
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
} // namespace detail

Rational power(const Rational& base, unsigned exponent);

// Exact binomial coefficient; zero when b > a.
BigInt binomial(std::uint64_t a, std::uint64_t b);

} // namespace kakeya

#endif // KAKEYA_SCALAR_HPP
