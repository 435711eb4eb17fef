#include "kakeya/scalar.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace kakeya {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  // residues are multiplied in 128 bits, so p must fit in 64
  if (!is_prime(p))
    throw Error(ErrorCode::UnsupportedField, std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime, p, 0.0);
}

FieldSpec FieldSpec::real(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw Error(ErrorCode::InvalidInput, "real tolerance must be finite and >= 0");
  return FieldSpec(Kind::real, 0, tol);
}

std::string FieldSpec::describe() const {
  switch (kind_) {
    case Kind::prime: return "F_" + std::to_string(p_);
    case Kind::rational: return "Q";
    case Kind::real: {
      std::ostringstream os;
      os << "R(tol=" << tol_ << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

std::uint64_t reduce(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

} // namespace

namespace detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed 128-bit to avoid overflow of intermediate coefficients
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

} // namespace detail

using detail::inv_mod;
using detail::mul_mod;

Scalar::Scalar(const FieldSpec& field) : field_(field) {
  switch (field.kind()) {
    case FieldSpec::Kind::prime: value_ = std::uint64_t{0}; break;
    case FieldSpec::Kind::rational: value_ = Rational(0); break;
    case FieldSpec::Kind::real: value_ = 0.0; break;
  }
}

Scalar::Scalar(const FieldSpec& field, long long v) : Scalar(field, BigInt(v)) {}

Scalar::Scalar(const FieldSpec& field, const BigInt& v) : field_(field) {
  switch (field.kind()) {
    case FieldSpec::Kind::prime: value_ = reduce(v, field.characteristic()); break;
    case FieldSpec::Kind::rational: value_ = Rational(v); break;
    case FieldSpec::Kind::real: value_ = v.convert_to<double>(); break;
  }
}

Scalar::Scalar(const FieldSpec& field, const Rational& v) : field_(field) {
  switch (field.kind()) {
    case FieldSpec::Kind::prime: {
      std::uint64_t p = field.characteristic();
      std::uint64_t den = reduce(boost::multiprecision::denominator(v), p);
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod p");
      value_ = mul_mod(reduce(boost::multiprecision::numerator(v), p), inv_mod(den, p), p);
      break;
    }
    case FieldSpec::Kind::rational: value_ = v; break;
    case FieldSpec::Kind::real: value_ = v.convert_to<double>(); break;
  }
}

Scalar Scalar::from_double(const FieldSpec& f, double v) {
  if (f.kind() != FieldSpec::Kind::real)
    throw Error(ErrorCode::FieldMismatch, "floating value for exact field " + f.describe());
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidInput, "non-finite real scalar");
  Scalar s(f);
  s.value_ = v;
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  try {
    switch (f.kind()) {
      case FieldSpec::Kind::prime:
      case FieldSpec::Kind::rational: {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Scalar(f, BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
        return Scalar(f, Rational(num, den));
      }
      case FieldSpec::Kind::real: {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size())
          throw Error(ErrorCode::InvalidInput, "bad real scalar '" + text + "'");
        return from_double(f, v);
      }
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "bad scalar '" + text + "'");
  }
  throw Error(ErrorCode::InvalidInput, "bad scalar '" + text + "'");
}

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(value_); }
const Rational& Scalar::rational() const { return std::get<Rational>(value_); }
double Scalar::real() const { return std::get<double>(value_); }

double Scalar::to_double() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::prime: return static_cast<double>(residue());
    case FieldSpec::Kind::rational: return rational().convert_to<double>();
    case FieldSpec::Kind::real: return real();
  }
  return 0.0;
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::prime: return residue() == 0;
    case FieldSpec::Kind::rational: return rational() == 0;
    case FieldSpec::Kind::real: return std::abs(real()) <= field_.tolerance();
  }
  return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::FieldMismatch, field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  switch (field_.kind()) {
    case FieldSpec::Kind::prime: {
      std::uint64_t v = residue();
      r.value_ = v == 0 ? 0 : field_.characteristic() - v;
      break;
    }
    case FieldSpec::Kind::rational: r.value_ = Rational(-rational()); break;
    case FieldSpec::Kind::real: r.value_ = -real(); break;
  }
  return r;
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::prime: {
      std::uint64_t p = field_.characteristic();
      std::uint64_t a = residue(), b = o.residue();
      value_ = a >= p - b ? a - (p - b) : a + b;
      break;
    }
    case FieldSpec::Kind::rational: std::get<Rational>(value_) += o.rational(); break;
    case FieldSpec::Kind::real: std::get<double>(value_) += o.real(); break;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::prime:
      value_ = mul_mod(residue(), o.residue(), field_.characteristic());
      break;
    case FieldSpec::Kind::rational: std::get<Rational>(value_) *= o.rational(); break;
    case FieldSpec::Kind::real: std::get<double>(value_) *= o.real(); break;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by " + o.to_string());
  switch (field_.kind()) {
    case FieldSpec::Kind::prime:
      value_ = mul_mod(residue(), inv_mod(o.residue(), field_.characteristic()),
                       field_.characteristic());
      break;
    case FieldSpec::Kind::rational: std::get<Rational>(value_) /= o.rational(); break;
    case FieldSpec::Kind::real: std::get<double>(value_) /= o.real(); break;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  switch (a.field_.kind()) {
    case FieldSpec::Kind::prime: return a.residue() == b.residue();
    case FieldSpec::Kind::rational: return a.rational() == b.rational();
    case FieldSpec::Kind::real: return std::abs(a.real() - b.real()) <= a.field_.tolerance();
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::prime: return std::to_string(residue());
    case FieldSpec::Kind::rational: {
      const Rational& q = rational();
      return boost::multiprecision::numerator(q).str() + "/" +
             boost::multiprecision::denominator(q).str();
    }
    case FieldSpec::Kind::real: {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, real());
      return std::string(buf, ptr);
    }
  }
  return {};
}

Scalar field_op(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw Error(ErrorCode::InvalidInput, "unknown field op");
}

bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

Rational power(const Rational& base, unsigned exponent) {
  Rational r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  // r stays integral: after step i it equals C(a-b+i, i)
  for (std::uint64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

} // namespace kakeya
