#ifndef KAKEYA_TESTS_SUPPORT_HPP
#define KAKEYA_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "kakeya/polymethod.hpp"
#include "kakeya/scalar.hpp"

namespace testing {

using namespace kakeya;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long long>(n) - 1)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const FieldSpec& f) {
    switch (f.kind()) {
      case FieldSpec::Kind::prime:
        return Scalar(f, integer(0, static_cast<long long>(f.characteristic()) - 1));
      case FieldSpec::Kind::rational: {
        long long den = integer(1, 9);
        return Scalar(f, Rational(integer(-20, 20), den));
      }
      case FieldSpec::Kind::real:
        return Scalar::from_double(f, std::uniform_real_distribution<double>(-3.0, 3.0)(rng_));
    }
    return Scalar(f);
  }

  Scalar nonzero(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }

  Vector vector(const FieldSpec& f, std::size_t len) {
    Vector v;
    for (std::size_t i = 0; i < len; ++i) v.push_back(scalar(f));
    return v;
  }

  Vector nonzero_vector(const FieldSpec& f, std::size_t len) {
    for (;;) {
      Vector v = vector(f, len);
      for (const auto& x : v)
        if (!x.is_zero()) return v;
    }
  }

  MultiIndex exponent(std::size_t n, unsigned max_weight) {
    MultiIndex e(n);
    unsigned budget = static_cast<unsigned>(integer(0, max_weight));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      unsigned take = i + 1 == n ? budget : static_cast<unsigned>(integer(0, budget));
      e[i] = take;
      budget -= take;
    }
    return e;
  }

  Poly poly(const FieldSpec& f, std::size_t n, unsigned max_degree, std::size_t max_terms) {
    Poly p(f, n);
    const auto terms = index(max_terms) + 1;
    for (std::size_t t = 0; t < terms; ++t) p.add_term(exponent(n, max_degree), nonzero(f));
    return p;
  }

  Poly homogeneous(const FieldSpec& f, std::size_t n, unsigned degree, std::size_t max_terms) {
    Poly p(f, n);
    const auto all = indices_of_weight(n, degree);
    const auto terms = index(max_terms) + 1;
    for (std::size_t t = 0; t < terms; ++t) p.add_term(all[index(all.size())], nonzero(f));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

template <class Fn>
std::optional<ErrorCode> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Plain Gaussian elimination mod p on integer rows, kept apart from the library's.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    for (long long e = p - 2, b = m[rank][c]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long factor = m[r][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<long long> residues(const Vector& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(static_cast<long long>(x.residue()));
  return out;
}

inline Vector vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(f, x);
  return v;
}

} // namespace testing

#endif // KAKEYA_TESTS_SUPPORT_HPP
