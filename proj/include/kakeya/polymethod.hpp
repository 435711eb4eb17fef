#ifndef KAKEYA_POLYMETHOD_HPP
#define KAKEYA_POLYMETHOD_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/construction.hpp"
#include "kakeya/scalar.hpp"

namespace kakeya {

// Exponent tuple j in (Z_{>=0})^n.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}  // NOLINT
  MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}

  std::size_t size() const noexcept { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return e_; }
  unsigned weight() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
  std::vector<unsigned> e_;
};

// All j in N^n with wt(j) == w, in lexicographically descending order.
std::vector<MultiIndex> indices_of_weight(std::size_t n, unsigned w);
// Monomials of total degree <= deg in graded order: by degree, then lex descending.
std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned deg);

// Sparse polynomial in K[X_1..X_n]; no zero coefficients are stored.
class Poly {
public:
  static constexpr int zero_degree = std::numeric_limits<int>::min();

  Poly(const FieldSpec& field, std::size_t n) : field_(field), n_(n) {}

  static Poly constant(const FieldSpec& field, std::size_t n, const Scalar& c);
  static Poly variable(const FieldSpec& field, std::size_t n, std::size_t i);
  static Poly monomial(const FieldSpec& field, const MultiIndex& e, const Scalar& c);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return n_; }
  const std::map<MultiIndex, Scalar>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const MultiIndex& e) const;

  void add_term(const MultiIndex& e, const Scalar& c);

  Scalar evaluate(const Vector& point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);

  std::string str() const;

private:
  void require_compatible(const Poly& o) const;

  FieldSpec field_;
  std::size_t n_;
  std::map<MultiIndex, Scalar> terms_;
};

Poly pow(const Poly& p, unsigned k);

Poly hasse_derivative(const Poly& f, const MultiIndex& j);
// Largest m with every Hasse derivative of weight <= m-1 vanishing at u; capped at deg f + 1.
unsigned multiplicity_at(const Poly& f, const Vector& u);
Poly top_part(const Poly& f);
// f(u + lambda v) as a polynomial in the single variable lambda.
Poly restrict_to_line(const Poly& f, const Vector& u, const Vector& v);

// Basis of the polynomials of degree <= deg_bound vanishing to multiplicity >= mult at
// every point of S, from the exact nullspace of the Hasse constraint system.
std::vector<Poly> vanishing_space(const std::vector<Vector>& S, unsigned deg_bound, unsigned mult,
                                  std::size_t n, const FieldSpec& field);

// min over D of multiplicity_at(f_hom, representative). Any scalar multiple of a
// representative gives the same value because Hasse derivatives of a homogeneous
// polynomial are homogeneous.
unsigned direction_multiplicity(const Poly& f_hom, const std::vector<Vector>& D);

// The homogeneous generator prod_{a in A} (X_i - a X_n) of the grid ideal (i is 0-based).
Poly grid_generator(const FieldSpec& field, std::size_t n, std::size_t i,
                    const std::vector<Scalar>& A);

struct BoundReport {
  std::uint64_t N = 0, n = 0;
  std::uint64_t r_min = 0, r_max = 0;
  std::uint64_t best_r = 0;
  Rational bound;
  Rational limit;  // (N/2)^n
  std::vector<Rational> values;  // bound at r = r_min..r_max
};

Rational grid_bound_value(std::uint64_t N, std::uint64_t n, std::uint64_t r);
BoundReport bound_grid(std::uint64_t N, std::uint64_t n, std::uint64_t r);
BoundReport bound_best(std::uint64_t N, std::uint64_t n, std::uint64_t r_max = 64);

struct Attestation {
  Vector point;
  unsigned multiplicity = 0;
  bool ok = false;
};

struct Certificate {
  enum class Verdict { pass, pass_vacuous, fail };
  std::uint64_t r = 0;
  std::size_t n = 0, N = 0;
  std::size_t point_count = 0, direction_count = 0;
  BigInt equation_count;  // binom(n+2r-2, n) |S|
  BigInt unknown_count;   // binom(n+rN-1, n)
  bool forced = false;    // equation_count < unknown_count
  std::size_t basis_dimension = 0;
  std::size_t basis_checked = 0;
  std::optional<Poly> f;
  std::vector<Attestation> s_attestations;
  std::vector<Attestation> d_attestations;
  Verdict verdict = Verdict::fail;
  std::string detail;
};

std::string to_string(Certificate::Verdict v);

// Affine coordinates (first n entries after scaling X_{n+1} to 1) of the points of K,
// and the first n coordinates of its directions.
std::vector<Vector> affine_points(const KakeyaSet& K);
std::vector<Vector> direction_vectors(const KakeyaSet& K);

Certificate certify_theorem6(const KakeyaSet& K, std::uint64_t r);

} // namespace kakeya

#endif // KAKEYA_POLYMETHOD_HPP
