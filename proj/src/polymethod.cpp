#include "kakeya/polymethod.hpp"

#include <algorithm>
#include <numeric>

#include "kakeya/linalg.hpp"

namespace kakeya {

unsigned MultiIndex::weight() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

std::vector<MultiIndex> indices_of_weight(std::size_t n, unsigned w) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (w == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  for (unsigned first = w + 1; first-- > 0;) {
    for (const auto& rest : indices_of_weight(n - 1, w - first)) {
      std::vector<unsigned> e{first};
      e.insert(e.end(), rest.exponents().begin(), rest.exponents().end());
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned deg) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= deg; ++d) {
    auto layer = indices_of_weight(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Poly Poly::constant(const FieldSpec& field, std::size_t n, const Scalar& c) {
  Poly p(field, n);
  p.add_term(MultiIndex(n), c);
  return p;
}

Poly Poly::variable(const FieldSpec& field, std::size_t n, std::size_t i) {
  MultiIndex e(n);
  e[i] = 1;
  return monomial(field, e, Scalar::one(field));
}

Poly Poly::monomial(const FieldSpec& field, const MultiIndex& e, const Scalar& c) {
  Poly p(field, e.size());
  p.add_term(e, c);
  return p;
}

int Poly::degree() const {
  int d = zero_degree;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.weight()));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [w](const auto& t) { return t.first.weight() == w; });
}

Scalar Poly::coefficient(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::add_term(const MultiIndex& e, const Scalar& c) {
  if (e.size() != n_) throw Error(ErrorCode::DimensionMismatch, "monomial arity");
  if (!(c.field() == field_)) throw Error(ErrorCode::FieldMismatch, "coefficient field");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Poly::evaluate(const Vector& point) const {
  if (point.size() != n_) throw Error(ErrorCode::DimensionMismatch, "evaluation point arity");
  Scalar sum = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

void Poly::require_compatible(const Poly& o) const {
  if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "polynomial arity");
  if (!(o.field_ == field_)) throw Error(ErrorCode::FieldMismatch, "polynomial fields");
}

Poly& Poly::operator+=(const Poly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  Poly r(a.field_, a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiIndex e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
  Poly r(p.field_, p.n_);
  for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_ || !(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += it->second.to_string();
    for (std::size_t i = 0; i < n_; ++i) {
      if (it->first[i] == 0) continue;
      s += "*X" + std::to_string(i + 1);
      if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
    }
  }
  return s;
}

Poly pow(const Poly& p, unsigned k) {
  Poly r = Poly::constant(p.field(), p.nvars(), Scalar::one(p.field()));
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

Poly hasse_derivative(const Poly& f, const MultiIndex& j) {
  if (j.size() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "multi-index arity");
  Poly r(f.field(), f.nvars());
  for (const auto& [c, coeff] : f.terms()) {
    BigInt factor = 1;
    MultiIndex e(f.nvars());
    bool vanishes = false;
    for (std::size_t i = 0; i < f.nvars() && !vanishes; ++i) {
      if (c[i] < j[i]) {
        vanishes = true;
        break;
      }
      factor *= binomial(c[i], j[i]);
      e[i] = c[i] - j[i];
    }
    if (!vanishes) r.add_term(e, coeff * Scalar(f.field(), factor));
  }
  return r;
}

unsigned multiplicity_at(const Poly& f, const Vector& u) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial");
  if (u.size() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "point arity");
  const auto cap = static_cast<unsigned>(f.degree()) + 1;
  for (unsigned w = 0; w < cap; ++w)
    for (const auto& j : indices_of_weight(f.nvars(), w))
      if (!hasse_derivative(f, j).evaluate(u).is_zero()) return w;
  return cap;
}

Poly top_part(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "top part of the zero polynomial");
  const auto d = static_cast<unsigned>(f.degree());
  Poly r(f.field(), f.nvars());
  for (const auto& [e, c] : f.terms())
    if (e.weight() == d) r.add_term(e, c);
  return r;
}

Poly restrict_to_line(const Poly& f, const Vector& u, const Vector& v) {
  if (u.size() != f.nvars() || v.size() != f.nvars())
    throw Error(ErrorCode::DimensionMismatch, "line arity");
  const FieldSpec& fs = f.field();
  std::vector<Poly> coords;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Poly l = Poly::constant(fs, 1, u[i]);
    l.add_term(MultiIndex{1}, v[i]);
    coords.push_back(std::move(l));
  }
  Poly r(fs, 1);
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(fs, 1, c);
    for (std::size_t i = 0; i < f.nvars(); ++i) t = t * pow(coords[i], e[i]);
    r += t;
  }
  return r;
}

std::vector<Poly> vanishing_space(const std::vector<Vector>& S, unsigned deg_bound, unsigned mult,
                                  std::size_t n, const FieldSpec& field) {
  if (mult < 1) throw Error(ErrorCode::InvalidInput, "multiplicity must be >= 1");
  const auto monos = monomials_up_to(n, deg_bound);
  std::vector<MultiIndex> derivs;
  for (unsigned w = 0; w < mult; ++w) {
    auto layer = indices_of_weight(n, w);
    derivs.insert(derivs.end(), layer.begin(), layer.end());
  }

  std::vector<Vector> rows;
  rows.reserve(S.size() * derivs.size());
  for (const auto& u : S) {
    if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "point arity");
    // powers[i][k] = u_i^k
    std::vector<Vector> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
      powers[i].push_back(Scalar::one(field));
      for (unsigned k = 1; k <= deg_bound; ++k) powers[i].push_back(powers[i].back() * u[i]);
    }
    for (const auto& j : derivs) {
      // row entry for X^c: d^j(X^c)(u) = prod_i binom(c_i, j_i) u_i^(c_i - j_i)
      Vector row = zero_vector(field, monos.size());
      for (std::size_t col = 0; col < monos.size(); ++col) {
        const auto& c = monos[col];
        Scalar entry = Scalar::one(field);
        for (std::size_t i = 0; i < n && !entry.is_zero(); ++i) {
          if (c[i] < j[i]) {
            entry = Scalar::zero(field);
            break;
          }
          entry *= Scalar(field, binomial(c[i], j[i])) * powers[i][c[i] - j[i]];
        }
        row[col] = entry;
      }
      rows.push_back(std::move(row));
    }
  }

  std::vector<Poly> basis;
  std::vector<Vector> kernel;
  if (rows.empty()) {
    for (std::size_t col = 0; col < monos.size(); ++col) {
      Vector v = zero_vector(field, monos.size());
      v[col] = Scalar::one(field);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = nullspace(rows, field, monos.size());
  }
  for (const auto& v : kernel) {
    Poly p(field, n);
    for (std::size_t col = 0; col < monos.size(); ++col) p.add_term(monos[col], v[col]);
    basis.push_back(std::move(p));
  }
  return basis;
}

unsigned direction_multiplicity(const Poly& f_hom, const std::vector<Vector>& D) {
  if (f_hom.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "direction multiplicity of zero");
  if (!f_hom.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f_hom.str());
  unsigned best = static_cast<unsigned>(f_hom.degree()) + 1;
  for (const auto& v : D) best = std::min(best, multiplicity_at(f_hom, v));
  return best;
}

Poly grid_generator(const FieldSpec& field, std::size_t n, std::size_t i,
                    const std::vector<Scalar>& A) {
  if (n < 2 || i + 1 >= n) throw Error(ErrorCode::DimensionMismatch, "generator index");
  Poly g = Poly::constant(field, n, Scalar::one(field));
  for (const auto& a : A) {
    Poly factor = Poly::variable(field, n, i);
    factor -= a * Poly::variable(field, n, n - 1);
    g = g * factor;
  }
  return g;
}

Rational grid_bound_value(std::uint64_t N, std::uint64_t n, std::uint64_t r) {
  return Rational(binomial(r * N + n - 1, n), binomial(2 * r + n - 2, n));
}

BoundReport bound_grid(std::uint64_t N, std::uint64_t n, std::uint64_t r) {
  if (N < 1 || n < 1 || r < 1) throw Error(ErrorCode::InvalidInput, "N, n, r must be >= 1");
  BoundReport rep;
  rep.N = N;
  rep.n = n;
  rep.r_min = rep.r_max = rep.best_r = r;
  rep.bound = grid_bound_value(N, n, r);
  rep.values = {rep.bound};
  rep.limit = power(Rational(static_cast<long long>(N), 2), static_cast<unsigned>(n));
  return rep;
}

BoundReport bound_best(std::uint64_t N, std::uint64_t n, std::uint64_t r_max) {
  if (r_max < 1) throw Error(ErrorCode::InvalidInput, "r_max must be >= 1");
  BoundReport rep = bound_grid(N, n, 1);
  rep.r_max = r_max;
  for (std::uint64_t r = 2; r <= r_max; ++r) {
    Rational v = grid_bound_value(N, n, r);
    rep.values.push_back(v);
    if (v > rep.bound) {
      rep.bound = v;
      rep.best_r = r;
    }
  }
  return rep;
}

std::string to_string(Certificate::Verdict v) {
  switch (v) {
    case Certificate::Verdict::pass: return "pass";
    case Certificate::Verdict::pass_vacuous: return "pass-vacuous";
    case Certificate::Verdict::fail: return "fail";
  }
  return "?";
}

std::vector<Vector> affine_points(const KakeyaSet& K) {
  std::vector<Vector> out;
  for (const auto& rec : K.points) {
    const Vector& c = rec.point.coords();
    if (c[K.n].is_zero()) throw Error(ErrorCode::InvalidInput, "point at infinity in S");
    const Scalar inv = c[K.n].inverse();
    Vector u;
    for (std::size_t i = 0; i < K.n; ++i) u.push_back(c[i] * inv);
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<Vector> direction_vectors(const KakeyaSet& K) {
  std::vector<Vector> out;
  for (const auto& rec : K.lines) {
    const Vector& c = rec.direction.coords();
    out.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(K.n));
  }
  return out;
}

Certificate certify_theorem6(const KakeyaSet& K, std::uint64_t r) {
  if (K.field.kind() != FieldSpec::Kind::prime)
    throw Error(ErrorCode::UnsupportedField, "certificates are computed over F_p only, not " +
                                                 K.field.describe());
  if (r < 1) throw Error(ErrorCode::InvalidInput, "r must be >= 1");
  for (std::size_t i = 0; i < K.lines.size(); ++i) {
    std::size_t count = 0;
    for (const auto& p : K.points)
      if (K.lines[i].line.contains(p.point)) ++count;
    if (count < K.N)
      throw Error(ErrorCode::HypothesisViolation, "line " + std::to_string(i) + " carries " +
                                                      std::to_string(count) + " < N points");
  }

  Certificate cert;
  cert.r = r;
  cert.n = K.n;
  cert.N = K.N;
  const auto S = affine_points(K);
  const auto D = direction_vectors(K);
  cert.point_count = S.size();
  cert.direction_count = D.size();
  cert.equation_count = binomial(K.n + 2 * r - 2, K.n) * S.size();
  cert.unknown_count = binomial(K.n + r * K.N - 1, K.n);
  cert.forced = cert.equation_count < cert.unknown_count;

  const auto deg_bound = static_cast<unsigned>(r * K.N - 1);
  const auto mult = static_cast<unsigned>(2 * r - 1);
  const auto basis = vanishing_space(S, deg_bound, mult, K.n, K.field);
  cert.basis_dimension = basis.size();

  if (basis.empty()) {
    cert.verdict = cert.forced ? Certificate::Verdict::fail : Certificate::Verdict::pass_vacuous;
    cert.detail = cert.forced ? "rank count forces a nonzero polynomial but none was found"
                              : "no nonzero polynomial of degree <= rN-1 vanishes to order 2r-1 on S";
    return cert;
  }

  bool ok = true;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Poly& f = basis[b];
    const Poly top = top_part(f);
    std::vector<Attestation> s_att, d_att;
    for (const auto& u : S) {
      unsigned m = multiplicity_at(f, u);
      s_att.push_back({u, m, m >= mult});
      ok = ok && m >= mult;
    }
    for (const auto& v : D) {
      unsigned m = multiplicity_at(top, v);
      d_att.push_back({v, m, m >= r});
      ok = ok && m >= r;
    }
    ++cert.basis_checked;
    if (b == 0) {
      cert.f = f;
      cert.s_attestations = std::move(s_att);
      cert.d_attestations = std::move(d_att);
    }
  }
  cert.verdict = ok ? Certificate::Verdict::pass : Certificate::Verdict::fail;
  cert.detail = ok ? "every basis polynomial has f* vanishing to order r on all directions"
                   : "some basis polynomial violates a multiplicity requirement";
  return cert;
}

} // namespace kakeya
