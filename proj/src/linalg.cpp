#include "kakeya/linalg.hpp"

#include <cmath>

namespace kakeya {

Vector zero_vector(const FieldSpec& f, std::size_t len) { return Vector(len, Scalar::zero(f)); }

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

void check_widths(const std::vector<Vector>& rows, const FieldSpec& field, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (const auto& x : r)
      if (!(x.field() == field)) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
  }
}

// Plain residues for F_p; Scalar dispatch dominates the cost of large eliminations otherwise.
Echelon row_reduce_prime(std::vector<Vector> rows, const FieldSpec& field, std::size_t ncols) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m[i][j] = rows[i][j].residue();

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const std::uint64_t inv = detail::inv_mod(m[r][c], p);
    for (std::size_t j = c; j < ncols; ++j) m[r][j] = detail::mul_mod(m[r][j], inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (m[r][j] == 0) continue;
        const std::uint64_t sub = detail::mul_mod(factor, m[r][j], p);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + (p - sub);
      }
    }
    pivots.push_back(c);
    ++r;
  }

  Echelon e;
  e.pivots = std::move(pivots);
  for (std::size_t i = 0; i < r; ++i) {
    Vector row;
    row.reserve(ncols);
    for (std::size_t j = 0; j < ncols; ++j) row.emplace_back(field, static_cast<long long>(m[i][j]));
    e.rows.push_back(std::move(row));
  }
  return e;
}

Echelon row_reduce_generic(std::vector<Vector> m, const FieldSpec& field, std::size_t ncols) {
  const bool real = field.kind() == FieldSpec::Kind::real;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t sel = m.size();
    if (real) {
      double best = field.tolerance();
      for (std::size_t i = r; i < m.size(); ++i) {
        double a = std::abs(m[i][c].real());
        if (a > best) {
          best = a;
          sel = i;
        }
      }
    } else {
      for (std::size_t i = r; i < m.size(); ++i)
        if (!m[i][c].is_zero()) {
          sel = i;
          break;
        }
    }
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      if (!real && m[i][c].is_zero()) continue;
      const Scalar factor = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  if (real) {
    const Scalar zero = Scalar::zero(field);
    for (auto& row : m)
      for (auto& x : row)
        if (x.is_zero()) x = zero;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

} // namespace

Echelon row_reduce(std::vector<Vector> rows, const FieldSpec& field, std::size_t ncols) {
  check_widths(rows, field, ncols);
  if (field.kind() == FieldSpec::Kind::prime) return row_reduce_prime(std::move(rows), field, ncols);
  return row_reduce_generic(std::move(rows), field, ncols);
}

std::size_t rank(const std::vector<Vector>& rows, const FieldSpec& field, std::size_t ncols) {
  return row_reduce(rows, field, ncols).rows.size();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, const FieldSpec& field,
                              std::size_t ncols) {
  Echelon e = row_reduce(rows, field, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(field, ncols);
    v[free] = Scalar::one(field);
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector reduce_against(const Echelon& e, Vector v) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const Scalar factor = v[e.pivots[i]];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * e.rows[i][j];
  }
  return v;
}

} // namespace kakeya
