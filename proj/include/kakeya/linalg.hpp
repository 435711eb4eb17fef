#ifndef KAKEYA_LINALG_HPP
#define KAKEYA_LINALG_HPP

#include <cstddef>
#include <vector>

#include "kakeya/scalar.hpp"

namespace kakeya {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t len);
bool is_zero_vector(const Vector& v);

// Reduced row echelon form. Zero rows are dropped; pivots[i] is the pivot column of rows[i].
// Over the real kind, a column only yields a pivot when its largest remaining entry exceeds
// the field tolerance; entries below tolerance are snapped to zero.
struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<Vector> rows, const FieldSpec& field, std::size_t ncols);
std::size_t rank(const std::vector<Vector>& rows, const FieldSpec& field, std::size_t ncols);

// Basis of {x : A x = 0}, one vector per free column, in increasing free-column order.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, const FieldSpec& field,
                              std::size_t ncols);

// Reduce v against an echelon basis; the remainder is zero iff v lies in its span.
Vector reduce_against(const Echelon& e, Vector v);

} // namespace kakeya

#endif // KAKEYA_LINALG_HPP
