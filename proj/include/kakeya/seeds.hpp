#ifndef KAKEYA_SEEDS_HPP
#define KAKEYA_SEEDS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kakeya/projgeom.hpp"

namespace kakeya {

// Planar coordinates are (X, Y, Z) with Z = 0 the line at infinity and
// <(0,1,0)> the common infinite point of the m-lines.
struct SeedPoint {
  ProjPoint point;
  bool extra = false;  // added only to reach the per-line count; never a double point
};

struct PlanarSeed {
  FieldSpec field;
  std::size_t N = 0;
  std::vector<Subspace> lines;
  std::vector<ProjPoint> infinite_points;
  std::vector<Subspace> m_lines;
  std::vector<SeedPoint> points;
  std::vector<Rational> epsilon;
  std::string name;
};

struct SeedReport {
  std::vector<Rational> epsilon;         // measured, in m-line order
  std::vector<Rational> epsilon_sorted;  // ascending
  Rational epsilon_sum;
  Rational d;
  std::vector<std::size_t> line_point_counts;
  std::vector<std::size_t> double_point_counts;
  bool distinct_directions = false;
  bool pass = false;
  std::vector<std::string> failures;
};

Subspace planar_line_at_infinity(const FieldSpec& field);
ProjPoint planar_vertical_point(const FieldSpec& field);

// Point u + lambda*v on an affine line, with u the canonical affine base point taken from
// the echelon basis and v the normalized direction. Throws if the line lies at infinity.
ProjPoint point_on_line(const Subspace& line, const Scalar& lambda);
// The line's point at infinity (last coordinate zero).
ProjPoint direction_of(const Subspace& line);

PlanarSeed dual_conic_seed(std::uint64_t q);
PlanarSeed regular_ngon_seed(std::size_t N, double tol = default_real_tolerance);

SeedReport seed_report(const PlanarSeed& seed);

// Direction parameter d of a seed line, from its infinite point <(1, d, 0)>.
Scalar seed_direction_parameter(const PlanarSeed& seed, std::size_t line);

} // namespace kakeya

#endif // KAKEYA_SEEDS_HPP
