#ifndef KAKEYA_CONSTRUCTION_HPP
#define KAKEYA_CONSTRUCTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kakeya/projgeom.hpp"
#include "kakeya/seeds.hpp"

namespace kakeya {

// Fixed points and flags of PG_n the lifting recursion is written in.
// Coordinates: x_i = e_i for 1 <= i <= n (so pi_n is X_{n+1} = 0), x_0 = all-ones,
// y_i = e_{i-1} + e_i for 3 <= i <= n.
class ConstructionFrame {
public:
  ConstructionFrame(std::size_t n, const FieldSpec& field);

  std::size_t n() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return field_; }

  const ProjPoint& x(std::size_t i) const;      // 0 <= i <= n
  const ProjPoint& y(std::size_t i) const;      // 3 <= i <= n
  const Subspace& sigma(std::size_t i) const;   // 1 <= i <= n
  const Subspace& pi(std::size_t i) const;      // 1 <= i <= n

  // Image of a planar seed vector (X, Y, Z) in Sigma_2: X x_1 + Y x_2 + Z x_0.
  Vector embed(const Vector& planar) const;
  Subspace embed(const Subspace& planar_line) const;
  ProjPoint embed(const ProjPoint& planar_point) const;

  const Subspace& hyperplane_at_infinity() const noexcept { return pi_.back(); }
  ProjPoint affine_origin() const;

private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<ProjPoint> x_;
  std::vector<ProjPoint> y_;
  std::vector<Subspace> sigma_;
  std::vector<Subspace> pi_;
};

ConstructionFrame build_frame(std::size_t n, const FieldSpec& field);

// Ordered tuple of distinct seed-line indices (0-based).
class IndexTuple {
public:
  IndexTuple() = default;
  IndexTuple(std::vector<std::size_t> entries);  // NOLINT
  IndexTuple(std::initializer_list<std::size_t> entries) : IndexTuple(std::vector(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::size_t>& entries() const noexcept { return entries_; }

  // J \ {a} for J = (..., b, a): drop the last entry.
  IndexTuple without_last() const;
  // J \ {b}: drop the second-to-last entry.
  IndexTuple without_second_last() const;

  std::string str() const;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

private:
  std::vector<std::size_t> entries_;
};

// All ordered tuples of distinct entries from {0..count-1} of the given length, lexicographic.
std::vector<IndexTuple> ordered_tuples(std::size_t count, std::size_t length);

// The lifting recursion over one seed, memoized by tuple.
class Lifter {
public:
  Lifter(const PlanarSeed& seed, std::size_t n, bool memoize = true);

  const ConstructionFrame& frame() const noexcept { return frame_; }
  const PlanarSeed& seed() const noexcept { return *seed_; }

  Subspace line(const IndexTuple& J);
  ProjPoint direction(const IndexTuple& J);
  ProjPoint intersection(const IndexTuple& J, const IndexTuple& Jbar, std::size_t m_index);
  // Closed form (1, d_1, (-1)^i (d_{i-1} - d_{i-2}), ..., 0) computed without the recursion.
  ProjPoint grid_coordinates(const IndexTuple& J) const;

  // Seed lines b with l_a, l_b and m concurrent; empty when l_a meets m in no double point.
  std::vector<std::size_t> partners(std::size_t a, std::size_t m_index) const;

private:
  void check_tuple(const IndexTuple& J) const;

  const PlanarSeed* seed_;
  ConstructionFrame frame_;
  bool memoize_;
  std::vector<Subspace> base_lines_;
  std::vector<ProjPoint> base_dirs_;
  std::vector<Subspace> base_m_;
  std::vector<Scalar> d_;
  std::map<IndexTuple, Subspace> line_memo_;
  std::map<IndexTuple, ProjPoint> dir_memo_;
  std::map<std::tuple<IndexTuple, IndexTuple, std::size_t>, ProjPoint> z_memo_;
};

ProjPoint lift_direction_closed_form(const std::vector<Scalar>& d, std::size_t ambient_dim);

struct Provenance {
  enum class Kind { lifted, padding, grid_completion, seed };
  Kind kind = Kind::seed;
  IndexTuple J, Jbar;          // lifted
  std::size_t m_index = 0;     // lifted
  std::size_t line = 0;        // padding / grid_completion: index into KakeyaSet::lines
  long long lambda = 0;        // padding / grid_completion
};

std::string to_string(Provenance::Kind k);

struct LineRecord {
  enum class Kind { lifted, grid_completion };
  Subspace line;
  ProjPoint direction;
  Kind kind = Kind::lifted;
  // lifted: the seed-line tuple M; grid_completion: indices into the grid sets
  std::vector<std::size_t> tuple;
};

struct PointRecord {
  ProjPoint point;
  Provenance provenance;
};

struct GridSpec {
  std::vector<std::vector<Scalar>> sets;  // A_1..A_{n-1}
};

struct SeedMeta {
  std::string name;
  std::vector<Rational> epsilon;
};

// Lines L' and points S' in AG_n = PG_n minus {X_{n+1} = 0}. Grid membership is expressed
// after the unitriangular change of basis that maps a lifted direction to (1, d_1, ..., d_{n-1}).
struct KakeyaSet {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t N = 0;
  std::vector<LineRecord> lines;
  std::vector<PointRecord> points;
  GridSpec grid;
  SeedMeta seed_meta;

  std::size_t lifted_line_count() const;
  std::size_t lifted_point_count() const;
};

KakeyaSet assemble(const PlanarSeed& seed, std::size_t n);

// Change of basis recovering (d_1, ..., d_{n-1}) from a direction <(1, c_2, ..., c_n, 0)>.
// Returns nullopt when the direction is not of that shape.
std::optional<std::vector<Scalar>> grid_parameters(const ProjPoint& direction);

} // namespace kakeya

#endif // KAKEYA_CONSTRUCTION_HPP
