#ifndef KAKEYA_PROJGEOM_HPP
#define KAKEYA_PROJGEOM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kakeya/linalg.hpp"

namespace kakeya {

// A point of PG_d(K) as a homogeneous tuple of length d+1, scaled so the first
// nonzero coordinate is 1. That representative is used for equality and keys.
class ProjPoint {
public:
  static ProjPoint normalize(Vector coords);

  const Vector& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  const FieldSpec& field() const { return coords_.front().field(); }

  // Canonical text key; only meaningful as an identity for exact fields.
  std::string key() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
  explicit ProjPoint(Vector coords) : coords_(std::move(coords)) {}
  Vector coords_;
};

ProjPoint point_normalize(Vector coords);

// A projective subspace held as the reduced echelon basis of its underlying vector space.
// The empty subspace (projective dimension -1) has no basis rows.
class Subspace {
public:
  static Subspace empty(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace whole(const FieldSpec& field, std::size_t ambient_dim);
  static Subspace from_vectors(const std::vector<Vector>& generators, const FieldSpec& field,
                               std::size_t ambient_dim);
  static Subspace from_points(const std::vector<ProjPoint>& points);
  // Zero set of the given linear forms.
  static Subspace from_equations(const std::vector<Vector>& forms, const FieldSpec& field,
                                 std::size_t ambient_dim);

  Subspace(const ProjPoint& p);  // NOLINT: a point is a 0-dimensional subspace

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  int projective_dim() const noexcept { return static_cast<int>(echelon_.rows.size()) - 1; }
  bool is_empty() const noexcept { return echelon_.rows.empty(); }
  const std::vector<Vector>& basis() const noexcept { return echelon_.rows; }
  const Echelon& echelon() const noexcept { return echelon_; }

  bool contains(const Vector& v) const;
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }
  bool contains(const Subspace& other) const;

  // The single point of a 0-dimensional subspace.
  ProjPoint as_point() const;
  // Linear forms cutting out this subspace.
  std::vector<Vector> equations() const;

  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  Subspace(const FieldSpec& field, std::size_t ambient_dim, Echelon e)
      : field_(field), ambient_dim_(ambient_dim), echelon_(std::move(e)) {}

  FieldSpec field_;
  std::size_t ambient_dim_;
  Echelon echelon_;
};

Subspace span(const Subspace& a, const Subspace& b);
Subspace meet(const Subspace& a, const Subspace& b);
bool incident(const ProjPoint& p, const Subspace& a);
// Every subset of at most ambient_dim + 1 of the points is independent.
bool in_general_position(const std::vector<ProjPoint>& pts);

// Membership index over points. Exact fields hash canonical keys; the real kind
// falls back to a tolerance scan.
class PointIndex {
public:
  std::optional<std::size_t> find(const ProjPoint& p) const;
  // Returns the index and whether the point was new.
  std::pair<std::size_t, bool> insert(const ProjPoint& p);
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }

private:
  std::vector<ProjPoint> points_;
  std::unordered_map<std::string, std::size_t> keys_;
};

} // namespace kakeya

#endif // KAKEYA_PROJGEOM_HPP
