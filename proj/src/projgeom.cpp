#include "kakeya/projgeom.hpp"

#include <algorithm>

namespace kakeya {

ProjPoint ProjPoint::normalize(Vector coords) {
  if (coords.empty()) throw Error(ErrorCode::ZeroVector, "empty coordinate tuple");
  const FieldSpec field = coords.front().field();
  for (const auto& c : coords)
    if (!(c.field() == field)) throw Error(ErrorCode::FieldMismatch, "mixed coordinate fields");
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead].is_zero()) ++lead;
  if (lead == coords.size()) throw Error(ErrorCode::ZeroVector, "all coordinates vanish");
  const Scalar inv = coords[lead].inverse();
  const Scalar zero = Scalar::zero(field);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i < lead || coords[i].is_zero())
      coords[i] = zero;
    else
      coords[i] *= inv;
  }
  coords[lead] = Scalar::one(field);
  return ProjPoint(std::move(coords));
}

ProjPoint point_normalize(Vector coords) { return ProjPoint::normalize(std::move(coords)); }

std::string ProjPoint::key() const {
  std::string k;
  for (const auto& c : coords_) {
    k += c.to_string();
    k += ',';
  }
  return k;
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

Subspace Subspace::empty(const FieldSpec& field, std::size_t ambient_dim) {
  return Subspace(field, ambient_dim, Echelon{});
}

Subspace Subspace::whole(const FieldSpec& field, std::size_t ambient_dim) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i <= ambient_dim; ++i) {
    Vector v = zero_vector(field, ambient_dim + 1);
    v[i] = Scalar::one(field);
    rows.push_back(std::move(v));
  }
  return from_vectors(rows, field, ambient_dim);
}

Subspace Subspace::from_vectors(const std::vector<Vector>& generators, const FieldSpec& field,
                                std::size_t ambient_dim) {
  for (const auto& g : generators)
    if (g.size() != ambient_dim + 1) throw Error(ErrorCode::AmbientMismatch, "generator length");
  return Subspace(field, ambient_dim, row_reduce(generators, field, ambient_dim + 1));
}

Subspace Subspace::from_points(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "no points to span");
  std::vector<Vector> rows;
  for (const auto& p : points) {
    if (p.ambient_dim() != points.front().ambient_dim())
      throw Error(ErrorCode::AmbientMismatch, "points of different ambient dimension");
    rows.push_back(p.coords());
  }
  return from_vectors(rows, points.front().field(), points.front().ambient_dim());
}

Subspace Subspace::from_equations(const std::vector<Vector>& forms, const FieldSpec& field,
                                  std::size_t ambient_dim) {
  for (const auto& f : forms)
    if (f.size() != ambient_dim + 1) throw Error(ErrorCode::AmbientMismatch, "form length");
  return from_vectors(nullspace(forms, field, ambient_dim + 1), field, ambient_dim);
}

Subspace::Subspace(const ProjPoint& p)
    : field_(p.field()), ambient_dim_(p.ambient_dim()),
      echelon_(row_reduce({p.coords()}, p.field(), p.size())) {}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_ + 1) throw Error(ErrorCode::AmbientMismatch, "vector length");
  return is_zero_vector(reduce_against(echelon_, v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorCode::AmbientMismatch, "subspace");
  for (const auto& row : other.basis())
    if (!contains(row)) return false;
  return true;
}

ProjPoint Subspace::as_point() const {
  if (projective_dim() != 0)
    throw Error(ErrorCode::InvalidInput,
                "subspace of projective dimension " + std::to_string(projective_dim()) +
                    " is not a point");
  return ProjPoint::normalize(echelon_.rows.front());
}

std::vector<Vector> Subspace::equations() const {
  return nullspace(echelon_.rows, field_, ambient_dim_ + 1);
}

std::string Subspace::key() const {
  std::string k = std::to_string(ambient_dim_) + ":";
  for (const auto& row : basis()) {
    for (const auto& c : row) {
      k += c.to_string();
      k += ',';
    }
    k += ';';
  }
  return k;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_ || !(a.field_ == b.field_)) return false;
  if (a.echelon_.pivots != b.echelon_.pivots) return false;
  for (std::size_t i = 0; i < a.basis().size(); ++i)
    for (std::size_t j = 0; j <= a.ambient_dim_; ++j)
      if (!(a.basis()[i][j] == b.basis()[i][j])) return false;
  return true;
}

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "ambient dimensions " + std::to_string(a.ambient_dim()) +
                                                " and " + std::to_string(b.ambient_dim()));
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "subspace fields differ");
}

} // namespace

Subspace span(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::from_vectors(rows, a.field(), a.ambient_dim());
}

Subspace meet(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<Vector> forms = a.equations();
  auto fb = b.equations();
  forms.insert(forms.end(), fb.begin(), fb.end());
  return Subspace::from_equations(forms, a.field(), a.ambient_dim());
}

bool incident(const ProjPoint& p, const Subspace& a) {
  if (p.ambient_dim() != a.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "point and subspace ambient dimensions differ");
  return a.contains(p);
}

bool in_general_position(const std::vector<ProjPoint>& pts) {
  if (pts.empty()) return true;
  const std::size_t dim = pts.front().ambient_dim();
  for (const auto& p : pts)
    if (p.ambient_dim() != dim) throw Error(ErrorCode::AmbientMismatch, "mixed ambient dims");
  const FieldSpec& f = pts.front().field();
  if (pts.size() <= dim + 1) {
    std::vector<Vector> rows;
    for (const auto& p : pts) rows.push_back(p.coords());
    return rank(rows, f, dim + 1) == pts.size();
  }
  // more than dim + 1 points: every dim + 1 of them must span
  std::vector<bool> pick(pts.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(dim + 1), true);
  do {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pick[i]) rows.push_back(pts[i].coords());
    if (rank(rows, f, dim + 1) != dim + 1) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

std::optional<std::size_t> PointIndex::find(const ProjPoint& p) const {
  if (p.field().is_exact()) {
    auto it = keys_.find(p.key());
    if (it == keys_.end()) return std::nullopt;
    return it->second;
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == p) return i;
  return std::nullopt;
}

std::pair<std::size_t, bool> PointIndex::insert(const ProjPoint& p) {
  if (auto i = find(p)) return {*i, false};
  points_.push_back(p);
  if (p.field().is_exact()) keys_.emplace(p.key(), points_.size() - 1);
  return {points_.size() - 1, true};
}

} // namespace kakeya
