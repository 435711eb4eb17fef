#include "kakeya/construction.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace kakeya {

namespace {

Vector unit(const FieldSpec& f, std::size_t len, std::size_t i) {
  Vector v = zero_vector(f, len);
  v[i] = Scalar::one(f);
  return v;
}

} // namespace

ConstructionFrame::ConstructionFrame(std::size_t n, const FieldSpec& field) : n_(n), field_(field) {
  if (n < 2) throw Error(ErrorCode::UnsupportedDimension, "n = " + std::to_string(n) + " < 2");
  const std::size_t len = n + 1;
  x_.push_back(ProjPoint::normalize(Vector(len, Scalar::one(field))));
  for (std::size_t i = 1; i <= n; ++i) x_.push_back(ProjPoint::normalize(unit(field, len, i - 1)));
  for (std::size_t i = 3; i <= n; ++i) {
    Vector v = zero_vector(field, len);
    v[i - 2] = Scalar::one(field);
    v[i - 1] = Scalar::one(field);
    y_.push_back(ProjPoint::normalize(std::move(v)));
  }
  Subspace sig(x_[0]);
  Subspace p(x_[1]);
  for (std::size_t i = 1; i <= n; ++i) {
    sig = span(sig, Subspace(x_[i]));
    if (i > 1) p = span(p, Subspace(x_[i]));
    sigma_.push_back(sig);
    pi_.push_back(p);
  }
}

const ProjPoint& ConstructionFrame::x(std::size_t i) const {
  if (i > n_) throw Error(ErrorCode::InvalidInput, "x_" + std::to_string(i) + " out of range");
  return x_[i];
}

const ProjPoint& ConstructionFrame::y(std::size_t i) const {
  if (i < 3 || i > n_) throw Error(ErrorCode::InvalidInput, "y_" + std::to_string(i) + " out of range");
  return y_[i - 3];
}

const Subspace& ConstructionFrame::sigma(std::size_t i) const {
  if (i < 1 || i > n_) throw Error(ErrorCode::InvalidInput, "Sigma_" + std::to_string(i));
  return sigma_[i - 1];
}

const Subspace& ConstructionFrame::pi(std::size_t i) const {
  if (i < 1 || i > n_) throw Error(ErrorCode::InvalidInput, "pi_" + std::to_string(i));
  return pi_[i - 1];
}

Vector ConstructionFrame::embed(const Vector& planar) const {
  if (planar.size() != 3) throw Error(ErrorCode::AmbientMismatch, "planar vector expected");
  Vector v = zero_vector(field_, n_ + 1);
  for (std::size_t i = 0; i <= n_; ++i) v[i] = planar[2] * x_[0][i];
  v[0] += planar[0];
  v[1] += planar[1];
  return v;
}

Subspace ConstructionFrame::embed(const Subspace& planar_line) const {
  std::vector<Vector> rows;
  for (const auto& r : planar_line.basis()) rows.push_back(embed(r));
  return Subspace::from_vectors(rows, field_, n_);
}

ProjPoint ConstructionFrame::embed(const ProjPoint& planar_point) const {
  return ProjPoint::normalize(embed(planar_point.coords()));
}

ProjPoint ConstructionFrame::affine_origin() const {
  return ProjPoint::normalize(unit(field_, n_ + 1, n_));
}

ConstructionFrame build_frame(std::size_t n, const FieldSpec& field) {
  return ConstructionFrame(n, field);
}

IndexTuple::IndexTuple(std::vector<std::size_t> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] == entries_[j])
        throw Error(ErrorCode::InvalidInput, "index tuple has a repeated entry " +
                                                 std::to_string(entries_[i]));
}

IndexTuple IndexTuple::without_last() const {
  std::vector<std::size_t> e(entries_.begin(), entries_.end() - 1);
  return IndexTuple(std::move(e));
}

IndexTuple IndexTuple::without_second_last() const {
  std::vector<std::size_t> e(entries_.begin(), entries_.end() - 2);
  e.push_back(entries_.back());
  return IndexTuple(std::move(e));
}

std::string IndexTuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::vector<IndexTuple> ordered_tuples(std::size_t count, std::size_t length) {
  std::vector<IndexTuple> out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(count, false);
  std::function<void()> rec = [&] {
    if (cur.size() == length) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      rec();
      cur.pop_back();
      used[i] = false;
    }
  };
  rec();
  return out;
}

ProjPoint lift_direction_closed_form(const std::vector<Scalar>& d, std::size_t ambient_dim) {
  if (d.empty() || d.size() + 1 > ambient_dim)
    throw Error(ErrorCode::DimensionMismatch, "closed form needs 1 <= |d| <= ambient_dim - 1");
  const FieldSpec f = d.front().field();
  Vector v = zero_vector(f, ambient_dim + 1);
  v[0] = Scalar::one(f);
  v[1] = d[0];
  // coordinate i (1-based), 3 <= i <= |d|+1: (-1)^i (d_{i-1} - d_{i-2})
  for (std::size_t i = 3; i <= d.size() + 1; ++i) {
    Scalar diff = d[i - 2] - d[i - 3];
    v[i - 1] = i % 2 == 0 ? diff : -diff;
  }
  return ProjPoint::normalize(std::move(v));
}

std::optional<std::vector<Scalar>> grid_parameters(const ProjPoint& direction) {
  const std::size_t n = direction.ambient_dim();
  if (n < 2 || !direction[n].is_zero() || !direction[0].is_one()) return std::nullopt;
  std::vector<Scalar> d{direction[1]};
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    // d_k = d_{k-1} + (-1)^{k+1} c_{k+1}
    const Scalar& c = direction[k];
    d.push_back(k % 2 == 1 ? d.back() + c : d.back() - c);
  }
  return d;
}

Lifter::Lifter(const PlanarSeed& seed, std::size_t n, bool memoize)
    : seed_(&seed), frame_(n, seed.field), memoize_(memoize) {
  for (const auto& l : seed.lines) base_lines_.push_back(frame_.embed(l));
  for (const auto& p : seed.infinite_points) base_dirs_.push_back(frame_.embed(p));
  for (const auto& m : seed.m_lines) base_m_.push_back(frame_.embed(m));
  for (std::size_t i = 0; i < seed.lines.size(); ++i) d_.push_back(seed_direction_parameter(seed, i));
}

void Lifter::check_tuple(const IndexTuple& J) const {
  if (J.size() == 0 || J.size() + 1 > frame_.n())
    throw Error(ErrorCode::InvalidInput, "tuple " + J.str() + " needs 1 <= |J| <= n-1 with n = " +
                                             std::to_string(frame_.n()));
  for (auto e : J.entries())
    if (e >= base_lines_.size())
      throw Error(ErrorCode::InvalidInput, "tuple entry " + std::to_string(e) + " out of range");
}

Subspace Lifter::line(const IndexTuple& J) {
  check_tuple(J);
  if (J.size() == 1) return base_lines_[J[0]];
  if (memoize_) {
    auto it = line_memo_.find(J);
    if (it != line_memo_.end()) return it->second;
  }
  const std::size_t k = J.size() + 1;
  Subspace r = meet(span(Subspace(frame_.x(k)), line(J.without_last())),
                    span(Subspace(frame_.y(k)), line(J.without_second_last())));
  if (r.projective_dim() != 1)
    throw Error(ErrorCode::DegenerateSeed, "l_" + J.str() + " has projective dimension " +
                                               std::to_string(r.projective_dim()));
  if (memoize_) line_memo_.emplace(J, r);
  return r;
}

ProjPoint Lifter::direction(const IndexTuple& J) {
  check_tuple(J);
  if (J.size() == 1) return base_dirs_[J[0]];
  if (memoize_) {
    auto it = dir_memo_.find(J);
    if (it != dir_memo_.end()) return it->second;
  }
  const std::size_t k = J.size() + 1;
  Subspace r = meet(span(Subspace(frame_.x(k)), Subspace(direction(J.without_last()))),
                    span(Subspace(frame_.y(k)), Subspace(direction(J.without_second_last()))));
  if (r.projective_dim() != 0)
    throw Error(ErrorCode::DegenerateSeed, "p_" + J.str() + " is not a point");
  ProjPoint p = r.as_point();
  if (memoize_) dir_memo_.emplace(J, p);
  return p;
}

ProjPoint Lifter::intersection(const IndexTuple& J, const IndexTuple& Jbar, std::size_t m_index) {
  check_tuple(J);
  check_tuple(Jbar);
  if (J.size() != Jbar.size())
    throw Error(ErrorCode::InvalidInput, "J and Jbar differ in length");
  for (auto a : J.entries())
    for (auto b : Jbar.entries())
      if (a == b) throw Error(ErrorCode::InvalidInput, J.str() + " and " + Jbar.str() + " overlap");
  if (m_index >= base_m_.size())
    throw Error(ErrorCode::InvalidInput, "m-line index " + std::to_string(m_index) + " out of range");

  auto key = std::make_tuple(J, Jbar, m_index);
  if (memoize_) {
    auto it = z_memo_.find(key);
    if (it != z_memo_.end()) return it->second;
  }
  ProjPoint z = [&] {
    if (J.size() == 1) {
      Subspace r = meet(meet(base_lines_[J[0]], base_lines_[Jbar[0]]), base_m_[m_index]);
      if (r.projective_dim() != 0)
        throw Error(ErrorCode::UndefinedBasePoint, "l_" + std::to_string(J[0]) + " and l_" +
                                                       std::to_string(Jbar[0]) +
                                                       " do not meet on m_" +
                                                       std::to_string(m_index));
      return r.as_point();
    }
    const std::size_t k = J.size() + 1;
    ProjPoint za = intersection(J.without_last(), Jbar.without_last(), m_index);
    ProjPoint zb = intersection(J.without_second_last(), Jbar.without_second_last(), m_index);
    Subspace r = meet(span(Subspace(frame_.x(k)), Subspace(za)),
                      span(Subspace(frame_.y(k)), Subspace(zb)));
    if (r.projective_dim() != 0)
      throw Error(ErrorCode::DegenerateSeed, "z_" + J.str() + "," + Jbar.str() + " is not a point");
    return r.as_point();
  }();
  if (memoize_) z_memo_.emplace(key, z);
  return z;
}

ProjPoint Lifter::grid_coordinates(const IndexTuple& J) const {
  check_tuple(J);
  std::vector<Scalar> d;
  for (auto e : J.entries()) d.push_back(d_[e]);
  return lift_direction_closed_form(d, frame_.n());
}

std::vector<std::size_t> Lifter::partners(std::size_t a, std::size_t m_index) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < base_lines_.size(); ++b) {
    if (b == a) continue;
    // planar check is enough; the embedding is injective
    Subspace r = meet(meet(seed_->lines[a], seed_->lines[b]), seed_->m_lines[m_index]);
    if (r.projective_dim() == 0) out.push_back(b);
  }
  return out;
}

std::string to_string(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::lifted: return "lifted";
    case Provenance::Kind::padding: return "padding";
    case Provenance::Kind::grid_completion: return "grid_completion";
    case Provenance::Kind::seed: return "seed";
  }
  return "?";
}

std::size_t KakeyaSet::lifted_line_count() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const auto& l) {
    return l.kind == LineRecord::Kind::lifted;
  }));
}

std::size_t KakeyaSet::lifted_point_count() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const auto& p) {
    return p.provenance.kind == Provenance::Kind::lifted;
  }));
}

namespace {

// Complete M to a disjoint partner tuple, lexicographically first; nullopt if none exists.
std::optional<IndexTuple> find_partner_tuple(const IndexTuple& M,
                                             const std::vector<std::vector<std::size_t>>& partners) {
  std::vector<std::size_t> chosen;
  std::set<std::size_t> used(M.entries().begin(), M.entries().end());
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == M.size()) return true;
    for (auto b : partners[M[pos]]) {
      if (used.count(b)) continue;
      used.insert(b);
      chosen.push_back(b);
      if (rec(pos + 1)) return true;
      chosen.pop_back();
      used.erase(b);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return IndexTuple(chosen);
}

class Assembler {
public:
  Assembler(KakeyaSet& k) : k_(k) {}

  void add_point(const ProjPoint& p, Provenance prov) {
    if (index_.insert(p).second) k_.points.push_back({p, std::move(prov)});
  }

  // Walk u + lambda*v until the line carries N points.
  void pad(std::size_t line_index, Provenance::Kind kind) {
    const Subspace& line = k_.lines[line_index].line;
    std::size_t count = 0;
    for (const auto& p : index_.points())
      if (line.contains(p)) ++count;
    const FieldSpec& f = k_.field;
    for (long long lambda = 0; count < k_.N; ++lambda) {
      if (f.kind() == FieldSpec::Kind::prime &&
          static_cast<std::uint64_t>(lambda) >= f.characteristic())
        throw Error(ErrorCode::DegenerateSeed, "line cannot hold N distinct points");
      ProjPoint p = point_on_line(line, Scalar(f, lambda));
      if (index_.insert(p).second) {
        Provenance prov;
        prov.kind = kind;
        prov.line = line_index;
        prov.lambda = lambda;
        k_.points.push_back({p, prov});
        ++count;
      }
    }
  }

private:
  KakeyaSet& k_;
  PointIndex index_;
};

std::vector<std::vector<std::size_t>> all_tuples_with_repeats(std::size_t count, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(length, 0);
  if (count == 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = length;
    while (i > 0 && ++cur[i - 1] == count) cur[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

} // namespace

KakeyaSet assemble(const PlanarSeed& seed, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::UnsupportedDimension, "n = " + std::to_string(n) + " < 2");
  if (seed.N < 2 * (n - 1))
    throw Error(ErrorCode::SeedTooSmall, "N >= 2(n-1) required, but N = " + std::to_string(seed.N) +
                                             " < " + std::to_string(2 * (n - 1)));
  SeedReport rep = seed_report(seed);
  if (!rep.pass) {
    std::string msg = "seed " + seed.name + " fails validation:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw Error(ErrorCode::DegenerateSeed, msg);
  }

  Lifter lift(seed, n);
  KakeyaSet k{seed.field, n, seed.N, {}, {}, {}, {seed.name, rep.epsilon}};
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < seed.N; ++i) d.push_back(seed_direction_parameter(seed, i));
  k.grid.sets.assign(n - 1, d);

  for (const auto& M : ordered_tuples(seed.N, n - 1))
    k.lines.push_back({lift.line(M), lift.direction(M), LineRecord::Kind::lifted, M.entries()});

  Assembler asmb(k);
  for (std::size_t m = 0; m < seed.m_lines.size(); ++m) {
    std::vector<std::vector<std::size_t>> partners(seed.N);
    std::vector<std::size_t> eligible;
    for (std::size_t a = 0; a < seed.N; ++a) {
      partners[a] = lift.partners(a, m);
      if (!partners[a].empty()) eligible.push_back(a);
    }
    for (const auto& local : ordered_tuples(eligible.size(), n - 1)) {
      std::vector<std::size_t> entries;
      for (auto i : local.entries()) entries.push_back(eligible[i]);
      IndexTuple M(entries);
      auto Mbar = find_partner_tuple(M, partners);
      if (!Mbar) continue;
      ProjPoint z = lift.intersection(M, *Mbar, m);
      if (z[n].is_zero())
        throw Error(ErrorCode::DegenerateSeed, "z_" + M.str() + " lies at infinity");
      Provenance prov;
      prov.kind = Provenance::Kind::lifted;
      prov.J = M;
      prov.Jbar = *Mbar;
      prov.m_index = m;
      asmb.add_point(z, prov);
    }
  }

  if (n == 2) {
    const ConstructionFrame& fr = lift.frame();
    for (const auto& sp : seed.points) asmb.add_point(fr.embed(sp.point), Provenance{});
  }

  const std::size_t lifted_lines = k.lines.size();
  for (std::size_t i = 0; i < lifted_lines; ++i) asmb.pad(i, Provenance::Kind::padding);

  const ProjPoint origin = lift.frame().affine_origin();
  for (const auto& e : all_tuples_with_repeats(seed.N, n - 1)) {
    std::set<std::size_t> distinct(e.begin(), e.end());
    if (distinct.size() == e.size()) continue;
    std::vector<Scalar> params;
    for (auto i : e) params.push_back(d[i]);
    ProjPoint dir = lift_direction_closed_form(params, n);
    k.lines.push_back({span(Subspace(origin), Subspace(dir)), dir, LineRecord::Kind::grid_completion, e});
    asmb.pad(k.lines.size() - 1, Provenance::Kind::grid_completion);
  }
  return k;
}

} // namespace kakeya
