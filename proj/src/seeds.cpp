#include "kakeya/seeds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace kakeya {

namespace {

Vector vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.emplace_back(f, x);
  return v;
}

Vector real_vec(const FieldSpec& f, std::initializer_list<double> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Scalar::from_double(f, x));
  return v;
}

Subspace line_through(const Vector& a, const Vector& b, const FieldSpec& f) {
  Subspace l = Subspace::from_vectors({a, b}, f, 2);
  if (l.projective_dim() != 1) throw Error(ErrorCode::DegenerateSeed, "coincident points");
  return l;
}

Subspace hyperplane_at_infinity(const FieldSpec& field, std::size_t ambient_dim) {
  Vector form = zero_vector(field, ambient_dim + 1);
  form.back() = Scalar::one(field);
  return Subspace::from_equations({form}, field, ambient_dim);
}

} // namespace

Subspace planar_line_at_infinity(const FieldSpec& field) { return hyperplane_at_infinity(field, 2); }

ProjPoint planar_vertical_point(const FieldSpec& field) {
  return ProjPoint::normalize(vec(field, {0, 1, 0}));
}

ProjPoint direction_of(const Subspace& line) {
  if (line.projective_dim() != 1) throw Error(ErrorCode::InvalidInput, "not a line");
  Subspace at_inf = meet(line, hyperplane_at_infinity(line.field(), line.ambient_dim()));
  if (at_inf.projective_dim() != 0) throw Error(ErrorCode::InvalidInput, "line lies at infinity");
  return at_inf.as_point();
}

ProjPoint point_on_line(const Subspace& line, const Scalar& lambda) {
  const ProjPoint dir = direction_of(line);
  const std::size_t last = line.ambient_dim();
  for (const auto& row : line.basis()) {
    if (row[last].is_zero()) continue;
    const Scalar inv = row[last].inverse();
    Vector u(row.size(), Scalar::zero(line.field()));
    for (std::size_t i = 0; i < row.size(); ++i) u[i] = row[i] * inv + lambda * dir[i];
    return ProjPoint::normalize(std::move(u));
  }
  throw Error(ErrorCode::InvalidInput, "line has no affine point");
}

Scalar seed_direction_parameter(const PlanarSeed& seed, std::size_t line) {
  const ProjPoint& p = seed.infinite_points.at(line);
  if (p[0].is_zero())
    throw Error(ErrorCode::DegenerateSeed, "seed line " + std::to_string(line) +
                                               " has the vertical direction <(0,1,0)>");
  return p[1];
}

PlanarSeed dual_conic_seed(std::uint64_t q) {
  if (q < 5 || q % 2 == 0 || !is_prime(q))
    throw Error(ErrorCode::UnsupportedField,
                "dual conic seed needs an odd prime q >= 5, got " + std::to_string(q));
  const FieldSpec f = FieldSpec::prime(q);
  PlanarSeed seed{f, q, {}, {}, {}, {}, {}, "dual_conic(q=" + std::to_string(q) + ")"};
  const Subspace inf = planar_line_at_infinity(f);

  PointIndex seen;
  const auto qq = static_cast<long long>(q);
  for (long long t = 0; t < qq; ++t) {
    // tangent to X^2 = YZ at (t, t^2, 1): Y = 2tX - t^2 Z
    Subspace l = line_through(vec(f, {0, -t * t, 1}), vec(f, {1, 2 * t, 0}), f);
    seed.infinite_points.push_back(meet(l, inf).as_point());
    seed.lines.push_back(l);
    for (long long x = 0; x < qq; ++x) {
      ProjPoint p = ProjPoint::normalize(vec(f, {x, 2 * t * x - t * t, 1}));
      if (seen.insert(p).second) seed.points.push_back({p, false});
    }
  }
  for (long long c = 0; c < qq; ++c)
    seed.m_lines.push_back(line_through(vec(f, {c, 0, 1}), vec(f, {0, 1, 0}), f));
  // each vertical line x = c carries (q-1)/2 intersections of tangent pairs
  seed.epsilon.assign(q, Rational(1, 2));
  return seed;
}

PlanarSeed regular_ngon_seed(std::size_t N, double tol) {
  if (N < 5) throw Error(ErrorCode::InvalidInput, "regular N-gon seed needs N >= 5");
  const FieldSpec f = FieldSpec::real(tol);
  const double pi = std::numbers::pi;
  // The line at infinity of the dual picture is the line through the origin at angle phi.
  // phi = pi/(4N) avoids every bisecant angle pi*s/N and every direction 2*pi*a/N + pi/2,
  // so seed lines meet it in distinct points and all double points stay affine.
  const double phi = pi / (4.0 * static_cast<double>(N));
  const double c = std::cos(phi), s = std::sin(phi);
  auto to_seed = [&](double X, double Y, double Z) {
    return real_vec(f, {c * X + s * Y, Z, -s * X + c * Y});
  };

  PlanarSeed seed{f, N, {}, {}, {}, {}, {}, "regular_ngon(N=" + std::to_string(N) + ")"};
  const Subspace inf = planar_line_at_infinity(f);

  std::vector<std::array<double, 3>> coeff(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double theta = 2.0 * pi * static_cast<double>(k) / static_cast<double>(N);
    // polar of the vertex (cos, sin, 1): cos X + sin Y + Z = 0
    coeff[k] = {std::cos(theta), std::sin(theta), 1.0};
    Subspace l = line_through(to_seed(-std::cos(theta), -std::sin(theta), 1.0),
                              to_seed(-std::sin(theta), std::cos(theta), 0.0), f);
    seed.infinite_points.push_back(meet(l, inf).as_point());
    seed.lines.push_back(std::move(l));
  }

  PointIndex seen;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      const auto& u = coeff[a];
      const auto& v = coeff[b];
      // polar of the bisecant through vertices a, b
      ProjPoint p = ProjPoint::normalize(to_seed(u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                                 u[0] * v[1] - u[1] * v[0]));
      if (seen.insert(p).second) seed.points.push_back({p, false});
    }

  for (const auto& l : seed.lines) {
    for (long long lambda = 0;; ++lambda) {
      ProjPoint p = point_on_line(l, Scalar(f, lambda));
      if (seen.insert(p).second) {
        seed.points.push_back({p, true});
        break;
      }
    }
  }

  for (std::size_t k = 0; k < N; ++k) {
    const double alpha = pi * static_cast<double>(k) / static_cast<double>(N);
    seed.m_lines.push_back(
        line_through(to_seed(0.0, 0.0, 1.0), to_seed(std::cos(alpha), std::sin(alpha), 0.0), f));
    if (N % 2 == 1)
      seed.epsilon.emplace_back(1, 2);
    else
      seed.epsilon.emplace_back(k % 2 == 0 ? 1 : 0);
  }
  return seed;
}

SeedReport seed_report(const PlanarSeed& seed) {
  SeedReport rep;
  auto fail = [&rep](std::string msg) { rep.failures.push_back(std::move(msg)); };
  const FieldSpec& f = seed.field;
  const Subspace inf = planar_line_at_infinity(f);
  const ProjPoint vertical = planar_vertical_point(f);

  if (seed.lines.size() != seed.N)
    fail("expected " + std::to_string(seed.N) + " seed lines, found " +
         std::to_string(seed.lines.size()));
  if (seed.m_lines.size() != seed.N)
    fail("expected " + std::to_string(seed.N) + " m-lines, found " +
         std::to_string(seed.m_lines.size()));

  std::vector<ProjPoint> dirs;
  for (std::size_t i = 0; i < seed.lines.size(); ++i) {
    const Subspace& l = seed.lines[i];
    if (l.ambient_dim() != 2 || l.projective_dim() != 1 || l == inf) {
      fail("seed line " + std::to_string(i) + " is not an affine line of the plane");
      continue;
    }
    ProjPoint p = meet(l, inf).as_point();
    if (i < seed.infinite_points.size() && !(seed.infinite_points[i] == p))
      fail("stored infinite point of line " + std::to_string(i) + " is wrong");
    if (p == vertical) fail("seed line " + std::to_string(i) + " passes through x_2 = <(0,1,0)>");
    dirs.push_back(p);
  }
  rep.distinct_directions = true;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j)
      if (dirs[i] == dirs[j]) {
        rep.distinct_directions = false;
        fail("seed lines " + std::to_string(i) + " and " + std::to_string(j) +
             " share an infinite point");
      }

  for (std::size_t k = 0; k < seed.points.size(); ++k)
    if (seed.points[k].point.ambient_dim() != 2 || seed.points[k].point[2].is_zero())
      fail("seed point " + std::to_string(k) + " is not an affine point of the plane");

  std::vector<std::size_t> lines_through(seed.points.size(), 0);
  for (std::size_t i = 0; i < seed.lines.size(); ++i) {
    std::size_t count = 0;
    for (std::size_t k = 0; k < seed.points.size(); ++k)
      if (seed.lines[i].contains(seed.points[k].point)) {
        ++count;
        ++lines_through[k];
      }
    rep.line_point_counts.push_back(count);
    if (count < seed.N)
      fail("seed line " + std::to_string(i) + " carries " + std::to_string(count) + " < N points");
  }

  const Rational half_n(static_cast<long long>(seed.N), 2);
  for (std::size_t i = 0; i < seed.m_lines.size(); ++i) {
    const Subspace& m = seed.m_lines[i];
    if (m.ambient_dim() != 2 || m.projective_dim() != 1 || m == inf || !m.contains(vertical))
      fail("m-line " + std::to_string(i) + " is not an affine line through <(0,1,0)>");
    for (std::size_t j = 0; j < i; ++j)
      if (seed.m_lines[j] == m) fail("m-lines " + std::to_string(j) + " and " +
                                     std::to_string(i) + " coincide");
    std::size_t doubles = 0;
    for (std::size_t k = 0; k < seed.points.size(); ++k)
      if (!seed.points[k].extra && lines_through[k] >= 2 && m.contains(seed.points[k].point))
        ++doubles;
    rep.double_point_counts.push_back(doubles);
    rep.epsilon.push_back(half_n - Rational(static_cast<long long>(doubles)));
  }
  if (!seed.epsilon.empty()) {
    if (seed.epsilon.size() != rep.epsilon.size())
      fail("supplied epsilon has the wrong length");
    else
      for (std::size_t i = 0; i < rep.epsilon.size(); ++i)
        if (seed.epsilon[i] != rep.epsilon[i])
          fail("supplied epsilon_" + std::to_string(i) + " = " + seed.epsilon[i].str() +
               " but measured " + rep.epsilon[i].str());
  }

  rep.epsilon_sorted = rep.epsilon;
  std::sort(rep.epsilon_sorted.begin(), rep.epsilon_sorted.end());
  rep.epsilon_sum = 0;
  for (const auto& e : rep.epsilon) rep.epsilon_sum += e;
  rep.d = seed.N == 0 ? Rational(0) : rep.epsilon_sum / static_cast<long long>(seed.N);
  rep.pass = rep.failures.empty();
  return rep;
}

} // namespace kakeya
