#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "kakeya/seeds.hpp"
#include "support.hpp"

using namespace kakeya;
using testing::error_code;
using testing::vec;

namespace {

// Tangents y = 2t x - t^2 at t_i != t_j meet at ((t_i + t_j)/2, t_i t_j).
std::vector<std::set<std::pair<long long, long long>>> conic_pairs_by_x(long long q) {
  std::vector<std::set<std::pair<long long, long long>>> by_x(static_cast<std::size_t>(q));
  const long long half = (q + 1) / 2;
  for (long long a = 0; a < q; ++a)
    for (long long b = a + 1; b < q; ++b) by_x[static_cast<std::size_t>((a + b) * half % q)].insert({a, b});
  return by_x;
}

std::set<std::pair<long long, long long>> conic_points(long long q) {
  std::set<std::pair<long long, long long>> pts;
  for (long long t = 0; t < q; ++t)
    for (long long x = 0; x < q; ++x) pts.insert({x, ((2 * t * x - t * t) % q + q) % q});
  return pts;
}

// Double points of the dual N-gon on each line through the origin at angle pi k / N, in the
// original polar plane, with plain doubles.
std::vector<std::size_t> ngon_counts(std::size_t N) {
  const double pi = std::numbers::pi;
  std::vector<std::array<double, 3>> c(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double th = 2 * pi * static_cast<double>(k) / static_cast<double>(N);
    c[k] = {std::cos(th), std::sin(th), 1.0};
  }
  std::vector<std::size_t> counts(N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      const auto& u = c[a];
      const auto& v = c[b];
      const double x = u[1] * v[2] - u[2] * v[1], y = u[2] * v[0] - u[0] * v[2];
      for (std::size_t k = 0; k < N; ++k) {
        const double al = pi * static_cast<double>(k) / static_cast<double>(N);
        if (std::abs(-std::sin(al) * x + std::cos(al) * y) < 1e-9) ++counts[k];
      }
    }
  return counts;
}

} // namespace

TEST_CASE("conic double points, brute force") {
  auto by_x = conic_pairs_by_x(5);
  CHECK(by_x[1] == std::set<std::pair<long long, long long>>{{0, 2}, {3, 4}});
  for (long long q : {5, 7, 11, 13}) {
    auto pairs = conic_pairs_by_x(q);
    for (const auto& s : pairs) CHECK(static_cast<long long>(s.size()) == (q - 1) / 2);

    PlanarSeed seed = dual_conic_seed(static_cast<std::uint64_t>(q));
    SeedReport rep = seed_report(seed);
    CHECK(rep.pass);
    REQUIRE(rep.double_point_counts.size() == static_cast<std::size_t>(q));
    // m-line c is x = c
    for (long long c = 0; c < q; ++c) {
      CHECK(seed.m_lines[static_cast<std::size_t>(c)].contains(
          ProjPoint::normalize(vec(seed.field, {c, 0, 1}))));
      CHECK(rep.double_point_counts[static_cast<std::size_t>(c)] == pairs[static_cast<std::size_t>(c)].size());
    }
  }
}

TEST_CASE("conic seed shape") {
  PlanarSeed seed = dual_conic_seed(5);
  CHECK(seed.N == 5);
  CHECK(seed.lines.size() == 5);
  CHECK(seed.points.size() == conic_points(5).size());
  CHECK(seed.points.size() == 15);
  for (const auto& sp : seed.points) {
    CHECK_FALSE(sp.extra);
    const Scalar z = sp.point[2];
    CHECK(conic_points(5).count({static_cast<long long>((sp.point[0] / z).residue()),
                                 static_cast<long long>((sp.point[1] / z).residue())}) == 1);
  }
  SeedReport rep = seed_report(seed);
  for (auto c : rep.line_point_counts) CHECK(c == 5);
  CHECK(rep.epsilon == std::vector<Rational>(5, Rational(1, 2)));
  CHECK(rep.epsilon_sum == Rational(5, 2));
  CHECK(rep.d == Rational(1, 2));
  CHECK(rep.distinct_directions);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(seed_direction_parameter(seed, i) == Scalar(seed.field, 2 * static_cast<long long>(i)));

  CHECK(seed_report(dual_conic_seed(7)).d == Rational(1, 2));
}

TEST_CASE("conic seed rejects unsupported q") {
  for (std::uint64_t q : {2ULL, 3ULL, 4ULL, 9ULL, 15ULL})
    CHECK(error_code([&] { dual_conic_seed(q); }) == ErrorCode::UnsupportedField);
}

TEST_CASE("repeated direction is reported") {
  PlanarSeed seed = dual_conic_seed(7);
  const FieldSpec f = seed.field;
  // tangent t = 0 is Y = 0; Y = Z is parallel to it
  seed.lines[1] = Subspace::from_vectors({vec(f, {0, 1, 1}), vec(f, {1, 0, 0})}, f, 2);
  seed.infinite_points[1] = ProjPoint::normalize(vec(f, {1, 0, 0}));
  SeedReport rep = seed_report(seed);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.distinct_directions);
  bool mentioned = false;
  for (const auto& s : rep.failures) mentioned = mentioned || s.find("share an infinite point") != std::string::npos;
  CHECK(mentioned);
}

TEST_CASE("wrong epsilon and missing points are reported") {
  PlanarSeed seed = dual_conic_seed(7);
  seed.epsilon[0] = Rational(3, 2);
  CHECK_FALSE(seed_report(seed).pass);

  PlanarSeed thin = dual_conic_seed(7);
  thin.points.pop_back();
  SeedReport rep = seed_report(thin);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("regular N-gon seeds") {
  CHECK(error_code([] { regular_ngon_seed(4); }) == ErrorCode::InvalidInput);

  // chord through vertices 0 and 1 of a square points along (-1, 1)
  {
    const double pi = std::numbers::pi;
    const double dx = std::cos(pi / 2) - 1.0, dy = std::sin(pi / 2);
    CHECK(dx / dy == doctest::Approx(-std::tan(pi * 1 / 4)));
  }

  PlanarSeed six = regular_ngon_seed(6);
  for (const auto& l : six.lines) {
    std::size_t plain = 0, extra = 0;
    for (const auto& sp : six.points)
      if (l.contains(sp.point)) ++(sp.extra ? extra : plain);
    CHECK(plain == 5);
    CHECK(extra == 1);
  }

  for (std::size_t N : {5u, 6u, 8u, 9u, 12u}) {
    CAPTURE(N);
    PlanarSeed seed = regular_ngon_seed(N);
    SeedReport rep = seed_report(seed);
    CHECK(rep.pass);
    CHECK(rep.distinct_directions);
    for (auto c : rep.line_point_counts) CHECK(c >= N);

    auto oracle = ngon_counts(N);
    auto measured = rep.double_point_counts;
    std::sort(oracle.begin(), oracle.end());
    std::sort(measured.begin(), measured.end());
    CHECK(measured == oracle);

    std::vector<Rational> want;
    for (std::size_t k = 0; k < N; ++k)
      want.push_back(N % 2 == 1 ? Rational(1, 2) : Rational(k < N / 2 ? 0 : 1));
    CHECK(rep.epsilon_sorted == want);
  }
  SeedReport r8 = seed_report(regular_ngon_seed(8));
  CHECK(r8.epsilon_sum == 4);
  CHECK(r8.d == Rational(1, 2));
  CHECK(seed_report(regular_ngon_seed(9)).epsilon_sum == Rational(9, 2));
}

TEST_CASE("points on lines") {
  const auto f = FieldSpec::prime(7);
  Subspace l = Subspace::from_vectors({vec(f, {0, 3, 1}), vec(f, {1, 2, 0})}, f, 2);
  CHECK(direction_of(l) == ProjPoint::normalize(vec(f, {1, 2, 0})));
  std::set<std::string> seen;
  for (long long lam = 0; lam < 7; ++lam) {
    ProjPoint p = point_on_line(l, Scalar(f, lam));
    CHECK(l.contains(p));
    CHECK_FALSE(p[2].is_zero());
    seen.insert(p.key());
  }
  CHECK(seen.size() == 7);
  CHECK(error_code([&] { point_on_line(planar_line_at_infinity(f), Scalar(f, 0)); }).has_value());
}
