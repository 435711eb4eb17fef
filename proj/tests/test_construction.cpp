#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kakeya/construction.hpp"
#include "support.hpp"

using namespace kakeya;
using testing::error_code;
using testing::Gen;
using testing::vec;

namespace {

// Lines Y = d X + c Z over Q with the given slopes, enough for the direction recursion.
PlanarSeed rational_slopes(const std::vector<Rational>& slopes) {
  const auto q = FieldSpec::rational();
  PlanarSeed seed{q, slopes.size(), {}, {}, {}, {}, {}, "slopes"};
  long long c = 0;
  for (const auto& d : slopes) {
    Vector base{Scalar(q, 0), Scalar(q, ++c), Scalar(q, 1)};
    Vector dir{Scalar(q, 1), Scalar(q, d), Scalar(q, 0)};
    seed.lines.push_back(Subspace::from_vectors({base, dir}, q, 2));
    seed.infinite_points.push_back(ProjPoint::normalize(dir));
  }
  return seed;
}

// (1, d_1, (-1)^i (d_{i-1} - d_{i-2}), ..., 0), written out directly.
Vector closed_form_oracle(const std::vector<Scalar>& d, std::size_t n) {
  const FieldSpec f = d.front().field();
  Vector v(n + 1, Scalar::zero(f));
  v[0] = Scalar::one(f);
  v[1] = d[0];
  for (std::size_t i = 3; i <= d.size() + 1; ++i) {
    Scalar s = d[i - 2] - d[i - 3];
    v[i - 1] = (i % 2 == 0) ? s : -s;
  }
  return v;
}

IndexTuple switched(const IndexTuple& J, const IndexTuple& Jbar, unsigned mask, bool first) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < J.size(); ++i) {
    const bool swap = (mask >> i) & 1U;
    e.push_back((swap != first) ? J[i] : Jbar[i]);
  }
  return IndexTuple(e);
}

} // namespace

TEST_CASE("frame") {
  const auto f = FieldSpec::prime(7);
  ConstructionFrame fr = build_frame(3, f);
  CHECK(fr.y(3).coords() == vec(f, {0, 1, 1, 0}));
  CHECK(fr.x(0).coords() == vec(f, {1, 1, 1, 1}));
  CHECK(fr.x(2).coords() == vec(f, {0, 1, 0, 0}));
  CHECK(fr.hyperplane_at_infinity() == Subspace::from_equations({vec(f, {0, 0, 0, 1})}, f, 3));
  CHECK(fr.affine_origin().coords() == vec(f, {0, 0, 0, 1}));
  CHECK(fr.sigma(3) == Subspace::whole(f, 3));
  CHECK(fr.pi(1) == Subspace(fr.x(1)));
  CHECK(fr.sigma(2).projective_dim() == 2);

  ConstructionFrame two = build_frame(2, f);
  CHECK(error_code([&] { two.y(3); }) == ErrorCode::InvalidInput);
  CHECK(error_code([&] { build_frame(1, f); }) == ErrorCode::UnsupportedDimension);

  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i <= 3; ++i) pts.push_back(fr.x(i));
  CHECK(in_general_position(pts));

  // the planar line at infinity lands in pi_n, the planar vertical point on x_2
  CHECK(fr.hyperplane_at_infinity().contains(fr.embed(planar_line_at_infinity(f))));
  CHECK(fr.embed(planar_vertical_point(f)) == fr.x(2));
}

TEST_CASE("index tuples") {
  CHECK(error_code([] { IndexTuple{1, 2, 1}; }) == ErrorCode::InvalidInput);
  IndexTuple J{4, 2, 7};
  CHECK(J.without_last() == IndexTuple{4, 2});
  CHECK(J.without_second_last() == IndexTuple{4, 7});
  CHECK(J.str() == "(4,2,7)");

  auto all = ordered_tuples(4, 2);
  CHECK(all.size() == 12);
  CHECK(all.front() == IndexTuple{0, 1});
  CHECK(all.back() == IndexTuple{3, 2});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(ordered_tuples(11, 3).size() == 990);
}

TEST_CASE("lifted lines") {
  PlanarSeed seed = dual_conic_seed(7);
  Lifter lift(seed, 3);
  const ConstructionFrame& fr = lift.frame();
  CHECK(lift.line({2}) == fr.embed(seed.lines[2]));
  CHECK(lift.direction({2}) == fr.embed(seed.infinite_points[2]));

  for (const auto& J : ordered_tuples(7, 2)) {
    const std::size_t b = J[0], a = J[1];
    Subspace by_hand = meet(span(Subspace(fr.x(3)), fr.embed(seed.lines[b])),
                            span(Subspace(fr.y(3)), fr.embed(seed.lines[a])));
    CHECK(by_hand.projective_dim() == 1);
    CHECK(lift.line(J) == by_hand);
  }
  CHECK(error_code([&] { lift.line({0, 1, 2}); }) == ErrorCode::InvalidInput);
  CHECK(error_code([&] { lift.line({9}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("lifting is injective over F_11") {
  PlanarSeed seed = dual_conic_seed(11);
  Lifter lift(seed, 4);
  for (std::size_t k = 1; k <= 3; ++k) {
    std::set<std::string> lines, dirs;
    const auto tuples = ordered_tuples(11, k);
    for (const auto& J : tuples) {
      Subspace l = lift.line(J);
      ProjPoint p = lift.direction(J);
      CHECK(l.projective_dim() == 1);
      CHECK(l.contains(p));
      CHECK(lift.frame().pi(k + 1).contains(p));
      CHECK(lift.frame().sigma(k + 1).contains(l));
      lines.insert(l.key());
      dirs.insert(p.key());
    }
    CHECK(lines.size() == tuples.size());
    CHECK(dirs.size() == tuples.size());
  }
}

TEST_CASE("closed form for directions") {
  PlanarSeed seed = rational_slopes({Rational(2), Rational(5), Rational(-1, 3), Rational(7, 2)});
  Lifter lift(seed, 4);
  const auto q = seed.field;
  CHECK(lift.direction({0, 1}).coords() == vec(q, {1, 2, -3, 0, 0}));
  CHECK(lift.grid_coordinates({0, 1}).coords() == vec(q, {1, 2, -3, 0, 0}));
  CHECK(lift.direction({0}).coords() == vec(q, {1, 2, 0, 0, 0}));
  for (const auto& J : ordered_tuples(4, 3)) {
    std::vector<Scalar> d;
    for (auto e : J.entries()) d.push_back(seed_direction_parameter(seed, e));
    CHECK(lift.direction(J).coords() == closed_form_oracle(d, 4));
  }

  PlanarSeed f13 = dual_conic_seed(13);
  Lifter l13(f13, 4);
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& J : ordered_tuples(13, k)) {
      std::vector<Scalar> d;
      for (auto e : J.entries()) d.push_back(seed_direction_parameter(f13, e));
      REQUIRE(l13.direction(J).coords() == closed_form_oracle(d, 4));
    }
}

TEST_CASE("grid parameters invert the closed form") {
  Gen g(8);
  for (std::uint64_t p : {7ULL, 13ULL}) {
    const auto f = FieldSpec::prime(p);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
      std::vector<Scalar> d;
      for (std::size_t i = 0; i + 1 < n; ++i) d.push_back(g.scalar(f));
      auto back = grid_parameters(lift_direction_closed_form(d, n));
      REQUIRE(back.has_value());
      CHECK(*back == d);
    }
    CHECK_FALSE(grid_parameters(ProjPoint::normalize(vec(f, {0, 1, 0, 0}))).has_value());
    CHECK_FALSE(grid_parameters(ProjPoint::normalize(vec(f, {1, 2, 3, 1}))).has_value());
  }
}

TEST_CASE("intersection points and switch invariance") {
  PlanarSeed seed = dual_conic_seed(7);
  Lifter lift(seed, 3);
  std::size_t checked = 0;
  for (std::size_t m = 0; m < seed.m_lines.size(); ++m) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < seed.N; ++a)
      for (auto b : lift.partners(a, m))
        if (a < b) pairs.emplace_back(a, b);
    CHECK(pairs.size() == 3);
    for (const auto& [a, b] : pairs) {
      ProjPoint z = lift.intersection({a}, {b}, m);
      CHECK(lift.line({a}).contains(z));
      CHECK(lift.line({b}).contains(z));
      CHECK(lift.frame().embed(seed.m_lines[m]).contains(z));
      CHECK(z == lift.intersection({b}, {a}, m));
    }
    for (const auto& [a1, b1] : pairs)
      for (const auto& [a2, b2] : pairs) {
        if (a1 == a2) continue;
        IndexTuple J{a1, a2}, Jbar{b1, b2};
        ProjPoint z = lift.intersection(J, Jbar, m);
        CHECK(lift.line(J).contains(z));
        CHECK_FALSE(z[3].is_zero());
        for (unsigned mask = 0; mask < 4; ++mask)
          CHECK(lift.intersection(switched(J, Jbar, mask, true), switched(J, Jbar, mask, false), m) == z);
        ++checked;
      }
  }
  CHECK(checked == 7 * 6);
  CHECK(error_code([&] { lift.intersection({0}, {0}, 0); }) == ErrorCode::InvalidInput);
  // tangents 0 and 1 meet on x = 1/2 = 4, not on x = 0
  CHECK(error_code([&] { lift.intersection({0}, {1}, 0); }) == ErrorCode::UndefinedBasePoint);
}

TEST_CASE("memoization does not change results") {
  PlanarSeed seed = dual_conic_seed(7);
  Lifter memo(seed, 4), plain(seed, 4, false);
  Gen g(4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = static_cast<std::size_t>(g.integer(1, 3));
    auto all = ordered_tuples(7, k);
    const IndexTuple& J = all[g.index(all.size())];
    CHECK(memo.line(J) == plain.line(J));
    CHECK(memo.direction(J) == plain.direction(J));
    CHECK(memo.line(J) == plain.line(J));
  }
  for (std::size_t m = 0; m < 7; ++m) {
    std::vector<std::size_t> a, b;
    for (std::size_t x = 0; x < 7 && a.size() < 3; ++x) {
      auto ps = memo.partners(x, m);
      if (ps.empty() || x > ps.front()) continue;
      a.push_back(x);
      b.push_back(ps.front());
    }
    REQUIRE(a.size() == 3);
    CHECK(memo.intersection(IndexTuple(a), IndexTuple(b), m) == plain.intersection(IndexTuple(a), IndexTuple(b), m));
  }
}

TEST_CASE("assembly over F_7 in dimension 3") {
  PlanarSeed seed = dual_conic_seed(7);
  KakeyaSet K = assemble(seed, 3);
  CHECK(K.lifted_line_count() == 42);
  CHECK(K.lines.size() == 49);
  CHECK(K.grid.sets.size() == 2);
  CHECK(K.lifted_point_count() == 42);

  std::vector<const PointRecord*> lifted;
  for (const auto& p : K.points)
    if (p.provenance.kind == Provenance::Kind::lifted) lifted.push_back(&p);
  for (const auto* p : lifted) {
    std::size_t on = 0;
    for (const auto& l : K.lines)
      if (l.kind == LineRecord::Kind::lifted && l.line.contains(p->point)) ++on;
    CHECK(on == 4);
    CHECK_FALSE(p->point[3].is_zero());
  }
  for (const auto& l : K.lines) {
    std::size_t on = 0, lifted_on = 0;
    for (const auto& p : K.points)
      if (l.line.contains(p.point)) {
        ++on;
        if (p.provenance.kind == Provenance::Kind::lifted) ++lifted_on;
      }
    CHECK(on >= 7);
    CHECK(lifted_on <= 7);
  }

  std::set<std::string> keys;
  for (const auto& p : K.points) keys.insert(p.point.key());
  CHECK(keys.size() == K.points.size());

  for (const auto& p : K.points)
    if (p.provenance.kind == Provenance::Kind::padding || p.provenance.kind == Provenance::Kind::grid_completion)
      CHECK(K.lines[p.provenance.line].line.contains(p.point));
}

TEST_CASE("assembly counts match the product formula") {
  // lifted points: sum over m-lines of (N/2 - eps)(N/2 - eps - 1)...(N/2 - eps - n + 2)
  for (auto [q, n] : {std::pair<std::uint64_t, std::size_t>{5, 2}, {5, 3}, {7, 3}, {7, 4}, {11, 3}, {13, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    KakeyaSet K = assemble(dual_conic_seed(q), n);
    // eps = 1/2 on every m-line, so N/2 - eps = (q - 1)/2
    std::size_t per_line = 1;
    for (std::size_t t = 0; t + 2 <= n; ++t) per_line *= (q - 1) / 2 - t;
    CHECK(K.lifted_point_count() == q * per_line);
    std::size_t falling = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) falling *= q - i;
    CHECK(K.lifted_line_count() == falling);
  }
}

TEST_CASE("dimension 2 passes the seed through") {
  PlanarSeed seed = dual_conic_seed(7);
  KakeyaSet K = assemble(seed, 2);
  CHECK(K.lines.size() == 7);
  ConstructionFrame fr = build_frame(2, seed.field);
  for (std::size_t i = 0; i < 7; ++i) CHECK(K.lines[i].line == fr.embed(seed.lines[i]));
  CHECK(K.points.size() == seed.points.size());
  for (const auto& sp : seed.points) {
    bool found = false;
    for (const auto& p : K.points) found = found || p.point == fr.embed(sp.point);
    CHECK(found);
  }
}

TEST_CASE("assembly preconditions") {
  auto msg_of = [](auto&& fn) -> std::string {
    try {
      fn();
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_code([] { assemble(dual_conic_seed(5), 4); }) == ErrorCode::SeedTooSmall);
  CHECK(msg_of([] { assemble(dual_conic_seed(5), 4); }).find("N >= 2(n-1)") != std::string::npos);
  CHECK(error_code([] { assemble(dual_conic_seed(5), 1); }) == ErrorCode::UnsupportedDimension);

  PlanarSeed bad = dual_conic_seed(7);
  bad.epsilon[3] = 0;
  CHECK(error_code([&] { assemble(bad, 3); }) == ErrorCode::DegenerateSeed);
}

TEST_CASE("N-gon assembly under tolerance") {
  for (std::size_t N : {8u, 9u}) {
    KakeyaSet K = assemble(regular_ngon_seed(N), 3);
    CHECK(K.lifted_line_count() == N * (N - 1));
    CHECK(K.lines.size() == N * N);
    for (const auto& l : K.lines) {
      std::size_t on = 0;
      for (const auto& p : K.points)
        if (l.line.contains(p.point)) ++on;
      CHECK(on >= N);
    }
  }
}
