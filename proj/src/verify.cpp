#include "kakeya/verify.hpp"

#include <cstdint>
#include <set>
#include <sstream>

#include "kakeya/polymethod.hpp"

namespace kakeya {

namespace {

class Witnesses {
public:
  Witnesses(VerifyReport& rep, bool verbose) : rep_(rep), verbose_(verbose) {}
  void add(std::string w) {
    ++total_;
    if (verbose_ || rep_.witnesses.size() < default_witness_limit) rep_.witnesses.push_back(std::move(w));
  }
  std::size_t total() const { return total_; }

private:
  VerifyReport& rep_;
  bool verbose_;
  std::size_t total_ = 0;
};

std::vector<ProjPoint> distinct_points(const KakeyaSet& K) {
  PointIndex idx;
  for (const auto& p : K.points) idx.insert(p.point);
  return idx.points();
}

std::string str(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string decimal(const Rational& q) {
  std::ostringstream os;
  os << q.convert_to<double>();
  return os.str();
}

std::optional<std::size_t> find_scalar(const std::vector<Scalar>& set, const Scalar& x) {
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i] == x) return i;
  return std::nullopt;
}

} // namespace

VerifyReport verify_incidence(const KakeyaSet& K, bool verbose) {
  VerifyReport rep;
  rep.check = "incidence";
  Witnesses w(rep, verbose);
  const auto pts = distinct_points(K);
  std::vector<ProjPoint> lifted;
  {
    PointIndex idx;
    for (const auto& p : K.points)
      if (p.provenance.kind == Provenance::Kind::lifted && idx.insert(p.point).second)
        lifted.push_back(p.point);
  }
  std::size_t min_count = pts.size() + 1, max_count = 0, total = 0, lifted_max = 0;
  for (std::size_t i = 0; i < K.lines.size(); ++i) {
    const Subspace& line = K.lines[i].line;
    std::size_t count = 0;
    for (const auto& p : pts)
      if (line.contains(p)) ++count;
    std::size_t lc = 0;
    if (K.lines[i].kind == LineRecord::Kind::lifted)
      for (const auto& p : lifted)
        if (line.contains(p)) ++lc;
    lifted_max = std::max(lifted_max, lc);
    min_count = std::min(min_count, count);
    max_count = std::max(max_count, count);
    total += count;
    if (count < K.N)
      w.add("line " + std::to_string(i) + " carries " + std::to_string(count) + " < " +
            std::to_string(K.N) + " points");
  }
  rep.pass = w.total() == 0 && !K.lines.empty();
  if (K.lines.empty()) w.add("no lines");
  rep.measured["lines"] = std::to_string(K.lines.size());
  rep.measured["points"] = std::to_string(pts.size());
  rep.measured["min_points_per_line"] = std::to_string(K.lines.empty() ? 0 : min_count);
  rep.measured["max_points_per_line"] = std::to_string(max_count);
  rep.measured["total_incidences"] = std::to_string(total);
  rep.measured["deficient_lines"] = std::to_string(w.total());
  rep.measured["max_lifted_points_per_lifted_line"] = std::to_string(lifted_max);
  rep.measured["lifted_points_at_most_N_per_line"] = lifted_max <= K.N ? "true" : "false";
  return rep;
}

VerifyReport verify_directions(const KakeyaSet& K, bool verbose) {
  VerifyReport rep;
  rep.check = "directions";
  Witnesses w(rep, verbose);

  if (K.grid.sets.size() + 1 != K.n) w.add("grid has " + std::to_string(K.grid.sets.size()) +
                                           " coordinate sets, expected n-1");
  for (std::size_t k = 0; k < K.grid.sets.size(); ++k) {
    const auto& A = K.grid.sets[k];
    if (A.size() != K.N) w.add("grid set A_" + std::to_string(k + 1) + " has size " + std::to_string(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        if (A[i] == A[j]) w.add("grid set A_" + std::to_string(k + 1) + " repeats an element");
  }

  std::vector<ProjPoint> dirs;
  PointIndex seen;
  std::set<std::vector<std::size_t>> covered;
  for (std::size_t i = 0; i < K.lines.size(); ++i) {
    const auto& rec = K.lines[i];
    if (rec.line.projective_dim() != 1 || rec.line.ambient_dim() != K.n) {
      w.add("line " + std::to_string(i) + " is not a line of PG_n");
      continue;
    }
    ProjPoint dir = [&] {
      try {
        return std::optional(direction_of(rec.line));
      } catch (const Error&) {
        return std::optional<ProjPoint>();
      }
    }().value_or(rec.direction);
    if (!(dir == rec.direction)) w.add("line " + std::to_string(i) + " stored direction is wrong");
    if (!dir[K.n].is_zero()) {
      w.add("line " + std::to_string(i) + " lies at infinity");
      continue;
    }
    if (auto prev = seen.find(dir))
      w.add("lines " + std::to_string(*prev) + " and " + std::to_string(i) + " share a direction");
    seen.insert(dir);

    auto d = grid_parameters(dir);
    if (!d || d->size() != K.grid.sets.size()) {
      w.add("line " + std::to_string(i) + " direction " + dir.key() + " is not of the form <(1,...,0)>");
      continue;
    }
    std::vector<std::size_t> cell;
    bool inside = true;
    for (std::size_t k = 0; k < d->size(); ++k) {
      auto idx = find_scalar(K.grid.sets[k], (*d)[k]);
      if (!idx) {
        inside = false;
        break;
      }
      cell.push_back(*idx);
    }
    if (!inside) {
      w.add("line " + std::to_string(i) + " direction lies outside the grid");
      continue;
    }
    covered.insert(cell);
  }

  std::size_t grid_size = K.grid.sets.empty() ? 0 : 1;
  for (const auto& A : K.grid.sets) grid_size *= A.size();
  const bool full = covered.size() == grid_size && grid_size > 0;
  if (!full)
    w.add("grid covered in " + std::to_string(covered.size()) + " of " + std::to_string(grid_size) +
          " directions");
  rep.pass = w.total() == 0;
  rep.measured["directions"] = std::to_string(seen.size());
  rep.measured["grid_size"] = std::to_string(grid_size);
  rep.measured["grid_cells_covered"] = std::to_string(covered.size());
  rep.measured["lifted_directions"] = std::to_string(K.lifted_line_count());
  return rep;
}

Rational lifted_point_formula(std::size_t N, std::size_t n, const std::vector<Rational>& epsilon) {
  Rational total = 0;
  const Rational half(static_cast<long long>(N), 2);
  for (const auto& e : epsilon) {
    Rational prod = 1;
    for (std::size_t t = 0; t + 2 <= n; ++t) prod *= half - e - static_cast<long long>(t);
    total += prod;
  }
  return total;
}

VerifyReport verify_size(const KakeyaSet& K, bool verbose) {
  VerifyReport rep;
  rep.check = "size";
  Witnesses w(rep, verbose);
  const auto pts = distinct_points(K);
  const long long N = static_cast<long long>(K.N);
  Rational leading = power(Rational(N), static_cast<unsigned>(K.n)) /
                     power(Rational(2), static_cast<unsigned>(K.n - 1));
  Rational c = (Rational(static_cast<long long>(pts.size())) - leading) /
               power(Rational(N), static_cast<unsigned>(K.n - 1));
  rep.measured["points"] = std::to_string(pts.size());
  rep.measured["leading_term"] = str(leading);
  rep.measured["leading_term_decimal"] = decimal(leading);
  rep.measured["c"] = str(c);
  rep.measured["c_decimal"] = decimal(c);

  std::vector<ProjPoint> lifted;
  {
    PointIndex idx;
    for (const auto& p : K.points)
      if (p.provenance.kind == Provenance::Kind::lifted && idx.insert(p.point).second)
        lifted.push_back(p.point);
  }
  rep.measured["lifted_points"] = std::to_string(lifted.size());

  if (!lifted.empty()) {
    if (!K.seed_meta.epsilon.empty()) {
      Rational expected = lifted_point_formula(K.N, K.n, K.seed_meta.epsilon);
      rep.measured["lifted_points_formula"] = str(expected);
      if (expected != Rational(static_cast<long long>(lifted.size())))
        w.add("lifted point count " + std::to_string(lifted.size()) + " differs from formula " +
              str(expected));
    }
    const std::size_t want = std::size_t{1} << (K.n - 1);
    std::size_t min_on = SIZE_MAX, max_on = 0;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      std::size_t on = 0;
      for (const auto& l : K.lines)
        if (l.kind == LineRecord::Kind::lifted && l.line.contains(lifted[i])) ++on;
      min_on = std::min(min_on, on);
      max_on = std::max(max_on, on);
      if (on != want)
        w.add("lifted point " + lifted[i].key() + " lies on " + std::to_string(on) + " lifted lines, expected " +
              std::to_string(want));
    }
    rep.measured["lifted_lines_per_lifted_point_min"] = std::to_string(min_on);
    rep.measured["lifted_lines_per_lifted_point_max"] = std::to_string(max_on);
  }
  rep.pass = w.total() == 0;
  return rep;
}

VerifyReport verify_bound_consistency(const KakeyaSet& K, std::uint64_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidInput, "r must be >= 1");
  VerifyReport dirs = verify_directions(K);
  if (!dirs.pass)
    throw Error(ErrorCode::GridMissing, "direction set does not contain the N^(n-1) grid");
  VerifyReport rep;
  rep.check = "bound_consistency(r=" + std::to_string(r) + ")";
  const auto pts = distinct_points(K);
  BigInt lhs = binomial(2 * r + K.n - 2, K.n) * pts.size();
  BigInt rhs = binomial(r * K.N + K.n - 1, K.n);
  rep.measured["r"] = std::to_string(r);
  rep.measured["points"] = std::to_string(pts.size());
  rep.measured["lhs"] = lhs.str();
  rep.measured["rhs"] = rhs.str();
  rep.measured["bound"] = str(grid_bound_value(K.N, K.n, r));
  rep.pass = lhs >= rhs;
  if (!rep.pass)
    rep.witnesses.push_back("binom(2r+n-2,n)|S| = " + lhs.str() + " < binom(rN+n-1,n) = " + rhs.str());
  return rep;
}

std::vector<VerifyReport> verify_all(const KakeyaSet& K, std::optional<std::uint64_t> r, bool verbose) {
  std::vector<VerifyReport> out{verify_incidence(K, verbose), verify_directions(K, verbose),
                                verify_size(K, verbose)};
  if (r) {
    if (out[1].pass) {
      out.push_back(verify_bound_consistency(K, *r));
    } else {
      VerifyReport rep;
      rep.check = "bound_consistency(r=" + std::to_string(*r) + ")";
      rep.witnesses.push_back("GridMissing: direction set does not contain the grid");
      out.push_back(rep);
    }
  }
  return out;
}

} // namespace kakeya
