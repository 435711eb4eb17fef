#include "kakeya/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace kakeya {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Scalar scalar_from_json(const Json& j, const FieldSpec& f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  if (j.is_number_float() && !f.is_exact()) return Scalar::from_double(f, j.get<double>());
  bad("coordinate must be a string");
}

std::vector<Vector> basis_from_json(const Json& j, const FieldSpec& f) {
  if (!j.is_array()) bad("basis must be an array of coordinate lists");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, f));
  return rows;
}

Subspace subspace_from_json(const Json& j, const FieldSpec& f, std::size_t ambient) {
  auto rows = basis_from_json(need(j, "basis"), f);
  for (const auto& r : rows)
    if (r.size() != ambient + 1) throw Error(ErrorCode::AmbientMismatch, "basis vector has the wrong length");
  return Subspace::from_vectors(rows, f, ambient);
}

Json basis_to_json(const Subspace& s) {
  Json b = Json::array();
  for (const auto& r : s.basis()) b.push_back(vector_to_json(r));
  return b;
}

Json tuple_to_json(const std::vector<std::size_t>& t) {
  Json a = Json::array();
  for (auto x : t) a.push_back(x);
  return a;
}

std::vector<std::size_t> tuple_from_json(const Json& j) {
  if (!j.is_array()) bad("index tuple must be an array");
  std::vector<std::size_t> t;
  for (const auto& x : j) t.push_back(as_size(x, "tuple entry"));
  return t;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rational_string(q));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) bad("epsilon must be an array");
  std::vector<Rational> v;
  for (const auto& x : j) {
    if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) v.emplace_back(x.get<long long>());
    else bad("epsilon entries must be strings like \"1/2\"");
  }
  return v;
}

Json attestations_to_json(const std::vector<Attestation>& as) {
  Json a = Json::array();
  for (const auto& x : as)
    a.push_back(Json{{"point", vector_to_json(x.point)}, {"multiplicity", x.multiplicity}, {"ok", x.ok}});
  return a;
}

double to_decimal(const Rational& q) { return q.convert_to<double>(); }

} // namespace

std::string rational_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    bad("bad rational '" + text + "'");
  }
}

Json field_to_json(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldSpec::Kind::prime: return Json{{"kind", "prime"}, {"p", f.characteristic()}};
    case FieldSpec::Kind::rational: return Json{{"kind", "rational"}};
    case FieldSpec::Kind::real: return Json{{"kind", "real"}, {"tol", f.tolerance()}};
  }
  return {};
}

FieldSpec field_from_json(const Json& j, double default_tol) {
  const auto& kind = need(j, "kind");
  if (!kind.is_string()) bad("field kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "prime") {
    const auto& p = need(j, "p");
    if (!p.is_number_unsigned()) bad("field p must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  if (k == "rational") return FieldSpec::rational();
  if (k == "real") {
    double tol = default_tol;
    if (j.contains("tol")) {
      if (!j.at("tol").is_number()) bad("field tol must be a number");
      tol = j.at("tol").get<double>();
    }
    return FieldSpec::real(tol);
  }
  throw Error(ErrorCode::UnsupportedField, "unknown field kind '" + k + "'");
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Vector vector_from_json(const Json& j, const FieldSpec& f) {
  if (!j.is_array() || j.empty()) bad("coordinates must be a non-empty array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x, f));
  return v;
}

Json kakeya_to_json(const KakeyaSet& K) {
  Json grid = Json::array();
  for (const auto& A : K.grid.sets) grid.push_back(vector_to_json(A));

  Json lines = Json::array();
  for (const auto& l : K.lines)
    lines.push_back(Json{{"basis", basis_to_json(l.line)},
                         {"direction", vector_to_json(l.direction.coords())},
                         {"provenance",
                          {{"kind", l.kind == LineRecord::Kind::lifted ? "lifted" : "grid_completion"},
                           {"tuple", tuple_to_json(l.tuple)}}}});

  Json points = Json::array();
  for (const auto& p : K.points) {
    Json prov{{"kind", to_string(p.provenance.kind)}};
    switch (p.provenance.kind) {
      case Provenance::Kind::lifted:
        prov["J"] = tuple_to_json(p.provenance.J.entries());
        prov["Jbar"] = tuple_to_json(p.provenance.Jbar.entries());
        prov["m_index"] = p.provenance.m_index;
        break;
      case Provenance::Kind::padding:
      case Provenance::Kind::grid_completion:
        prov["line"] = p.provenance.line;
        prov["lambda"] = p.provenance.lambda;
        break;
      case Provenance::Kind::seed: break;
    }
    points.push_back(Json{{"coords", vector_to_json(p.point.coords())}, {"provenance", prov}});
  }

  return Json{{"field", field_to_json(K.field)},
              {"n", K.n},
              {"N", K.N},
              {"grid", grid},
              {"lines", lines},
              {"points", points},
              {"seed_meta", {{"name", K.seed_meta.name}, {"epsilon", rationals_to_json(K.seed_meta.epsilon)}}}};
}

KakeyaSet kakeya_from_json(const Json& j, double default_tol) {
  try {
    KakeyaSet K{field_from_json(need(j, "field"), default_tol), 0, 0, {}, {}, {}, {}};
    K.n = as_size(need(j, "n"), "n");
    K.N = as_size(need(j, "N"), "N");
    if (K.n < 2) throw Error(ErrorCode::UnsupportedDimension, "n must be >= 2");
    const FieldSpec& f = K.field;

    if (j.contains("grid")) {
      if (!j.at("grid").is_array()) bad("grid must be an array of coordinate sets");
      for (const auto& A : j.at("grid")) {
        if (!A.is_array()) bad("grid set must be an array");
        std::vector<Scalar> set;
        for (const auto& x : A) set.push_back(scalar_from_json(x, f));
        K.grid.sets.push_back(std::move(set));
      }
    }

    const auto& lines = need(j, "lines");
    if (!lines.is_array()) bad("lines must be an array");
    for (const auto& lj : lines) {
      Subspace line = subspace_from_json(lj, f, K.n);
      ProjPoint dir = lj.contains("direction") ? ProjPoint::normalize(vector_from_json(lj.at("direction"), f))
                                               : direction_of(line);
      LineRecord rec{std::move(line), std::move(dir), LineRecord::Kind::grid_completion, {}};
      if (lj.contains("provenance")) {
        const auto& pj = lj.at("provenance");
        const std::string kind = need(pj, "kind").get<std::string>();
        if (kind == "lifted") rec.kind = LineRecord::Kind::lifted;
        else if (kind != "grid_completion") bad("unknown line provenance '" + kind + "'");
        if (pj.contains("tuple")) rec.tuple = tuple_from_json(pj.at("tuple"));
      }
      K.lines.push_back(std::move(rec));
    }

    const auto& points = need(j, "points");
    if (!points.is_array()) bad("points must be an array");
    for (const auto& pj : points) {
      PointRecord rec{ProjPoint::normalize(vector_from_json(need(pj, "coords"), f)), {}};
      if (rec.point.ambient_dim() != K.n) throw Error(ErrorCode::AmbientMismatch, "point has the wrong length");
      if (pj.contains("provenance")) {
        const auto& pr = pj.at("provenance");
        const std::string kind = need(pr, "kind").get<std::string>();
        Provenance& p = rec.provenance;
        if (kind == "lifted") {
          p.kind = Provenance::Kind::lifted;
          p.J = IndexTuple(tuple_from_json(need(pr, "J")));
          p.Jbar = IndexTuple(tuple_from_json(need(pr, "Jbar")));
          p.m_index = as_size(need(pr, "m_index"), "m_index");
        } else if (kind == "padding" || kind == "grid_completion") {
          p.kind = kind == "padding" ? Provenance::Kind::padding : Provenance::Kind::grid_completion;
          p.line = as_size(need(pr, "line"), "line");
          p.lambda = need(pr, "lambda").get<long long>();
        } else if (kind != "seed") {
          bad("unknown point provenance '" + kind + "'");
        }
      }
      K.points.push_back(std::move(rec));
    }

    if (j.contains("seed_meta")) {
      const auto& m = j.at("seed_meta");
      if (m.contains("name")) K.seed_meta.name = m.at("name").get<std::string>();
      if (m.contains("epsilon")) K.seed_meta.epsilon = rationals_from_json(m.at("epsilon"));
    }
    return K;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed Kakeya set document: ") + e.what());
  }
}

Json seed_to_json(const PlanarSeed& seed) {
  Json lines = Json::array(), m_lines = Json::array(), points = Json::array();
  for (const auto& l : seed.lines) lines.push_back(Json{{"basis", basis_to_json(l)}});
  for (const auto& l : seed.m_lines) m_lines.push_back(Json{{"basis", basis_to_json(l)}});
  for (const auto& p : seed.points)
    points.push_back(Json{{"coords", vector_to_json(p.point.coords())},
                          {"provenance", {{"kind", p.extra ? "extra" : "seed"}}}});
  return Json{{"field", field_to_json(seed.field)},
              {"N", seed.N},
              {"name", seed.name},
              {"lines", lines},
              {"m_lines", m_lines},
              {"points", points},
              {"epsilon", rationals_to_json(seed.epsilon)}};
}

PlanarSeed seed_from_json(const Json& j, double default_tol) {
  try {
    PlanarSeed seed{field_from_json(need(j, "field"), default_tol), 0, {}, {}, {}, {}, {}, "file"};
    const FieldSpec& f = seed.field;
    seed.N = as_size(need(j, "N"), "N");
    if (j.contains("name")) seed.name = j.at("name").get<std::string>();

    const Subspace inf = planar_line_at_infinity(f);
    const auto& lines = need(j, "lines");
    if (!lines.is_array()) bad("lines must be an array");
    for (const auto& lj : lines) {
      Subspace l = subspace_from_json(lj, f, 2);
      if (l.projective_dim() != 1) throw Error(ErrorCode::DegenerateSeed, "seed line basis has rank != 2");
      Subspace x = meet(l, inf);
      // a line equal to the line at infinity is kept so the report can flag it
      seed.infinite_points.push_back(x.projective_dim() == 0 ? x.as_point() : planar_vertical_point(f));
      seed.lines.push_back(std::move(l));
    }

    const auto& points = need(j, "points");
    if (!points.is_array()) bad("points must be an array");
    for (const auto& pj : points) {
      SeedPoint sp{ProjPoint::normalize(vector_from_json(need(pj, "coords"), f)), false};
      if (sp.point.ambient_dim() != 2) throw Error(ErrorCode::AmbientMismatch, "seed point must have 3 coordinates");
      if (pj.contains("provenance")) {
        const std::string kind = need(pj.at("provenance"), "kind").get<std::string>();
        if (kind == "extra") sp.extra = true;
        else if (kind != "seed") bad("unknown seed point provenance '" + kind + "'");
      }
      seed.points.push_back(std::move(sp));
    }

    if (j.contains("m_lines")) {
      for (const auto& lj : j.at("m_lines")) seed.m_lines.push_back(subspace_from_json(lj, f, 2));
    } else {
      const ProjPoint vertical = planar_vertical_point(f);
      PointIndex feet;
      for (const auto& sp : seed.points) {
        if (sp.extra || sp.point[2].is_zero()) continue;
        Vector foot{sp.point[0] / sp.point[2], Scalar::zero(f), Scalar::one(f)};
        if (feet.insert(ProjPoint::normalize(foot)).second && seed.m_lines.size() < seed.N)
          seed.m_lines.push_back(span(Subspace(ProjPoint::normalize(foot)), Subspace(vertical)));
      }
    }

    if (j.contains("epsilon")) seed.epsilon = rationals_from_json(j.at("epsilon"));
    else seed.epsilon = seed_report(seed).epsilon;
    return seed;
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed seed document: ") + e.what());
  }
}

Json seed_report_to_json(const SeedReport& r) {
  Json counts = Json::array(), doubles = Json::array();
  for (auto c : r.line_point_counts) counts.push_back(c);
  for (auto c : r.double_point_counts) doubles.push_back(c);
  return Json{{"pass", r.pass},
              {"epsilon", rationals_to_json(r.epsilon)},
              {"epsilon_sorted", rationals_to_json(r.epsilon_sorted)},
              {"epsilon_sum", rational_string(r.epsilon_sum)},
              {"d", rational_string(r.d)},
              {"d_decimal", to_decimal(r.d)},
              {"line_point_counts", counts},
              {"double_point_counts", doubles},
              {"distinct_directions", r.distinct_directions},
              {"failures", r.failures}};
}

Json verify_report_to_json(const VerifyReport& r) {
  Json measured = Json::object();
  for (const auto& [k, v] : r.measured) measured[k] = v;
  return Json{{"check", r.check}, {"pass", r.pass}, {"witnesses", r.witnesses}, {"measured", measured}};
}

Json verify_reports_to_json(const std::vector<VerifyReport>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(verify_report_to_json(r));
  return a;
}

Json bound_report_to_json(const BoundReport& r) {
  Json values = Json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i)
    values.push_back(Json{{"r", r.r_min + i}, {"bound", rational_string(r.values[i])},
                          {"decimal", to_decimal(r.values[i])}});
  return Json{{"N", r.N},
              {"n", r.n},
              {"r_min", r.r_min},
              {"r_max", r.r_max},
              {"best_r", r.best_r},
              {"bound", rational_string(r.bound)},
              {"bound_decimal", to_decimal(r.bound)},
              {"limit", rational_string(r.limit)},
              {"limit_decimal", to_decimal(r.limit)},
              {"values", values}};
}

Json poly_to_json(const Poly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exponents", e.exponents()}, {"coeff", c.to_string()}});
  return Json{{"field", field_to_json(f.field())}, {"nvars", f.nvars()}, {"degree", f.is_zero() ? -1 : f.degree()},
              {"terms", terms}};
}

Json certificate_to_json(const Certificate& c) {
  return Json{{"r", c.r},
              {"n", c.n},
              {"N", c.N},
              {"point_count", c.point_count},
              {"direction_count", c.direction_count},
              {"equation_count", c.equation_count.str()},
              {"unknown_count", c.unknown_count.str()},
              {"forced", c.forced},
              {"basis_dimension", c.basis_dimension},
              {"basis_checked", c.basis_checked},
              {"f", c.f ? poly_to_json(*c.f) : Json(nullptr)},
              {"s_attestations", attestations_to_json(c.s_attestations)},
              {"d_attestations", attestations_to_json(c.d_attestations)},
              {"verdict", to_string(c.verdict)},
              {"detail", c.detail}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write '" + path + "'");
  out << dump(j);
  if (!out) bad("write to '" + path + "' failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace kakeya
