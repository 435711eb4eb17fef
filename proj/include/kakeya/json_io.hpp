#ifndef KAKEYA_JSON_IO_HPP
#define KAKEYA_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kakeya/construction.hpp"
#include "kakeya/polymethod.hpp"
#include "kakeya/seeds.hpp"
#include "kakeya/verify.hpp"

namespace kakeya {

using Json = nlohmann::ordered_json;

// Exact values are always strings; rationals always carry a denominator.
std::string rational_string(const Rational& q);
Rational parse_rational(const std::string& text);

Json field_to_json(const FieldSpec& f);
// `default_tol` applies to real fields that do not carry their own tolerance.
FieldSpec field_from_json(const Json& j, double default_tol = default_real_tolerance);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const FieldSpec& f);

Json kakeya_to_json(const KakeyaSet& K);
KakeyaSet kakeya_from_json(const Json& j, double default_tol = default_real_tolerance);

Json seed_to_json(const PlanarSeed& seed);
// m_lines default to the verticals through the seed's double points and epsilon to the
// measured values when the document leaves them out.
PlanarSeed seed_from_json(const Json& j, double default_tol = default_real_tolerance);

Json seed_report_to_json(const SeedReport& r);
Json verify_report_to_json(const VerifyReport& r);
Json verify_reports_to_json(const std::vector<VerifyReport>& rs);
Json bound_report_to_json(const BoundReport& r);
Json poly_to_json(const Poly& f);
Json certificate_to_json(const Certificate& c);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);

} // namespace kakeya

#endif // KAKEYA_JSON_IO_HPP
