#ifndef KAKEYA_VERIFY_HPP
#define KAKEYA_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kakeya/construction.hpp"

namespace kakeya {

// Outcome of one check. Exact quantities in `measured` are rendered as strings.
struct VerifyReport {
  std::string check;
  bool pass = false;
  std::vector<std::string> witnesses;
  std::map<std::string, std::string> measured;
};

inline constexpr std::size_t default_witness_limit = 10;

// Every check recomputes incidence and directions from raw coordinates. Provenance tags are
// only used to pick out the lifted subfamily for the counting claims about it.
VerifyReport verify_incidence(const KakeyaSet& K, bool verbose = false);
VerifyReport verify_directions(const KakeyaSet& K, bool verbose = false);
VerifyReport verify_size(const KakeyaSet& K, bool verbose = false);
VerifyReport verify_bound_consistency(const KakeyaSet& K, std::uint64_t r);

std::vector<VerifyReport> verify_all(const KakeyaSet& K, std::optional<std::uint64_t> r,
                                     bool verbose = false);

// Sum over m-lines of (N/2 - eps_i)(N/2 - eps_i - 1)...(N/2 - eps_i - n + 2).
Rational lifted_point_formula(std::size_t N, std::size_t n, const std::vector<Rational>& epsilon);

} // namespace kakeya

#endif // KAKEYA_VERIFY_HPP
