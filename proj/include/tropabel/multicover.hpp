// Complex counts through Mumford families and the multiple cover check.
//
// The tau = 0 family realizes every tropical curve of degree B, the tau = 1
// family only the primitive ones, so one enumeration per divisor k of d
// yields both sides of
//
//     N_{g,d,n} = sum_{k | d} k^(4g-3) N_{g,1,(d/k)^2 n}.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropabel/enumerate.hpp"
#include "tropabel/mumford.hpp"

namespace tropabel {

struct ComplexCount {
  int g = 0;
  std::int64_t d = 1;  // divisibility of B
  std::int64_t n = 1;  // det B = d^2 n
  std::int64_t value = 0;
  // provenance
  std::int64_t tau = 0;
  IMat2 B;
  std::uint64_t seed = 0;
  friend bool operator==(const ComplexCount&, const ComplexCount&) = default;
};

/// Sum of total multiplicities over the curves of res realizable in fam.
/// Throws DegreeMismatch when fam and res disagree on B.
ComplexCount complex_count(const EnumerationResult& res, const MumfordFamily& fam);

/// Same, but first re-runs res with doubled bounds. Throws BoundsUnstable.
ComplexCount complex_count_certified(const EnumerationResult& res, const MumfordFamily& fam, int jobs = 0);

/// sum_{k | d} k^(4g-3) primitive[(d/k)^2 n]. Throws MissingPrimitiveValue.
std::int64_t mc_rhs(int g, std::int64_t d, std::int64_t n, const std::map<std::int64_t, std::int64_t>& primitive);

struct MultiCoverReport {
  int g = 0;
  IMat2 B;
  std::uint64_t seed = 0;
  RMat2 S;
  ComplexCount lhs;
  std::map<std::int64_t, ComplexCount> primitive;   // m -> N_{g,1,m}
  std::map<std::int64_t, std::int64_t> rhs_terms;   // k -> k^(4g-3) N_{g,1,(d/k)^2 n}
  std::int64_t rhs = 0;
  bool verdict = false;
  bool certified = false;                           // every enumeration bounds-stable
  std::map<std::int64_t, SearchBounds> bounds;      // k -> bounds used for B/k
  std::map<std::int64_t, bool> stable;              // k -> bounds-stable
  std::map<std::int64_t, std::int64_t> strata;      // k -> tropical_invariant(res_B, k)
  bool stratification_ok = false;                   // lhs = sum_k k^(4g-3) N^trop_{B/k,1}
  bool bijection_ok = false;                        // every stratum_bijection_check passed
  bool family_consistency_ok = false;               // tau=0 total = sum strata, tau=1 total = gcd-1 stratum
  std::vector<std::string> warnings;
  friend bool operator==(const MultiCoverReport&, const MultiCoverReport&) = default;

  std::string status() const { return certified ? "certified" : "indicative"; }
};

/// Enumerations (k -> result for B/k) kept by verify_multiple_cover for
/// callers that want to draw the counted curves.
using EnumerationsByDivisor = std::map<std::int64_t, EnumerationResult>;

/// Bounds default to default_bounds(B/k) for each divisor k.
MultiCoverReport verify_multiple_cover(const TropicalTorus& t, const IMat2& B, int g, std::uint64_t seed,
                                       std::optional<SearchBounds> bounds = std::nullopt, int jobs = 0,
                                       EnumerationsByDivisor* keep = nullptr);

}  // namespace tropabel
