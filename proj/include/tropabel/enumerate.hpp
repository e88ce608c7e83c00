// Enumeration of genus-g tropical curves of degree B through g points of a
// tropical torus.
//
// For every combinatorial type the slopes are parametrized by the flow values
// v_i on the g non-tree edges (balancing then fixes every tree edge). The
// degree factors as B = sum_i v_i lambda_i^T over the cycle windings, which
// pins the windings down for g <= 2. Edge lengths solve an exact rational
// linear system made of the cycle closing conditions and the marked-point
// conditions, with the lift of every marked point searched over integer
// translates. Solutions with all lengths strictly positive are curves.
//
// The search over (type, first flow value) is split into independent work
// items; enumerate() runs them with OpenMP and enumerate_serial() runs the
// same kernel in a plain loop. Both merge by canonical key, so their output is
// identical.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tropabel/comb_type.hpp"
#include "tropabel/curve.hpp"
#include "tropabel/tropical_torus.hpp"

namespace tropabel {

struct SearchBounds {
  int slope_bound = 1;    // max |entry| of any edge slope
  int winding_bound = 2;  // max |entry| of any cycle winding or marked-point lift
  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// slope_bound = max |B_ij| + 1, winding_bound = max(2, max |B_ij|).
SearchBounds default_bounds(const IMat2& B);

struct EnumeratedCurve {
  ParamCurve curve;
  Multiplicity multiplicity;
  std::string key;
  int type_index = 0;
  friend bool operator==(const EnumeratedCurve&, const EnumeratedCurve&) = default;
};

struct EnumerationResult {
  TropicalTorus torus;
  IMat2 B;
  int genus = 0;
  PointConfig config;
  SearchBounds bounds;
  std::vector<EnumeratedCurve> curves;           // sorted by key
  std::map<std::int64_t, std::vector<std::size_t>> by_gcd;  // gcd -> indices into curves
  std::vector<std::string> warnings;
  friend bool operator==(const EnumerationResult&, const EnumerationResult&) = default;
};

/// Geometric identity of a curve: edge segments reduced to the fundamental
/// domain plus marked-point positions. Reparametrizations share a key.
std::string curve_key(const ParamCurve& pc);

/// jobs <= 0 means the OpenMP default.
EnumerationResult enumerate(const TropicalTorus& t, const IMat2& B, int g, const PointConfig& cfg,
                            const SearchBounds& bounds, int jobs = 0);

/// Reference path: the same kernel without any threading.
EnumerationResult enumerate_serial(const TropicalTorus& t, const IMat2& B, int g, const PointConfig& cfg,
                                   const SearchBounds& bounds);

/// Every curve valid, of degree B, through every configured point, and
/// by_gcd a partition. Returns a list of problems (empty when sound).
std::vector<std::string> check_result(const EnumerationResult& res);

/// Sum of total multiplicities over the curves with gcd k.
std::int64_t tropical_invariant(const EnumerationResult& res, std::int64_t k);

/// Re-runs with both bounds doubled and compares curve keys.
bool bounds_stable(const EnumerationResult& res, int jobs = 0);

struct BijectionReport {
  bool ok = false;
  std::vector<std::string> missing;  // dilated small curves absent from the big stratum
  std::vector<std::string> extra;    // big-stratum curves not hit by a dilation
  std::int64_t small_total = 0;
  std::int64_t big_total = 0;
};

/// dilate(., k) maps the gcd-1 stratum of res_small bijectively onto the
/// gcd-k stratum of res_big with multiplicities scaled by k^(4g-3).
BijectionReport stratum_bijection_check(const EnumerationResult& res_big, const EnumerationResult& res_small,
                                        std::int64_t k);

std::int64_t ipow(std::int64_t base, int exp);

}  // namespace tropabel
