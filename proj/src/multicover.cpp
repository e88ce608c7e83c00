#include "tropabel/multicover.hpp"

#include <numeric>

namespace tropabel {

namespace {

std::vector<std::int64_t> divisors(std::int64_t d) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= d; ++k) {
    if (d % k == 0) out.push_back(k);
  }
  return out;
}

IMat2 divide(const IMat2& B, std::int64_t k) { return IMat2(B(0, 0) / k, B(0, 1) / k, B(1, 0) / k, B(1, 1) / k); }

}  // namespace

ComplexCount complex_count(const EnumerationResult& res, const MumfordFamily& fam) {
  if (!(fam.B() == res.B)) {
    throw Error(ErrorCode::DegreeMismatch, "family degree " + to_string(fam.B()) + " differs from " + to_string(res.B));
  }
  const PolarizationType type = polarization_type(fam.Q);
  ComplexCount c;
  c.g = res.genus;
  c.d = type.d1;
  c.n = type.d2 / type.d1;
  c.tau = fam.tau;
  c.B = res.B;
  c.seed = res.config.seed;
  for (const auto& ec : res.curves) {
    if (is_realizable(ec.curve, fam)) c.value += ec.multiplicity.total;
  }
  return c;
}

ComplexCount complex_count_certified(const EnumerationResult& res, const MumfordFamily& fam, int jobs) {
  ComplexCount c = complex_count(res, fam);
  if (!bounds_stable(res, jobs)) throw Error(ErrorCode::BoundsUnstable, "enumeration changes when the bounds are doubled");
  return c;
}

std::int64_t mc_rhs(int g, std::int64_t d, std::int64_t n, const std::map<std::int64_t, std::int64_t>& primitive) {
  if (d < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "d and n must be positive");
  std::int64_t total = 0;
  for (const std::int64_t k : divisors(d)) {
    const std::int64_t m = (d / k) * (d / k) * n;
    const auto it = primitive.find(m);
    if (it == primitive.end()) {
      throw Error(ErrorCode::MissingPrimitiveValue, "no primitive value for m = " + std::to_string(m));
    }
    total += ipow(k, 4 * g - 3) * it->second;
  }
  return total;
}

MultiCoverReport verify_multiple_cover(const TropicalTorus& t, const IMat2& B, int g, std::uint64_t seed,
                                       std::optional<SearchBounds> bounds, int jobs, EnumerationsByDivisor* keep) {
  const std::int64_t d = divisibility(B);
  if (d < 1 || det2(B) <= 0) throw Error(ErrorCode::InvalidArgument, "B must have positive determinant");
  MultiCoverReport rep;
  rep.g = g;
  rep.B = B;
  rep.seed = seed;
  rep.S = t.S();

  const PointConfig cfg = sample_config(t, g, seed);
  const int exponent = 4 * g - 3;
  EnumerationsByDivisor results;
  for (const std::int64_t k : divisors(d)) {
    const IMat2 Bk = divide(B, k);
    const SearchBounds bk = bounds ? *bounds : default_bounds(Bk);
    rep.bounds[k] = bk;
    results.emplace(k, enumerate(t, Bk, g, cfg, bk, jobs));
  }
  const EnumerationResult& big = results.at(1);

  // Left side through the tau = 0 family on B.
  rep.lhs = complex_count(big, make_family(B, 0, t));

  // Primitive values through tau = 1 families on each B/k.
  std::map<std::int64_t, std::int64_t> primitive;
  bool consistency = true;
  for (const auto& [k, res] : results) {
    ComplexCount c = complex_count(res, make_family(res.B, 1, t));
    consistency = consistency && c.value == tropical_invariant(res, 1);
    primitive[c.n] = c.value;
    rep.primitive[c.n] = c;
  }
  rep.rhs = mc_rhs(g, d, rep.lhs.n, primitive);
  for (const auto& [k, res] : results) rep.rhs_terms[k] = ipow(k, exponent) * primitive.at(rep.lhs.n * (d / k) * (d / k));
  rep.verdict = rep.lhs.value == rep.rhs;

  // Cross-checks on the tropical side.
  std::int64_t strata_total = 0;
  std::int64_t stratification = 0;
  rep.bijection_ok = true;
  for (const auto& [k, res] : results) {
    rep.strata[k] = tropical_invariant(big, k);
    strata_total += rep.strata[k];
    stratification += ipow(k, exponent) * tropical_invariant(res, 1);
    if (k > 1) rep.bijection_ok = rep.bijection_ok && stratum_bijection_check(big, res, k).ok;
  }
  for (const auto& [gcd, idx] : big.by_gcd) {
    if (d % gcd != 0) consistency = false;
  }
  rep.family_consistency_ok = consistency && rep.lhs.value == strata_total;
  rep.stratification_ok = rep.lhs.value == stratification;

  rep.certified = true;
  for (const auto& [k, res] : results) {
    rep.stable[k] = bounds_stable(res, jobs);
    rep.certified = rep.certified && rep.stable[k];
    for (const auto& w : res.warnings) rep.warnings.push_back("B/" + std::to_string(k) + ": " + w);
  }
  if (keep) *keep = std::move(results);
  return rep;
}

}  // namespace tropabel
