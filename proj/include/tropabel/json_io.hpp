// JSON encoding of every domain type. Rationals travel as "p/q" strings,
// integer matrices as nested integer arrays. Emitted top-level documents carry
// "schema": "1"; readers reject unknown fields and any other schema value.
// All readers throw ParseError.
#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "tropabel/curve.hpp"
#include "tropabel/enumerate.hpp"
#include "tropabel/multicover.hpp"
#include "tropabel/mumford.hpp"
#include "tropabel/polarization.hpp"
#include "tropabel/skew_form.hpp"

namespace tropabel::json {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "1";

/// Adds the schema field to an object.
Json document(Json body);

/// Standard JSON, or the relaxed form with bare object keys ({C:[[1,0],[0,3]]}).
Json parse(std::string_view text);

/// Compact, key-sorted, newline-terminated.
std::string dump(const Json& j);

Json encode(const Rat& r);
Json encode(const CRat& c);
Json encode(const IVec2& v);
Json encode(const RVec2& v);
Json encode(const IMat2& m);
Json encode(const RMat2& m);
Json encode(const CMat2& m);
Json encode(const IMat4& m);
Json encode(const SkewForm& q);
Json encode(const PeriodData& p);
Json encode(const PoincareDual& p);
Json encode(const RiemannCheck& r);
Json encode(const PolarizationType& t);
Json encode(const TropicalTorus& t);
Json encode(const PointConfig& c);
Json encode(const ParamCurve& pc);
Json encode(const std::vector<Diagnostic>& diags);
Json encode(const Multiplicity& m);
Json encode(const MumfordFamily& f);
Json encode(const FamilyCheck& c);
Json encode(const SigmaExponent& s);
Json encode(const SearchBounds& b);
Json encode(const EnumerationResult& r);
Json encode(const ComplexCount& c);
Json encode(const MultiCoverReport& r);

Rat read_rat(const Json& j);
CRat read_crat(const Json& j);
IVec2 read_ivec2(const Json& j);
RVec2 read_rvec2(const Json& j);
IMat2 read_imat2(const Json& j);
RMat2 read_rmat2(const Json& j);
CMat2 read_cmat2(const Json& j);
IMat4 read_imat4(const Json& j);
SkewForm read_skew_form(const Json& j);
PeriodData read_period_data(const Json& j);
PoincareDual read_poincare_dual(const Json& j);
RiemannCheck read_riemann_check(const Json& j);
PolarizationType read_polarization_type(const Json& j);
/// {"S": ...} or the bare matrix S.
TropicalTorus read_torus(const Json& j);
PointConfig read_config(const Json& j);
ParamCurve read_curve(const Json& j);
std::vector<Diagnostic> read_diagnostics(const Json& j);
Multiplicity read_multiplicity(const Json& j);
MumfordFamily read_family(const Json& j);
FamilyCheck read_family_check(const Json& j);
SigmaExponent read_sigma(const Json& j);
SearchBounds read_bounds(const Json& j);
EnumerationResult read_enumeration(const Json& j);
ComplexCount read_complex_count(const Json& j);
MultiCoverReport read_multicover(const Json& j);

}  // namespace tropabel::json
