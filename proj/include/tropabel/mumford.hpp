// Mumford families A(Z, S): period matrices (I, Z + S log t / 2i pi) over the
// punctured disk. Every predicate here uses the t-free coefficient form, so
// the parameter t is never materialized.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropabel/curve.hpp"
#include "tropabel/matrix.hpp"
#include "tropabel/polarization.hpp"
#include "tropabel/skew_form.hpp"
#include "tropabel/tropical_torus.hpp"

namespace tropabel {

struct MumfordFamily {
  CMat2 Z;
  RMat2 S;
  std::int64_t tau = 0;
  SkewForm Q;

  /// Degree of the tropical curves counted by the family: comatrix of C.
  IMat2 B() const { return comatrix(Q.C); }
  friend bool operator==(const MumfordFamily&, const MumfordFamily&) = default;
};

/// One flag per condition of the polarization criterion for a family, with a
/// diagnostic line for every failed one.
struct FamilyCheck {
  bool block_form = false;    // Q and Pf(Q) Q^-1 have the block shape, B = comatrix(C)
  bool tropical = false;      // B S^T symmetric positive definite
  bool isotropic = false;     // B Z^T - Z B^T = T
  bool positive = false;      // -i Pf(Q)(B conj(Z)^T - Z B^T - T) > 0
  std::vector<std::string> diagnostics;

  bool ok() const { return block_form && tropical && isotropic && positive; }
  friend bool operator==(const FamilyCheck&, const FamilyCheck&) = default;
};

inline constexpr const char* kDiagBlockForm = "condition1_block_form";
inline constexpr const char* kDiagTropical = "condition2_tropical_polarization";
inline constexpr const char* kDiagIsotropic = "condition3_isotropic";
inline constexpr const char* kDiagPositive = "condition3_positive";

FamilyCheck check_family_polarization(const CMat2& Z, const RMat2& S, const IMat4& Q);
FamilyCheck check_family_polarization(const CMat2& Z, const RMat2& S, const SkewForm& q);

/// Z = X + iS with X the canonical rational solution of the scalar relation
/// b11 z12 + b21 z22 - b12 z11 - b22 z21 = tau.
CMat2 build_Z(const IMat2& B, std::int64_t tau, const RMat2& S);

/// Family with polarization Q = (comatrix(B), tau) on an integral torus.
MumfordFamily make_family(const IMat2& B, std::int64_t tau, const TropicalTorus& t);

/// Exponent w with sigma(Z, B, delta) = exp(2 i pi w).
struct SigmaExponent {
  CRat value;
  bool is_one() const { return value.im.is_zero() && value.re.is_integer(); }
  friend bool operator==(const SigmaExponent&, const SigmaExponent&) = default;
};

SigmaExponent sigma(const CMat2& Z, const IMat2& B, std::int64_t delta);

bool is_realizable(const ParamCurve& pc, const MumfordFamily& fam);

}  // namespace tropabel
