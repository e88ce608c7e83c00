// Polarizations of complex tori C^2/L with L = Z^2 (+) Lambda and period
// matrix (I Z).
#pragma once

#include <cstdint>
#include <utility>

#include "tropabel/matrix.hpp"
#include "tropabel/skew_form.hpp"

namespace tropabel {

struct PeriodData {
  CMat2 Z;

  /// Rank-4 lattice condition: Im Z invertible.
  bool is_lattice() const { return !imag_part(Z).det().is_zero(); }
  friend bool operator==(const PeriodData&, const PeriodData&) = default;
};

/// Pf(Q) Q^-1 = [[-T, B], [-B^T, 0]].
struct PoincareDual {
  IMat2 T;
  IMat2 B;

  IMat4 assemble() const;
  friend bool operator==(const PoincareDual&, const PoincareDual&) = default;
};

PoincareDual poincare_dual(const SkewForm& q);

/// Result of both Riemann bilinear relations, evaluated exactly.
struct RiemannCheck {
  bool isotropic = false;      // Omega Q^-1 Omega^T = 0
  bool positive = false;       // -i Omega Q^-1 conj(Omega)^T hermitian positive definite
  bool ok() const { return isotropic && positive; }
  friend bool operator==(const RiemannCheck&, const RiemannCheck&) = default;
};

/// Intrinsic 4x4 evaluation with Omega = (I Z) assembled.
RiemannCheck riemann_intrinsic(const CMat2& Z, const IMat4& q);
/// Block evaluation: B Z^T - Z B^T = T and -i Pf(Q)(B conj(Z)^T - Z B^T - T) > 0.
RiemannCheck riemann_reduced(const CMat2& Z, const SkewForm& q);

/// Both forms are evaluated and must agree; disagreement is an Internal error.
bool check_riemann(const PeriodData& p, const SkewForm& q);

struct PolarizationType {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  friend bool operator==(const PolarizationType&, const PolarizationType&) = default;
};

PolarizationType polarization_type(const SkewForm& q);

}  // namespace tropabel
