// Integer skew-symmetric forms on Z^2 (+) Lambda in block form
// Q = [[0, C], [-C^T, T]] with T = [[0, tau], [-tau, 0]].
#pragma once

#include <array>
#include <cstdint>

#include "tropabel/matrix.hpp"

namespace tropabel {

using IMat4 = std::array<std::array<std::int64_t, 4>, 4>;

struct SkewForm {
  IMat2 C = IMat2::identity();
  std::int64_t tau = 0;

  IMat2 T() const { return IMat2(0, tau, -tau, 0); }
  /// Basis order (e1, e2, lambda1, lambda2).
  IMat4 assemble() const;

  friend bool operator==(const SkewForm&, const SkewForm&) = default;
};

/// Pf(Q) = -det C.
std::int64_t pfaffian(const SkewForm& q);

/// a01 a23 - a02 a13 + a03 a12 on an arbitrary 4x4 matrix.
std::int64_t classical_pfaffian(const IMat4& a);

bool is_skew(const IMat4& a);
RatMatrix to_rat_matrix(const IMat4& a);

}  // namespace tropabel
