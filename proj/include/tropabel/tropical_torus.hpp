// Tropical tori R^2 / Lambda, tropical polarizations and point configurations.
#pragma once

#include <cstdint>
#include <vector>

#include "tropabel/matrix.hpp"

namespace tropabel {

/// Columns of S are the images in R^2 of the chosen basis of Lambda.
class TropicalTorus {
 public:
  /// Throws InvalidArgument unless det S > 0.
  explicit TropicalTorus(RMat2 S);

  const RMat2& S() const { return S_; }
  const RMat2& S_inverse() const { return S_inv_; }
  bool is_integral() const;

  /// Coordinates of x in the Lambda basis.
  RVec2 lattice_coords(const RVec2& x) const { return S_inv_ * x; }
  RVec2 lattice_vector(const IVec2& w) const;

  friend bool operator==(const TropicalTorus& a, const TropicalTorus& b) { return a.S_ == b.S_; }

 private:
  RMat2 S_;
  RMat2 S_inv_;
};

/// Canonical representative inside the half-open fundamental parallelogram
/// [0,1) s1 + [0,1) s2.
struct TorusPoint {
  RVec2 coords;
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

struct PointConfig {
  std::vector<TorusPoint> points;
  std::uint64_t seed = 0;
  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

inline constexpr std::int64_t kConfigDenominator = 10007;

/// S^T C symmetric and positive definite.
bool check_tropical_polarization(const TropicalTorus& t, const IMat2& C);

/// Comatrix in either direction between degree B and polarization C.
IMat2 degree_polarization_duality(const IMat2& m);

TorusPoint reduce_point(const TropicalTorus& t, const RVec2& raw);

/// g pseudo-random distinct points whose lattice coordinates have
/// denominator kConfigDenominator. Deterministic in seed; prefixes agree.
PointConfig sample_config(const TropicalTorus& t, int g, std::uint64_t seed);

}  // namespace tropabel
