#include "tropabel/tropical_torus.hpp"

#include <algorithm>
#include <random>

namespace tropabel {

TropicalTorus::TropicalTorus(RMat2 S) : S_(std::move(S)) {
  if (S_.det().sign() <= 0) throw Error(ErrorCode::InvalidArgument, "torus matrix S must have det S > 0");
  S_inv_ = inverse(S_);
}

bool TropicalTorus::is_integral() const {
  return std::all_of(S_.a.begin(), S_.a.end(), [](const Rat& r) { return r.is_integer(); });
}

RVec2 TropicalTorus::lattice_vector(const IVec2& w) const { return S_ * RVec2{Rat(w.x), Rat(w.y)}; }

bool check_tropical_polarization(const TropicalTorus& t, const IMat2& C) {
  const RMat2 m = t.S().transpose() * to_rational(C);
  return m.is_symmetric() && is_pos_def_sym(m);
}

IMat2 degree_polarization_duality(const IMat2& m) { return comatrix(m); }

TorusPoint reduce_point(const TropicalTorus& t, const RVec2& raw) {
  RVec2 u = t.lattice_coords(raw);
  u.x -= Rat(u.x.floor());
  u.y -= Rat(u.y.floor());
  return TorusPoint{t.S() * u};
}

PointConfig sample_config(const TropicalTorus& t, int g, std::uint64_t seed) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "configuration needs at least one point");
  std::mt19937_64 rng(seed);
  const auto draw = [&] {
    for (;;) {
      const auto v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(kConfigDenominator));
      if (v != 0) return v;
    }
  };
  PointConfig cfg;
  cfg.seed = seed;
  while (static_cast<int>(cfg.points.size()) < g) {
    const std::int64_t a = draw();
    const std::int64_t b = draw();
    const RVec2 u{Rat(a, kConfigDenominator), Rat(b, kConfigDenominator)};
    TorusPoint p{t.S() * u};
    if (std::find(cfg.points.begin(), cfg.points.end(), p) == cfg.points.end()) cfg.points.push_back(std::move(p));
  }
  return cfg;
}

}  // namespace tropabel
