#include "tropabel/polarization.hpp"

#include <array>
#include <cstdlib>
#include <numeric>

namespace tropabel {

namespace {

void require_invertible(const SkewForm& q) {
  if (det2(q.C) == 0) throw Error(ErrorCode::SingularMatrix, "polarization block C is singular: " + to_string(q.C));
}

using CRow4 = std::array<CRat, 4>;

// Omega = (I Z), a 2x4 complex matrix.
std::array<CRow4, 2> period_matrix(const CMat2& Z) {
  std::array<CRow4, 2> omega;
  for (int i = 0; i < 2; ++i) {
    omega[i][static_cast<std::size_t>(i)] = CRat(1);
    omega[i][2] = Z(i, 0);
    omega[i][3] = Z(i, 1);
  }
  return omega;
}

// left * m * right^T, left/right 2x4 complex, m 4x4 rational.
CMat2 sandwich(const std::array<CRow4, 2>& left, const RatMatrix& m, const std::array<CRow4, 2>& right) {
  CMat2 out;
  for (int i = 0; i < 2; ++i) {
    CRow4 lm;
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t j = 0; j < 4; ++j) {
        if (!m(j, k).is_zero()) lm[k] += left[i][j] * CRat(m(j, k));
      }
    }
    for (int l = 0; l < 2; ++l) {
      CRat s;
      for (std::size_t k = 0; k < 4; ++k) s += lm[k] * right[l][k];
      out(i, l) = s;
    }
  }
  return out;
}

bool hermitian_positive(const CMat2& h) { return h == conj_transpose(h) && is_pos_def_herm(h); }

}  // namespace

IMat4 PoincareDual::assemble() const {
  IMat4 d{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d[i][j] = -T(i, j);
      d[i][j + 2] = B(i, j);
      d[j + 2][i] = -B(i, j);
    }
  }
  return d;
}

PoincareDual poincare_dual(const SkewForm& q) {
  require_invertible(q);
  return PoincareDual{q.T(), comatrix(q.C)};
}

RiemannCheck riemann_intrinsic(const CMat2& Z, const IMat4& q) {
  const RatMatrix qinv = to_rat_matrix(q).inverse();
  const auto omega = period_matrix(Z);
  std::array<CRow4, 2> omega_bar;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 4; ++k) omega_bar[i][k] = omega[i][k].conj();
  }
  RiemannCheck r;
  r.isotropic = sandwich(omega, qinv, omega) == CMat2();
  const CRat minus_i(Rat(0), Rat(-1));
  r.positive = hermitian_positive(minus_i * sandwich(omega, qinv, omega_bar));
  return r;
}

RiemannCheck riemann_reduced(const CMat2& Z, const SkewForm& q) {
  require_invertible(q);
  const CMat2 B = to_complex(comatrix(q.C));
  const CMat2 T = to_complex(q.T());
  RiemannCheck r;
  r.isotropic = (B * Z.transpose() - Z * B.transpose()) == T;
  const CMat2 inner = B * conj(Z).transpose() - Z * B.transpose() - T;
  const CRat scale = CRat(Rat(0), Rat(-pfaffian(q)));
  r.positive = hermitian_positive(scale * inner);
  return r;
}

bool check_riemann(const PeriodData& p, const SkewForm& q) {
  require_invertible(q);
  const RiemannCheck reduced = riemann_reduced(p.Z, q);
  const RiemannCheck intrinsic = riemann_intrinsic(p.Z, q.assemble());
  if (reduced.isotropic != intrinsic.isotropic || reduced.positive != intrinsic.positive) {
    throw Error(ErrorCode::Internal, "block and intrinsic Riemann relations disagree");
  }
  return reduced.ok();
}

PolarizationType polarization_type(const SkewForm& q) {
  require_invertible(q);
  std::int64_t d1 = std::gcd(divisibility(q.C), q.tau);
  const std::int64_t pf = std::llabs(pfaffian(q));
  if (pf % (d1 * d1) != 0 || (pf / d1) % d1 != 0) {
    throw Error(ErrorCode::Internal, "polarization type violates d1 | d2");
  }
  return PolarizationType{d1, pf / d1};
}

}  // namespace tropabel
