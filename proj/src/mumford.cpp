#include "tropabel/mumford.hpp"

#include <array>

namespace tropabel {

namespace {

// Indices b_ij, z_ij address the transposed storage: b_ij = B(j-1, i-1).
struct ScalarTerm {
  int row;   // position of the z variable in Z
  int col;
  std::int64_t coeff;
};

std::array<ScalarTerm, 4> scalar_terms(const IMat2& B) {
  return {ScalarTerm{1, 0, B(0, 0)},    // b11 z12
          ScalarTerm{1, 1, B(0, 1)},    // b21 z22
          ScalarTerm{0, 0, -B(1, 0)},   // -b12 z11
          ScalarTerm{0, 1, -B(1, 1)}};  // -b22 z21
}

}  // namespace

FamilyCheck check_family_polarization(const CMat2& Z, const RMat2& S, const IMat4& Q) {
  if (!is_skew(Q)) throw Error(ErrorCode::InvalidArgument, "Q is not skew-symmetric");
  FamilyCheck r;
  IMat2 C(Q[0][2], Q[0][3], Q[1][2], Q[1][3]);
  if (det2(C) == 0) throw Error(ErrorCode::SingularMatrix, "polarization block C is singular");
  const SkewForm q{C, Q[2][3]};

  const std::int64_t pf = classical_pfaffian(Q);
  r.block_form = Q[0][1] == 0 && pf != 0;
  if (r.block_form) {
    RatMatrix dual = to_rat_matrix(Q).inverse();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) dual(i, j) *= Rat(pf);
    }
    const IMat2 B = comatrix(C);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (!dual(i + 2, j + 2).is_zero() || !(dual(i, j + 2) == Rat(B(static_cast<int>(i), static_cast<int>(j))))) {
          r.block_form = false;
        }
      }
    }
  }
  if (!r.block_form) {
    r.diagnostics.emplace_back(std::string(kDiagBlockForm) + ": Q or Pf(Q)Q^-1 is not of the required block form");
    return r;
  }

  const RMat2 bst = to_rational(comatrix(C)) * S.transpose();
  r.tropical = bst.is_symmetric() && is_pos_def_sym(bst);
  if (!r.tropical) r.diagnostics.emplace_back(std::string(kDiagTropical) + ": B S^T is not symmetric positive definite");

  const RiemannCheck reduced = riemann_reduced(Z, q);
  const RiemannCheck intrinsic = riemann_intrinsic(Z, Q);
  if (reduced.isotropic != intrinsic.isotropic || reduced.positive != intrinsic.positive) {
    throw Error(ErrorCode::Internal, "block and intrinsic Riemann relations disagree");
  }
  r.isotropic = reduced.isotropic;
  r.positive = reduced.positive;
  if (!r.isotropic) r.diagnostics.emplace_back(std::string(kDiagIsotropic) + ": B Z^T - Z B^T != T");
  if (!r.positive) {
    r.diagnostics.emplace_back(std::string(kDiagPositive) + ": -i Pf(Q)(B conj(Z)^T - Z B^T - T) is not positive definite");
  }
  return r;
}

FamilyCheck check_family_polarization(const CMat2& Z, const RMat2& S, const SkewForm& q) {
  return check_family_polarization(Z, S, q.assemble());
}

CMat2 build_Z(const IMat2& B, std::int64_t tau, const RMat2& S) {
  if (B == IMat2(0, 0, 0, 0)) throw Error(ErrorCode::DegenerateB, "B is zero");
  const RMat2 bst = to_rational(B) * S.transpose();
  if (!bst.is_symmetric() || !is_pos_def_sym(bst)) {
    throw Error(ErrorCode::NoTropicalPolarization, "B S^T is not symmetric positive definite");
  }
  RMat2 X(Rat(0), Rat(0), Rat(0), Rat(0));
  for (const auto& term : scalar_terms(B)) {
    if (term.coeff != 0) {
      X(term.row, term.col) = Rat(tau, term.coeff);
      break;
    }
  }
  CMat2 Z;
  for (std::size_t k = 0; k < 4; ++k) Z.a[k] = CRat(X.a[k], S.a[k]);
  return Z;
}

MumfordFamily make_family(const IMat2& B, std::int64_t tau, const TropicalTorus& t) {
  if (!t.is_integral()) throw Error(ErrorCode::InvalidArgument, "Mumford families need an integral torus matrix S");
  MumfordFamily fam{build_Z(B, tau, t.S()), t.S(), tau, SkewForm{comatrix(B), tau}};
  const FamilyCheck check = check_family_polarization(fam.Z, fam.S, fam.Q);
  if (!check.ok()) throw Error(ErrorCode::Internal, "constructed family fails its polarization check");
  return fam;
}

SigmaExponent sigma(const CMat2& Z, const IMat2& B, std::int64_t delta) {
  if (delta < 1) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  for (auto b : B.a) {
    if (b % delta != 0) {
      throw Error(ErrorCode::NonIntegralExponents, std::to_string(delta) + " does not divide every entry of " + to_string(B));
    }
  }
  CRat w;
  for (const auto& term : scalar_terms(B)) w += CRat(Rat(term.coeff)) * Z(term.row, term.col);
  return SigmaExponent{w / CRat(Rat(delta))};
}

bool is_realizable(const ParamCurve& pc, const MumfordFamily& fam) {
  const IMat2 b = degree(pc);
  if (!(b == fam.B())) {
    throw Error(ErrorCode::DegreeMismatch, "curve degree " + to_string(b) + " differs from family degree " + to_string(fam.B()));
  }
  return sigma(fam.Z, b, curve_gcd(pc)).is_one();
}

}  // namespace tropabel
