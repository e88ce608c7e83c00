#include "tropabel/matrix.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace tropabel {

RMat2 to_rational(const IMat2& m) { return RMat2(Rat(m.a[0]), Rat(m.a[1]), Rat(m.a[2]), Rat(m.a[3])); }

CMat2 to_complex(const RMat2& m) { return CMat2(m.a[0], m.a[1], m.a[2], m.a[3]); }

CMat2 to_complex(const IMat2& m) { return to_complex(to_rational(m)); }

RMat2 real_part(const CMat2& m) { return RMat2(m.a[0].re, m.a[1].re, m.a[2].re, m.a[3].re); }

RMat2 imag_part(const CMat2& m) { return RMat2(m.a[0].im, m.a[1].im, m.a[2].im, m.a[3].im); }

CMat2 conj(const CMat2& m) { return CMat2(m.a[0].conj(), m.a[1].conj(), m.a[2].conj(), m.a[3].conj()); }

CMat2 conj_transpose(const CMat2& m) { return conj(m).transpose(); }

std::int64_t det2(const IMat2& m) { return m.det(); }

IMat2 comatrix(const IMat2& m) {
  if (m.det() == 0) throw Error(ErrorCode::SingularMatrix, "comatrix of singular matrix " + to_string(m));
  // (det m) (m^-1)^T for [[a,b],[c,d]] is [[d,-c],[-b,a]].
  return IMat2(m(1, 1), -m(1, 0), -m(0, 1), m(0, 0));
}

RMat2 inverse(const RMat2& m) {
  const Rat d = m.det();
  if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "inverse of singular 2x2 matrix");
  return RMat2(m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d);
}

bool to_integer(const RMat2& r, IMat2& out) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (!r.a[k].is_integer() || !r.a[k].num().fits_slong_p()) return false;
    out.a[k] = r.a[k].num().get_si();
  }
  return true;
}

std::int64_t divisibility(const IMat2& m) {
  std::int64_t g = 0;
  for (auto v : m.a) g = std::gcd(g, v);
  return g;
}

bool is_pos_def_sym(const RMat2& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  return m(0, 0).sign() > 0 && m.det().sign() > 0;
}

bool is_pos_def_herm(const CMat2& m) {
  if (!(m == conj_transpose(m))) throw Error(ErrorCode::NotHermitian, "matrix is not hermitian");
  // Both leading minors are real for a hermitian matrix.
  const CRat d = m.det();
  return m(0, 0).re.sign() > 0 && d.re.sign() > 0;
}

std::string to_string(const IMat2& m) {
  std::ostringstream os;
  os << "[[" << m(0, 0) << "," << m(0, 1) << "],[" << m(1, 0) << "," << m(1, 1) << "]]";
  return os.str();
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

RatMatrix operator*(const RatMatrix& p, const RatMatrix& q) {
  if (p.cols_ != q.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  RatMatrix r(p.rows_, q.cols_);
  for (std::size_t i = 0; i < p.rows_; ++i) {
    for (std::size_t k = 0; k < p.cols_; ++k) {
      const Rat& pik = p(i, k);
      if (pik.is_zero()) continue;
      for (std::size_t j = 0; j < q.cols_; ++j) r(i, j) += pik * q(k, j);
    }
  }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<std::size_t> RatMatrix::rref(std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
    }
    const Rat inv = Rat(1) / (*this)(row, col);
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col).is_zero()) continue;
      const Rat f = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  RatMatrix m = *this;
  Rat det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && m(sel, col).is_zero()) ++sel;
    if (sel == rows_) return Rat(0);
    if (sel != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rat f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Rat(1);
  }
  if (aug.rref(n).size() != n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

}  // namespace tropabel
