// Small dense matrices over integers, rationals and complex rationals, plus a
// dynamically sized rational matrix with exact row reduction.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tropabel/error.hpp"
#include "tropabel/rational.hpp"

namespace tropabel {

template <typename T>
struct Vec2 {
  T x{};
  T y{};

  T& operator[](int i) { return i == 0 ? x : y; }
  const T& operator[](int i) const { return i == 0 ? x : y; }

  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const T& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  bool is_zero() const { return x == T{} && y == T{}; }
};

using IVec2 = Vec2<std::int64_t>;
using RVec2 = Vec2<Rat>;

/// Row-major 2x2 matrix, entries addressed as m(i, j) with i, j in {0, 1}.
template <typename T>
struct Mat2 {
  std::array<T, 4> a{};

  Mat2() = default;
  Mat2(T m00, T m01, T m10, T m11) : a{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

  static Mat2 identity() { return Mat2(T(1), T(0), T(0), T(1)); }

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

  Mat2 transpose() const { return Mat2(a[0], a[2], a[1], a[3]); }
  T det() const { return a[0] * a[3] - a[1] * a[2]; }
  Vec2<T> col(int j) const { return {(*this)(0, j), (*this)(1, j)}; }

  friend Mat2 operator+(const Mat2& p, const Mat2& q) {
    return Mat2(p.a[0] + q.a[0], p.a[1] + q.a[1], p.a[2] + q.a[2], p.a[3] + q.a[3]);
  }
  friend Mat2 operator-(const Mat2& p, const Mat2& q) {
    return Mat2(p.a[0] - q.a[0], p.a[1] - q.a[1], p.a[2] - q.a[2], p.a[3] - q.a[3]);
  }
  friend Mat2 operator*(const Mat2& p, const Mat2& q) {
    return Mat2(p.a[0] * q.a[0] + p.a[1] * q.a[2], p.a[0] * q.a[1] + p.a[1] * q.a[3],
                p.a[2] * q.a[0] + p.a[3] * q.a[2], p.a[2] * q.a[1] + p.a[3] * q.a[3]);
  }
  friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) {
    return {m.a[0] * v.x + m.a[1] * v.y, m.a[2] * v.x + m.a[3] * v.y};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) { return Mat2(s * m.a[0], s * m.a[1], s * m.a[2], s * m.a[3]); }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  bool is_symmetric() const { return a[1] == a[2]; }
};

using IMat2 = Mat2<std::int64_t>;
using RMat2 = Mat2<Rat>;
using CMat2 = Mat2<CRat>;

RMat2 to_rational(const IMat2& m);
CMat2 to_complex(const RMat2& m);
CMat2 to_complex(const IMat2& m);
RMat2 real_part(const CMat2& m);
RMat2 imag_part(const CMat2& m);
CMat2 conj(const CMat2& m);
CMat2 conj_transpose(const CMat2& m);

std::int64_t det2(const IMat2& m);

/// (det m)(m^-1)^T, the integer comatrix. Throws SingularMatrix when det m = 0.
IMat2 comatrix(const IMat2& m);

RMat2 inverse(const RMat2& m);

/// Entries of r as integers; nullopt-like failure signalled by returning false.
bool to_integer(const RMat2& r, IMat2& out);

/// gcd of all entries (0 for the zero matrix).
std::int64_t divisibility(const IMat2& m);

/// Sylvester's criterion on a symmetric rational matrix.
bool is_pos_def_sym(const RMat2& m);

/// Positive definiteness of a hermitian matrix with complex rational entries.
bool is_pos_def_herm(const CMat2& m);

std::string to_string(const IMat2& m);

/// Dense rational matrix used for the 4x4 block checks and the enumeration
/// solver.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& p, const RatMatrix& q);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  RatMatrix transpose() const;

  /// Reduced row echelon form in place; returns the pivot column of each
  /// nonzero row. Only the first `pivot_cols` columns are used as pivots.
  std::vector<std::size_t> rref(std::size_t pivot_cols);

  Rat determinant() const;
  /// Throws SingularMatrix.
  RatMatrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace tropabel
