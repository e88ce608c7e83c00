#include "tropabel/skew_form.hpp"

namespace tropabel {

IMat4 SkewForm::assemble() const {
  IMat4 q{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      q[i][j + 2] = C(i, j);
      q[j + 2][i] = -C(i, j);
    }
  }
  q[2][3] = tau;
  q[3][2] = -tau;
  return q;
}

std::int64_t pfaffian(const SkewForm& q) { return -det2(q.C); }

std::int64_t classical_pfaffian(const IMat4& a) {
  return a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2];
}

bool is_skew(const IMat4& a) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (a[i][j] != -a[j][i]) return false;
    }
  }
  return true;
}

RatMatrix to_rat_matrix(const IMat4& a) {
  RatMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rat(a[i][j]);
  }
  return m;
}

}  // namespace tropabel
