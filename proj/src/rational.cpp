#include "tropabel/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "tropabel/error.hpp"

namespace tropabel {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonIntegralDegree: return "NonIntegralDegree";
    case ErrorCode::WallDegeneracy: return "WallDegeneracy";
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::FlatVertex: return "FlatVertex";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::NoTropicalPolarization: return "NoTropicalPolarization";
    case ErrorCode::DegenerateB: return "DegenerateB";
    case ErrorCode::NonIntegralExponents: return "NonIntegralExponents";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnsupportedGenus: return "UnsupportedGenus";
    case ErrorCode::NonGenericConfig: return "NonGenericConfig";
    case ErrorCode::BoundsUnstable: return "BoundsUnstable";
    case ErrorCode::MissingPrimitiveValue: return "MissingPrimitiveValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rat::Rat(long long num, long long den) : Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto strip_plus = [](std::string_view s) { return s[0] == '+' ? s.substr(1) : s; };
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  return Rat(BigInt(std::string(strip_plus(num))), BigInt(std::string(strip_plus(den))));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + str());
  const BigInt n = num();
  if (!n.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "integer out of range: " + str());
  return n.get_si();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

CRat& CRat::operator/=(const CRat& o) {
  const Rat norm = o.re * o.re + o.im * o.im;
  if (norm.is_zero()) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  *this *= o.conj();
  re /= norm;
  im /= norm;
  return *this;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace tropabel
