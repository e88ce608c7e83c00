// Exact scalars: rationals backed by GMP and complex numbers with rational
// real and imaginary parts.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tropabel {

using BigInt = mpz_class;

/// Reduced rational number with positive denominator. Equality is structural.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(long long num, long long den);
  explicit Rat(const BigInt& n) : value_(n) {}
  Rat(const BigInt& num, const BigInt& den);

  static Rat parse(std::string_view text);

  /// "p/q", or "p" when the denominator is one.
  std::string str() const { return value_.get_str(); }

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  BigInt floor() const;
  /// Throws unless the value is an integer representable in 64 bits.
  std::int64_t to_int64() const;

  Rat operator-() const { return Rat(mpq_class(-value_)); }
  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rat(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Rat abs(const Rat& r);

/// Complex number re + i*im with rational parts.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  CRat(long long r) : re(r) {}       // NOLINT(google-explicit-constructor)
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }
  CRat conj() const { return {re, -im}; }
  bool is_real() const { return im.is_zero(); }

  CRat operator-() const { return {-re, -im}; }
  CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
  CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  CRat& operator/=(const CRat& o);

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace tropabel
