#ifndef TORUSALG_NUMFIELD_HPP
#define TORUSALG_NUMFIELD_HPP

#include <gmpxx.h>

#include <array>
#include <string>

namespace torusalg {

using Rational = mpq_class;

/// Make a canonical rational p/q (lowest terms, positive denominator).
Rational make_rational(long num, long den = 1);

/// Element of the real quartic field Q(sqrt2, sqrt3, sqrt6), stored as
/// exact rational coordinates on the basis {1, sqrt2, sqrt3, sqrt6}.
/// An element is zero iff all four coordinates are zero, so equality and
/// the zero test are exact. All operations are pure; values are immutable
/// once constructed apart from assignment.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long n) { c_[0] = n; }
  explicit FieldScalar(Rational a) { c_[0] = std::move(a); }
  FieldScalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static FieldScalar sqrt2() { return FieldScalar(0, 1, 0, 0); }
  static FieldScalar sqrt3() { return FieldScalar(0, 0, 1, 0); }
  static FieldScalar sqrt6() { return FieldScalar(0, 0, 0, 1); }

  /// Coordinate on basis element i (0:1, 1:sqrt2, 2:sqrt3, 3:sqrt6).
  const Rational& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

  /// Exact sign of the real number: canonical zero test first, then
  /// integer interval refinement of the radicals until 0 is excluded.
  int sign() const;

  /// Multiplicative inverse via the product of Galois conjugates.
  /// Throws std::domain_error on zero.
  FieldScalar inverse() const;

  /// Galois conjugates: flip2 sends sqrt2 -> -sqrt2 (and sqrt6 -> -sqrt6),
  /// flip3 sends sqrt3 -> -sqrt3 (and sqrt6 -> -sqrt6).
  FieldScalar conj_flip2() const { return FieldScalar(c_[0], -c_[1], c_[2], -c_[3]); }
  FieldScalar conj_flip3() const { return FieldScalar(c_[0], c_[1], -c_[2], -c_[3]); }
  FieldScalar conj_flip23() const { return FieldScalar(c_[0], -c_[1], -c_[2], c_[3]); }

  /// Approximate value, for diagnostics and float bridging only — never
  /// part of an exactness decision.
  double to_double() const;

  /// Text form "a + b*sqrt2 + c*sqrt3 + d*sqrt6" with rationals "p/q".
  std::string str() const;
  static FieldScalar parse(const std::string& text);

  FieldScalar operator-() const { return FieldScalar(-c_[0], -c_[1], -c_[2], -c_[3]); }
  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

 private:
  std::array<Rational, 4> c_{};  // coefficients of {1, sqrt2, sqrt3, sqrt6}
};

/// Complexified field element re + i*im with both parts in Q(sqrt2,sqrt3,sqrt6).
class CFieldScalar {
 public:
  CFieldScalar() = default;
  CFieldScalar(long n) : re_(n) {}
  CFieldScalar(FieldScalar re) : re_(std::move(re)) {}
  CFieldScalar(FieldScalar re, FieldScalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static CFieldScalar i() { return CFieldScalar(FieldScalar(0), FieldScalar(1)); }
  /// i * x, cheaper than a full product.
  static CFieldScalar i_times(const FieldScalar& x) { return CFieldScalar(FieldScalar(0), x); }

  const FieldScalar& re() const { return re_; }
  const FieldScalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  CFieldScalar conj() const { return CFieldScalar(re_, -im_); }
  CFieldScalar times_i() const { return CFieldScalar(-im_, re_); }

  /// Throws std::domain_error on zero.
  CFieldScalar inverse() const;

  CFieldScalar operator-() const { return CFieldScalar(-re_, -im_); }
  CFieldScalar& operator+=(const CFieldScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CFieldScalar& operator-=(const CFieldScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  friend CFieldScalar operator+(CFieldScalar a, const CFieldScalar& b) { return a += b; }
  friend CFieldScalar operator-(CFieldScalar a, const CFieldScalar& b) { return a -= b; }
  friend CFieldScalar operator*(const CFieldScalar& a, const CFieldScalar& b) {
    return CFieldScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CFieldScalar operator*(const FieldScalar& a, const CFieldScalar& b) {
    return CFieldScalar(a * b.re_, a * b.im_);
  }
  friend CFieldScalar operator/(const CFieldScalar& a, const CFieldScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CFieldScalar& a, const CFieldScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CFieldScalar& a, const CFieldScalar& b) { return !(a == b); }

 private:
  FieldScalar re_, im_;
};

std::string rational_str(const Rational& r);

}  // namespace torusalg

#endif
