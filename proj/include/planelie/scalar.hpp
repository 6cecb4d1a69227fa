#pragma once

#include <gmpxx.h>

#include <string>

namespace planelie {

using Rational = mpq_class;

// Builds num/den in lowest terms.
Rational make_rational(long num, long den = 1);
bool is_integer(const Rational& q);

/// Exact element a + b*sqrt(2) of the field Q(sqrt 2).
///
/// Both rational parts are kept canonical by GMP, so equality is plain
/// componentwise comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) {}  // NOLINT
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  /// a - b*sqrt2.
  Scalar conjugate() const { return Scalar(a_, -b_); }
  /// Field norm a^2 - 2b^2; nonzero for every nonzero element.
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  /// Sign of the real number a + b*sqrt2.
  int sign() const;

  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// c^n for integer n (n < 0 requires c != 0).
Scalar pow_int(const Scalar& c, long n);

std::string to_string(const Rational& q);

}  // namespace planelie
