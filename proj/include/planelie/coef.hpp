#pragma once

#include <vector>

#include "planelie/scalar.hpp"

namespace planelie {

/// e^{d x} x^a y^k with rational exponents.
///
/// In a chart other than (x, y) the same triple is read with x, y replaced by
/// that chart's coordinates.
struct Monomial {
  Rational d{0};  // exponential weight
  Rational a{0};  // power of the first coordinate
  Rational k{0};  // power of the second coordinate

  static Monomial one() { return {}; }
  bool is_one() const { return sgn(d) == 0 && sgn(a) == 0 && sgn(k) == 0; }

  friend Monomial operator*(const Monomial& l, const Monomial& r) {
    return {l.d + r.d, l.a + r.a, l.k + r.k};
  }
  friend bool operator==(const Monomial& l, const Monomial& r) {
    return l.d == r.d && l.a == r.a && l.k == r.k;
  }
  friend bool operator!=(const Monomial& l, const Monomial& r) {
    return !(l == r);
  }
};

/// Lexicographic on (d, a, k).
int compare(const Monomial& l, const Monomial& r);
inline bool operator<(const Monomial& l, const Monomial& r) {
  return compare(l, r) < 0;
}

struct Term {
  Scalar coef;
  Monomial mono;
};

/// Finite sum of Scalar * Monomial in canonical form: no zero coefficients,
/// monomials strictly increasing. Two CoefFn are equal iff their term lists
/// are identical.
class CoefFn {
 public:
  CoefFn() = default;
  CoefFn(const Scalar& c);  // NOLINT(google-explicit-constructor)
  CoefFn(const Scalar& c, const Monomial& m);

  /// Merges like monomials, drops zeros and sorts.
  static CoefFn normalize(std::vector<Term> raw);

  static CoefFn exp_x(const Rational& d);
  static CoefFn x_pow(const Rational& a);
  static CoefFn y_pow(const Rational& k);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Coefficient of m (zero if absent).
  Scalar coefficient(const Monomial& m) const;

  CoefFn operator-() const;
  CoefFn& operator+=(const CoefFn& o);
  CoefFn& operator-=(const CoefFn& o);

  friend CoefFn operator+(const CoefFn& l, const CoefFn& r);
  friend CoefFn operator-(const CoefFn& l, const CoefFn& r);
  friend CoefFn operator*(const CoefFn& l, const CoefFn& r);
  friend bool operator==(const CoefFn& l, const CoefFn& r);
  friend bool operator!=(const CoefFn& l, const CoefFn& r) { return !(l == r); }

 private:
  std::vector<Term> terms_;
};

CoefFn add(const CoefFn& f, const CoefFn& g);
CoefFn mul(const CoefFn& f, const CoefFn& g);
CoefFn scale(const Scalar& c, const CoefFn& f);

CoefFn ddx(const CoefFn& f);
CoefFn ddy(const CoefFn& f);

/// Raises a single term c e^{dx} x^a y^k to the rational power r.
///
/// Integer r works for any c. For non-integer r the coefficient must be a
/// positive power 2^{m/2} with c^r again in Q(sqrt 2); otherwise
/// IrrationalCoefficient. NonMonomial if f does not have exactly one term.
CoefFn pow_monomial(const CoefFn& f, const Rational& r);

/// Scalar power c^r under the same rules as pow_monomial.
Scalar pow_scalar(const Scalar& c, const Rational& r);

}  // namespace planelie
