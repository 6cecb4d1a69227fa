#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "planelie/field.hpp"
#include "planelie/textio.hpp"

namespace testing {

using namespace planelie;

inline VectorField F(const std::string& text, const std::string& chart = kDefaultChart) {
  return parse_field(text, chart);
}
inline CoefFn G(const std::string& text) { return parse_function(text); }
inline Rational Q(long n, long d = 1) { return make_rational(n, d); }

// Small random objects for the property suites. Exponents are drawn from a
// short list of half-integers so products stay small.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() { return make_rational(uniform(-4, 4), uniform(1, 3)); }

  Scalar scalar(bool with_root = true) {
    Rational a = rational();
    Rational b = with_root && uniform(0, 3) == 0 ? rational() : Rational(0);
    if (sgn(a) == 0 && sgn(b) == 0) a = 1;
    return Scalar(a, b);
  }

  Monomial monomial(bool with_x = false) {
    Monomial m;
    m.d = make_rational(uniform(-4, 4), 2);
    m.a = with_x ? Rational(uniform(0, 2)) : Rational(0);
    m.k = Rational(uniform(-1, 3));
    return m;
  }

  CoefFn coef(int max_terms = 3, bool with_x = false, bool with_root = true) {
    std::vector<Term> t;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) t.push_back({scalar(with_root), monomial(with_x)});
    return CoefFn::normalize(std::move(t));
  }

  VectorField field(int max_terms = 2, bool with_x = false, bool with_root = true) {
    return {coef(max_terms, with_x, with_root), coef(max_terms, with_x, with_root)};
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Floating-point evaluation at a point with x, y > 0; used as an
// independent check of the symbolic differentiation.
inline double eval(const Scalar& c) {
  return c.rational_part().get_d() + c.sqrt2_part().get_d() * std::sqrt(2.0);
}

inline double eval(const CoefFn& f, double x, double y) {
  double s = 0;
  for (const auto& t : f.terms()) {
    s += eval(t.coef) * std::exp(t.mono.d.get_d() * x) * std::pow(x, t.mono.a.get_d()) *
         std::pow(y, t.mono.k.get_d());
  }
  return s;
}

}  // namespace testing
