#include "planelie/coef.hpp"
#include "planelie/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("monomial order is lexicographic on (d, a, k)") {
  CHECK(Monomial{0, 0, 2} < Monomial{1, 0, 0});
  CHECK(Monomial{1, 0, 5} < Monomial{1, 1, 0});
  CHECK(Monomial{Q(-1, 2), 3, 3} < Monomial{0, 0, -1});
  CHECK(compare(Monomial{Q(1, 2), 0, 1}, Monomial{Q(2, 4), 0, 1}) == 0);
  CHECK(Monomial{1, 0, 1} * Monomial{-1, 2, -1} == Monomial{0, 2, 0});
  CHECK(Monomial::one().is_one());
}

TEST_CASE("normalize cancels and merges") {
  const Monomial one{};
  const Monomial exy{1, 0, 1};
  CHECK(CoefFn::normalize({{Scalar(1), one}, {Scalar(-1), one}}).is_zero());
  const CoefFn merged = CoefFn::normalize({{Scalar(1), exy}, {Scalar(2), exy}});
  REQUIRE(merged.size() == 1);
  CHECK(merged.terms()[0].coef == Scalar(3));
  CHECK(merged == scale(3, CoefFn::exp_x(1) * CoefFn::y_pow(1)));
}

TEST_CASE("canonical order puts y^2 before exp(x)") {
  const CoefFn f = CoefFn::normalize({{Scalar(1), {0, 0, 2}}, {Scalar(1), {1, 0, 0}}});
  REQUIRE(f.size() == 2);
  CHECK(f.terms()[0].mono == Monomial{0, 0, 2});
  CHECK(f.terms()[1].mono == Monomial{1, 0, 0});
  CHECK(f == CoefFn::exp_x(1) + CoefFn::y_pow(2));
}

TEST_CASE("zero scalars are dropped") {
  CHECK(CoefFn(Scalar()).is_zero());
  CHECK(CoefFn::normalize({{Scalar(), {1, 0, 0}}}).is_zero());
  CHECK(CoefFn(Scalar(), Monomial{2, 0, 0}) == CoefFn());
}

TEST_CASE("ring operations") {
  CHECK(mul(CoefFn::y_pow(1), CoefFn::y_pow(-1)) == CoefFn(1));
  CHECK(mul(CoefFn::exp_x(1), CoefFn::exp_x(-1) * CoefFn::y_pow(1)) == CoefFn::y_pow(1));
  CHECK(add(G("1/2*y^2 + 1"), G("-1/2*y^2")) == CoefFn(1));
  CHECK(scale(Scalar(), G("y + 1")).is_zero());
  CHECK(-G("y") + G("y") == CoefFn());
  CHECK(G("y + 1") * G("y - 1") == G("y^2 - 1"));
  CHECK(G("3").is_constant());
  CHECK(CoefFn().is_constant());
  CHECK_FALSE(G("y").is_constant());
  CHECK(G("2*y + 5*exp(x)").coefficient({1, 0, 0}) == Scalar(5));
  CHECK(G("2*y").coefficient({1, 0, 0}).is_zero());
}

TEST_CASE("derivatives") {
  CHECK(ddx(CoefFn::exp_x(Q(1, 2))) == scale(Scalar(Q(1, 2)), CoefFn::exp_x(Q(1, 2))));
  CHECK(ddy(G("1/2*y^2 + 1")) == G("y"));
  CHECK(ddx(G("x*y^-1")) == G("y^-1"));
  CHECK(ddx(G("exp(2*x)*x^3")) == G("2*exp(2*x)*x^3 + 3*exp(2*x)*x^2"));
  CHECK(ddy(G("y^1/2")) == G("1/2*y^-1/2"));
  CHECK(ddx(G("7")).is_zero());
  CHECK(ddy(G("exp(x)")).is_zero());
}

TEST_CASE("pow_monomial") {
  CHECK(pow_monomial(G("1/2*x^2*y^-1"), Q(1, 2)) ==
        CoefFn(Scalar(0, Q(1, 2)), Monomial{0, 1, Q(-1, 2)}));
  CHECK(pow_monomial(G("2*y"), 3) == G("8*y^3"));
  CHECK(pow_monomial(G("sqrt2*y"), 2) == G("2*y^2"));
  CHECK(pow_monomial(G("exp(x)*y"), -1) == G("exp(-1*x)*y^-1"));
  CHECK(pow_monomial(G("4*y^2"), Q(-1, 2)) == G("1/2*y^-1"));
  CHECK(pow_monomial(G("1/8*x"), Q(1, 3)) == G("1/2*x^1/3"));
}

TEST_CASE("pow_monomial errors") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { pow_monomial(G("3*y"), Q(1, 2)); }) == ErrorKind::IrrationalCoefficient);
  CHECK(kind_of([] { pow_monomial(G("-2*y"), Q(1, 2)); }) ==
        ErrorKind::IrrationalCoefficient);
  CHECK(kind_of([] { pow_monomial(G("2*y"), Q(1, 4)); }) == ErrorKind::IrrationalCoefficient);
  CHECK(kind_of([] { pow_monomial(G("y + 1"), 2); }) == ErrorKind::NonMonomial);
  CHECK(kind_of([] { pow_monomial(CoefFn(), 2); }) == ErrorKind::NonMonomial);
}

TEST_CASE("pow_scalar over powers of two") {
  CHECK(pow_scalar(Scalar(2), Q(1, 2)) == Scalar::sqrt2());
  CHECK(pow_scalar(Scalar(2), Q(-3, 2)) == Scalar(0, Q(1, 4)));
  CHECK(pow_scalar(Scalar(Q(1, 4)), Q(3, 2)) == Scalar(Q(1, 8)));
  CHECK(pow_scalar(Scalar::sqrt2(), 3) == Scalar(0, 2));
  CHECK(pow_scalar(Scalar(-3), 3) == Scalar(-27));
  CHECK_THROWS_AS(pow_scalar(Scalar(0, 3), Q(1, 2)), Error);
}
