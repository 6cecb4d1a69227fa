#include "planelie/field.hpp"

#include "planelie/error.hpp"

namespace planelie {

void require_same_chart(const VectorField& a, const VectorField& b) {
  if (a.chart != b.chart) {
    throw Error(ErrorKind::ChartMismatch,
                "fields on charts '" + a.chart + "' and '" + b.chart + "'");
  }
}

VectorField operator+(const VectorField& l, const VectorField& r) {
  require_same_chart(l, r);
  return {l.f + r.f, l.g + r.g, l.chart};
}

VectorField operator-(const VectorField& l, const VectorField& r) {
  require_same_chart(l, r);
  return {l.f - r.f, l.g - r.g, l.chart};
}

VectorField operator*(const CoefFn& h, const VectorField& v) {
  return {h * v.f, h * v.g, v.chart};
}

VectorField scale(const Scalar& c, const VectorField& v) {
  return {scale(c, v.f), scale(c, v.g), v.chart};
}

CoefFn apply(const VectorField& A, const CoefFn& h) {
  return A.f * ddx(h) + A.g * ddy(h);
}

VectorField bracket(const VectorField& A, const VectorField& B) {
  require_same_chart(A, B);
  return {apply(A, B.f) - apply(B, A.f), apply(A, B.g) - apply(B, A.g),
          A.chart};
}

VectorField ad_power(const VectorField& A, const VectorField& B, unsigned n) {
  require_same_chart(A, B);
  VectorField out = B;
  for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = bracket(A, out);
  return out;
}

CoefFn wedge(const VectorField& A, const VectorField& B) {
  require_same_chart(A, B);
  return A.f * B.g - A.g * B.f;
}

int generic_rank(const VectorField& A, const VectorField& B) {
  if (!wedge(A, B).is_zero()) return 2;
  if (A.is_zero() && B.is_zero()) return 0;
  return 1;
}

ChartMap::ChartMap(std::string source, std::string target, CoefFn first_image,
                   CoefFn second_image, CoefFn inv_exp, CoefFn inv_y)
    : source_(std::move(source)),
      target_(std::move(target)),
      first_image_(std::move(first_image)),
      second_image_(std::move(second_image)),
      inv_exp_(std::move(inv_exp)),
      inv_y_(std::move(inv_y)) {
  if (substitute(first_image_) != CoefFn::x_pow(1) ||
      substitute(second_image_) != CoefFn::y_pow(1)) {
    throw Error(ErrorKind::InvalidArgument,
                "chart map inverse data does not round-trip");
  }
}

CoefFn ChartMap::substitute(const CoefFn& h) const {
  CoefFn out;
  for (const auto& t : h.terms()) {
    if (sgn(t.mono.a) != 0) {
      throw Error(ErrorKind::NonSubstitutableTerm,
                  "term with a power of x has no image under the chart map");
    }
    CoefFn piece(t.coef);
    if (sgn(t.mono.d) != 0) piece = piece * pow_monomial(inv_exp_, t.mono.d);
    if (sgn(t.mono.k) != 0) piece = piece * pow_monomial(inv_y_, t.mono.k);
    out += piece;
  }
  return out;
}

VectorField pushforward(const VectorField& W, const ChartMap& m) {
  if (W.chart != m.source()) {
    throw Error(ErrorKind::ChartMismatch,
                "field on chart '" + W.chart + "', map from '" + m.source() +
                    "'");
  }
  return {m.substitute(apply(W, m.first_image())),
          m.substitute(apply(W, m.second_image())), m.target()};
}

}  // namespace planelie
