#pragma once

#include <string>

#include "planelie/coef.hpp"

namespace planelie {

inline constexpr const char* kDefaultChart = "xy";

/// f * d/d(first coordinate) + g * d/d(second coordinate) on a named chart.
struct VectorField {
  std::string chart = kDefaultChart;
  CoefFn f;
  CoefFn g;

  VectorField() = default;
  VectorField(CoefFn f_, CoefFn g_, std::string chart_ = kDefaultChart)
      : chart(std::move(chart_)), f(std::move(f_)), g(std::move(g_)) {}

  static VectorField dx(std::string chart = kDefaultChart) {
    return {CoefFn(1), CoefFn(), std::move(chart)};
  }
  static VectorField dy(std::string chart = kDefaultChart) {
    return {CoefFn(), CoefFn(1), std::move(chart)};
  }

  bool is_zero() const { return f.is_zero() && g.is_zero(); }

  VectorField operator-() const { return {-f, -g, chart}; }

  friend bool operator==(const VectorField& l, const VectorField& r) {
    return l.chart == r.chart && l.f == r.f && l.g == r.g;
  }
  friend bool operator!=(const VectorField& l, const VectorField& r) {
    return !(l == r);
  }
};

VectorField operator+(const VectorField& l, const VectorField& r);
VectorField operator-(const VectorField& l, const VectorField& r);
/// Multiplies both components by a function.
VectorField operator*(const CoefFn& h, const VectorField& v);
VectorField scale(const Scalar& c, const VectorField& v);

/// Throws ChartMismatch unless both fields live on the same chart.
void require_same_chart(const VectorField& a, const VectorField& b);

/// A(h) = A.f * dh/dx + A.g * dh/dy.
CoefFn apply(const VectorField& A, const CoefFn& h);

/// Commutator [A, B] of derivations.
VectorField bracket(const VectorField& A, const VectorField& B);

/// ad(A)^n (B); n = 0 returns B.
VectorField ad_power(const VectorField& A, const VectorField& B, unsigned n);

/// A.f * B.g - A.g * B.f.
CoefFn wedge(const VectorField& A, const VectorField& B);

/// Rank of the distribution spanned by A, B at a generic point: 2 when the
/// wedge is a nonzero ring element, 1 when it vanishes but a field is
/// nonzero, 0 when both are zero.
int generic_rank(const VectorField& A, const VectorField& B);

/// Change of coordinates between two charts, given by the images of the
/// target coordinates as functions on the source chart together with the
/// inverse images of e^{x} and y on the target chart.
class ChartMap {
 public:
  /// Validates the round trip: substituting the inverse images into the
  /// forward images must return the target coordinate functions. Throws
  /// InvalidArgument otherwise.
  ChartMap(std::string source, std::string target, CoefFn first_image,
           CoefFn second_image, CoefFn inv_exp, CoefFn inv_y);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const CoefFn& first_image() const { return first_image_; }
  const CoefFn& second_image() const { return second_image_; }
  const CoefFn& inv_exp() const { return inv_exp_; }
  const CoefFn& inv_y() const { return inv_y_; }

  /// Rewrites a source-chart function term by term:
  /// c e^{dx} y^k -> c * inv_exp^d * inv_y^k. Terms carrying a power of x
  /// raise NonSubstitutableTerm.
  CoefFn substitute(const CoefFn& h) const;

 private:
  std::string source_;
  std::string target_;
  CoefFn first_image_;
  CoefFn second_image_;
  CoefFn inv_exp_;
  CoefFn inv_y_;
};

/// Image of W on the target chart of m.
VectorField pushforward(const VectorField& W, const ChartMap& m);

}  // namespace planelie
