#include <algorithm>

#include "planelie/error.hpp"
#include "planelie/replay.hpp"
#include "planelie/span.hpp"
#include "support.hpp"

using namespace testing;

namespace {
SpanBasis S(std::initializer_list<const char*> texts) {
  std::vector<VectorField> v;
  for (auto* t : texts) v.push_back(F(t));
  return span_basis(v);
}
}  // namespace

TEST_CASE("span_basis dimension") {
  CHECK(S({"dy", "2*dy"}).dim() == 1);
  CHECK(S({"dx", "y*dy", "dx + y*dy"}).dim() == 2);
  const Realization s = realization_bII(0);
  const std::vector<VectorField> xyh{s.X, s.Y, bracket(s.X, s.Y)};
  CHECK(span_basis(xyh).dim() == 3);
  CHECK(S({}).dim() == 0);
  CHECK(S({"0"}).dim() == 0);
}

TEST_CASE("member coordinates") {
  const auto c = member(F("dx + y*dy"), span_basis(std::vector{F("dx"), F("y*dy")}));
  REQUIRE(c);
  CHECK(combine(span_basis(std::vector{F("dx"), F("y*dy")}), *c) == F("dx + y*dy"));
  CHECK(*c == std::vector<Scalar>{1, 1});
  CHECK_FALSE(member(F("exp(x)*dy"), S({"dy"})));
  CHECK(member(VectorField(), S({"dy"})) == std::vector<Scalar>{0});
}

TEST_CASE("member of H in the sl2 span") {
  const Realization s = realization_bII(0);
  const VectorField H = bracket(s.X, s.Y);
  const SpanBasis B = span_basis(std::vector{s.X, s.Y, H});
  const auto c = member(H, B);
  REQUIRE(c);
  CHECK(combine(B, *c) == H);
  // Echelon rows are sorted by leading axis; locate H's row.
  std::size_t nonzero = 0;
  for (const auto& v : *c) nonzero += !v.is_zero();
  CHECK(nonzero == 1);
  CHECK(std::find(c->begin(), c->end(), Scalar(1)) != c->end());
}

TEST_CASE("sum and equality of spans") {
  CHECK(sum_spans(S({"dx"}), S({"dy"})).dim() == 2);
  CHECK(equal_spans(S({"dy", "y*dy"}), S({"y*dy", "dy"})));
  CHECK_FALSE(equal_spans(S({"dy"}), S({"y*dy"})));
  CHECK(contains(S({"dy", "y*dy"}), S({"dy + 3*y*dy"})));
  CHECK_FALSE(contains(S({"dy"}), S({"dy", "y*dy"})));
}

TEST_CASE("reduced rows are canonical") {
  const SpanBasis a = S({"dx + y*dy", "dx - y*dy"});
  const SpanBasis b = S({"dx", "y*dy"});
  CHECK(a == b);
  CHECK(a.reduce(F("3*dx + 2*y*dy")).is_zero());
  CHECK(a.reduce(F("dy")) == F("dy"));
}

TEST_CASE("sqrt2 coefficients eliminate exactly") {
  const SpanBasis B = S({"sqrt2*dx + dy", "dx + sqrt2*dy"});
  CHECK(B.dim() == 2);
  CHECK(S({"sqrt2*dx + dy", "2*dx + sqrt2*dy"}).dim() == 1);
  CHECK(member(F("dx"), B));
}

TEST_CASE("span chart is enforced") {
  SpanBasis B("tilde");
  CHECK_THROWS_AS(B.insert(F("dx")), Error);
  CHECK(B.insert(F("dx", "tilde")));
}

TEST_CASE("leading axis of the zero field") {
  try {
    leading_axis(VectorField());
    FAIL("expected ZeroField");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroField);
  }
}

TEST_CASE("scalar matrix nullspace") {
  ScalarMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = Scalar(0, 1);
  const auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  for (std::size_t r = 0; r < 2; ++r) {
    Scalar s;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * ns[0][c];
    CHECK(s.is_zero());
  }
  CHECK(ScalarMatrix(0, 2).nullspace().size() == 2);
}

TEST_CASE("column matrix axes") {
  std::vector<Axis> axes;
  const auto m = column_matrix(std::vector{F("dx + y*dy"), F("dy")}, &axes);
  CHECK(m.cols() == 2);
  CHECK(m.rows() == axes.size());
  CHECK(axes.size() == 3);
}
