#include "planelie/error.hpp"
#include "planelie/lie.hpp"
#include "planelie/replay.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<VectorField> Fs(std::initializer_list<const char*> texts) {
  std::vector<VectorField> v;
  for (auto* t : texts) v.push_back(F(t));
  return v;
}

SpanBasis S(std::initializer_list<const char*> texts) { return span_basis(Fs(texts)); }

SpanBasis sl2_span() {
  const Realization s = realization_bII(0);
  return span_basis(std::vector{s.X, s.Y, bracket(s.X, s.Y)});
}

void check_closed(const SpanBasis& B) {
  for (const auto& a : B.rows()) {
    for (const auto& b : B.rows()) CHECK(member(bracket(a, b), B));
  }
}

}  // namespace

TEST_CASE("bracket closure examples") {
  const auto affine = bracket_closure(Fs({"dy", "y*dy"}), 10);
  CHECK(affine.closed());
  CHECK(affine.basis.dim() == 2);
  CHECK_FALSE(affine.witness);

  const Realization s = realization_bII(0);
  const auto sl2 = bracket_closure(std::vector{s.X, s.Y}, 10);
  CHECK(sl2.closed());
  CHECK(sl2.basis.dim() == 3);
  check_closed(sl2.basis);
  CHECK(member(F("dx"), sl2.basis));
}

TEST_CASE("type (a) closure exceeds its bound") {
  const auto r = bracket_closure(Fs({"exp(x)*dx", "1/2*exp(-1*x)*dx", "exp(x)*y*dx"}), 10);
  CHECK(r.status == ClosureStatus::ExceededBound);
  CHECK(r.basis.dim() == 11);
  REQUIRE(r.witness);
  CHECK(*r.witness == F("exp(x)*y^3*dx"));
}

TEST_CASE("closure bound must be positive") {
  CHECK_THROWS_AS(bracket_closure(Fs({"dx"}), 0), Error);
  CHECK(bracket_closure(Fs({"dx", "dy"}), 1).status == ClosureStatus::ExceededBound);
}

TEST_CASE("derived and lower central series") {
  CHECK(derived_series(S({"dy", "y*dy"})) == std::vector<std::size_t>{2, 1, 0});
  CHECK(derived_series(S({"dy"})) == std::vector<std::size_t>{1, 0});
  const auto sl2 = derived_series(sl2_span());
  CHECK(sl2.front() == 3);
  CHECK(sl2.back() == 3);
  CHECK(lower_central_series(S({"dy", "y*dy"})) == std::vector<std::size_t>{2, 1, 1});
  CHECK(lower_central_series(S({"dx", "dy", "y*dx"})) == std::vector<std::size_t>{3, 1, 0});
  CHECK_THROWS_AS(derived_series(S({"dy", "y^2*dy"})), Error);
}

TEST_CASE("abelian, solvable, nilpotent") {
  CHECK(is_abelian(S({"exp(1/2*x)*dy", "-exp(-1/2*x)*(dx + 1/2*y*dy)"})));
  CHECK(is_solvable(S({"dy", "y*dy"})));
  CHECK_FALSE(is_nilpotent(S({"dy", "y*dy"})));
  CHECK(is_nilpotent(S({"dx", "dy", "y*dx"})));
  CHECK_FALSE(is_solvable(sl2_span()));
  CHECK_FALSE(is_solvable(S({"dy", "y*dy", "y^2*dy"})));
}

TEST_CASE("ideals") {
  const Realization s = realization_aI();
  const std::vector<VectorField> gens{s.X, s.Y, F("dy")};
  const auto whole = bracket_closure(gens, 10);
  REQUIRE(whole.closed());
  CHECK(is_ideal(S({"dy"}), whole.basis));
  CHECK_FALSE(is_ideal(span_basis(std::vector{s.X}), whole.basis));
  try {
    is_ideal(S({"y*dy"}), whole.basis);
    FAIL("expected NotSubspace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSubspace);
  }
  try {
    is_ideal(S({"dy"}), S({"dy", "y^2*dy"}));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
  }
}

TEST_CASE("center and centralizer") {
  CHECK(center(sl2_span()).dim() == 0);
  CHECK(center(S({"dx", "dy", "y*dx"})) == S({"dx"}));
  CHECK(centralizer(S({"dx"}), S({"dy", "exp(x)*dy", "y*dy"})) == S({"dy", "y*dy"}));
  // Z = dx + y dy commutes with the eps = 0 sl(2).
  const Realization s0 = realization_bII(0);
  const SpanBasis big = span_basis(std::vector{s0.X, s0.Y, F("dx"), F("dx + y*dy"), F("dy")});
  CHECK(member(F("dx + y*dy"), centralizer(sl2_span(), big)));
  CHECK_FALSE(bracket(F("dx + y*dy"), realization_bII(1).Y).is_zero());
}

TEST_CASE("foliation invariance") {
  const Realization s = realization_bII(0);
  CHECK(foliation_invariant(Fs({"exp(1/2*x)*dy", "-exp(-1/2*x)*(dx + 1/2*y*dy)"}), F("dy")));
  CHECK_FALSE(foliation_invariant(std::vector{s.Y}, F("dy")));
  CHECK(foliation_invariant(Fs({"exp(x)*(dx + y*dy)"}), F("dx + y*dy")));
  CHECK(foliation_invariant(Fs({"dy", "y*dy"}), F("y*dy")));
  CHECK(foliation_invariant({}, F("dy")));
  try {
    foliation_invariant(Fs({"dy"}), VectorField());
    FAIL("expected ZeroField");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroField);
  }
}

TEST_CASE("generated ideal") {
  const Realization s = realization_bII(0);
  const std::vector<VectorField> ambient{s.X, s.Y, F("exp(1/2*x)*dy")};
  const std::vector<VectorField> seeds{F("exp(1/2*x)*dy")};
  const auto r = generated_ideal(ambient, seeds, 10);
  CHECK(r.closed());
  CHECK(r.basis == S({"exp(1/2*x)*dy", "exp(-1/2*x)*(dx + 1/2*y*dy)"}));

  const std::vector<VectorField> amb2{s.X, s.Y, F("exp(x)*(dx + (y + 1)*dy)")};
  const std::vector<VectorField> seeds2{F("exp(x)*(dx + (y + 1)*dy)")};
  const auto r2 = generated_ideal(amb2, seeds2, 30, &s.X);
  CHECK(member(s.X, r2.basis));
}
