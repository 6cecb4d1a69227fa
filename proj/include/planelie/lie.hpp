#pragma once

#include <optional>
#include <span>
#include <vector>

#include "planelie/span.hpp"

namespace planelie {

enum class ClosureStatus { Closed, ExceededBound };

struct ClosureResult {
  ClosureStatus status = ClosureStatus::Closed;
  SpanBasis basis;
  /// First bracket found outside the span once the dimension passed the
  /// bound.
  std::optional<VectorField> witness;

  bool closed() const { return status == ClosureStatus::Closed; }
};

/// Smallest bracket-closed span containing gens, or ExceededBound as soon as
/// the dimension exceeds dim_bound. Pairs are visited in a fixed order over
/// the list of adjoined elements, so witnesses are reproducible.
ClosureResult bracket_closure(std::span<const VectorField> gens,
                              std::size_t dim_bound);

/// Smallest subspace R containing seeds with [a, R] in R for every ambient
/// field a and [R, R] in R. When ambient generates the Lie algebra, R is the
/// ideal generated by the seeds.
///
/// stop_when, if given, ends the search early (status Closed is then not
/// meaningful; callers check membership themselves).
ClosureResult generated_ideal(std::span<const VectorField> ambient,
                              std::span<const VectorField> seeds,
                              std::size_t dim_bound,
                              const VectorField* stop_when = nullptr);

bool is_closed(const SpanBasis& B);

/// Dimensions of B, [B,B], [[B,B],[B,B]], ... until the dimension reaches 0
/// or stops dropping (the repeated value is included). NotClosed if B is not
/// a subalgebra.
std::vector<std::size_t> derived_series(const SpanBasis& B);
/// Dimensions of B, [B,B], [B,[B,B]], ... with the same stopping rule.
std::vector<std::size_t> lower_central_series(const SpanBasis& B);

/// Span of all brackets [a, b] with a in l, b in r.
SpanBasis bracket_span(const SpanBasis& l, const SpanBasis& r);

bool is_abelian(const SpanBasis& B);
bool is_solvable(const SpanBasis& B);
bool is_nilpotent(const SpanBasis& B);
/// [whole, sub] in sub. NotSubspace unless sub is in whole; NotClosed unless
/// whole is a subalgebra.
bool is_ideal(const SpanBasis& sub, const SpanBasis& whole);
/// Elements of `within` commuting with every element of `of`.
SpanBasis centralizer(const SpanBasis& of, const SpanBasis& within);
SpanBasis center(const SpanBasis& B);

/// True iff [W, Z] is a function multiple of Z for every W in fields, i.e.
/// the line field spanned by Z is preserved. ZeroField if Z = 0.
bool foliation_invariant(std::span<const VectorField> fields,
                         const VectorField& Z);

}  // namespace planelie
