#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planelie/lie.hpp"

namespace planelie {

enum class Normalization { Exact, SignFlipped, Failed };

const char* to_string(Normalization n);

/// Brackets exactly as computed from the caller's X and Y, before any sign
/// normalization.
struct RelationReport {
  VectorField XY;  // [X, Y]
  VectorField HX;  // [[X, Y], X]
  VectorField HY;  // [[X, Y], Y]
};

/// sl(2) triple in the normalization [X, Y] = H, [H, X] = X, [H, Y] = -Y.
///
/// For SignFlipped triples, Y and H hold the normalized generators (-Y and
/// -[X, Y]); the raw brackets stay in `relations`.
struct Sl2Triple {
  VectorField X;
  VectorField Y;
  VectorField H;
  Normalization normalization = Normalization::Failed;
  RelationReport relations;
};

Sl2Triple verify_sl2_triple(const VectorField& X, const VectorField& Y);

/// Ansatz V = e^{dx} (f(y) d/dx + g(y) d/dy) with f, g Laurent polynomials
/// whose powers of y lie in the given closed ranges.
struct HWAnsatz {
  Rational weight;
  int f_min = 0;
  int f_max = 0;
  int g_min = 0;
  int g_max = 0;

  static HWAnsatz uniform(Rational d, int ymin, int ymax) {
    return {std::move(d), ymin, ymax, ymin, ymax};
  }
};

struct HWSolution {
  Rational weight;
  std::vector<VectorField> basis;
  /// One name per basis element; "kappa"/"ell" when the space is exactly
  /// e^{dx}(kappa dx + (kappa y + ell) dy), otherwise c0, c1, ...
  std::vector<std::string> parameters;

  std::size_t dim() const { return basis.size(); }
};

/// Full solution space of [X, V] = 0, [H, V] = d V over the ansatz.
HWSolution hw_solve(const Sl2Triple& triple, const HWAnsatz& ansatz);

/// The eigenvalue w with [H, V] = w V, if V is an ad(H) eigenvector.
std::optional<Scalar> weight_of(const VectorField& H, const VectorField& V);

struct Sl2Module {
  SpanBasis basis;
  std::vector<Scalar> weights;  // weight of V, ad(Y) V, ad(Y)^2 V, ...
  bool terminated = false;
};

/// Span of V, ad(Y) V, ad(Y)^2 V, ... until ad(Y)^{n+1} V = 0 (terminated)
/// or n reaches depth_bound. NotHighestWeight unless [X, V] = 0 and V is an
/// ad(H) eigenvector.
Sl2Module sl2_module(const Sl2Triple& triple, const VectorField& V,
                     unsigned depth_bound);

struct WeightSpace {
  Scalar weight;
  SpanBasis space;
};

/// Eigenspace decomposition of ad(H) restricted to span(B), weights sorted
/// descending. NotInvariant when ad(H) leaves the span; UnsupportedSpectrum
/// when ad(H) is not diagonalizable with rational eigenvalues there.
std::vector<WeightSpace> weight_decompose(const SpanBasis& B,
                                          const VectorField& H);

}  // namespace planelie
