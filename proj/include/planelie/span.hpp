#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "planelie/field.hpp"

namespace planelie {

enum class Direction { first = 0, second = 1 };

/// One coordinate of the (unbounded) space of vector fields: a monomial
/// paired with a direction. Ordered by direction, then monomial.
struct Axis {
  Direction direction;
  Monomial mono;

  friend bool operator==(const Axis& l, const Axis& r) {
    return l.direction == r.direction && l.mono == r.mono;
  }
};

bool operator<(const Axis& l, const Axis& r);

using SparseVector = std::map<Axis, Scalar>;

SparseVector coordinates(const VectorField& v);
Scalar coefficient(const VectorField& v, const Axis& axis);
/// Smallest axis with a nonzero coefficient; v must be nonzero.
Axis leading_axis(const VectorField& v);

/// Reduced row-echelon basis of a finite-dimensional space of fields.
///
/// Leading axes increase strictly down the rows, every leading coefficient
/// is 1, and a row's leading axis vanishes in every other row, so the
/// representation of a subspace is unique.
class SpanBasis {
 public:
  explicit SpanBasis(std::string chart = kDefaultChart)
      : chart_(std::move(chart)) {}

  const std::string& chart() const { return chart_; }
  const std::vector<VectorField>& rows() const { return rows_; }
  std::size_t dim() const { return rows_.size(); }

  /// v minus its projection along the rows (zero iff v is in the span).
  VectorField reduce(const VectorField& v) const;

  /// Adds v to the span; returns false when it was already a member.
  bool insert(const VectorField& v);

  friend bool operator==(const SpanBasis& l, const SpanBasis& r) {
    return l.chart_ == r.chart_ && l.rows_ == r.rows_;
  }

 private:
  void check_chart(const VectorField& v) const;

  std::string chart_;
  std::vector<VectorField> rows_;
};

/// Echelon basis of the linear span over Q(sqrt 2). The chart is taken from
/// the fields; `chart` is used only when the list is empty.
SpanBasis span_basis(std::span<const VectorField> fields,
                     const std::string& chart = kDefaultChart);

/// Coordinates of W with respect to B's rows, or nullopt when W is outside
/// the span.
std::optional<std::vector<Scalar>> member(const VectorField& W,
                                          const SpanBasis& B);

/// Sum of combinations coords[i] * rows[i].
VectorField combine(const SpanBasis& B, std::span<const Scalar> coords);

SpanBasis sum_spans(const SpanBasis& l, const SpanBasis& r);
bool equal_spans(const SpanBasis& l, const SpanBasis& r);
/// inner is a subspace of outer.
bool contains(const SpanBasis& outer, const SpanBasis& inner);

/// Dense matrix over Q(sqrt 2), row-major.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Matrix whose column j holds the coordinates of fields[j] on the union of
/// their axes, plus the axis list used for the rows.
ScalarMatrix column_matrix(std::span<const VectorField> fields,
                           std::vector<Axis>* axes = nullptr);

}  // namespace planelie
