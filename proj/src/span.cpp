#include "planelie/span.hpp"

#include <algorithm>

#include "planelie/error.hpp"

namespace planelie {

bool operator<(const Axis& l, const Axis& r) {
  if (l.direction != r.direction) return l.direction < r.direction;
  return l.mono < r.mono;
}

SparseVector coordinates(const VectorField& v) {
  SparseVector out;
  for (const auto& t : v.f.terms()) out.emplace(Axis{Direction::first, t.mono}, t.coef);
  for (const auto& t : v.g.terms()) out.emplace(Axis{Direction::second, t.mono}, t.coef);
  return out;
}

Scalar coefficient(const VectorField& v, const Axis& axis) {
  return axis.direction == Direction::first ? v.f.coefficient(axis.mono)
                                            : v.g.coefficient(axis.mono);
}

Axis leading_axis(const VectorField& v) {
  if (!v.f.is_zero()) return {Direction::first, v.f.terms().front().mono};
  if (!v.g.is_zero()) return {Direction::second, v.g.terms().front().mono};
  throw Error(ErrorKind::ZeroField, "zero field has no leading axis");
}

void SpanBasis::check_chart(const VectorField& v) const {
  if (v.chart != chart_) {
    throw Error(ErrorKind::ChartMismatch,
                "field on chart '" + v.chart + "', span on '" + chart_ + "'");
  }
}

VectorField SpanBasis::reduce(const VectorField& v) const {
  check_chart(v);
  VectorField out = v;
  for (const auto& row : rows_) {
    Scalar c = coefficient(out, leading_axis(row));
    if (!c.is_zero()) out = out - scale(c, row);
  }
  return out;
}

bool SpanBasis::insert(const VectorField& v) {
  VectorField r = reduce(v);
  if (r.is_zero()) return false;
  const Axis lead = leading_axis(r);
  r = scale(coefficient(r, lead).inverse(), r);
  for (auto& row : rows_) {
    Scalar c = coefficient(row, lead);
    if (!c.is_zero()) row = row - scale(c, r);
  }
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), lead,
      [](const VectorField& row, const Axis& key) { return leading_axis(row) < key; });
  rows_.insert(pos, std::move(r));
  return true;
}

SpanBasis span_basis(std::span<const VectorField> fields,
                     const std::string& chart) {
  SpanBasis B(fields.empty() ? chart : fields.front().chart);
  for (const auto& v : fields) B.insert(v);
  return B;
}

std::optional<std::vector<Scalar>> member(const VectorField& W,
                                          const SpanBasis& B) {
  if (W.chart != B.chart()) {
    throw Error(ErrorKind::ChartMismatch,
                "field on chart '" + W.chart + "', span on '" + B.chart() + "'");
  }
  if (!B.reduce(W).is_zero()) return std::nullopt;
  std::vector<Scalar> coords;
  coords.reserve(B.dim());
  for (const auto& row : B.rows()) coords.push_back(coefficient(W, leading_axis(row)));
  return coords;
}

VectorField combine(const SpanBasis& B, std::span<const Scalar> coords) {
  VectorField out(CoefFn(), CoefFn(), B.chart());
  for (std::size_t i = 0; i < coords.size() && i < B.dim(); ++i) {
    if (!coords[i].is_zero()) out = out + scale(coords[i], B.rows()[i]);
  }
  return out;
}

SpanBasis sum_spans(const SpanBasis& l, const SpanBasis& r) {
  if (l.chart() != r.chart()) {
    throw Error(ErrorKind::ChartMismatch,
                "spans on charts '" + l.chart() + "' and '" + r.chart() + "'");
  }
  SpanBasis out = l;
  for (const auto& row : r.rows()) out.insert(row);
  return out;
}

bool contains(const SpanBasis& outer, const SpanBasis& inner) {
  for (const auto& row : inner.rows()) {
    if (!member(row, outer)) return false;
  }
  return true;
}

bool equal_spans(const SpanBasis& l, const SpanBasis& r) {
  if (l.chart() != r.chart()) {
    throw Error(ErrorKind::ChartMismatch,
                "spans on charts '" + l.chart() + "' and '" + r.chart() + "'");
  }
  return contains(l, r) && contains(r, l);
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
  ScalarMatrix m = *this;
  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t p = prow;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != prow) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(prow, k));
    }
    const Scalar inv = m(prow, c).inverse();
    for (std::size_t k = c; k < cols_; ++k) m(prow, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == prow || m(r, c).is_zero()) continue;
      const Scalar f = m(r, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(prow, k);
    }
    pivot_cols.push_back(c);
    ++prow;
  }
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_);
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ScalarMatrix column_matrix(std::span<const VectorField> fields,
                           std::vector<Axis>* axes) {
  std::map<Axis, std::size_t> index;
  std::vector<SparseVector> cols;
  cols.reserve(fields.size());
  for (const auto& v : fields) {
    cols.push_back(coordinates(v));
    for (const auto& [axis, c] : cols.back()) index.emplace(axis, 0);
  }
  std::size_t i = 0;
  for (auto& [axis, pos] : index) pos = i++;
  ScalarMatrix m(index.size(), fields.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [axis, c] : cols[j]) m(index.at(axis), j) = c;
  }
  if (axes != nullptr) {
    axes->clear();
    for (const auto& [axis, pos] : index) axes->push_back(axis);
  }
  return m;
}

}  // namespace planelie
