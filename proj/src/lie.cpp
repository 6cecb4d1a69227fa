#include "planelie/lie.hpp"

#include "planelie/error.hpp"

namespace planelie {

namespace {

std::string chart_of(std::span<const VectorField> a,
                     std::span<const VectorField> b = {}) {
  if (!a.empty()) return a.front().chart;
  if (!b.empty()) return b.front().chart;
  return kDefaultChart;
}

void require_closed(const SpanBasis& B, const char* what) {
  if (!is_closed(B)) {
    throw Error(ErrorKind::NotClosed, std::string(what) + ": span is not bracket-closed");
  }
}

}  // namespace

ClosureResult bracket_closure(std::span<const VectorField> gens,
                              std::size_t dim_bound) {
  if (dim_bound == 0) {
    throw Error(ErrorKind::InvalidArgument, "dimension bound must be positive");
  }
  ClosureResult out{ClosureStatus::Closed, SpanBasis(chart_of(gens)), std::nullopt};
  for (const auto& v : gens) {
    out.basis.insert(v);
    if (out.basis.dim() > dim_bound) {
      out.status = ClosureStatus::ExceededBound;
      return out;
    }
  }
  // Passes over a snapshot of the echelon rows, pairs in row-major order,
  // until a pass adds nothing.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<VectorField> rows = out.basis.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        VectorField b = bracket(rows[i], rows[j]);
        if (!out.basis.insert(b)) continue;
        grew = true;
        if (out.basis.dim() > dim_bound) {
          out.status = ClosureStatus::ExceededBound;
          out.witness = std::move(b);
          return out;
        }
      }
    }
  }
  return out;
}

ClosureResult generated_ideal(std::span<const VectorField> ambient,
                              std::span<const VectorField> seeds,
                              std::size_t dim_bound,
                              const VectorField* stop_when) {
  ClosureResult out{ClosureStatus::Closed, SpanBasis(chart_of(seeds, ambient)),
                    std::nullopt};
  std::vector<VectorField> elems;
  auto adjoin = [&](const VectorField& v) {
    if (!out.basis.insert(v)) return false;
    elems.push_back(v);
    if (out.basis.dim() > dim_bound) {
      out.status = ClosureStatus::ExceededBound;
      out.witness = v;
      return true;
    }
    return stop_when != nullptr && member(*stop_when, out.basis).has_value();
  };
  for (const auto& s : seeds) {
    if (adjoin(s)) return out;
  }
  for (std::size_t j = 0; j < elems.size(); ++j) {
    for (const auto& a : ambient) {
      if (adjoin(bracket(a, elems[j]))) return out;
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (adjoin(bracket(elems[i], elems[j]))) return out;
    }
  }
  return out;
}

bool is_closed(const SpanBasis& B) {
  const auto& rows = B.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!B.reduce(bracket(rows[i], rows[j])).is_zero()) return false;
    }
  }
  return true;
}

SpanBasis bracket_span(const SpanBasis& l, const SpanBasis& r) {
  SpanBasis out(l.chart());
  for (const auto& a : l.rows()) {
    for (const auto& b : r.rows()) out.insert(bracket(a, b));
  }
  return out;
}

namespace {

template <typename Next>
std::vector<std::size_t> series(const SpanBasis& B, Next next) {
  std::vector<std::size_t> dims{B.dim()};
  SpanBasis cur = B;
  while (cur.dim() != 0) {
    SpanBasis nxt = next(cur);
    dims.push_back(nxt.dim());
    if (nxt.dim() == cur.dim()) break;
    cur = std::move(nxt);
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> derived_series(const SpanBasis& B) {
  require_closed(B, "derived_series");
  return series(B, [](const SpanBasis& D) { return bracket_span(D, D); });
}

std::vector<std::size_t> lower_central_series(const SpanBasis& B) {
  require_closed(B, "lower_central_series");
  return series(B, [&B](const SpanBasis& L) { return bracket_span(B, L); });
}

bool is_abelian(const SpanBasis& B) {
  const auto& rows = B.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!bracket(rows[i], rows[j]).is_zero()) return false;
    }
  }
  return true;
}

bool is_solvable(const SpanBasis& B) { return derived_series(B).back() == 0; }

bool is_nilpotent(const SpanBasis& B) {
  return lower_central_series(B).back() == 0;
}

bool is_ideal(const SpanBasis& sub, const SpanBasis& whole) {
  if (!contains(whole, sub)) {
    throw Error(ErrorKind::NotSubspace, "is_ideal: sub is not contained in whole");
  }
  require_closed(whole, "is_ideal");
  for (const auto& w : whole.rows()) {
    for (const auto& s : sub.rows()) {
      if (!sub.reduce(bracket(w, s)).is_zero()) return false;
    }
  }
  return true;
}

SpanBasis centralizer(const SpanBasis& of, const SpanBasis& within) {
  const auto& ws = within.rows();
  if (ws.empty()) return SpanBasis(within.chart());
  // Stack, for every o in `of`, the coordinate block of [w_i, o].
  std::vector<ScalarMatrix> blocks;
  std::size_t total_rows = 0;
  for (const auto& o : of.rows()) {
    std::vector<VectorField> cols;
    cols.reserve(ws.size());
    for (const auto& w : ws) cols.push_back(bracket(w, o));
    blocks.push_back(column_matrix(cols));
    total_rows += blocks.back().rows();
  }
  ScalarMatrix m(total_rows, ws.size());
  std::size_t r0 = 0;
  for (const auto& blk : blocks) {
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t c = 0; c < blk.cols(); ++c) m(r0 + r, c) = blk(r, c);
    }
    r0 += blk.rows();
  }
  SpanBasis out(within.chart());
  for (const auto& v : m.nullspace()) out.insert(combine(within, v));
  return out;
}

SpanBasis center(const SpanBasis& B) {
  require_closed(B, "center");
  return centralizer(B, B);
}

bool foliation_invariant(std::span<const VectorField> fields,
                         const VectorField& Z) {
  if (Z.is_zero()) throw Error(ErrorKind::ZeroField, "foliation generator is zero");
  for (const auto& W : fields) {
    if (!wedge(bracket(W, Z), Z).is_zero()) return false;
  }
  return true;
}

}  // namespace planelie
