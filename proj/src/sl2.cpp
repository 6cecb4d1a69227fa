#include "planelie/sl2.hpp"

#include <algorithm>
#include <set>

#include "planelie/error.hpp"

namespace planelie {

const char* to_string(Normalization n) {
  switch (n) {
    case Normalization::Exact: return "Exact";
    case Normalization::SignFlipped: return "SignFlipped";
    case Normalization::Failed: return "Failed";
  }
  return "Unknown";
}

namespace {

bool satisfies_relations(const VectorField& X, const VectorField& Y,
                         const VectorField& H) {
  return !H.is_zero() && bracket(H, X) == X && bracket(H, Y) == -Y;
}

void require_usable(const Sl2Triple& t) {
  if (t.normalization == Normalization::Failed) {
    throw Error(ErrorKind::InvalidArgument, "sl(2) triple failed verification");
  }
}

}  // namespace

Sl2Triple verify_sl2_triple(const VectorField& X, const VectorField& Y) {
  require_same_chart(X, Y);
  Sl2Triple t;
  t.X = X;
  t.Y = Y;
  t.H = bracket(X, Y);
  t.relations = {t.H, bracket(t.H, X), bracket(t.H, Y)};
  if (satisfies_relations(X, Y, t.H)) {
    t.normalization = Normalization::Exact;
    return t;
  }
  const VectorField flipped_y = -Y;
  const VectorField flipped_h = bracket(X, flipped_y);
  if (satisfies_relations(X, flipped_y, flipped_h)) {
    t.Y = flipped_y;
    t.H = flipped_h;
    t.normalization = Normalization::SignFlipped;
    return t;
  }
  t.normalization = Normalization::Failed;
  return t;
}

HWSolution hw_solve(const Sl2Triple& triple, const HWAnsatz& ansatz) {
  require_usable(triple);
  const std::string& chart = triple.X.chart;
  const Rational& d = ansatz.weight;
  std::vector<VectorField> unknowns;
  for (int k = ansatz.f_min; k <= ansatz.f_max; ++k) {
    unknowns.emplace_back(CoefFn(1, {d, 0, k}), CoefFn(), chart);
  }
  for (int k = ansatz.g_min; k <= ansatz.g_max; ++k) {
    unknowns.emplace_back(CoefFn(), CoefFn(1, {d, 0, k}), chart);
  }

  // One column per unknown: the [X, .] block stacked over the
  // [H, .] - d block.
  std::vector<VectorField> x_images;
  std::vector<VectorField> h_images;
  for (const auto& u : unknowns) {
    x_images.push_back(bracket(triple.X, u));
    h_images.push_back(bracket(triple.H, u) - scale(Scalar(d), u));
  }
  const ScalarMatrix mx = column_matrix(x_images);
  const ScalarMatrix mh = column_matrix(h_images);
  ScalarMatrix m(mx.rows() + mh.rows(), unknowns.size());
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    for (std::size_t r = 0; r < mx.rows(); ++r) m(r, c) = mx(r, c);
    for (std::size_t r = 0; r < mh.rows(); ++r) m(mx.rows() + r, c) = mh(r, c);
  }

  SpanBasis solutions(chart);
  for (const auto& v : m.nullspace()) {
    VectorField V(CoefFn(), CoefFn(), chart);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) V = V + scale(v[i], unknowns[i]);
    }
    solutions.insert(V);
  }

  HWSolution out{d, solutions.rows(), {}};
  for (const auto& V : out.basis) {
    if (!bracket(triple.X, V).is_zero()) {
      throw std::logic_error("hw_solve produced a vector not killed by X");
    }
  }

  const CoefFn e = CoefFn::exp_x(d);
  const VectorField kappa_field(e, e * CoefFn::y_pow(1), chart);
  const VectorField ell_field(CoefFn(), e, chart);
  const std::vector<VectorField> normal_form{kappa_field, ell_field};
  if (out.dim() == 2 && equal_spans(solutions, span_basis(normal_form, chart))) {
    out.basis = normal_form;
    out.parameters = {"kappa", "ell"};
  } else {
    for (std::size_t i = 0; i < out.dim(); ++i) {
      out.parameters.push_back("c" + std::to_string(i));
    }
  }
  return out;
}

std::optional<Scalar> weight_of(const VectorField& H, const VectorField& V) {
  if (V.is_zero()) return std::nullopt;
  const VectorField image = bracket(H, V);
  const Axis lead = leading_axis(V);
  Scalar w = coefficient(image, lead) / coefficient(V, lead);
  if (image != scale(w, V)) return std::nullopt;
  return w;
}

Sl2Module sl2_module(const Sl2Triple& triple, const VectorField& V,
                     unsigned depth_bound) {
  require_usable(triple);
  if (depth_bound == 0) {
    throw Error(ErrorKind::InvalidArgument, "depth bound must be positive");
  }
  if (V.is_zero() || !bracket(triple.X, V).is_zero()) {
    throw Error(ErrorKind::NotHighestWeight, "X does not annihilate V");
  }
  if (!weight_of(triple.H, V)) {
    throw Error(ErrorKind::NotHighestWeight, "V is not an ad(H) eigenvector");
  }
  Sl2Module out{SpanBasis(V.chart), {}, false};
  VectorField cur = V;
  for (unsigned n = 0;; ++n) {
    out.basis.insert(cur);
    auto w = weight_of(triple.H, cur);
    if (!w) throw std::logic_error("ad(Y) orbit left the weight spaces");
    out.weights.push_back(*w);
    VectorField next = bracket(triple.Y, cur);
    if (next.is_zero()) {
      out.terminated = true;
      break;
    }
    if (n + 1 >= depth_bound) break;
    cur = std::move(next);
  }
  return out;
}

namespace {

using Poly = std::vector<Rational>;  // coefficient of t^i at index i

Rational eval(const Poly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m > mpz_class("1000000000000")) {
    throw Error(ErrorKind::UnsupportedSpectrum, "characteristic polynomial too large");
  }
  std::vector<mpz_class> out;
  for (mpz_class i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      out.push_back(i);
      if (i * i != m) out.push_back(m / i);
    }
  }
  return out;
}

// Characteristic polynomial det(t I - M) by Faddeev-LeVerrier.
std::vector<Scalar> charpoly(const ScalarMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ScalarMatrix Mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s;
        for (std::size_t l = 0; l < n; ++l) s += A(i, l) * Mk(l, j);
        if (i == j) s += c[n - k + 1];
        next(i, j) = s;
      }
    }
    Mk = std::move(next);
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += A(i, l) * Mk(l, i);
    }
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

std::vector<Rational> rational_roots(const Poly& p) {
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 >= p.size()) return {roots.begin(), roots.end()};
  mpz_class lcm_den = 1;
  for (const auto& q : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  const Rational a0 = p[low] * Rational(lcm_den);
  const Rational an = p.back() * Rational(lcm_den);
  for (const auto& num : divisors(a0.get_num())) {
    for (const auto& den : divisors(an.get_num())) {
      for (int s : {1, -1}) {
        Rational cand(s * num, den);
        cand.canonicalize();
        if (sgn(eval(p, cand)) == 0) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

std::vector<WeightSpace> weight_decompose(const SpanBasis& B,
                                          const VectorField& H) {
  const std::size_t n = B.dim();
  ScalarMatrix M(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto coords = member(bracket(H, B.rows()[j]), B);
    if (!coords) throw Error(ErrorKind::NotInvariant, "ad(H) leaves the span");
    for (std::size_t i = 0; i < n; ++i) M(i, j) = (*coords)[i];
  }
  if (n == 0) return {};

  Poly p;
  for (const auto& c : charpoly(M)) {
    if (!c.is_rational()) {
      throw Error(ErrorKind::UnsupportedSpectrum, "irrational characteristic polynomial");
    }
    p.push_back(c.rational_part());
  }

  std::vector<WeightSpace> out;
  std::size_t total = 0;
  const auto roots = rational_roots(p);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    ScalarMatrix shifted = M;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Scalar(*it);
    SpanBasis space(B.chart());
    for (const auto& v : shifted.nullspace()) space.insert(combine(B, v));
    total += space.dim();
    out.push_back({Scalar(*it), std::move(space)});
  }
  if (total != n) {
    throw Error(ErrorKind::UnsupportedSpectrum,
                "ad(H) is not diagonalizable over the rationals on this span");
  }
  return out;
}

}  // namespace planelie
