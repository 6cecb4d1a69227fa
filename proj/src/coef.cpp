#include "planelie/coef.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "planelie/error.hpp"

namespace planelie {

int compare(const Monomial& l, const Monomial& r) {
  if (int c = cmp(l.d, r.d); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(l.a, r.a); c != 0) return c < 0 ? -1 : 1;
  if (int c = cmp(l.k, r.k); c != 0) return c < 0 ? -1 : 1;
  return 0;
}

CoefFn::CoefFn(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back({c, Monomial::one()});
}

CoefFn::CoefFn(const Scalar& c, const Monomial& m) {
  if (!c.is_zero()) terms_.push_back({c, m});
}

CoefFn CoefFn::normalize(std::vector<Term> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const Term& l, const Term& r) {
    return l.mono < r.mono;
  });
  CoefFn out;
  for (auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) {
        out.terms_.pop_back();
      }
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coef.is_zero()) {
    out.terms_.pop_back();
  }
  return out;
}

CoefFn CoefFn::exp_x(const Rational& d) { return CoefFn(1, {d, 0, 0}); }
CoefFn CoefFn::x_pow(const Rational& a) { return CoefFn(1, {0, a, 0}); }
CoefFn CoefFn::y_pow(const Rational& k) { return CoefFn(1, {0, 0, k}); }

bool CoefFn::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Scalar CoefFn::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Scalar();
}

CoefFn CoefFn::operator-() const {
  CoefFn out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

namespace {

// Linear merge of two canonical lists; sign selects addition or subtraction.
CoefFn merge(const std::vector<Term>& l, const std::vector<Term>& r,
             bool subtract) {
  std::vector<Term> out;
  out.reserve(l.size() + r.size());
  auto i = l.begin();
  auto j = r.begin();
  while (i != l.end() || j != r.end()) {
    int c;
    if (i == l.end()) {
      c = 1;
    } else if (j == r.end()) {
      c = -1;
    } else {
      c = compare(i->mono, j->mono);
    }
    if (c < 0) {
      out.push_back(*i++);
    } else if (c > 0) {
      out.push_back({subtract ? -j->coef : j->coef, j->mono});
      ++j;
    } else {
      Scalar s = subtract ? i->coef - j->coef : i->coef + j->coef;
      if (!s.is_zero()) out.push_back({std::move(s), i->mono});
      ++i;
      ++j;
    }
  }
  return CoefFn::normalize(std::move(out));
}

}  // namespace

CoefFn operator+(const CoefFn& l, const CoefFn& r) {
  return merge(l.terms_, r.terms_, false);
}

CoefFn operator-(const CoefFn& l, const CoefFn& r) {
  return merge(l.terms_, r.terms_, true);
}

CoefFn& CoefFn::operator+=(const CoefFn& o) { return *this = *this + o; }
CoefFn& CoefFn::operator-=(const CoefFn& o) { return *this = *this - o; }

CoefFn operator*(const CoefFn& l, const CoefFn& r) {
  std::vector<Term> raw;
  raw.reserve(l.terms_.size() * r.terms_.size());
  for (const auto& s : l.terms_) {
    for (const auto& t : r.terms_) raw.push_back({s.coef * t.coef, s.mono * t.mono});
  }
  return CoefFn::normalize(std::move(raw));
}

bool operator==(const CoefFn& l, const CoefFn& r) {
  if (l.terms_.size() != r.terms_.size()) return false;
  for (std::size_t i = 0; i < l.terms_.size(); ++i) {
    if (l.terms_[i].mono != r.terms_[i].mono) return false;
    if (l.terms_[i].coef != r.terms_[i].coef) return false;
  }
  return true;
}

CoefFn add(const CoefFn& f, const CoefFn& g) { return f + g; }
CoefFn mul(const CoefFn& f, const CoefFn& g) { return f * g; }

CoefFn scale(const Scalar& c, const CoefFn& f) {
  if (c.is_zero()) return {};
  std::vector<Term> raw = f.terms();
  for (auto& t : raw) t.coef *= c;
  return CoefFn::normalize(std::move(raw));
}

CoefFn ddx(const CoefFn& f) {
  std::vector<Term> raw;
  for (const auto& t : f.terms()) {
    if (sgn(t.mono.d) != 0) raw.push_back({t.coef * Scalar(t.mono.d), t.mono});
    if (sgn(t.mono.a) != 0) {
      Monomial m = t.mono;
      m.a -= 1;
      raw.push_back({t.coef * Scalar(t.mono.a), m});
    }
  }
  return CoefFn::normalize(std::move(raw));
}

CoefFn ddy(const CoefFn& f) {
  std::vector<Term> raw;
  for (const auto& t : f.terms()) {
    if (sgn(t.mono.k) == 0) continue;
    Monomial m = t.mono;
    m.k -= 1;
    raw.push_back({t.coef * Scalar(t.mono.k), m});
  }
  return CoefFn::normalize(std::move(raw));
}

namespace {

// Exponent e with |z| = 2^e, if z is a power of two.
std::optional<long> log2_exact(const mpz_class& z) {
  if (sgn(z) <= 0) return std::nullopt;
  if (mpz_popcount(z.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<long>(mpz_scan1(z.get_mpz_t(), 0));
}

// h with c = 2^{h/2}, if c is of that form.
std::optional<long> half_log2(const Scalar& c) {
  const Rational& q = c.is_rational() ? c.rational_part() : c.sqrt2_part();
  if (!c.is_rational() && sgn(c.rational_part()) != 0) return std::nullopt;
  auto num = log2_exact(q.get_num());
  auto den = log2_exact(q.get_den());
  if (!num || !den) return std::nullopt;
  long h = 2 * (*num - *den);
  if (!c.is_rational()) h += 1;
  return h;
}

}  // namespace

Scalar pow_scalar(const Scalar& c, const Rational& r) {
  if (is_integer(r)) {
    const mpz_class& n = r.get_num();
    if (!n.fits_slong_p()) {
      throw Error(ErrorKind::InvalidArgument, "exponent too large");
    }
    return pow_int(c, n.get_si());
  }
  auto h = half_log2(c);
  if (c.sign() <= 0 || !h) {
    throw Error(ErrorKind::IrrationalCoefficient,
                "non-integer power of a coefficient that is not 2^(m/2)");
  }
  // c^r = 2^{h r / 2}; representable iff h r is an integer.
  Rational t = Rational(*h) * r;
  if (!is_integer(t) || !t.get_num().fits_slong_p()) {
    throw Error(ErrorKind::IrrationalCoefficient,
                "power of two leaves Q(sqrt 2)");
  }
  const long ti = t.get_num().get_si();
  // 2^{ti/2} = 2^{floor(ti/2)} * (sqrt2 if ti odd).
  const long half = ti >= 0 ? ti / 2 : -((-ti + 1) / 2);
  Scalar out = pow_int(Scalar(2), half);
  if (ti - 2 * half == 1) out *= Scalar::sqrt2();
  return out;
}

CoefFn pow_monomial(const CoefFn& f, const Rational& r) {
  if (f.size() != 1) {
    throw Error(ErrorKind::NonMonomial, "expected exactly one term");
  }
  const Term& t = f.terms()[0];
  Scalar c = pow_scalar(t.coef, r);
  Monomial m{t.mono.d * r, t.mono.a * r, t.mono.k * r};
  return CoefFn(c, m);
}

}  // namespace planelie
