#include "planelie/scalar.hpp"

#include <sstream>

#include "planelie/error.hpp"

namespace planelie {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ChartMismatch: return "ChartMismatch";
    case ErrorKind::NonMonomial: return "NonMonomial";
    case ErrorKind::IrrationalCoefficient: return "IrrationalCoefficient";
    case ErrorKind::NonSubstitutableTerm: return "NonSubstitutableTerm";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotSubspace: return "NotSubspace";
    case ErrorKind::ZeroField: return "ZeroField";
    case ErrorKind::NotHighestWeight: return "NotHighestWeight";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::UnsupportedSpectrum: return "UnsupportedSpectrum";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MixedDirections: return "MixedDirections";
  }
  return "Unknown";
}

std::string ParseError::format(int line, int column,
                               const std::vector<std::string>& expected,
                               const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << what;
  if (!expected.empty()) {
    os << " (expected one of:";
    for (const auto& e : expected) os << ' ' << e;
    os << ')';
  }
  return os.str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2b^2.
  const int c = cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  return c > 0 ? sa : sb;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const Rational n = norm();
  return Scalar(Rational(a_ / n), Rational(-b_ / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar pow_int(const Scalar& c, long n) {
  Scalar base = n < 0 ? c.inverse() : c;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n)
                          : static_cast<unsigned long>(n);
  Scalar result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace planelie
