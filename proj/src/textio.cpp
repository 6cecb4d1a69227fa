#include "planelie/textio.hpp"

#include <cctype>
#include <map>

#include "json.hpp"
#include "planelie/error.hpp"

namespace planelie {

namespace {

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, std::string(s.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Ident, std::string(s.substr(i, j - i)), line, start_col});
      col += static_cast<int>(j - i);
      i = j;
    } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
      out.push_back({Token::Symbol, std::string(1, ch), line, start_col});
      ++col;
      ++i;
    } else {
      throw ParseError(line, start_col, {}, std::string("unexpected character '") + ch + "'");
    }
  }
  out.push_back({Token::End, "", line, col});
  return out;
}

// A product of atoms after expansion: coefficient, monomial and the number
// of dx / dy factors seen.
struct Product {
  Scalar coef;
  Monomial mono;
  int ndx = 0;
  int ndy = 0;
};

using Expr = std::vector<Product>;

Expr multiply(const Expr& l, const Expr& r) {
  Expr out;
  out.reserve(l.size() * r.size());
  for (const auto& p : l) {
    for (const auto& q : r) {
      Scalar c = p.coef * q.coef;
      if (c.is_zero()) continue;
      out.push_back({std::move(c), p.mono * q.mono, p.ndx + q.ndx, p.ndy + q.ndy});
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Expr parse_all() {
    Expr e = field();
    if (peek().kind != Token::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_symbol(char c) const {
    return peek().kind == Token::Symbol && peek().text[0] == c;
  }
  bool is_ident(std::string_view name) const {
    return peek().kind == Token::Ident && peek().text == name;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == Token::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), "unexpected " + found);
  }

  void expect_symbol(char c) {
    if (!is_symbol(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  Expr field() {
    bool negate = false;
    if (is_symbol('-') || is_symbol('+')) {
      negate = is_symbol('-');
      ++pos_;
    }
    Expr out = term();
    if (negate) {
      for (auto& p : out) p.coef = -p.coef;
    }
    while (is_symbol('+') || is_symbol('-')) {
      const bool minus = is_symbol('-');
      ++pos_;
      Expr t = term();
      for (auto& p : t) {
        if (minus) p.coef = -p.coef;
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  Expr term() {
    Expr out = factor();
    while (is_symbol('*')) {
      ++pos_;
      out = multiply(out, factor());
    }
    return out;
  }

  mpz_class integer() {
    if (peek().kind != Token::Number) fail({"integer"});
    mpz_class z(peek().text);
    ++pos_;
    return z;
  }

  Rational unsigned_rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (is_symbol('/')) {
      ++pos_;
      const Token& t = peek();
      den = integer();
      if (den == 0) throw ParseError(t.line, t.column, {"positive-integer"}, "zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Rational signed_rational() {
    bool negative = false;
    if (is_symbol('-')) {
      negative = true;
      ++pos_;
    }
    Rational q = unsigned_rational();
    return negative ? Rational(-q) : q;
  }

  static Expr atom(const Scalar& c, const Monomial& m = {}, int ndx = 0, int ndy = 0) {
    if (c.is_zero()) return {};
    return {Product{c, m, ndx, ndy}};
  }

  Expr factor() {
    const Token& t = peek();
    if (t.kind == Token::Number) return atom(Scalar(unsigned_rational()));
    if (is_symbol('(')) {
      ++pos_;
      Expr e = field();
      expect_symbol(')');
      return e;
    }
    if (t.kind == Token::Ident) {
      const std::string name = t.text;
      if (name == "sqrt2") {
        ++pos_;
        return atom(Scalar::sqrt2());
      }
      if (name == "dx" || name == "dy") {
        ++pos_;
        return atom(Scalar(1), {}, name == "dx", name == "dy");
      }
      if (name == "x" || name == "y") {
        ++pos_;
        Rational power = 1;
        if (is_symbol('^')) {
          ++pos_;
          power = signed_rational();
        }
        Monomial m;
        (name == "x" ? m.a : m.k) = power;
        return atom(Scalar(1), m);
      }
      if (name == "exp") {
        ++pos_;
        expect_symbol('(');
        Rational d = 1;
        if (is_ident("x")) {
          ++pos_;
        } else {
          d = signed_rational();
          expect_symbol('*');
          if (!is_ident("x")) fail({"'x'"});
          ++pos_;
        }
        expect_symbol(')');
        return atom(Scalar(1), {d, 0, 0});
      }
    }
    fail({"rational", "'sqrt2'", "'exp('", "'x'", "'y'", "'dx'", "'dy'", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

struct ProductKey {
  int ndx;
  int ndy;
  Monomial mono;

  friend bool operator<(const ProductKey& l, const ProductKey& r) {
    if (l.ndx != r.ndx) return l.ndx < r.ndx;
    if (l.ndy != r.ndy) return l.ndy < r.ndy;
    return l.mono < r.mono;
  }
};

// Merges like products so cancelling products disappear.
Expr merge(const Expr& e) {
  std::map<ProductKey, Scalar> acc;
  for (const auto& p : e) acc[{p.ndx, p.ndy, p.mono}] += p.coef;
  Expr out;
  for (const auto& [key, c] : acc) {
    if (!c.is_zero()) out.push_back({c, key.mono, key.ndx, key.ndy});
  }
  return out;
}

}  // namespace

VectorField parse_field(std::string_view text, const std::string& chart) {
  const Expr e = Parser(text).parse_all();
  std::vector<Term> f;
  std::vector<Term> g;
  for (const auto& p : e) {
    if (p.ndx + p.ndy != 1) {
      throw Error(ErrorKind::MixedDirections,
                  "each product must contain exactly one of dx, dy");
    }
    (p.ndx == 1 ? f : g).push_back({p.coef, p.mono});
  }
  return {CoefFn::normalize(std::move(f)), CoefFn::normalize(std::move(g)), chart};
}

CoefFn parse_function(std::string_view text) {
  const Expr e = merge(Parser(text).parse_all());
  std::vector<Term> terms;
  for (const auto& p : e) {
    if (p.ndx + p.ndy != 0) {
      throw Error(ErrorKind::MixedDirections, "direction atom in a function expression");
    }
    terms.push_back({p.coef, p.mono});
  }
  return CoefFn::normalize(std::move(terms));
}

std::string print_rational(const Rational& q) { return q.get_str(); }

std::string print_scalar(const Scalar& c) {
  const Rational& a = c.rational_part();
  const Rational& b = c.sqrt2_part();
  if (c.is_rational()) return print_rational(a);
  std::string root;
  if (b == 1) {
    root = "sqrt2";
  } else if (b == -1) {
    root = "-sqrt2";
  } else {
    root = print_rational(b) + "*sqrt2";
  }
  if (sgn(a) == 0) return root;
  std::string out = "(" + print_rational(a);
  out += root[0] == '-' ? " - " + root.substr(1) : " + " + root;
  return out + ")";
}

namespace {

// Renders c * monomial * suffix with a leading '-' for negative rationals.
std::string print_term(const Scalar& c, const Monomial& m, const std::string& suffix) {
  std::vector<std::string> factors;
  if (sgn(m.d) != 0) factors.push_back("exp(" + print_rational(m.d) + "*x)");
  if (sgn(m.a) != 0) factors.push_back(m.a == 1 ? "x" : "x^" + print_rational(m.a));
  if (sgn(m.k) != 0) factors.push_back(m.k == 1 ? "y" : "y^" + print_rational(m.k));
  if (!suffix.empty()) factors.push_back(suffix);

  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != 0) body += "*";
    body += factors[i];
  }
  if (body.empty()) return print_scalar(c);
  if (c.is_one()) return body;
  if (c == Scalar(-1)) return "-" + body;
  return print_scalar(c) + "*" + body;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string print_coef(const CoefFn& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) append_term(out, print_term(t.coef, t.mono, ""));
  return out;
}

std::string print_field(const VectorField& W) {
  if (W.is_zero()) return "0";
  std::string out;
  for (const auto& t : W.f.terms()) append_term(out, print_term(t.coef, t.mono, "dx"));
  for (const auto& t : W.g.terms()) append_term(out, print_term(t.coef, t.mono, "dy"));
  return out;
}

std::string report_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["anchor"] = r.anchor;
  j["computed"] = r.computed;
  j["expected"] = r.expected;
  j["status"] = to_string(r.status);
  j["note"] = r.note;
  return j.dump();
}

std::string report_text(const ClaimReport& r) {
  std::string out = "[" + std::string(to_string(r.status)) + "] " + r.claim_id + "  (" +
                    r.anchor + ")\n    computed: " + r.computed + "\n    expected: " + r.expected;
  if (!r.note.empty()) out += "\n    note: " + r.note;
  return out;
}

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::KnownDiscrepancy: return "known-discrepancy";
  }
  return "unknown";
}

}  // namespace planelie
