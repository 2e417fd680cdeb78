#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "qgr/polynomial.hpp"

namespace qgr {
namespace {

constexpr int kMaxExponent = 10000;

struct RawTerm {
  std::map<int, int> exps;  // variable index -> exponent
  Rational coeff = 1;
  int line = 0, col = 0;
  int degree() const {
    int d = 0;
    for (auto [i, e] : exps) d += e;
    return d;
  }
};

struct RawPoly {
  std::vector<RawTerm> terms;
  int line = 0;
};

/// Character cursor over one input line, 1-based column tracking.
class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_spaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char take() {
    skip_spaces();
    return text_[pos_++];
  }
  int col() {
    skip_spaces();
    return static_cast<int>(pos_) + 1;
  }
  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col(), msg); }

  /// Unsigned digit run as an arbitrary-precision integer.
  mpz_class integer() {
    skip_spaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer(const std::string& what) {
    mpz_class v = integer();
    if (v > kMaxExponent) fail(what + " too large");
    return static_cast<int>(v.get_si());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

/// number := digits ['/' digits]
Rational number_atom(Cursor& c) {
  mpz_class num = c.integer();
  if (c.peek() != '/') return Rational(num);
  c.take();
  int dcol = c.col();
  mpz_class den = c.integer();
  if (sgn(den) == 0) throw ParseError(c.line(), dcol, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// atom := number | 'x' digits ['^' digits]
void parse_atom(Cursor& c, RawTerm& term) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    term.coeff *= number_atom(c);
    return;
  }
  if (ch == 'x') {
    c.take();
    int idx = c.small_integer("variable index");
    int exp = 1;
    if (c.peek() == '^') {
      c.take();
      exp = c.small_integer("exponent");
    }
    term.exps[idx] += exp;
    return;
  }
  c.fail("expected a coefficient or a variable");
}

/// term := atom ('*' atom)*
RawTerm parse_term(Cursor& c, bool negative) {
  RawTerm term;
  term.line = c.line();
  term.col = c.col();
  parse_atom(c, term);
  while (c.peek() == '*') {
    c.take();
    parse_atom(c, term);
  }
  if (negative) term.coeff = -term.coeff;
  return term;
}

/// poly := ['+'|'-'] term (('+'|'-') term)*
RawPoly parse_poly_line(Cursor& c) {
  RawPoly poly;
  poly.line = c.line();
  bool neg = false;
  if (c.peek() == '+' || c.peek() == '-') neg = c.take() == '-';
  poly.terms.push_back(parse_term(c, neg));
  while (!c.at_end()) {
    char op = c.peek();
    if (op != '+' && op != '-') c.fail("expected '+', '-' or end of line");
    c.take();
    poly.terms.push_back(parse_term(c, op == '-'));
  }
  return poly;
}

/// directive := 'ambient' 'n' '=' digits
int parse_directive(Cursor& c) {
  for (char expected : std::string("ambient"))
    if (c.take() != expected) c.fail("malformed directive (expected 'ambient n=<int>')");
  if (c.take() != 'n' || c.take() != '=') c.fail("malformed directive (expected 'ambient n=<int>')");
  int n = c.small_integer("ambient dimension");
  if (!c.at_end()) c.fail("trailing input after ambient directive");
  return n;
}

}  // namespace

PolynomialSystem<Rational> parse_system(std::string_view text) {
  std::optional<int> directive_n;
  int directive_line = 0;
  std::vector<RawPoly> polys;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c(line, line_no);
    if (c.at_end()) {
      if (pos > text.size()) break;
      continue;
    }
    if (c.peek() == 'a') {
      int col = c.col();
      int n = parse_directive(c);
      if (directive_n) throw ParseError(line_no, col, "duplicate ambient directive");
      directive_n = n;
      directive_line = line_no;
    } else {
      polys.push_back(parse_poly_line(c));
    }
    if (pos > text.size()) break;
  }

  // Homogeneity is diagnosed before ambient inference, so a stray constant
  // term is reported as such and not as a dimension problem.
  for (const auto& p : polys) {
    int degree = p.terms.front().degree();
    for (const auto& t : p.terms)
      if (t.degree() != degree)
        throw ParseError(t.line, t.col, "non-homogeneous polynomial (term of degree " +
                                            std::to_string(t.degree()) + " next to degree " +
                                            std::to_string(degree) + ")");
  }

  int max_index = -1;
  for (const auto& p : polys)
    for (const auto& t : p.terms)
      for (auto [i, e] : t.exps) max_index = std::max(max_index, i);

  std::optional<int> n;
  if (directive_n) {
    if (*directive_n < 1)
      throw ParseError(directive_line, 1, "ambient space must be at least P^1");
    n = directive_n;
  } else if (!polys.empty()) {
    if (max_index < 1)
      throw ParseError(polys.front().line, 1,
                       "ambient space must be at least P^1 (only x0 appears; "
                       "use an 'ambient n=<int>' directive to embed)");
    n = max_index;
  }

  PolynomialSystem<Rational> out;
  out.ambient = n;
  for (const auto& p : polys) {
    std::vector<std::pair<Monomial, Rational>> raw;
    for (const auto& t : p.terms) {
      Monomial m{std::vector<int>(static_cast<std::size_t>(*n) + 1, 0)};
      for (auto [i, e] : t.exps) {
        if (i > *n)
          throw ParseError(t.line, t.col, "variable x" + std::to_string(i) +
                                              " exceeds ambient n=" + std::to_string(*n));
        m.e[static_cast<std::size_t>(i)] = e;
      }
      raw.emplace_back(std::move(m), t.coeff);
    }
    Polynomial<Rational> f(std::move(raw));
    if (f.is_zero()) continue;  // zero polynomials impose nothing
    if (f.degree() == 0)
      throw ParseError(p.line, p.terms.front().col, "degree-0 equation (nonzero constant)");
    out.equations.push_back(std::move(f));
  }
  return out;
}

}  // namespace qgr
