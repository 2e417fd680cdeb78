#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgr/monomial.hpp"
#include "qgr/rational.hpp"

namespace qgr {

/// Homogeneous polynomial as a sparse map from monomials to nonzero
/// coefficients, iterated in the canonical (decreasing lex) order. The
/// default-constructed value is the zero polynomial.
template <class K>
class Polynomial {
 public:
  using Terms = std::map<Monomial, K, MonomialDecLex>;

  Polynomial() = default;

  /// Merges duplicate monomials, drops zero coefficients, and enforces that
  /// all surviving terms share one arity and one degree.
  explicit Polynomial(std::vector<std::pair<Monomial, K>> raw) {
    for (auto& [m, c] : raw) {
      auto it = terms_.find(m);
      if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
      }
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (qgr::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    if (terms_.empty()) return;
    int vars = terms_.begin()->first.vars();
    int deg = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
      if (m.vars() != vars)
        throw std::invalid_argument("polynomial: mixed variable counts");
      if (m.degree() != deg)
        throw std::invalid_argument("polynomial: not homogeneous");
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
    return terms_.begin()->first.degree();
  }
  int vars() const {
    if (terms_.empty()) throw std::logic_error("arity of zero polynomial");
    return terms_.begin()->first.vars();
  }

  bool operator==(const Polynomial&) const = default;

 private:
  Terms terms_;
};

template <class K>
K evaluate(const Polynomial<K>& f, const std::vector<K>& point) {
  if (point.empty()) throw std::invalid_argument("evaluate: empty point");
  K acc = zero_like(point.front());
  if (f.is_zero()) return acc;
  if (f.vars() != static_cast<int>(point.size()))
    throw std::invalid_argument("evaluate: point length mismatch");
  for (const auto& [m, c] : f.terms()) {
    K t = c;
    for (int i = 0; i < m.vars(); ++i)
      for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) t = t * point[static_cast<std::size_t>(i)];
    acc = acc + t;
  }
  return acc;
}

/// Rational coefficients evaluated at a prime-field point; coefficients are
/// reduced on the fly and a denominator divisible by p throws.
inline Fp evaluate(const Polynomial<Rational>& f, const std::vector<Fp>& point) {
  if (point.empty()) throw std::invalid_argument("evaluate: empty point");
  Fp acc = zero_like(point.front());
  if (f.is_zero()) return acc;
  if (f.vars() != static_cast<int>(point.size()))
    throw std::invalid_argument("evaluate: point length mismatch");
  for (const auto& [m, c] : f.terms()) {
    Fp t = reduce_mod_p(c, acc.modulus());
    for (int i = 0; i < m.vars(); ++i)
      for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) t = t * point[static_cast<std::size_t>(i)];
    acc = acc + t;
  }
  return acc;
}

/// A system of homogeneous equations cutting out a subvariety of P^n.
/// `ambient` stays empty only for a system parsed from empty input with no
/// ambient directive; such a system defines nothing until n is known, and
/// the operations that need n throw.
template <class K>
struct PolynomialSystem {
  std::optional<int> ambient;
  std::vector<Polynomial<K>> equations;
  std::optional<int> common_degree;  // set once degrees have been equalized

  int ambient_or_throw() const {
    if (!ambient)
      throw std::logic_error("polynomial system: ambient dimension unknown (add 'ambient n=...')");
    return *ambient;
  }
};

/// q * f for a single monomial q.
template <class K>
Polynomial<K> multiply_by_monomial(const Polynomial<K>& f, const Monomial& q) {
  std::vector<std::pair<Monomial, K>> raw;
  raw.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) raw.emplace_back(sum(m, q), c);
  return Polynomial<K>(std::move(raw));
}

/// Brings every equation to the maximum degree d (or to target_degree if
/// given): an equation of degree d' < d is replaced by its products with all
/// monomials of degree d - d', in canonical order. The projective zero set
/// is unchanged, because at any point of P^n some coordinate is nonzero.
PolynomialSystem<Rational> equalize_degrees(
    const PolynomialSystem<Rational>& s,
    std::optional<int> target_degree = std::nullopt);

struct SystemModP {
  PolynomialSystem<Fp> system;
  std::vector<std::string> warnings;  // one per equation that vanished mod p
};

/// Reduces all coefficients into F_p. Equations that become identically zero
/// are dropped with a warning; a denominator divisible by p throws.
SystemModP reduce_mod_p(const PolynomialSystem<Rational>& s, std::uint32_t p);

/// Canonical text form (ambient directive plus one equation per line, terms
/// in decreasing lex order). parse_system(serialize_system(s)) == s.
std::string serialize_system(const PolynomialSystem<Rational>& s);

/// Error with the 1-based position in the input text.
struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

/// Parses the ".poly" input language. See the README for the grammar.
PolynomialSystem<Rational> parse_system(std::string_view text);

}  // namespace qgr
