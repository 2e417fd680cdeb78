#include "qgr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace qgr {

PolynomialSystem<Rational> equalize_degrees(const PolynomialSystem<Rational>& s,
                                            std::optional<int> target_degree) {
  PolynomialSystem<Rational> out;
  out.ambient = s.ambient;
  if (s.equations.empty()) {
    out.common_degree = target_degree;
    return out;
  }
  int n = s.ambient_or_throw();
  int d = 0;
  for (const auto& f : s.equations) d = std::max(d, f.degree());
  if (target_degree) {
    if (*target_degree < d)
      throw std::invalid_argument("equalize_degrees: target degree below maximum equation degree");
    d = *target_degree;
  }
  for (const auto& f : s.equations) {
    int gap = d - f.degree();
    if (gap == 0) {
      out.equations.push_back(f);
      continue;
    }
    // One replacement equation per complementary monomial, canonical order.
    MonomialBasis multipliers = enumerate_monomials(n, gap);
    for (const Monomial& q : multipliers.monomials())
      out.equations.push_back(multiply_by_monomial(f, q));
  }
  out.common_degree = d;
  return out;
}

namespace {

Polynomial<Fp> reduce_poly(const Polynomial<Rational>& f, std::uint32_t p) {
  std::vector<std::pair<Monomial, Fp>> raw;
  raw.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) raw.emplace_back(m, reduce_mod_p(c, p));
  return Polynomial<Fp>(std::move(raw));
}

}  // namespace

SystemModP reduce_mod_p(const PolynomialSystem<Rational>& s, std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  SystemModP out;
  out.system.ambient = s.ambient;
  out.system.common_degree = s.common_degree;
  int index = 0;
  for (const auto& f : s.equations) {
    ++index;
    Polynomial<Fp> g = reduce_poly(f, p);
    if (g.is_zero()) {
      out.warnings.push_back("equation " + std::to_string(index) +
                             " vanishes identically mod " + std::to_string(p));
      continue;
    }
    out.system.equations.push_back(std::move(g));
  }
  return out;
}

namespace {

void write_monomial(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (int i = 0; i < m.vars(); ++i) {
    int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (e > 1) os << "^" << e;
  }
}

}  // namespace

std::string serialize_system(const PolynomialSystem<Rational>& s) {
  std::ostringstream os;
  if (s.ambient) os << "ambient n=" << *s.ambient << "\n";
  for (const auto& f : s.equations) {
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
      Rational a = c;
      if (first) {
        if (sgn(a) < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (sgn(a) < 0 ? " - " : " + ");
        if (sgn(a) < 0) a = -a;
      }
      if (a != 1) os << to_string(a) << "*";
      write_monomial(os, m);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qgr
