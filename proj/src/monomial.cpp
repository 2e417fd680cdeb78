#include "qgr/monomial.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace qgr {

Monomial shifted_up(const Monomial& m, int i) {
  Monomial out = m;
  out.e.at(static_cast<std::size_t>(i)) += 1;
  return out;
}

Monomial shifted_down(const Monomial& m, int i) {
  assert(m.e.at(static_cast<std::size_t>(i)) > 0);
  Monomial out = m;
  out.e[static_cast<std::size_t>(i)] -= 1;
  return out;
}

Monomial sum(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("monomial sum: arity mismatch");
  Monomial out = a;
  for (int i = 0; i < b.vars(); ++i) out.e[static_cast<std::size_t>(i)] += b.e[static_cast<std::size_t>(i)];
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void emit(std::vector<int>& prefix, int remaining, int vars_left,
          std::vector<Monomial>& out) {
  if (vars_left == 1) {
    prefix.push_back(remaining);
    out.push_back(Monomial{prefix});
    prefix.pop_back();
    return;
  }
  // Descending first coordinate keeps the whole list in decreasing lex order.
  for (int m0 = remaining; m0 >= 0; --m0) {
    prefix.push_back(m0);
    emit(prefix, remaining - m0, vars_left - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
  if (n < 0 || d < 0)
    throw std::invalid_argument("MonomialBasis: n and d must be non-negative");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n) + 1);
  emit(prefix, d, n + 1, monomials_);
  assert(monomials_.size() == binomial(n + d, d));
  for (int i = 0; i < size(); ++i) index_.emplace(monomials_[static_cast<std::size_t>(i)], i);
}

int MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end())
    throw std::out_of_range("MonomialBasis: monomial not of degree " + std::to_string(d_));
  return it->second;
}

MonomialBasis enumerate_monomials(int n, int d) { return MonomialBasis(n, d); }

}  // namespace qgr
