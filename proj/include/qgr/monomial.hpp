#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace qgr {

/// Exponent tuple (m_0, ..., m_n); the total degree is the sum of entries.
struct Monomial {
  std::vector<int> e;

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  int vars() const { return static_cast<int>(e.size()); }

  bool operator==(const Monomial&) const = default;
};

/// The one canonical monomial order of the whole project: strictly
/// decreasing lexicographic on exponent tuples. Every serialized coordinate
/// vector and matrix depends on it.
struct MonomialDecLex {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e > b.e; }
};

/// m + e_i
Monomial shifted_up(const Monomial& m, int i);
/// m - e_i; requires m.e[i] > 0
Monomial shifted_down(const Monomial& m, int i);
Monomial sum(const Monomial& a, const Monomial& b);

std::uint64_t binomial(int n, int k);

/// All monomials of a fixed degree in n+1 variables, in decreasing
/// lexicographic order, with O(log) inverse lookup. Immutable once built.
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& at(int i) const { return monomials_[static_cast<std::size_t>(i)]; }

  /// Position in the canonical order; throws std::out_of_range for a
  /// monomial of the wrong degree or arity.
  int index_of(const Monomial& m) const;

  friend bool operator==(const MonomialBasis& a, const MonomialBasis& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  int n_, d_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, int, MonomialDecLex> index_;
};

/// Every tuple of n+1 non-negative integers summing to d, as a basis;
/// the count is binomial(n+d, d).
MonomialBasis enumerate_monomials(int n, int d);

}  // namespace qgr
