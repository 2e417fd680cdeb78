#pragma once

#include <stdexcept>
#include <vector>

#include "qgr/matrix.hpp"
#include "qgr/monomial.hpp"
#include "qgr/projective.hpp"

namespace qgr {

/// Evaluates every monomial of the basis at the coordinate vector, in basis
/// order. This is the d-uple Veronese embedding in coordinates.
template <class K>
std::vector<K> veronese_coords(const std::vector<K>& x, const MonomialBasis& basis) {
  if (static_cast<int>(x.size()) != basis.n() + 1)
    throw std::invalid_argument("coordinate vector does not match the basis arity");
  std::vector<K> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (const Monomial& m : basis.monomials()) {
    K value = one_like(x.front());
    for (int i = 0; i <= basis.n(); ++i)
      for (int rep = 0; rep < m.e[static_cast<std::size_t>(i)]; ++rep)
        value = value * x[static_cast<std::size_t>(i)];
    out.push_back(value);
  }
  return out;
}

template <class K>
ProjPoint<K> veronese_map(const ProjPoint<K>& x, const MonomialBasis& basis) {
  return normalize(veronese_coords(x.coords, basis));
}

/// The catalecticant-style matrix whose entry (r, i) is the coordinate of x at
/// the monomial r + e_i, where r runs over the degree d-1 basis and i over the
/// variables. Its rank is at most 1 exactly on the Veronese image.
template <class K>
Matrix<K> matrix_A(const std::vector<K>& x, const MonomialBasis& basis_d,
                   const MonomialBasis& basis_dm1) {
  if (static_cast<int>(x.size()) != basis_d.size())
    throw std::invalid_argument("coordinate vector does not match the degree-d basis");
  if (basis_d.n() != basis_dm1.n() || basis_d.d() != basis_dm1.d() + 1)
    throw std::invalid_argument("bases must share n and differ by one in degree");
  int nvars = basis_d.n() + 1;
  Matrix<K> a(basis_dm1.size(), nvars, zero_like(x.front()));
  for (int r = 0; r < basis_dm1.size(); ++r)
    for (int i = 0; i < nvars; ++i) {
      int idx = basis_d.index_of(shifted_up(basis_dm1.at(r), i));
      a.at(r, i) = x[static_cast<std::size_t>(idx)];
    }
  return a;
}

/// Checks the quadratic relations x_{r+e_i} x_{r'+e_j} = x_{r+e_j} x_{r'+e_i}
/// directly on the coordinates, without forming the matrix above.
template <class K>
bool check_quadratic_conditions(const std::vector<K>& x, const MonomialBasis& basis_d,
                                const MonomialBasis& basis_dm1) {
  if (static_cast<int>(x.size()) != basis_d.size())
    throw std::invalid_argument("coordinate vector does not match the degree-d basis");
  int nvars = basis_d.n() + 1;
  auto coord = [&](int r, int i) -> const K& {
    return x[static_cast<std::size_t>(basis_d.index_of(shifted_up(basis_dm1.at(r), i)))];
  };
  for (int r1 = 0; r1 < basis_dm1.size(); ++r1)
    for (int r2 = r1 + 1; r2 < basis_dm1.size(); ++r2)
      for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
          if (!(coord(r1, i) * coord(r2, j) == coord(r1, j) * coord(r2, i))) return false;
  return true;
}

}  // namespace qgr
