#include "qgr/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgr {

bool Quiver::is_acyclic() const {
  // Kahn's algorithm: repeatedly remove sources.
  std::map<int, int> indegree;
  for (int v : vertices) indegree[v] = 0;
  for (const Arrow& a : arrows) {
    if (!indegree.count(a.source) || !indegree.count(a.target))
      throw std::invalid_argument("quiver: arrow endpoint is not a vertex");
    ++indegree[a.target];
  }
  std::vector<int> ready;
  for (auto [v, deg] : indegree)
    if (deg == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++removed;
    for (const Arrow& a : arrows)
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
  }
  return removed == vertices.size();
}

std::vector<std::vector<Rational>> build_linear_forms(
    const PolynomialSystem<Rational>& equalized, const MonomialBasis& basis_d) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(equalized.equations.size());
  for (const auto& f : equalized.equations) {
    if (f.is_zero() || f.degree() != basis_d.d() || f.vars() != basis_d.n() + 1)
      throw std::invalid_argument("build_linear_forms: equation does not match the basis");
    std::vector<Rational> row(static_cast<std::size_t>(basis_d.size()), Rational(0));
    for (const auto& [m, c] : f.terms())
      row[static_cast<std::size_t>(basis_d.index_of(m))] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Matrix<Rational>> build_fi(const MonomialBasis& basis_d,
                                       const MonomialBasis& basis_dm1) {
  if (basis_d.n() != basis_dm1.n() || basis_d.d() != basis_dm1.d() + 1)
    throw std::invalid_argument("build_fi: bases must share n and differ by one in degree");
  int nvars = basis_d.n() + 1;
  std::vector<Matrix<Rational>> out;
  out.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) {
    Matrix<Rational> fi(basis_dm1.size(), basis_d.size(), Rational(0));
    for (int col = 0; col < basis_d.size(); ++col) {
      const Monomial& m = basis_d.at(col);
      if (m.e[static_cast<std::size_t>(i)] == 0) continue;
      fi.at(basis_dm1.index_of(shifted_down(m, i)), col) = 1;
    }
    out.push_back(std::move(fi));
  }
  return out;
}

Construction build_representation(const PolynomialSystem<Rational>& s,
                                  std::optional<int> degree) {
  int n = s.ambient_or_throw();
  PolynomialSystem<Rational> equalized = equalize_degrees(s, degree);
  // An empty system carries no degree of its own; embed linearly then.
  int d = equalized.common_degree.value_or(1);
  if (d < 1) throw std::invalid_argument("build_representation: degree must be at least 1");
  equalized.common_degree = d;

  MonomialBasis basis_d(n, d);
  MonomialBasis basis_dm1(n, d - 1);
  std::vector<std::vector<Rational>> forms = build_linear_forms(equalized, basis_d);
  std::vector<Matrix<Rational>> shifts = build_fi(basis_d, basis_dm1);
  int k = static_cast<int>(forms.size());
  int big_m = basis_d.size();
  int small_m = basis_dm1.size();

  Quiver quiver;
  std::map<int, int> dims;
  DimensionVector e;
  std::vector<Matrix<Rational>> matrices;
  if (k > 0) {
    quiver.vertices = {1, 2, 3};
    dims = {{1, 1}, {2, big_m}, {3, small_m}};
    e.entries = {{1, 0}, {2, 1}, {3, 1}};
    for (int j = 0; j < k; ++j) {
      quiver.arrows.push_back({"phi_" + std::to_string(j + 1), 2, 1});
      Matrix<Rational> phi(1, big_m, Rational(0));
      for (int c = 0; c < big_m; ++c) phi.at(0, c) = forms[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      matrices.push_back(std::move(phi));
    }
  } else {
    quiver.vertices = {2, 3};
    dims = {{2, big_m}, {3, small_m}};
    e.entries = {{2, 1}, {3, 1}};
  }
  for (int i = 0; i <= n; ++i) {
    quiver.arrows.push_back({"f_" + std::to_string(i), 2, 3});
    matrices.push_back(shifts[static_cast<std::size_t>(i)]);
  }

  Representation<Rational> rep{std::move(quiver), std::move(dims), std::move(matrices),
                               n, d, std::move(basis_d), std::move(basis_dm1)};
  return Construction{std::move(rep), std::move(e), std::move(equalized)};
}

Representation<Fp> reduce_mod_p(const Representation<Rational>& rep, std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  std::vector<Matrix<Fp>> matrices;
  matrices.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) matrices.push_back(reduce_mod_p(m, p));
  return Representation<Fp>{rep.quiver, rep.dims, std::move(matrices),
                            rep.n, rep.d, rep.basis_d, rep.basis_dm1};
}

}  // namespace qgr
