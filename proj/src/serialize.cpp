#include "qgr/serialize.hpp"

#include <stdexcept>
#include <string>

namespace qgr {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json matrix_to_json(const Matrix<Rational>& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational entry_from_json(const json& e) {
  if (e.is_string()) return rational_from_string(e.get<std::string>());
  if (e.is_number_integer()) return Rational(static_cast<long>(e.get<std::int64_t>()));
  throw std::invalid_argument("matrix entry must be a rational string or an integer");
}

Matrix<Rational> matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("matrix has wrong row count");
  Matrix<Rational> m(rows, cols, Rational(0));
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix has wrong column count");
    for (int c = 0; c < cols; ++c) m.at(r, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

ordered_json representation_to_json(const Construction& c) {
  ordered_json j;
  j["vertices"] = c.rep.quiver.vertices;
  ordered_json arrows = ordered_json::array();
  for (std::size_t i = 0; i < c.rep.quiver.arrows.size(); ++i) {
    const Arrow& a = c.rep.quiver.arrows[i];
    ordered_json aj;
    aj["name"] = a.name;
    aj["source"] = a.source;
    aj["target"] = a.target;
    aj["matrix"] = matrix_to_json(c.rep.matrices[i]);
    arrows.push_back(std::move(aj));
  }
  j["arrows"] = std::move(arrows);
  ordered_json dims;
  for (int v : c.rep.quiver.vertices) dims[std::to_string(v)] = c.rep.dims.at(v);
  j["dims"] = std::move(dims);
  ordered_json dv;
  for (int v : c.rep.quiver.vertices) dv[std::to_string(v)] = c.e.entries.at(v);
  j["dimension_vector"] = std::move(dv);
  j["n"] = c.rep.n;
  j["d"] = c.rep.d;
  ordered_json order = ordered_json::array();
  for (const Monomial& m : c.rep.basis_d.monomials()) order.push_back(m.e);
  j["monomial_order"] = std::move(order);
  return j;
}

LoadedRepresentation representation_from_json(const json& j) {
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  if (vertices != std::vector<int>{1, 2, 3} && vertices != std::vector<int>{2, 3})
    throw std::invalid_argument("vertices must be [1,2,3] or [2,3]");
  int n = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  if (n < 1 || d < 1) throw std::invalid_argument("n and d must be at least 1");
  MonomialBasis basis_d(n, d), basis_dm1(n, d - 1);

  std::vector<std::vector<int>> order =
      j.at("monomial_order").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(order.size()) != basis_d.size())
    throw std::invalid_argument("monomial_order has wrong length");
  for (int i = 0; i < basis_d.size(); ++i)
    if (order[static_cast<std::size_t>(i)] != basis_d.at(i).e)
      throw std::invalid_argument("monomial_order deviates from the canonical order");

  std::map<int, int> dims;
  const json& dims_j = j.at("dims");
  for (int v : vertices) {
    const std::string key = std::to_string(v);
    if (!dims_j.contains(key)) throw std::invalid_argument("dims is missing vertex " + key);
    dims[v] = dims_j.at(key).get<int>();
  }
  if (dims_j.size() != vertices.size())
    throw std::invalid_argument("dims mentions a vertex that does not exist");
  if (vertices.size() == 3 && dims.at(1) != 1)
    throw std::invalid_argument("dims at vertex 1 must be 1");
  if (dims.at(2) != basis_d.size() || dims.at(3) != basis_dm1.size())
    throw std::invalid_argument("dims disagree with the monomial basis sizes for (n, d)");

  DimensionVector e;
  const json& dv_j = j.at("dimension_vector");
  for (int v : vertices) {
    const std::string key = std::to_string(v);
    if (!dv_j.contains(key))
      throw std::invalid_argument("dimension_vector is missing vertex " + key);
    e.entries[v] = dv_j.at(key).get<int>();
    int expect = v == 1 ? 0 : 1;
    if (e.entries[v] != expect)
      throw std::invalid_argument("dimension_vector entry at vertex " + key + " must be " +
                                  std::to_string(expect));
  }
  if (dv_j.size() != vertices.size())
    throw std::invalid_argument("dimension_vector mentions a vertex that does not exist");

  Quiver quiver;
  quiver.vertices = vertices;
  std::vector<Matrix<Rational>> matrices;
  for (const json& aj : j.at("arrows")) {
    Arrow a{aj.at("name").get<std::string>(), aj.at("source").get<int>(),
            aj.at("target").get<int>()};
    if (a.source != 2 || (a.target != 1 && a.target != 3))
      throw std::invalid_argument("arrow " + a.name + " has endpoints outside the construction");
    if (a.target == 1 && vertices.size() != 3)
      throw std::invalid_argument("arrow " + a.name + " targets the absent vertex 1");
    matrices.push_back(matrix_from_json(aj.at("matrix"), dims.at(a.target), dims.at(a.source)));
    quiver.arrows.push_back(std::move(a));
  }

  Representation<Rational> rep{std::move(quiver), std::move(dims), std::move(matrices),
                               n, d, std::move(basis_d), std::move(basis_dm1)};
  return LoadedRepresentation{std::move(rep), std::move(e)};
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["q"] = r.q;
  j["variety_count"] = r.variety_count;
  j["grassmannian_count"] = r.grassmannian_count;
  j["bijection_ok"] = r.bijection_ok;
  j["endo_dim"] = r.endo_dim;
  j["warnings"] = r.warnings;
  return j;
}

namespace {

ordered_json coords_to_json(const std::vector<Fp>& coords) {
  ordered_json out = ordered_json::array();
  for (const Fp& c : coords) out.push_back(c.value());
  return out;
}

}  // namespace

ordered_json points_to_json(const std::vector<ProjPoint<Fp>>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) out.push_back(coords_to_json(p.coords));
  return out;
}

ordered_json grass_points_to_json(const std::vector<GrassPoint>& points) {
  ordered_json out = ordered_json::array();
  for (const auto& p : points) {
    ordered_json pj;
    pj["u2"] = coords_to_json(p.u2.coords);
    pj["u3"] = coords_to_json(p.u3.coords);
    out.push_back(std::move(pj));
  }
  return out;
}

}  // namespace qgr
