#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qgr/fp.hpp"

namespace qgr {

/// Point of projective space over a finite field, stored in normalized form:
/// the first nonzero coordinate equals 1.
template <class K>
struct ProjPoint {
  std::vector<K> coords;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Scales a vector so its first nonzero coordinate becomes 1.
template <class K>
ProjPoint<K> normalize(std::vector<K> coords) {
  for (const K& c : coords) {
    if (!is_zero(c)) {
      K scale = inv(c);
      for (K& x : coords) x = x * scale;
      return ProjPoint<K>{std::move(coords)};
    }
  }
  throw std::invalid_argument("cannot normalize the zero vector");
}

/// Coordinatewise lexicographic order on representatives; points must live in
/// the same projective space.
template <class K>
bool proj_less(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("projective points of different dimensions");
  return a.coords < b.coords;
}

template <class K>
struct ProjPointLess {
  bool operator()(const ProjPoint<K>& a, const ProjPoint<K>& b) const { return proj_less(a, b); }
};

/// Number of points of P^dim(F_q), as a floating estimate. Used to refuse
/// enumerations that would not finish.
long double proj_point_count_estimate(int dim, std::uint32_t q);

/// Visits every point of P^dim(F_q) exactly once, one affine chart at a time:
/// first the points with coords[0] = 1, then coords[0] = 0 and coords[1] = 1,
/// and so on; within a chart the free coordinates run in lexicographic order.
void for_each_proj_point(int dim, std::uint32_t q,
                         const std::function<void(const std::vector<Fp>&)>& fn);

std::vector<ProjPoint<Fp>> enumerate_proj_points(int dim, std::uint32_t q);

}  // namespace qgr
