#include "qgr/projective.hpp"

#include <cmath>

namespace qgr {

long double proj_point_count_estimate(int dim, std::uint32_t q) {
  // (q^(dim+1) - 1) / (q - 1)
  return (std::pow(static_cast<long double>(q), dim + 1) - 1.0L) / (q - 1.0L);
}

void for_each_proj_point(int dim, std::uint32_t q,
                         const std::function<void(const std::vector<Fp>&)>& fn) {
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  if (dim < 0) return;
  std::vector<Fp> coords(static_cast<std::size_t>(dim) + 1, Fp(0, q));
  for (int pivot = 0; pivot <= dim; ++pivot) {
    for (int i = 0; i < pivot; ++i) coords[static_cast<std::size_t>(i)] = Fp(0, q);
    coords[static_cast<std::size_t>(pivot)] = Fp(1, q);
    // Odometer over the dim - pivot free coordinates, rightmost fastest.
    std::vector<std::uint32_t> free(static_cast<std::size_t>(dim - pivot), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i)
        coords[static_cast<std::size_t>(pivot) + 1 + i] = Fp(free[i], q);
      fn(coords);
      std::size_t k = free.size();
      while (k > 0 && free[k - 1] == q - 1) free[--k] = 0;
      if (k == 0) break;
      ++free[k - 1];
    }
  }
}

std::vector<ProjPoint<Fp>> enumerate_proj_points(int dim, std::uint32_t q) {
  std::vector<ProjPoint<Fp>> out;
  for_each_proj_point(dim, q, [&](const std::vector<Fp>& coords) {
    out.push_back(ProjPoint<Fp>{coords});
  });
  return out;
}

}  // namespace qgr
