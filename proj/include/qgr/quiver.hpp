#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgr/matrix.hpp"
#include "qgr/monomial.hpp"
#include "qgr/polynomial.hpp"

namespace qgr {

struct Arrow {
  std::string name;
  int source = 0, target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<int> vertices;
  std::vector<Arrow> arrows;

  bool is_acyclic() const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// One non-negative integer per vertex.
struct DimensionVector {
  std::map<int, int> entries;

  bool is_thin() const {
    for (auto [v, e] : entries)
      if (e < 0 || e > 1) return false;
    return true;
  }

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

/// Representation of a quiver: a dimension per vertex and one matrix per
/// arrow (matrices[i] belongs to quiver.arrows[i], shaped dims[target] x
/// dims[source]). The embedding data n, d and the two monomial bases ride
/// along because every consumer needs them.
template <class K>
struct Representation {
  Quiver quiver;
  std::map<int, int> dims;
  std::vector<Matrix<K>> matrices;
  int n, d;
  MonomialBasis basis_d, basis_dm1;
};

/// One row per equation: its coefficients in the canonical monomial basis of
/// degree d. All equations must already have degree exactly d.
std::vector<std::vector<Rational>> build_linear_forms(
    const PolynomialSystem<Rational>& equalized, const MonomialBasis& basis_d);

/// The n+1 shift maps between monomial coordinate spaces: the i-th matrix
/// sends the basis vector of m to that of m - e_i when m_i > 0 and to zero
/// otherwise. Applied to the Veronese coordinates of x, the i-th map gives
/// x_i times the lower-degree Veronese coordinates; equivalently, the images
/// of a vector v under all n+1 maps are the columns of the catalecticant
/// matrix of v.
std::vector<Matrix<Rational>> build_fi(const MonomialBasis& basis_d,
                                       const MonomialBasis& basis_dm1);

/// The output of the reduction: a quiver representation together with the
/// thin dimension vector whose Grassmannian realizes the input variety, and
/// the degree-equalized system the linear forms were read from.
struct Construction {
  Representation<Rational> rep;
  DimensionVector e;
  PolynomialSystem<Rational> equalized;
};

/// Builds the representation for a homogeneous system in P^n. With k > 0
/// equations the quiver has vertices {1, 2, 3}, arrows phi_1..phi_k from 2
/// to 1 (the equations as linear forms on the degree-d coordinate space) and
/// f_0..f_n from 2 to 3 (the shift maps); dimensions (1, M, M') and
/// dimension vector (0, 1, 1). With no equations vertex 1 is omitted:
/// vertices {2, 3}, dimensions (M, M'), dimension vector (1, 1).
///
/// `degree` forces the common embedding degree; it must be at least the
/// maximum equation degree. An empty system embeds linearly by default.
Construction build_representation(const PolynomialSystem<Rational>& s,
                                  std::optional<int> degree = std::nullopt);

Representation<Fp> reduce_mod_p(const Representation<Rational>& rep, std::uint32_t p);

}  // namespace qgr
