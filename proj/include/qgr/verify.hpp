#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgr/polynomial.hpp"
#include "qgr/projective.hpp"
#include "qgr/quiver.hpp"

namespace qgr {

/// Point of the quiver Grassmannian for the thin dimension vector: the line
/// u2 in the middle space together with the line u3 spanned by its images
/// under the shift maps.
struct GrassPoint {
  ProjPoint<Fp> u2, u3;

  friend bool operator==(const GrassPoint&, const GrassPoint&) = default;
};

bool operator<(const GrassPoint& a, const GrassPoint& b);

struct VerificationReport {
  std::uint32_t q = 0;
  std::uint64_t variety_count = 0;
  std::uint64_t grassmannian_count = 0;
  bool bijection_ok = false;
  int endo_dim = 0;
  std::vector<std::string> warnings;
};

/// All points of P^n(F_q) where every equation vanishes, in enumeration
/// order. The rational overload reduces coefficients on the fly, so it sees
/// the original equations, not any derived form.
std::vector<ProjPoint<Fp>> variety_points(const PolynomialSystem<Rational>& s, std::uint32_t q);
std::vector<ProjPoint<Fp>> variety_points(const PolynomialSystem<Fp>& s, std::uint32_t q);

/// Number of lines in the kernel of the stacked linear forms, i.e. the size
/// of the search space grassmannian_points walks. Floating so that absurd
/// requests do not overflow.
long double grassmannian_line_estimate(const Representation<Fp>& rep);

inline constexpr std::uint64_t kMaxGrassmannianLines = 100'000'000;

/// Enumerates the Grassmannian point set: lines [v] inside ker of the
/// stacked phi rows whose image span under the shift maps is exactly one
/// dimensional. Output is sorted and duplicate-free. Throws std::length_error
/// with a size estimate when the kernel holds more than max_lines lines.
std::vector<GrassPoint> grassmannian_points(const Representation<Fp>& rep,
                                            const DimensionVector& e,
                                            std::uint64_t max_lines = kMaxGrassmannianLines);
std::vector<GrassPoint> grassmannian_points(const Representation<Rational>& rep,
                                            const DimensionVector& e, std::uint32_t q,
                                            std::uint64_t max_lines = kMaxGrassmannianLines);

/// Dimension of the space of endomorphisms of the representation: one square
/// matrix per vertex, commuting with every arrow matrix. Value 1 means the
/// only endomorphisms are the scalars.
template <class K>
int endomorphism_dim(const Representation<K>& rep);
int endomorphism_dim(const Representation<Rational>& rep, std::uint32_t p);

/// Full check at one prime: counts both sides, maps variety points into the
/// Grassmannian through the degree-d embedding, and requires that map to be
/// a bijection onto the enumerated point set. Records the endomorphism
/// dimension over F_q and any reduction warnings.
VerificationReport verify_correspondence(const Construction& c,
                                         const PolynomialSystem<Rational>& original,
                                         std::uint32_t q,
                                         std::uint64_t max_lines = kMaxGrassmannianLines);
VerificationReport verify_correspondence(const PolynomialSystem<Rational>& s, std::uint32_t q,
                                         std::uint64_t max_lines = kMaxGrassmannianLines);

}  // namespace qgr
