#include "qgr/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qgr/veronese.hpp"

namespace qgr {

bool operator<(const GrassPoint& a, const GrassPoint& b) {
  if (proj_less(a.u2, b.u2)) return true;
  if (proj_less(b.u2, a.u2)) return false;
  return proj_less(a.u3, b.u3);
}

namespace {

template <class System>
std::vector<ProjPoint<Fp>> variety_points_impl(const System& s, std::uint32_t q) {
  int n = s.ambient_or_throw();
  std::vector<ProjPoint<Fp>> out;
  for_each_proj_point(n, q, [&](const std::vector<Fp>& y) {
    for (const auto& f : s.equations)
      if (!is_zero(evaluate(f, y))) return;
    out.push_back(ProjPoint<Fp>{y});
  });
  return out;
}

/// Arrow matrices into vertex 1 stacked into one linear map, plus the shift
/// maps into vertex 3 in arrow order.
struct SplitArrows {
  Matrix<Fp> phi;                       // k x M
  std::vector<const Matrix<Fp>*> shifts;  // n+1 maps, M' x M
};

SplitArrows split_arrows(const Representation<Fp>& rep) {
  if (rep.matrices.empty())
    throw std::invalid_argument("representation has no arrows");
  std::uint32_t q = rep.matrices.front().zero().modulus();
  int big_m = rep.dims.at(2);
  SplitArrows out;
  int k = 0;
  for (const Arrow& a : rep.quiver.arrows)
    if (a.target == 1) ++k;
  out.phi = Matrix<Fp>(k, big_m, Fp(0, q));
  int row = 0;
  for (std::size_t ai = 0; ai < rep.quiver.arrows.size(); ++ai) {
    const Arrow& a = rep.quiver.arrows[ai];
    if (a.target == 1) {
      for (int c = 0; c < big_m; ++c) out.phi.at(row, c) = rep.matrices[ai].at(0, c);
      ++row;
    } else if (a.target == 3) {
      out.shifts.push_back(&rep.matrices[ai]);
    } else {
      throw std::invalid_argument("unexpected arrow target " + std::to_string(a.target));
    }
  }
  return out;
}

void validate_thin_vector(const Representation<Fp>& rep, const DimensionVector& e) {
  DimensionVector expect;
  for (int v : rep.quiver.vertices) expect.entries[v] = v == 1 ? 0 : 1;
  if (!(e == expect))
    throw std::invalid_argument("dimension vector does not match the construction");
}

bool proportional(const std::vector<Fp>& pivot, const std::vector<Fp>& w) {
  for (std::size_t r = 0; r + 1 < pivot.size(); ++r)
    for (std::size_t s = r + 1; s < pivot.size(); ++s)
      if (!(pivot[r] * w[s] == pivot[s] * w[r])) return false;
  return true;
}

}  // namespace

std::vector<ProjPoint<Fp>> variety_points(const PolynomialSystem<Rational>& s, std::uint32_t q) {
  return variety_points_impl(s, q);
}

std::vector<ProjPoint<Fp>> variety_points(const PolynomialSystem<Fp>& s, std::uint32_t q) {
  return variety_points_impl(s, q);
}

long double grassmannian_line_estimate(const Representation<Fp>& rep) {
  SplitArrows split = split_arrows(rep);
  std::uint32_t q = rep.matrices.front().zero().modulus();
  int t = split.phi.cols() - rank(split.phi);
  return proj_point_count_estimate(t - 1, q);
}

std::vector<GrassPoint> grassmannian_points(const Representation<Fp>& rep,
                                            const DimensionVector& e,
                                            std::uint64_t max_lines) {
  validate_thin_vector(rep, e);
  SplitArrows split = split_arrows(rep);
  std::uint32_t q = rep.matrices.front().zero().modulus();
  std::vector<std::vector<Fp>> kernel = kernel_basis(split.phi);
  int t = static_cast<int>(kernel.size());
  if (t == 0) return {};

  long double lines = proj_point_count_estimate(t - 1, q);
  if (lines > static_cast<long double>(max_lines)) {
    std::ostringstream os;
    os << "kernel of the linear forms spans about " << lines
       << " lines over F_" << q << ", above the enumeration limit of " << max_lines;
    throw std::length_error(os.str());
  }

  int big_m = split.phi.cols();
  std::vector<GrassPoint> out;
  std::vector<Fp> v(static_cast<std::size_t>(big_m), Fp(0, q));
  for_each_proj_point(t - 1, q, [&](const std::vector<Fp>& c) {
    for (int m = 0; m < big_m; ++m) {
      Fp acc(0, q);
      for (int j = 0; j < t; ++j)
        acc += c[static_cast<std::size_t>(j)] * kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      v[static_cast<std::size_t>(m)] = acc;
    }
    std::vector<std::vector<Fp>> images;
    images.reserve(split.shifts.size());
    for (const Matrix<Fp>* fi : split.shifts) images.push_back(mat_vec(*fi, v));
    const std::vector<Fp>* pivot = nullptr;
    for (const auto& w : images) {
      if (std::any_of(w.begin(), w.end(), [](const Fp& x) { return !is_zero(x); })) {
        pivot = &w;
        break;
      }
    }
    // Every degree-d monomial is divisible by some variable, so a nonzero v
    // always has a nonzero image.
    if (!pivot) throw std::logic_error("all shift images vanish on a nonzero vector");
    for (const auto& w : images)
      if (!proportional(*pivot, w)) return;  // image span has dimension >= 2
    out.push_back(GrassPoint{normalize(v), normalize(*pivot)});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GrassPoint> grassmannian_points(const Representation<Rational>& rep,
                                            const DimensionVector& e, std::uint32_t q,
                                            std::uint64_t max_lines) {
  return grassmannian_points(reduce_mod_p(rep, q), e, max_lines);
}

template <class K>
int endomorphism_dim(const Representation<K>& rep) {
  if (rep.matrices.empty())
    throw std::invalid_argument("representation has no arrows");
  K zero = rep.matrices.front().zero();
  std::map<int, int> offset;
  int unknowns = 0;
  for (int v : rep.quiver.vertices) {
    offset[v] = unknowns;
    int dv = rep.dims.at(v);
    unknowns += dv * dv;
  }
  int rows = 0;
  for (const Arrow& a : rep.quiver.arrows)
    rows += rep.dims.at(a.target) * rep.dims.at(a.source);

  // One equation per entry of eta_target * M_a - M_a * eta_source.
  Matrix<K> sys(rows, unknowns, zero);
  int row = 0;
  for (std::size_t ai = 0; ai < rep.quiver.arrows.size(); ++ai) {
    const Arrow& a = rep.quiver.arrows[ai];
    const Matrix<K>& ma = rep.matrices[ai];
    int dt = rep.dims.at(a.target), ds = rep.dims.at(a.source);
    for (int r = 0; r < dt; ++r)
      for (int c = 0; c < ds; ++c) {
        for (int m = 0; m < dt; ++m) sys.at(row, offset[a.target] + r * dt + m) += ma.at(m, c);
        for (int m = 0; m < ds; ++m) sys.at(row, offset[a.source] + m * ds + c) -= ma.at(r, m);
        ++row;
      }
  }
  return unknowns - rank(sys);
}

template int endomorphism_dim<Rational>(const Representation<Rational>&);
template int endomorphism_dim<Fp>(const Representation<Fp>&);

int endomorphism_dim(const Representation<Rational>& rep, std::uint32_t p) {
  return endomorphism_dim(reduce_mod_p(rep, p));
}

VerificationReport verify_correspondence(const Construction& c,
                                         const PolynomialSystem<Rational>& original,
                                         std::uint32_t q, std::uint64_t max_lines) {
  VerificationReport report;
  report.q = q;
  report.warnings = reduce_mod_p(original, q).warnings;

  Representation<Fp> rep = reduce_mod_p(c.rep, q);
  std::vector<ProjPoint<Fp>> variety = variety_points(original, q);
  std::vector<GrassPoint> grass = grassmannian_points(rep, c.e, max_lines);
  report.variety_count = variety.size();
  report.grassmannian_count = grass.size();
  report.endo_dim = endomorphism_dim(rep);

  // Forward map: a variety point goes to its degree-d coordinate line and
  // the line spanned by that line's shift images.
  SplitArrows split = split_arrows(rep);
  std::set<GrassPoint> image;
  for (const ProjPoint<Fp>& y : variety) {
    ProjPoint<Fp> u2 = normalize(veronese_coords(y.coords, c.rep.basis_d));
    const Matrix<Fp>* first_shift = nullptr;
    std::vector<Fp> w;
    for (const Matrix<Fp>* fi : split.shifts) {
      w = mat_vec(*fi, u2.coords);
      if (std::any_of(w.begin(), w.end(), [](const Fp& x) { return !is_zero(x); })) {
        first_shift = fi;
        break;
      }
    }
    if (!first_shift) throw std::logic_error("all shift images vanish on a variety point");
    image.insert(GrassPoint{std::move(u2), normalize(std::move(w))});
  }

  bool injective = image.size() == variety.size();
  bool same_set = std::equal(image.begin(), image.end(), grass.begin(), grass.end());
  report.bijection_ok = injective && image.size() == grass.size() && same_set;
  return report;
}

VerificationReport verify_correspondence(const PolynomialSystem<Rational>& s, std::uint32_t q,
                                         std::uint64_t max_lines) {
  Construction c = build_representation(s);
  return verify_correspondence(c, s, q, max_lines);
}

}  // namespace qgr
