#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "qgr/fp.hpp"

namespace qgr {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator as long as inputs are canonical; the string entry
/// point below canonicalizes, so every Rational in the system is reduced.
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline Rational inv(const Rational& a) {
  if (is_zero(a)) throw std::domain_error("rational: inverse of zero");
  return 1 / a;
}

/// Canonical "a" or "a/b" form.
inline std::string to_string(const Rational& a) { return a.get_str(); }

/// Parses "a" or "a/b" with arbitrary-precision integers; rejects zero
/// denominators and anything that is not a plain integer or fraction.
inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

/// Image of a in F_p. Throws if the denominator vanishes mod p.
inline Fp reduce_mod_p(const Rational& a, std::uint32_t p) {
  if (p == 0) throw std::invalid_argument("reduce_mod_p: modulus must be positive");
  std::uint64_t num = mpz_fdiv_ui(a.get_num().get_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(a.get_den().get_mpz_t(), p);
  if (den == 0)
    throw std::invalid_argument("reduce_mod_p: denominator of " + to_string(a) +
                                " is divisible by " + std::to_string(p));
  return Fp(static_cast<std::int64_t>(num), p) / Fp(static_cast<std::int64_t>(den), p);
}

}  // namespace qgr
