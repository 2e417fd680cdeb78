#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgr {

/// Trial-division primality test; plenty for the small moduli we enumerate over.
inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

/// Element of a prime field F_p, kept as the canonical representative in
/// [0, p). Every element carries its modulus, so values from different
/// fields cannot be combined silently: arithmetic on mismatched moduli
/// throws instead of coercing.
class Fp {
 public:
  Fp() = default;  // field-less zero; arithmetic on it throws
  Fp(std::int64_t value, std::uint32_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: modulus must be positive");
    std::int64_t r = value % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    same_field(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v_) + b.v_;
    return raw(static_cast<std::uint32_t>(s >= a.p_ ? s - a.p_ : s), a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    same_field(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator-(const Fp& a) {
    require_field(a);
    return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    same_field(a, b);
    return raw(static_cast<std::uint32_t>(
                   static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_),
               a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b);

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  /// Equality is a plain value comparison (modulus included); unlike
  /// arithmetic it does not throw across fields.
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
  }
  /// Representative order, used only for canonical sorting.
  friend bool operator<(const Fp& a, const Fp& b) {
    same_field(a, b);
    return a.v_ < b.v_;
  }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  static void require_field(const Fp& a) {
    if (a.p_ == 0) throw std::invalid_argument("Fp: value has no field attached");
  }
  static void same_field(const Fp& a, const Fp& b) {
    require_field(a);
    if (a.p_ != b.p_) throw std::invalid_argument("Fp: field mismatch");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }

/// Multiplicative inverse by extended Euclid.
inline Fp inv(const Fp& a) {
  if (a.modulus() == 0) throw std::invalid_argument("Fp: value has no field attached");
  if (a.value() == 0) throw std::domain_error("Fp: inverse of zero");
  std::int64_t t = 0, nt = 1;
  std::int64_t r = a.modulus(), nr = a.value();
  while (nr != 0) {
    std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return Fp(t, a.modulus());
}

inline Fp operator/(const Fp& a, const Fp& b) {
  Fp::same_field(a, b);
  return a * inv(b);
}

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace qgr
