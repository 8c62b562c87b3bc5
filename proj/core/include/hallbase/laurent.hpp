#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallbase/poly.hpp"

namespace hallbase {

/// Element of Z[v, v^-1]: coefficient of v^(lo + i) is coeffs[i]. Kept
/// normalized: both end coefficients non-zero, zero has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int lo, std::vector<BigInt> coeffs);
  static LaurentPoly constant(const BigInt& c) { return LaurentPoly(0, {c}); }
  static LaurentPoly monomial(int exponent, const BigInt& c = 1) { return LaurentPoly(exponent, {c}); }
  /// Substitutes q = v^2.
  static LaurentPoly from_q(const IntPoly& p);

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int exponent) const;

  /// v ↦ v^-1
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// Terms with strictly negative exponent.
  LaurentPoly negative_part() const;
  bool is_bar_invariant() const { return bar() == *this; }
  /// True for ±v^k; the exponent is written to `k` when non-null.
  bool is_unit(int* k = nullptr) const;

  /// Value at v = x modulo `mod` (x must be invertible).
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t mod) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "v^-1 + 2 + v^3"
  std::string str() const;

 private:
  void normalize();
  int lo_ = 0;
  std::vector<BigInt> c_;
};

/// a / b when the quotient is a Laurent polynomial; throws VerificationError otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// [m] = (v^m - v^-m)/(v - v^-1)
LaurentPoly quantum_integer_v(int m);
/// [1][2]...[m]
LaurentPoly quantum_factorial_v(int m);

}  // namespace hallbase
