#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace hallbase {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial in q with integer coefficients, low degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(int degree, const BigInt& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool has_nonnegative_coeffs() const;

  BigInt eval(const BigInt& q) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "q^2 + q + 1"
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// [[e]] = 1 + q + ... + q^(e-1)
IntPoly quantum_integer(int e);
/// [[1]][[2]]...[[e]]; [[0]]! = 1
IntPoly quantum_factorial(int e);
/// Gaussian binomial [n choose k] as a polynomial in q.
IntPoly gaussian_binomial_poly(int n, int k);

/// The unique polynomial of degree < xs.size() through the points. Throws
/// VerificationError if it does not have integer coefficients.
IntPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

}  // namespace hallbase
