#include "hallbase/poly.hpp"

#include <algorithm>

#include "hallbase/errors.hpp"

namespace hallbase {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

bool IntPoly::has_nonnegative_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x >= 0; });
}

BigInt IntPoly::eval(const BigInt& q) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) s += mag.str();
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPoly quantum_integer(int e) {
  if (e <= 0) return {};
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(e), 1));
}

IntPoly quantum_factorial(int e) {
  IntPoly r = IntPoly::constant(1);
  for (int i = 2; i <= e; ++i) r = r * quantum_integer(i);
  return r;
}

IntPoly gaussian_binomial_poly(int n, int k) {
  if (k < 0 || k > n) return {};
  // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<IntPoly>> t(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].resize(static_cast<std::size_t>(a) + 1);
    t[a][0] = IntPoly::constant(1);
    t[a][a] = IntPoly::constant(1);
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + IntPoly::monomial(b) * t[a - 1][b];
  }
  return t[n][k];
}

IntPoly interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  verify(xs.size() == ys.size(), "interpolate: point count mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return {};
  // Newton divided differences.
  std::vector<BigRational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  // Horner in the Newton basis.
  std::vector<BigRational> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<BigRational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * BigRational(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    verify(denominator(c) == 1, "interpolated polynomial has a non-integral coefficient");
    out.push_back(numerator(c));
  }
  return IntPoly(std::move(out));
}

}  // namespace hallbase
