#include "hallbase/laurent.hpp"

#include <algorithm>

#include "hallbase/errors.hpp"

namespace hallbase {

LaurentPoly::LaurentPoly(int lo, std::vector<BigInt> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<int>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

LaurentPoly LaurentPoly::from_q(const IntPoly& p) {
  std::vector<BigInt> c;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) c.emplace_back(0);
    c.push_back(p.coeff(i));
  }
  return LaurentPoly(0, std::move(c));
}

BigInt LaurentPoly::coeff(int exponent) const {
  const int i = exponent - lo_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<BigInt> c(c_.rbegin(), c_.rend());
  return LaurentPoly(-hi(), std::move(c));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<BigInt> c;
  for (int e = lo_; e < 0 && e <= hi(); ++e) c.push_back(coeff(e));
  return LaurentPoly(lo_, std::move(c));
}

bool LaurentPoly::is_unit(int* k) const {
  if (c_.size() != 1 || (c_[0] != 1 && c_[0] != -1)) return false;
  if (k) *k = lo_;
  return true;
}

std::uint64_t LaurentPoly::eval_mod(std::uint64_t x, std::uint64_t mod) const {
  using u128 = unsigned __int128;
  auto power = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    for (; e; e >>= 1) {
      if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % mod);
      b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % mod);
    }
    return r;
  };
  const std::uint64_t xinv = power(x, mod - 2);
  std::uint64_t acc = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    BigInt c = c_[static_cast<std::size_t>(i)] % mod;
    if (c < 0) c += mod;
    acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * x + static_cast<std::uint64_t>(c)) % mod);
  }
  const std::uint64_t scale = lo_ >= 0 ? power(x, static_cast<std::uint64_t>(lo_))
                                       : power(xinv, static_cast<std::uint64_t>(-static_cast<long long>(lo_)));
  return static_cast<std::uint64_t>(static_cast<u128>(acc) * scale % mod);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(lo_ - lo) + i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[static_cast<std::size_t>(o.lo_ - lo) + i] += o.c_[i];
  lo_ = lo;
  c_ = std::move(c);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  LaurentPoly neg = o;
  for (auto& c : neg.c_) c = -c;
  return *this += neg;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return LaurentPoly(a.lo_ + b.lo_, std::move(c));
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int e = lo_; e <= hi(); ++e) {
    const BigInt c = coeff(e);
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1 || e == 0) s += mag.str();
    if (e != 0) s += "v";
    if (e != 0 && e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw VerificationError("Laurent division by zero");
  if (a.is_zero()) return {};
  // Long division on the coefficient sequences, highest terms first.
  std::vector<BigInt> rem(a.coeffs());
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) throw VerificationError("Laurent division is not exact");
  std::vector<BigInt> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + d.size() - 1];
    if (top % d.back() != 0) throw VerificationError("Laurent division is not exact");
    quot[k] = top / d.back();
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= quot[k] * d[i];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& x) { return x != 0; }))
    throw VerificationError("Laurent division is not exact");
  return LaurentPoly(a.lo() - b.lo(), std::move(quot));
}

LaurentPoly quantum_integer_v(int m) {
  if (m <= 0) return {};
  LaurentPoly r;
  for (int k = -(m - 1); k <= m - 1; k += 2) r += LaurentPoly::monomial(k);
  return r;
}

LaurentPoly quantum_factorial_v(int m) {
  LaurentPoly r = LaurentPoly::constant(1);
  for (int i = 2; i <= m; ++i) r = r * quantum_integer_v(i);
  return r;
}

}  // namespace hallbase
