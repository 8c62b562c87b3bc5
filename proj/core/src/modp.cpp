#include "hallbase/modp.hpp"

#include <algorithm>

#include "hallbase/errors.hpp"

namespace hallbase::modp {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; out.size() < count; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t p) : p_(p), inverse_(p, 0) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not a prime");
  if (p > 65521) throw InputError("prime too large for machine-word field arithmetic");
  // a^(p-2)
  for (std::uint32_t a = 1; a < p; ++a) {
    std::uint64_t result = 1, base = a;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    inverse_[a] = static_cast<int>(result);
  }
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  verify(a.cols() == b.rows(), "matrix shape mismatch in multiply");
  Matrix c(a.rows(), b.cols());
  const long long p = f.prime();
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      long long s = 0;
      for (int k = 0; k < a.cols(); ++k) s += static_cast<long long>(a(i, k)) * b(k, j);
      c(i, j) = static_cast<int>(s % p);
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::vector<int> rref(const Field& f, Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const int s = f.inv(m(row, col));
    for (int c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), s);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const int factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Field& f, Matrix m) {
  // Forward elimination only.
  int row = 0;
  const long long p = f.prime();
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = col; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const long long s = f.inv(m(row, col));
    for (int r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const long long factor = (m(r, col) * s) % p;
      for (int c = col; c < m.cols(); ++c) {
        long long v = m(r, c) - factor * m(row, c);
        v %= p;
        if (v < 0) v += p;
        m(r, c) = static_cast<int>(v);
      }
    }
    ++row;
  }
  return row;
}

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(f, r);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(pivots[i], static_cast<int>(k)) = f.neg(r(static_cast<int>(i), fc));
  }
  return basis;
}

Matrix left_nullspace(const Field& f, const Matrix& m) { return transpose(nullspace(f, transpose(m))); }

Matrix inverse(const Field& f, const Matrix& m) {
  verify(m.rows() == m.cols(), "inverse: matrix is not square");
  const int k = m.rows();
  Matrix aug(k, 2 * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug(i, j) = m(i, j);
    aug(i, k + i) = 1;
  }
  const auto piv = rref(f, aug);
  verify(static_cast<int>(piv.size()) >= k && (k == 0 || piv[static_cast<std::size_t>(k - 1)] == k - 1),
         "inverse: singular matrix");
  Matrix inv(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) inv(i, j) = aug(i, k + j);
  return inv;
}

Matrix left_inverse(const Field& f, const Matrix& b) {
  Matrix bt = transpose(b);
  const auto piv = rref(f, bt);
  const int k = b.cols();
  verify(static_cast<int>(piv.size()) == k, "left_inverse: rank deficient");
  Matrix square(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) square(i, j) = b(piv[static_cast<std::size_t>(i)], j);
  const Matrix sinv = inverse(f, square);
  Matrix l(k, b.rows());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) l(i, piv[static_cast<std::size_t>(j)]) = sinv(i, j);
  return l;
}

Matrix right_inverse(const Field& f, const Matrix& b) { return transpose(left_inverse(f, transpose(b))); }

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  // Product formula evaluated with exact 128-bit intermediates.
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    unsigned __int128 a = 1, b = 1;
    for (int t = 0; t < n - i; ++t) a *= q;
    for (int t = 0; t < i + 1; ++t) b *= q;
    num *= (a - 1);
    den *= (b - 1);
    unsigned __int128 x = num, y = den;
    while (y) {
      const unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    num /= x;
    den /= x;
  }
  verify(den == 1, "gaussian_binomial: non-integral result");
  return static_cast<std::uint64_t>(num);
}

}  // namespace hallbase::modp
