#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hallbase::modp {

bool is_prime(std::uint32_t n);
/// The first `count` primes: 2, 3, 5, 7, ...
std::vector<std::uint32_t> first_primes(std::size_t count);

/// The field with p elements; elements are ints in [0, p).
class Field {
 public:
  explicit Field(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  int reduce(long long x) const {
    const long long r = x % static_cast<long long>(p_);
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return static_cast<int>((static_cast<long long>(a) * b) % p_); }
  int neg(int a) const { return a == 0 ? 0 : static_cast<int>(p_) - a; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

 private:
  std::uint32_t p_;
  std::vector<int> inverse_;
};

/// Dense row-major matrix over a prime field. Shapes may be zero.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<int>& data() const { return data_; }

  bool is_zero() const;
  static Matrix identity(int n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Reduces to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& f, Matrix& m);
int rank(const Field& f, Matrix m);
/// Basis of {x : m x = 0}, one basis vector per column.
Matrix nullspace(const Field& f, const Matrix& m);
/// Rows spanning {y : y m = 0}; full row rank.
Matrix left_nullspace(const Field& f, const Matrix& m);

/// Inverse of a square matrix; throws VerificationError when singular.
Matrix inverse(const Field& f, const Matrix& m);
/// L with L·B = I for B of full column rank.
Matrix left_inverse(const Field& f, const Matrix& b);
/// R with B·R = I for B of full row rank.
Matrix right_inverse(const Field& f, const Matrix& b);

/// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

/// Calls `visit(A)` once for every k×n matrix A of rank k in reduced row
/// echelon form, i.e. once per k-dimensional subspace of F_p^n (row space).
/// The same buffer is reused between calls.
template <class Visitor>
void for_each_rref(const Field& f, int k, int n, Visitor&& visit) {
  Matrix a(k, n);
  if (k == 0) {
    visit(static_cast<const Matrix&>(a));
    return;
  }
  if (k > n) return;
  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pivots[i] = i;
  const int p = static_cast<int>(f.prime());
  while (true) {
    std::vector<std::pair<int, int>> free;
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = (c == pivots[r]) ? 1 : 0;
    std::vector<int> digits(free.size(), 0);
    while (true) {
      visit(static_cast<const Matrix&>(a));
      std::size_t pos = 0;
      while (pos < digits.size()) {
        if (++digits[pos] < p) {
          a(free[pos].first, free[pos].second) = digits[pos];
          break;
        }
        digits[pos] = 0;
        a(free[pos].first, free[pos].second) = 0;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
    // next combination of pivot columns
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace hallbase::modp
