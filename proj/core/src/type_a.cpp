#include "hallbase/type_a.hpp"

#include "hallbase/errors.hpp"

namespace hallbase {

bool is_linear_a(const Quiver& q) {
  const int n = q.vertex_count();
  if (static_cast<int>(q.arrow_count()) != n - 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& a : q.arrows()) {
    if (a.head != a.tail + 1 || a.tail < 1 || a.head > n) return false;
    if (seen[static_cast<std::size_t>(a.tail)]++) return false;
  }
  return true;
}

TypeA::TypeA(const RootSystem& rs) : rs_(rs), n_(rs.vertex_count()) {
  if (!is_linear_a(rs.quiver())) throw InputError("type-A operations need the linear quiver 1 -> 2 -> ... -> n");
  index_.assign(static_cast<std::size_t>(n_ * n_), -1);
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) {
      DimVector d = rs.quiver().zero();
      for (int k = i; k <= j; ++k) d[static_cast<std::size_t>(k - 1)] = 1;
      const int idx = rs.find(d);
      verify(idx >= 0, "interval root missing");
      index_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = idx;
    }
}

int TypeA::at(const KostantPartition& lambda, int i, int j) const {
  if (i < 1 || j > n_ || i > j) return 0;
  return lambda[static_cast<std::size_t>(root_index(i, j))];
}

KostantPartition TypeA::sigma(int i, const KostantPartition& lambda) const {
  if (i < 1 || i > n_) throw InputError("vertex " + std::to_string(i) + " out of range");
  KostantPartition out = lambda;
  int j = 0;
  if (i < n_)
    for (int l = i + 1; l <= n_; ++l)
      if (at(lambda, i + 1, l) != 0) j = l;
  if (j == 0) {
    out[static_cast<std::size_t>(root_index(i, i))] += 1;
  } else {
    out[static_cast<std::size_t>(root_index(i, j))] += 1;
    out[static_cast<std::size_t>(root_index(i + 1, j))] -= 1;
  }
  return out;
}

KostantPartition TypeA::wp(const Word& w) const {
  KostantPartition cur = rs_.zero();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) cur = sigma(*it, cur);
  return cur;
}

bool TypeA::is_distinguished(const Word& w) const {
  const auto tf = tight_form(w);
  KostantPartition lam = rs_.zero();  // λ^{(r)} for the current r
  for (std::size_t r = tf.size(); r-- > 0;) {
    const int j = tf[r].vertex, e = tf[r].exponent;
    int l = 0;
    for (int a = j; a <= n_; ++a)
      if (at(lam, j, a) != 0) l = a;
    if (l != 0) {
      int room = 0;
      for (int a = l + 1; a <= n_; ++a) room += at(lam, j + 1, a);
      if (e > room) return false;
    }
    for (int k = 0; k < e; ++k) lam = sigma(j, lam);
  }
  return true;
}

}  // namespace hallbase
