#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "hallbase/basis.hpp"
#include "hallbase/rep.hpp"

namespace fixtures {

using namespace hallbase;

inline Quiver a2() { return Quiver(2, {{1, 2}}); }
inline Quiver a3() { return Quiver(3, {{1, 2}, {2, 3}}); }
inline Quiver d4() { return Quiver(4, {{1, 4}, {2, 4}, {3, 4}}); }

/// Theory, engine, monoid and basis bundled for one quiver.
struct Lab {
  explicit Lab(Quiver q, HallOptions o = {}) : rt(std::move(q)), engine(rt, o), monoid(engine), basis(monoid) {}
  const RootSystem& rs() const { return rt.roots(); }
  KostantPartition root(std::initializer_list<int> dim, int mult = 1) const {
    return rs().single(rs().find(DimVector(dim)), mult);
  }
  KostantPartition simple(int v, int mult = 1) const { return rs().single(rs().simple(v), mult); }

  RepTheory rt;
  HallEngine engine;
  MonoidWords monoid;
  BasisLab basis;
};

inline Lab& a2_lab() {
  static Lab lab(a2());
  return lab;
}
inline Lab& a3_lab() {
  static Lab lab(a3());
  return lab;
}
inline Lab& d4_lab() {
  static Lab lab(d4());
  return lab;
}

/// Every dimension vector with the given number of entries and total ≤ bound, total ≥ 1.
inline std::vector<DimVector> dims_up_to(int n, int bound) {
  std::vector<DimVector> out;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (std::any_of(d.begin(), d.end(), [](int x) { return x > 0; })) out.emplace_back(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      d[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, bound);
  return out;
}

/// Every word over 1..n of length 1..max_len.
inline std::vector<Word> words_up_to(int n, int max_len) {
  std::vector<Word> out;
  std::vector<int> letters;
  std::function<void()> rec = [&]() {
    if (!letters.empty()) out.emplace_back(letters);
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int i = 1; i <= n; ++i) {
      letters.push_back(i);
      rec();
      letters.pop_back();
    }
  };
  rec();
  return out;
}

/// All partitions of every dimension vector with total in [1, bound].
inline std::vector<KostantPartition> partitions_up_to(const Lab& lab, int bound) {
  std::vector<KostantPartition> out;
  for (const auto& d : dims_up_to(lab.rt.quiver().vertex_count(), bound))
    for (const auto& p : lab.rs().partitions(d)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------- oracles

/// Knapsack over root dimension vectors, independent of the library's enumerator.
inline std::size_t count_partitions_oracle(const std::vector<DimVector>& roots, const DimVector& d, std::size_t from = 0) {
  if (d.is_zero()) return 1;
  std::size_t total = 0;
  for (std::size_t r = from; r < roots.size(); ++r) {
    DimVector rest = d - roots[r];
    if (rest.is_nonnegative()) total += count_partitions_oracle(roots, rest, r);
  }
  return total;
}

/// Roots by brute force over a small box.
inline std::vector<DimVector> roots_oracle(const Quiver& q, int box) {
  const int n = q.vertex_count();
  std::vector<DimVector> out;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      long long form = 0;
      for (int x : d) form += static_cast<long long>(x) * x;
      for (const auto& a : q.arrows()) form -= static_cast<long long>(d[a.tail - 1]) * d[a.head - 1];
      if (form == 1) out.emplace_back(d);
      return;
    }
    for (int k = 0; k <= box; ++k) {
      d[static_cast<std::size_t>(i)] = k;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// dim Hom(A, B) over F_p by enumerating every tuple of matrices.
inline int hom_dim_oracle(const Quiver& q, const Rep& a, const Rep& b) {
  const std::uint32_t p = a.p;
  std::vector<int> shape;  // per vertex: rows=b_i, cols=a_i
  int unknowns = 0;
  for (int i = 0; i < q.vertex_count(); ++i) unknowns += a.dims[i] * b.dims[i];
  std::vector<int> x(static_cast<std::size_t>(unknowns), 0);
  std::size_t solutions = 0;
  auto entry = [&](int vertex, int r, int c) {
    int off = 0;
    for (int i = 0; i < vertex; ++i) off += a.dims[i] * b.dims[i];
    return x[static_cast<std::size_t>(off + r * a.dims[vertex] + c)];
  };
  while (true) {
    bool ok = true;
    for (std::size_t k = 0; k < q.arrow_count() && ok; ++k) {
      const int t = q.arrows()[k].tail - 1, h = q.arrows()[k].head - 1;
      for (int r = 0; r < b.dims[h] && ok; ++r)
        for (int c = 0; c < a.dims[t] && ok; ++c) {
          long long lhs = 0, rhs = 0;
          for (int m = 0; m < a.dims[h]; ++m) lhs += static_cast<long long>(entry(h, r, m)) * a.maps[k](m, c);
          for (int m = 0; m < b.dims[t]; ++m) rhs += static_cast<long long>(b.maps[k](r, m)) * entry(t, m, c);
          ok = (lhs - rhs) % static_cast<long long>(p) == 0;
        }
    }
    if (ok) ++solutions;
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] == static_cast<int>(p)) x[pos++] = 0;
    if (pos == x.size()) break;
  }
  int dim = 0;
  while (solutions > 1) {
    solutions /= p;
    ++dim;
  }
  return dim;
}

/// Subspaces of F_p^n of dimension k, each as a sorted list of its vectors
/// (vectors encoded base p), found by spanning every k-tuple.
inline std::vector<std::vector<int>> subspaces_oracle(int n, int k, std::uint32_t p) {
  int size = 1;
  for (int i = 0; i < n; ++i) size *= static_cast<int>(p);
  auto decode = [&](int code) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i, code /= static_cast<int>(p)) v[static_cast<std::size_t>(i)] = code % static_cast<int>(p);
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (int i = n; i-- > 0;) code = code * static_cast<int>(p) + v[static_cast<std::size_t>(i)];
    return code;
  };
  std::set<std::vector<int>> found;
  std::vector<int> pick(static_cast<std::size_t>(k), 0);
  while (true) {
    std::set<int> span{0};
    for (int g : pick) {
      std::set<int> next;
      for (int s : span)
        for (std::uint32_t c = 0; c < p; ++c) {
          auto v = decode(s), w = decode(g);
          for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = (v[static_cast<std::size_t>(i)] + static_cast<int>(c) * w[static_cast<std::size_t>(i)]) % static_cast<int>(p);
          next.insert(encode(v));
        }
      span = std::move(next);
    }
    int expect = 1;
    for (int i = 0; i < k; ++i) expect *= static_cast<int>(p);
    if (static_cast<int>(span.size()) == expect) found.insert(std::vector<int>(span.begin(), span.end()));
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == size) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return {found.begin(), found.end()};
}

/// Number of subrepresentations U ⊆ X with dim U = l, found by brute force
/// over all tuples of subspaces; `accept` decides on the basis matrices.
inline std::size_t count_subreps_oracle(const Quiver& q, const Rep& x, const DimVector& l,
                                        const std::function<bool(const std::vector<modp::Matrix>&)>& accept) {
  const std::uint32_t p = x.p;
  const int n = q.vertex_count();
  std::vector<std::vector<std::vector<int>>> choices;
  for (int i = 0; i < n; ++i) choices.push_back(subspaces_oracle(x.dims[i], l[i], p));
  auto decode = [&](int code, int dim) {
    std::vector<int> v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i, code /= static_cast<int>(p)) v[static_cast<std::size_t>(i)] = code % static_cast<int>(p);
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int code = 0;
    for (std::size_t i = v.size(); i-- > 0;) code = code * static_cast<int>(p) + v[i];
    return code;
  };
  std::size_t count = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    if (choices[static_cast<std::size_t>(i)].empty()) return 0;
  while (true) {
    bool closed = true;
    for (std::size_t a = 0; a < q.arrow_count() && closed; ++a) {
      const int t = q.arrows()[a].tail - 1, h = q.arrows()[a].head - 1;
      const auto& src = choices[static_cast<std::size_t>(t)][pick[static_cast<std::size_t>(t)]];
      const auto& dst = choices[static_cast<std::size_t>(h)][pick[static_cast<std::size_t>(h)]];
      for (int code : src) {
        const auto v = decode(code, x.dims[t]);
        std::vector<int> w(static_cast<std::size_t>(x.dims[h]), 0);
        for (int r = 0; r < x.dims[h]; ++r) {
          long long s = 0;
          for (int c = 0; c < x.dims[t]; ++c) s += static_cast<long long>(x.maps[a](r, c)) * v[static_cast<std::size_t>(c)];
          w[static_cast<std::size_t>(r)] = static_cast<int>(s % static_cast<long long>(p));
        }
        if (!std::binary_search(dst.begin(), dst.end(), encode(w))) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      // Basis of each chosen subspace: greedily pick vectors that enlarge the span.
      std::vector<modp::Matrix> bases;
      for (int i = 0; i < n; ++i) {
        const auto& sub = choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
        modp::Matrix b(x.dims[i], l[i]);
        std::set<int> span{0};
        int col = 0;
        for (int code : sub) {
          if (col == l[i]) break;
          if (span.count(code)) continue;
          const auto v = decode(code, x.dims[i]);
          for (int r = 0; r < x.dims[i]; ++r) b(r, col) = v[static_cast<std::size_t>(r)];
          std::set<int> next;
          for (int s : span)
            for (std::uint32_t c = 0; c < p; ++c) {
              auto u = decode(s, x.dims[i]);
              for (int r = 0; r < x.dims[i]; ++r)
                u[static_cast<std::size_t>(r)] = (u[static_cast<std::size_t>(r)] + static_cast<int>(c) * v[static_cast<std::size_t>(r)]) % static_cast<int>(p);
              next.insert(encode(u));
            }
          span = std::move(next);
          ++col;
        }
        bases.push_back(std::move(b));
      }
      if (accept(bases)) ++count;
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return count;
}

/// Sub and quotient representations for a submodule given by basis matrices.
inline std::pair<Rep, Rep> sub_and_quotient(const Quiver& q, const Rep& x, const std::vector<modp::Matrix>& basis) {
  const modp::Field f(x.p);
  Rep sub, quot;
  sub.p = quot.p = x.p;
  sub.dims = q.zero();
  quot.dims = q.zero();
  std::vector<modp::Matrix> ann, lift;
  for (int i = 0; i < q.vertex_count(); ++i) {
    sub.dims[static_cast<std::size_t>(i)] = basis[static_cast<std::size_t>(i)].cols();
    quot.dims[static_cast<std::size_t>(i)] = x.dims[i] - basis[static_cast<std::size_t>(i)].cols();
    ann.push_back(modp::left_nullspace(f, basis[static_cast<std::size_t>(i)]));
    lift.push_back(ann.back().rows() ? modp::right_inverse(f, ann.back()) : modp::Matrix(x.dims[i], 0));
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const int t = q.arrows()[a].tail - 1, h = q.arrows()[a].head - 1;
    const auto img = modp::multiply(f, x.maps[a], basis[static_cast<std::size_t>(t)]);
    sub.maps.push_back(basis[static_cast<std::size_t>(h)].cols()
                           ? modp::multiply(f, modp::left_inverse(f, basis[static_cast<std::size_t>(h)]), img)
                           : modp::Matrix(0, basis[static_cast<std::size_t>(t)].cols()));
    quot.maps.push_back(modp::multiply(f, modp::multiply(f, ann[static_cast<std::size_t>(h)], x.maps[a]),
                                       lift[static_cast<std::size_t>(t)]));
  }
  return {sub, quot};
}

/// F^λ_{μν}(p) by brute-force subspace enumeration.
inline std::size_t hall_number_oracle(const RepTheory& rt, const KostantPartition& lambda, const KostantPartition& mu,
                                      const KostantPartition& nu, std::uint32_t p) {
  const auto& q = rt.quiver();
  const Rep x = rt.build(lambda, p);
  return count_subreps_oracle(q, x, rt.roots().dimvec(nu), [&](const std::vector<modp::Matrix>& basis) {
    const auto [sub, quot] = sub_and_quotient(q, x, basis);
    return rt.identify(sub) == nu && rt.identify(quot) == mu;
  });
}

}  // namespace fixtures
