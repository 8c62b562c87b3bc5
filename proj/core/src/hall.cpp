#include "hallbase/hall.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hallbase/errors.hpp"
#include "hallbase/serialize.hpp"

namespace hallbase {

using modp::Field;
using modp::Matrix;

namespace {

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> table = modp::first_primes(64);
  return table;
}

BigInt power(std::uint32_t p, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

BigInt gl_order(int n, std::uint32_t p) {
  BigInt r = 1;
  const BigInt pn = power(p, n);
  for (int i = 0; i < n; ++i) r *= pn - power(p, i);
  return r;
}

double gauss_estimate(int n, int k, double q) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 0; i < k; ++i) r *= (std::pow(q, n - i) - 1) / (std::pow(q, i + 1) - 1);
  return r;
}

bool between(const std::vector<int>& lo, const std::vector<int>& x, const std::vector<int>& hi) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

std::vector<int> add_scaled(std::vector<int> a, const std::vector<int>& b, int k) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

/// Tells candidates apart from a few Hom dimensions.
struct Identifier {
  std::vector<int> coords;
  std::map<std::vector<int>, KostantPartition> table;

  Identifier(const RepTheory& rt, const std::vector<KostantPartition>& candidates) {
    std::vector<std::vector<int>> hv;
    for (const auto& c : candidates) hv.push_back(rt.hom_vector(c));
    auto classes = [&](const std::vector<int>& cs) {
      std::set<std::vector<int>> seen;
      for (const auto& h : hv) {
        std::vector<int> key;
        for (int c : cs) key.push_back(h[static_cast<std::size_t>(c)]);
        seen.insert(std::move(key));
      }
      return seen.size();
    };
    std::size_t have = candidates.empty() ? 0 : 1;
    while (have < candidates.size()) {
      int best = -1;
      std::size_t best_count = have;
      for (std::size_t b = 0; b < rt.root_count(); ++b) {
        if (std::find(coords.begin(), coords.end(), static_cast<int>(b)) != coords.end()) continue;
        auto trial = coords;
        trial.push_back(static_cast<int>(b));
        const auto n = classes(trial);
        if (n > best_count) {
          best_count = n;
          best = static_cast<int>(b);
        }
      }
      verify(best >= 0, "candidate partitions share a hom vector");
      coords.push_back(best);
      have = best_count;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) table.emplace(restrict(hv[i]), candidates[i]);
  }

  std::vector<int> restrict(const std::vector<int>& full) const {
    std::vector<int> key;
    for (int c : coords) key.push_back(full[static_cast<std::size_t>(c)]);
    return key;
  }

  std::vector<int> measure(const RepTheory& rt, const Rep& x) const {
    std::vector<int> key;
    for (int c : coords) key.push_back(hom_dim(rt.quiver(), rt.indecomposable(c, x.p), x));
    return key;
  }

  const KostantPartition& find(const std::vector<int>& key) const {
    const auto it = table.find(key);
    if (it == table.end()) throw VerificationError("module does not match any candidate isoclass");
    return it->second;
  }
};

int euler_simple(const Quiver& q, int j, const DimVector& d) { return euler_form(q, q.unit(j), d); }

}  // namespace

BigInt automorphism_count(const RepTheory& rt, const KostantPartition& lambda, std::uint32_t p) {
  int squares = 0;
  BigInt r = 1;
  for (std::size_t b = 0; b < lambda.root_count(); ++b) {
    squares += lambda[b] * lambda[b];
    r *= gl_order(lambda[b], p);
  }
  return r * power(p, rt.dim_end(lambda) - squares);
}

HallEngine::HallEngine(const RepTheory& rt, HallOptions options) : rt_(rt), opt_(options) {
  if (opt_.held_out_primes < 1) throw InputError("at least one held-out prime is required");
}

HallStats HallEngine::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

void HallEngine::check_layer_args(const KostantPartition& lambda, int j, int e) const {
  if (j < 1 || j > rt_.quiver().vertex_count()) throw InputError("vertex " + std::to_string(j) + " out of range");
  if (e < 0) throw InputError("layer multiplicity must be non-negative");
  if (lambda.root_count() != rt_.root_count()) throw InputError("partition does not belong to this quiver");
}

// ------------------------------------------------------------------ candidates

const std::vector<KostantPartition>& HallEngine::row_candidates(const KostantPartition& lambda, int j,
                                                                int e) const {
  const RowKey key{lambda, j, e};
  {
    std::lock_guard lock(mutex_);
    const auto it = row_candidates_.find(key);
    if (it != row_candidates_.end()) return it->second;
  }
  std::vector<KostantPartition> out;
  const auto& rs = rt_.roots();
  DimVector d = rs.dimvec(lambda);
  if (d.at_vertex(j) >= e) {
    d[static_cast<std::size_t>(j - 1)] -= e;
    const auto hl = rt_.hom_vector(lambda);
    const auto hs = rt_.hom_vector(rs.semisimple_at(j, 1));
    for (const auto& nu : rs.partitions(d)) {
      const auto hn = rt_.hom_vector(nu);
      if (between(hn, hl, add_scaled(hn, hs, e))) out.push_back(nu);
    }
  }
  std::lock_guard lock(mutex_);
  return row_candidates_.emplace(key, std::move(out)).first->second;
}

const std::vector<KostantPartition>& HallEngine::column_candidates(int j, int e, const KostantPartition& nu) const {
  const ColKey key{j, e, nu};
  {
    std::lock_guard lock(mutex_);
    const auto it = column_candidates_.find(key);
    if (it != column_candidates_.end()) return it->second;
  }
  std::vector<KostantPartition> out;
  const auto& rs = rt_.roots();
  const DimVector d = rs.dimvec(nu) + e * rt_.quiver().unit(j);
  const auto hn = rt_.hom_vector(nu);
  const auto hi = add_scaled(hn, rt_.hom_vector(rs.semisimple_at(j, 1)), e);
  for (const auto& lambda : rs.partitions(d))
    if (between(hn, rt_.hom_vector(lambda), hi)) out.push_back(lambda);
  std::lock_guard lock(mutex_);
  return column_candidates_.emplace(key, std::move(out)).first->second;
}

std::vector<KostantPartition> HallEngine::extension_candidates(const KostantPartition& mu,
                                                               const KostantPartition& nu) const {
  const auto& rs = rt_.roots();
  const auto hn = rt_.hom_vector(nu);
  const auto hi = add_scaled(hn, rt_.hom_vector(mu), 1);
  std::vector<KostantPartition> out;
  for (const auto& lambda : rs.partitions(rs.dimvec(mu) + rs.dimvec(nu)))
    if (between(hn, rt_.hom_vector(lambda), hi)) out.push_back(lambda);
  return out;
}

// ------------------------------------------------------------------ degree bounds

int HallEngine::layer_degree_bound(const KostantPartition& lambda, int j, int e, const KostantPartition& nu) const {
  const int m = rt_.top_multiplicity(lambda, j);
  const int box = e > m ? -1 : e * (m - e);
  const int riedtmann = rt_.dim_end(lambda) - rt_.dim_end(nu) - e * e -
                        e * euler_simple(rt_.quiver(), j, rt_.roots().dimvec(nu));
  return std::min(box, riedtmann);
}

int HallEngine::general_degree_bound(const KostantPartition& lambda, const KostantPartition& mu,
                                     const KostantPartition& nu) const {
  const auto& rs = rt_.roots();
  const DimVector d = rs.dimvec(lambda), l = rs.dimvec(nu);
  int box = 0;
  for (std::size_t i = 0; i < d.size(); ++i) box += l[i] * (d[i] - l[i]);
  const int riedtmann = rt_.dim_end(lambda) - rt_.dim_end(mu) - rt_.dim_end(nu) -
                        euler_form(rt_.quiver(), rs.dimvec(mu), l);
  return std::min(box, riedtmann);
}

// ------------------------------------------------------------------ per-prime counts

CountMap HallEngine::count_layer(const KostantPartition& lambda, int j, int e, std::uint32_t p) const {
  check_layer_args(lambda, j, e);
  const auto& q = rt_.quiver();
  const auto& candidates = row_candidates(lambda, j, e);
  if (candidates.empty()) return {};
  const Field& f = rt_.field(p);
  const Rep x = rt_.build(lambda, p);
  const Matrix proj = modp::left_nullspace(f, incoming_image(q, x, j));
  const int m = proj.rows();
  if (e > m) return {};

  // For each β with S_j in its top: independent images P f_j of Hom(M(β), X).
  struct Generators {
    std::size_t root;
    std::vector<Matrix> images;
  };
  std::vector<Generators> gens;
  const int sj = rt_.roots().simple(j);
  for (std::size_t b = 0; b < rt_.root_count(); ++b) {
    if (rt_.hom(static_cast<int>(b), sj) == 0) continue;
    const Rep& mb = rt_.indecomposable(static_cast<int>(b), p);
    Generators g{b, {}};
    Matrix span(0, 0);
    for (const auto& phi : hom_basis(q, mb, x)) {
      Matrix img = modp::multiply(f, proj, phi[static_cast<std::size_t>(j - 1)]);
      if (img.is_zero()) continue;
      Matrix trial(span.rows() + 1, img.rows() * img.cols());
      for (int r = 0; r < span.rows(); ++r)
        for (int c = 0; c < span.cols(); ++c) trial(r, c) = span(r, c);
      for (int c = 0; c < trial.cols(); ++c) trial(span.rows(), c) = img.data()[static_cast<std::size_t>(c)];
      if (modp::rank(f, trial) == trial.rows()) {
        span = std::move(trial);
        g.images.push_back(std::move(img));
      }
    }
    if (!g.images.empty()) gens.push_back(std::move(g));
  }

  std::map<std::vector<int>, KostantPartition> table;
  for (const auto& nu : candidates) table.emplace(rt_.hom_vector(nu), nu);
  const auto base = rt_.hom_vector(lambda);

  std::map<KostantPartition, std::uint64_t> tally;
  modp::for_each_rref(f, e, m, [&](const Matrix& a) {
    auto hv = base;
    for (const auto& g : gens) {
      const int cols = g.images.front().cols();
      Matrix stacked(static_cast<int>(g.images.size()), e * cols);
      for (std::size_t k = 0; k < g.images.size(); ++k) {
        const Matrix prod = modp::multiply(f, a, g.images[k]);
        for (int c = 0; c < e * cols; ++c) stacked(static_cast<int>(k), c) = prod.data()[static_cast<std::size_t>(c)];
      }
      hv[g.root] -= modp::rank(f, stacked);
    }
    const auto it = table.find(hv);
    if (it == table.end()) throw VerificationError("layer submodule does not match any candidate isoclass");
    ++tally[it->second];
  });
  CountMap out;
  for (const auto& [nu, c] : tally) out.emplace(nu, BigInt(c));
  return out;
}

CountMap HallEngine::count_layer_reference(const KostantPartition& lambda, int j, int e, std::uint32_t p) const {
  check_layer_args(lambda, j, e);
  const Rep x = rt_.build(lambda, p);
  if (e > x.dims.at_vertex(j)) return {};
  CountMap out;
  for (const auto& u : submodules_with_layer(rt_.quiver(), x, j, e)) out[rt_.identify(u)] += 1;
  return out;
}

CountMap HallEngine::count_column(int j, int e, const KostantPartition& nu, std::uint32_t p) const {
  check_layer_args(nu, j, e);
  const auto& q = rt_.quiver();
  const auto& rs = rt_.roots();
  const auto& candidates = column_candidates(j, e, nu);
  if (candidates.empty()) return {};
  const Field& f = rt_.field(p);
  const Rep n = rt_.build(nu, p);
  const int dj = n.dims.at_vertex(j);

  // Ext¹(S_j, N) = (⊕_{ρ: j→h} N_h) / {(N_ρ φ)_ρ : φ ∈ N_j}
  std::vector<int> offset(q.arrow_count(), -1);
  int total = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (q.arrows()[a].tail == j) {
      offset[a] = total;
      total += n.dims.at_vertex(q.arrows()[a].head);
    }
  Matrix image(dj, total);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (offset[a] < 0) continue;
    const auto& na = n.maps[a];
    for (int x = 0; x < na.rows(); ++x)
      for (int r = 0; r < dj; ++r) image(r, offset[a] + x) = na(x, r);
  }
  const auto pivots = modp::rref(f, image);
  std::vector<int> free_index(static_cast<std::size_t>(total), 0);
  for (int c : pivots) free_index[static_cast<std::size_t>(c)] = -1;
  int k = 0;
  for (auto& fi : free_index)
    if (fi == 0) fi = k++;
    else fi = -1;

  const Identifier id(rt_, candidates);
  const int sj = rs.simple(j);
  std::vector<int> hs;
  for (int c : id.coords) hs.push_back(rt_.hom(c, sj));

  std::map<KostantPartition, BigInt> ext_count;
  for (int r = 0; r <= std::min(e, k); ++r) {
    BigInt weight = 1;
    for (int i = 0; i < r; ++i) weight *= power(p, e) - power(p, i);
    modp::for_each_rref(f, r, k, [&](const Matrix& w) {
      Rep ext;
      ext.p = p;
      ext.dims = n.dims;
      ext.dims[static_cast<std::size_t>(j - 1)] += r;
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& arrow = q.arrows()[a];
        const auto& na = n.maps[a];
        if (arrow.tail == j) {
          Matrix m(na.rows(), dj + r);
          for (int x = 0; x < na.rows(); ++x) {
            for (int y = 0; y < dj; ++y) m(x, y) = na(x, y);
            const int fi = free_index[static_cast<std::size_t>(offset[a] + x)];
            if (fi >= 0)
              for (int c = 0; c < r; ++c) m(x, dj + c) = w(c, fi);
          }
          ext.maps.push_back(std::move(m));
        } else if (arrow.head == j) {
          Matrix m(dj + r, na.cols());
          for (int x = 0; x < na.rows(); ++x)
            for (int y = 0; y < na.cols(); ++y) m(x, y) = na(x, y);
          ext.maps.push_back(std::move(m));
        } else {
          ext.maps.push_back(na);
        }
      }
      auto key = id.measure(rt_, ext);
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += (e - r) * hs[i];
      ext_count[id.find(key)] += weight;
    });
  }

  const BigInt den = automorphism_count(rt_, rs.semisimple_at(j, e), p) * automorphism_count(rt_, nu, p) *
                     power(p, e * rt_.hom_vector(nu)[static_cast<std::size_t>(sj)]);
  CountMap out;
  for (const auto& [lambda, c] : ext_count) {
    const BigInt num = c * automorphism_count(rt_, lambda, p);
    verify(num % den == 0, "Riedtmann quotient is not an integer");
    out.emplace(lambda, num / den);
  }
  return out;
}

CountMap HallEngine::count_extensions(const KostantPartition& mu, const KostantPartition& nu, std::uint32_t p) const {
  const auto& q = rt_.quiver();
  const auto candidates = extension_candidates(mu, nu);
  if (candidates.empty()) return {};
  const Field& f = rt_.field(p);
  const Rep m = rt_.build(mu, p);
  const Rep n = rt_.build(nu, p);
  const int nv = q.vertex_count();

  std::vector<int> off0(static_cast<std::size_t>(nv) + 1, 0);
  for (int i = 0; i < nv; ++i) off0[i + 1] = off0[i] + n.dims[i] * m.dims[i];
  std::vector<int> off1(q.arrow_count() + 1, 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    off1[a + 1] = off1[a] + n.dims.at_vertex(arrow.head) * m.dims.at_vertex(arrow.tail);
  }
  // Coboundary δ(φ)_ρ = N_ρ φ_t − φ_h M_ρ, one row per basis element of C⁰.
  Matrix delta(off0[nv], off1[q.arrow_count()]);
  for (int i = 0; i < nv; ++i)
    for (int x = 0; x < n.dims[i]; ++x)
      for (int y = 0; y < m.dims[i]; ++y) {
        const int row = off0[i] + x * m.dims[i] + y;
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
          const auto& arrow = q.arrows()[a];
          const int mt = m.dims.at_vertex(arrow.tail);
          if (arrow.tail == i + 1) {
            const auto& na = n.maps[a];
            for (int xp = 0; xp < na.rows(); ++xp)
              delta(row, off1[a] + xp * mt + y) = f.add(delta(row, off1[a] + xp * mt + y), na(xp, x));
          }
          if (arrow.head == i + 1) {
            const auto& ma = m.maps[a];
            for (int yp = 0; yp < mt; ++yp)
              delta(row, off1[a] + x * mt + yp) = f.sub(delta(row, off1[a] + x * mt + yp), ma(y, yp));
          }
        }
      }
  const auto pivots = modp::rref(f, delta);
  std::vector<char> is_pivot(static_cast<std::size_t>(delta.cols()), 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<int> free_coords;
  for (int c = 0; c < delta.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_coords.push_back(c);
  const int k = static_cast<int>(free_coords.size());
  if (std::pow(static_cast<double>(p), k) > 2e7)
    throw ResourceError("extension space too large: " + std::to_string(p) + "^" + std::to_string(k));

  const Identifier id(rt_, candidates);
  std::vector<int> xi(static_cast<std::size_t>(delta.cols()), 0);
  std::map<KostantPartition, BigInt> ext_count;
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i) xi[static_cast<std::size_t>(free_coords[i])] = digits[static_cast<std::size_t>(i)];
    Rep ext;
    ext.p = p;
    ext.dims = n.dims + m.dims;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrows()[a];
      const int nh = n.dims.at_vertex(arrow.head), nt = n.dims.at_vertex(arrow.tail);
      const int mh = m.dims.at_vertex(arrow.head), mt = m.dims.at_vertex(arrow.tail);
      Matrix e(nh + mh, nt + mt);
      for (int r = 0; r < nh; ++r)
        for (int c = 0; c < nt; ++c) e(r, c) = n.maps[a](r, c);
      for (int r = 0; r < mh; ++r)
        for (int c = 0; c < mt; ++c) e(nh + r, nt + c) = m.maps[a](r, c);
      for (int r = 0; r < nh; ++r)
        for (int c = 0; c < mt; ++c) e(r, nt + c) = xi[static_cast<std::size_t>(off1[a] + r * mt + c)];
      ext.maps.push_back(std::move(e));
    }
    ext_count[id.find(id.measure(rt_, ext))] += 1;
    int pos = 0;
    while (pos < k && ++digits[static_cast<std::size_t>(pos)] == static_cast<int>(p)) digits[static_cast<std::size_t>(pos++)] = 0;
    if (pos == k) break;
  }

  const BigInt den = automorphism_count(rt_, mu, p) * automorphism_count(rt_, nu, p) *
                     power(p, rt_.hom_between(mu, nu));
  CountMap out;
  for (const auto& [lambda, c] : ext_count) {
    const BigInt num = c * automorphism_count(rt_, lambda, p);
    verify(num % den == 0, "Riedtmann quotient is not an integer");
    out.emplace(lambda, num / den);
  }
  return out;
}

BigInt HallEngine::count_submodules(const KostantPartition& lambda, const KostantPartition& mu,
                                    const KostantPartition& nu, std::uint32_t p) const {
  const auto& q = rt_.quiver();
  const auto& rs = rt_.roots();
  const DimVector dl = rs.dimvec(lambda), dn = rs.dimvec(nu);
  if (rs.dimvec(mu) + dn != dl) return 0;
  const Field& f = rt_.field(p);
  const Rep x = rt_.build(lambda, p);
  const auto order = vertex_order_dfb(q);
  const int nv = q.vertex_count();
  std::vector<Matrix> basis(static_cast<std::size_t>(nv));
  BigInt count = 0;

  std::function<void(int)> visit = [&](int pos) {
    if (pos == nv) {
      Rep sub, quot;
      sub.p = quot.p = p;
      sub.dims = dn;
      quot.dims = dl - dn;
      std::vector<Matrix> annihilator(static_cast<std::size_t>(nv)), lift(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i) {
        annihilator[i] = modp::left_nullspace(f, basis[i]);
        lift[i] = annihilator[i].rows() ? modp::right_inverse(f, annihilator[i]) : Matrix(x.dims[i], 0);
      }
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const int t = q.arrows()[a].tail - 1, h = q.arrows()[a].head - 1;
        const Matrix image = modp::multiply(f, x.maps[a], basis[t]);
        sub.maps.push_back(basis[h].cols() ? modp::multiply(f, modp::left_inverse(f, basis[h]), image)
                                           : Matrix(0, basis[t].cols()));
        quot.maps.push_back(modp::multiply(f, modp::multiply(f, annihilator[h], x.maps[a]), lift[t]));
      }
      if (rt_.identify(sub) == nu && rt_.identify(quot) == mu) ++count;
      return;
    }
    const int i = order[static_cast<std::size_t>(pos)] - 1;
    const int di = x.dims[i];
    // Images of arrows into i from already chosen subspaces.
    std::vector<Matrix> parts;
    int cols = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrows()[a].head == i + 1) {
        parts.push_back(modp::multiply(f, x.maps[a], basis[q.arrows()[a].tail - 1]));
        cols += parts.back().cols();
      }
    Matrix gens(cols, di);
    int row = 0;
    for (const auto& part : parts)
      for (int c = 0; c < part.cols(); ++c, ++row)
        for (int r = 0; r < di; ++r) gens(row, r) = part(r, c);
    const auto piv = modp::rref(f, gens);
    const int r = static_cast<int>(piv.size());
    if (r > dn[i]) return;
    std::vector<char> is_pivot(static_cast<std::size_t>(di), 0);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<int> complement;
    for (int c = 0; c < di; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) complement.push_back(c);
    modp::for_each_rref(f, dn[i] - r, di - r, [&](const Matrix& s) {
      Matrix b(di, dn[i]);
      for (int k = 0; k < r; ++k)
        for (int c = 0; c < di; ++c) b(c, k) = gens(k, c);
      for (int k = 0; k < s.rows(); ++k)
        for (int c = 0; c < s.cols(); ++c) b(complement[static_cast<std::size_t>(c)], r + k) = s(k, c);
      basis[i] = std::move(b);
      visit(pos + 1);
    });
  };
  visit(0);
  return count;
}

// ------------------------------------------------------------------ cached tallies

const CountMap& HallEngine::census_tally(const KostantPartition& lambda, int j, int e, std::size_t idx) const {
  const auto key = std::make_pair(RowKey{lambda, j, e}, idx);
  {
    std::lock_guard lock(mutex_);
    const auto it = census_tallies_.find(key);
    if (it != census_tallies_.end()) return it->second;
  }
  CountMap value = count_layer(lambda, j, e, prime_table()[idx]);
  std::lock_guard lock(mutex_);
  ++stats_.census_tallies;
  return census_tallies_.emplace(key, std::move(value)).first->second;
}

const CountMap& HallEngine::column_tally(int j, int e, const KostantPartition& nu, std::size_t idx) const {
  const auto key = std::make_pair(ColKey{j, e, nu}, idx);
  {
    std::lock_guard lock(mutex_);
    const auto it = column_tallies_.find(key);
    if (it != column_tallies_.end()) return it->second;
  }
  CountMap value = count_column(j, e, nu, prime_table()[idx]);
  std::lock_guard lock(mutex_);
  ++stats_.extension_tallies;
  return column_tallies_.emplace(key, std::move(value)).first->second;
}

const CountMap& HallEngine::extension_tally(const KostantPartition& mu, const KostantPartition& nu,
                                            std::size_t idx) const {
  const auto key = std::make_pair(PairKey{mu, nu}, idx);
  {
    std::lock_guard lock(mutex_);
    const auto it = extension_tallies_.find(key);
    if (it != extension_tallies_.end()) return it->second;
  }
  CountMap value = count_extensions(mu, nu, prime_table()[idx]);
  std::lock_guard lock(mutex_);
  ++stats_.extension_tallies;
  return extension_tallies_.emplace(key, std::move(value)).first->second;
}

IntPoly HallEngine::fit(int degree_bound, const std::function<BigInt(std::size_t)>& value) const {
  const std::size_t points = static_cast<std::size_t>(std::max(degree_bound, -1) + 1);
  const std::size_t needed = points + static_cast<std::size_t>(opt_.held_out_primes);
  if (needed > prime_table().size()) throw ResourceError("degree bound exceeds the prime table");
  std::vector<BigInt> xs, ys;
  for (std::size_t i = 0; i < points; ++i) {
    xs.emplace_back(prime_table()[i]);
    ys.push_back(value(i));
  }
  const IntPoly poly = interpolate(xs, ys);
  for (std::size_t i = points; i < needed; ++i) {
    const BigInt direct = value(i);
    if (poly.eval(prime_table()[i]) != direct)
      throw VerificationError("interpolant " + poly.str() + " disagrees with the direct count " + direct.str() +
                              " at held-out prime " + std::to_string(prime_table()[i]));
  }
  std::lock_guard lock(mutex_);
  ++stats_.interpolations;
  stats_.held_out_checks += needed - points;
  return poly;
}

// ------------------------------------------------------------------ polynomials

IntPoly HallEngine::column_entry(int j, int e, const KostantPartition& nu, const KostantPartition& lambda) const {
  const auto key = std::make_tuple(j, e, nu, lambda);
  {
    std::lock_guard lock(mutex_);
    const auto it = column_entries_.find(key);
    if (it != column_entries_.end()) return it->second;
  }
  const IntPoly poly = fit(layer_degree_bound(lambda, j, e, nu), [&](std::size_t i) {
    const auto& t = column_tally(j, e, nu, i);
    const auto it = t.find(lambda);
    return it == t.end() ? BigInt(0) : it->second;
  });
  std::lock_guard lock(mutex_);
  return column_entries_.emplace(key, poly).first->second;
}

PolyMap HallEngine::layer_column(int j, int e, const KostantPartition& nu) const {
  check_layer_args(nu, j, e);
  const ColKey key{j, e, nu};
  {
    std::lock_guard lock(mutex_);
    const auto it = columns_.find(key);
    if (it != columns_.end()) return it->second;
  }
  PolyMap out;
  for (const auto& lambda : column_candidates(j, e, nu)) {
    IntPoly poly = column_entry(j, e, nu, lambda);
    if (!poly.is_zero()) out.emplace(lambda, std::move(poly));
  }
  std::lock_guard lock(mutex_);
  return columns_.emplace(key, std::move(out)).first->second;
}

Route HallEngine::route_for_row(const KostantPartition& lambda, int j, int e) const {
  if (opt_.route != Route::Auto) return opt_.route;
  const auto& candidates = row_candidates(lambda, j, e);
  if (candidates.empty()) return Route::Census;
  const int m = rt_.top_multiplicity(lambda, j);
  const int sj = rt_.roots().simple(j);
  int tops = 1;
  for (std::size_t b = 0; b < rt_.root_count(); ++b)
    if (rt_.hom(static_cast<int>(b), sj) > 0) ++tops;
  double census = 0, extension = 0;
  int dmax = -1;
  for (const auto& nu : candidates) {
    const int d = layer_degree_bound(lambda, j, e, nu);
    dmax = std::max(dmax, d);
    int k = 0;
    for (std::size_t g = 0; g < rt_.root_count(); ++g) k += nu[g] * rt_.ext(sj, static_cast<int>(g));
    const std::size_t np = static_cast<std::size_t>(std::max(d, -1) + 1 + opt_.held_out_primes);
    for (std::size_t i = 0; i < np && i < prime_table().size(); ++i)
      for (int r = 0; r <= std::min(e, k); ++r) extension += 8.0 * gauss_estimate(k, r, prime_table()[i]);
  }
  const std::size_t np = static_cast<std::size_t>(dmax + 1 + opt_.held_out_primes);
  for (std::size_t i = 0; i < np && i < prime_table().size(); ++i)
    census += tops * gauss_estimate(m, e, prime_table()[i]);
  return census <= extension ? Route::Census : Route::Extension;
}

PolyMap HallEngine::layer_poly(const KostantPartition& lambda, int j, int e) const {
  check_layer_args(lambda, j, e);
  const RowKey key{lambda, j, e};
  {
    std::lock_guard lock(mutex_);
    const auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
  }
  PolyMap out;
  const Route route = route_for_row(lambda, j, e);
  for (const auto& nu : row_candidates(lambda, j, e)) {
    IntPoly poly;
    if (route == Route::Extension) {
      poly = column_entry(j, e, nu, lambda);
    } else {
      poly = fit(layer_degree_bound(lambda, j, e, nu), [&](std::size_t i) {
        const auto& t = census_tally(lambda, j, e, i);
        const auto it = t.find(nu);
        return it == t.end() ? BigInt(0) : it->second;
      });
    }
    if (!poly.is_zero()) out.emplace(nu, std::move(poly));
  }
  std::lock_guard lock(mutex_);
  return rows_.emplace(key, std::move(out)).first->second;
}

PolyMap HallEngine::gamma_word(const Word& w) const {
  const auto tf = tight_form(w);
  PolyMap cur{{rt_.roots().zero(), IntPoly::constant(1)}};
  for (auto run = tf.rbegin(); run != tf.rend(); ++run) {
    PolyMap next;
    for (const auto& [nu, g] : cur)
      for (const auto& [lambda, f] : layer_column(run->vertex, run->exponent, nu)) next[lambda] += f * g;
    cur.clear();
    for (auto& [lambda, poly] : next)
      if (!poly.is_zero()) cur.emplace(lambda, std::move(poly));
  }
  return cur;
}

IntPoly HallEngine::gamma_at(const Word& w, const KostantPartition& lambda) const {
  const auto tf = tight_form(w);
  const int n = rt_.quiver().vertex_count();
  std::vector<DimVector> suffix(tf.size() + 1, rt_.quiver().zero());
  for (std::size_t r = tf.size(); r-- > 0;)
    suffix[r] = suffix[r + 1] + tf[r].exponent * DimVector::unit(static_cast<std::size_t>(n), tf[r].vertex);
  std::map<std::pair<std::size_t, KostantPartition>, IntPoly> memo;
  std::function<IntPoly(std::size_t, const KostantPartition&)> rec = [&](std::size_t r, const KostantPartition& x) {
    if (rt_.roots().dimvec(x) != suffix[r]) return IntPoly();
    if (r == tf.size()) return IntPoly::constant(1);
    const auto key = std::make_pair(r, x);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    IntPoly total;
    for (const auto& [nu, f] : layer_poly(x, tf[r].vertex, tf[r].exponent)) total += f * rec(r + 1, nu);
    memo.emplace(key, total);
    return total;
  };
  return rec(0, lambda);
}

PolyMap HallEngine::phi_word(const Word& w) const {
  IntPoly scale = IntPoly::constant(1);
  for (const auto& run : tight_form(w)) scale = scale * quantum_factorial(run.exponent);
  PolyMap out = gamma_word(w);
  for (auto& [lambda, poly] : out) poly = poly * scale;
  return out;
}

PolyMap HallEngine::phi_letters(const Word& w) const {
  PolyMap cur{{rt_.roots().zero(), IntPoly::constant(1)}};
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    PolyMap next;
    for (const auto& [nu, g] : cur)
      for (const auto& [lambda, f] : layer_column(*it, 1, nu)) next[lambda] += f * g;
    cur.clear();
    for (auto& [lambda, poly] : next)
      if (!poly.is_zero()) cur.emplace(lambda, std::move(poly));
  }
  return cur;
}

PolyMap HallEngine::general_hall_all(const KostantPartition& mu, const KostantPartition& nu) const {
  const auto& rs = rt_.roots();
  if (rs.length(mu) + rs.length(nu) > opt_.max_general_length)
    throw ResourceError("general Hall polynomial beyond the configured length bound " +
                        std::to_string(opt_.max_general_length));
  const PairKey key{mu, nu};
  {
    std::lock_guard lock(mutex_);
    const auto it = general_.find(key);
    if (it != general_.end()) return it->second;
  }
  const auto candidates = extension_candidates(mu, nu);
  Route route = opt_.route;
  if (route == Route::Auto) {
    const int k = rt_.ext_between(mu, nu);
    const DimVector d = rs.dimvec(mu) + rs.dimvec(nu), l = rs.dimvec(nu);
    double ext = 0, census = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      const double p = prime_table()[i];
      ext += 8.0 * std::pow(p, k);
      double sub = static_cast<double>(candidates.size());
      for (std::size_t v = 0; v < d.size(); ++v) sub *= gauss_estimate(d[v], l[v], p);
      census += 4.0 * sub;
    }
    route = census < ext ? Route::Census : Route::Extension;
  }
  PolyMap out;
  for (const auto& lambda : candidates) {
    IntPoly poly = fit(general_degree_bound(lambda, mu, nu), [&](std::size_t i) {
      if (route == Route::Census) return count_submodules(lambda, mu, nu, prime_table()[i]);
      const auto& t = extension_tally(mu, nu, i);
      const auto it = t.find(lambda);
      return it == t.end() ? BigInt(0) : it->second;
    });
    if (!poly.is_zero()) out.emplace(lambda, std::move(poly));
  }
  std::lock_guard lock(mutex_);
  return general_.emplace(key, std::move(out)).first->second;
}

IntPoly HallEngine::general_hall(const KostantPartition& lambda, const KostantPartition& mu,
                                 const KostantPartition& nu) const {
  const auto& rs = rt_.roots();
  if (rs.dimvec(lambda) != rs.dimvec(mu) + rs.dimvec(nu)) return {};
  const auto all = general_hall_all(mu, nu);
  const auto it = all.find(lambda);
  return it == all.end() ? IntPoly() : it->second;
}

std::vector<KostantPartition> HallEngine::extension_support(const KostantPartition& mu,
                                                            const KostantPartition& nu) const {
  const auto candidates = extension_candidates(mu, nu);
  std::vector<int> bound, zeros(candidates.size(), 0);
  std::vector<char> state(candidates.size(), 0);  // 0 undecided, 1 non-zero, 2 zero
  for (const auto& lambda : candidates) bound.push_back(std::max(general_degree_bound(lambda, mu, nu), 0));
  for (std::size_t idx = 0;; ++idx) {
    bool open = false;
    for (std::size_t c = 0; c < candidates.size(); ++c) open = open || state[c] == 0;
    if (!open) break;
    if (idx >= prime_table().size()) throw ResourceError("extension_support: prime table exhausted");
    const auto& t = extension_tally(mu, nu, idx);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto it = t.find(candidates[c]);
      const bool nonzero = it != t.end() && it->second != 0;
      if (nonzero && general_degree_bound(candidates[c], mu, nu) < 0)
        throw VerificationError("non-zero Hall number where the degree bound forbids one");
      if (state[c] != 0) continue;
      if (nonzero)
        state[c] = 1;
      else if (++zeros[c] > bound[c])
        state[c] = 2;
    }
  }
  std::vector<KostantPartition> out;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (state[c] == 1) out.push_back(candidates[c]);
  return out;
}

// ------------------------------------------------------------------ persistence

nlohmann::json HallEngine::export_cache() const {
  std::lock_guard lock(mutex_);
  nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array();
  for (const auto& [key, map] : rows_) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [nu, poly] : map)
      entries.push_back({{"nu", nu.multiplicities()}, {"coeffs", intpoly_to_json(poly)["coeffs"]}});
    rows.push_back({{"lambda", std::get<0>(key).multiplicities()},
                    {"j", std::get<1>(key)},
                    {"e", std::get<2>(key)},
                    {"entries", entries}});
  }
  for (const auto& [key, map] : columns_) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [lambda, poly] : map)
      entries.push_back({{"lambda", lambda.multiplicities()}, {"coeffs", intpoly_to_json(poly)["coeffs"]}});
    cols.push_back({{"j", std::get<0>(key)},
                    {"e", std::get<1>(key)},
                    {"nu", std::get<2>(key).multiplicities()},
                    {"entries", entries}});
  }
  return {{"rows", rows}, {"columns", cols}};
}

void HallEngine::import_cache(const nlohmann::json& data) {
  auto partition = [&](const nlohmann::json& v) {
    auto mult = v.get<std::vector<int>>();
    if (mult.size() != rt_.root_count() || std::any_of(mult.begin(), mult.end(), [](int x) { return x < 0; }))
      throw InputError("cache entry has a malformed partition");
    return KostantPartition(std::move(mult));
  };
  auto poly = [](const nlohmann::json& v) { return intpoly_from_json({{"coeffs", v}}); };
  try {
    std::map<RowKey, PolyMap> rows;
    std::map<ColKey, PolyMap> cols;
    for (const auto& r : data.at("rows")) {
      PolyMap m;
      for (const auto& e : r.at("entries")) m.emplace(partition(e.at("nu")), poly(e.at("coeffs")));
      rows.emplace(RowKey{partition(r.at("lambda")), r.at("j").get<int>(), r.at("e").get<int>()}, std::move(m));
    }
    for (const auto& c : data.at("columns")) {
      PolyMap m;
      for (const auto& e : c.at("entries")) m.emplace(partition(e.at("lambda")), poly(e.at("coeffs")));
      cols.emplace(ColKey{c.at("j").get<int>(), c.at("e").get<int>(), partition(c.at("nu"))}, std::move(m));
    }
    std::lock_guard lock(mutex_);
    for (auto& [k, v] : rows) {
      const auto [it, inserted] = rows_.emplace(k, v);
      verify(inserted || it->second == v, "cached layer row disagrees with an existing entry");
    }
    for (auto& [k, v] : cols) {
      const auto [it, inserted] = columns_.emplace(k, v);
      verify(inserted || it->second == v, "cached layer column disagrees with an existing entry");
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed cache data: ") + ex.what());
  }
}

}  // namespace hallbase
