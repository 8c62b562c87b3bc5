#include "hallbase/rep.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "hallbase/errors.hpp"

namespace hallbase {

using modp::Field;
using modp::Matrix;

// ---------------------------------------------------------------- basic reps

Rep zero_rep(const Quiver& q, std::uint32_t p) {
  Rep r;
  r.p = p;
  r.dims = q.zero();
  r.maps.assign(q.arrow_count(), Matrix(0, 0));
  return r;
}

Rep simple_rep(const Quiver& q, int vertex, std::uint32_t p) {
  if (vertex < 1 || vertex > q.vertex_count()) throw InputError("vertex out of range");
  Rep r;
  r.p = p;
  r.dims = q.unit(vertex);
  for (const auto& a : q.arrows()) r.maps.emplace_back(r.dims.at_vertex(a.head), r.dims.at_vertex(a.tail));
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (a.p != b.p) throw InputError("direct sum of representations over different fields");
  verify(a.maps.size() == b.maps.size(), "direct sum: arrow count mismatch");
  Rep r;
  r.p = a.p;
  r.dims = a.dims + b.dims;
  for (std::size_t k = 0; k < a.maps.size(); ++k) {
    const auto& x = a.maps[k];
    const auto& y = b.maps[k];
    Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (int i = 0; i < y.rows(); ++i)
      for (int j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    r.maps.push_back(std::move(m));
  }
  return r;
}

void check_rep(const Quiver& q, const Rep& r) {
  verify(r.dims.size() == static_cast<std::size_t>(q.vertex_count()), "rep: dimension vector length");
  verify(r.maps.size() == q.arrow_count(), "rep: one matrix per arrow");
  for (std::size_t k = 0; k < r.maps.size(); ++k) {
    const auto& a = q.arrows()[k];
    const auto& m = r.maps[k];
    verify(m.rows() == r.dims.at_vertex(a.head) && m.cols() == r.dims.at_vertex(a.tail),
           "rep: matrix shape does not match dimension vector");
    for (int x : m.data()) verify(x >= 0 && x < static_cast<int>(r.p), "rep: entry not reduced");
  }
}

// ---------------------------------------------------------------- Hom

namespace {

struct HomSystem {
  Matrix equations;
  std::vector<int> offset;  // per vertex (0-based), start of f_i block
};

HomSystem hom_system(const Quiver& q, const Rep& a, const Rep& b, const Field& f) {
  const int n = q.vertex_count();
  HomSystem s;
  s.offset.resize(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) s.offset[i + 1] = s.offset[i] + a.dims[i] * b.dims[i];
  int eq_count = 0;
  for (const auto& r : q.arrows()) eq_count += b.dims.at_vertex(r.head) * a.dims.at_vertex(r.tail);
  s.equations = Matrix(eq_count, s.offset[n]);
  int row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& arrow = q.arrows()[k];
    const int t = arrow.tail - 1, h = arrow.head - 1;
    const int at = a.dims[t], ah = a.dims[h], bt = b.dims[t], bh = b.dims[h];
    const auto& amap = a.maps[k];  // ah × at
    const auto& bmap = b.maps[k];  // bh × bt
    for (int r = 0; r < bh; ++r)
      for (int col = 0; col < at; ++col, ++row) {
        // (f_h A_ρ)[r][col] = Σ_c f_h[r][c] A_ρ[c][col]
        for (int c = 0; c < ah; ++c)
          if (amap(c, col) != 0) s.equations(row, s.offset[h] + r * ah + c) = amap(c, col);
        // − (B_ρ f_t)[r][col] = − Σ_r' B_ρ[r][r'] f_t[r'][col]
        for (int rp = 0; rp < bt; ++rp)
          if (bmap(r, rp) != 0)
            s.equations(row, s.offset[t] + rp * at + col) =
                f.sub(s.equations(row, s.offset[t] + rp * at + col), bmap(r, rp));
      }
  }
  return s;
}

}  // namespace

int hom_dim(const Quiver& q, const Rep& a, const Rep& b) {
  if (a.p != b.p) throw InputError("hom_dim: representations over different fields");
  const Field f(a.p);
  const auto s = hom_system(q, a, b, f);
  return s.equations.cols() - modp::rank(f, s.equations);
}

std::vector<RepMorphism> hom_basis(const Quiver& q, const Rep& a, const Rep& b) {
  if (a.p != b.p) throw InputError("hom_basis: representations over different fields");
  const Field f(a.p);
  const auto s = hom_system(q, a, b, f);
  const auto ns = modp::nullspace(f, s.equations);
  std::vector<RepMorphism> out;
  const int n = q.vertex_count();
  for (int k = 0; k < ns.cols(); ++k) {
    RepMorphism m;
    for (int i = 0; i < n; ++i) {
      Matrix fi(b.dims[i], a.dims[i]);
      for (int r = 0; r < b.dims[i]; ++r)
        for (int c = 0; c < a.dims[i]; ++c) fi(r, c) = ns(s.offset[i] + r * a.dims[i] + c, k);
      m.push_back(std::move(fi));
    }
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------- BGP

namespace {

// Inverse reflection functor at a source x of `qs`; the result lives on
// qs.reflected_at(x), where x is a sink.
Rep reflect_minus(const Quiver& qs, const Rep& m, int x, const Field& f) {
  std::vector<std::size_t> out_arrows;
  int stacked_rows = 0;
  for (std::size_t k = 0; k < qs.arrow_count(); ++k)
    if (qs.arrows()[k].tail == x) {
      out_arrows.push_back(k);
      stacked_rows += m.dims.at_vertex(qs.arrows()[k].head);
    }
  const int dx = m.dims.at_vertex(x);
  Matrix stacked(stacked_rows, dx);
  int row = 0;
  for (auto k : out_arrows) {
    const auto& mk = m.maps[k];
    for (int i = 0; i < mk.rows(); ++i, ++row)
      for (int j = 0; j < dx; ++j) stacked(row, j) = mk(i, j);
  }
  const Matrix coker = modp::left_nullspace(f, stacked);  // c × stacked_rows
  Rep r = m;
  r.dims[static_cast<std::size_t>(x - 1)] = coker.rows();
  int col = 0;
  for (auto k : out_arrows) {
    const int dy = m.dims.at_vertex(qs.arrows()[k].head);
    Matrix mk(coker.rows(), dy);
    for (int i = 0; i < coker.rows(); ++i)
      for (int j = 0; j < dy; ++j) mk(i, j) = coker(i, col + j);
    col += dy;
    r.maps[k] = std::move(mk);
  }
  // Arrows touching x but not leaving it cannot exist at a source.
  for (std::size_t k = 0; k < qs.arrow_count(); ++k)
    verify(qs.arrows()[k].head != x, "reflect_minus: vertex is not a source");
  return r;
}

Rep bgp_build(const Quiver& q, const DimVector& beta, const Field& f, int depth, int max_depth) {
  if (depth > max_depth) throw VerificationError("BGP recursion did not reach a simple root for " + beta.str());
  int x = 0;
  for (int v = 1; v <= q.vertex_count(); ++v)
    if (q.is_sink(v)) {
      x = v;
      break;
    }
  verify(x != 0, "BGP: quiver without sink");
  if (beta == q.unit(x)) return simple_rep(q, x, f.prime());
  DimVector reflected = beta;
  int s = -beta.at_vertex(x);
  for (const auto& a : q.arrows())
    if (a.head == x) s += beta.at_vertex(a.tail);
  reflected[static_cast<std::size_t>(x - 1)] = s;
  verify(reflected.is_nonnegative() && !reflected.is_zero(), "BGP: reflected root is not positive");
  const Quiver qs = q.reflected_at(x);
  const Rep inner = bgp_build(qs, reflected, f, depth + 1, max_depth);
  Rep out = reflect_minus(qs, inner, x, f);
  verify(out.dims == beta, "BGP: reflected dimension vector mismatch");
  return out;
}

}  // namespace

Rep indecomposable_rep(const Quiver& q, const DimVector& root, std::uint32_t p) {
  if (tits_form(q, root) != 1 || !root.is_nonnegative() || root.is_zero())
    throw InputError(root.str() + " is not a positive root");
  const Field f(p);
  const int n = q.vertex_count();
  // Each pass of n sink reflections acts as a Coxeter element; its order is
  // at most 30 (E8), so this bound is generous.
  Rep r = bgp_build(q, root, f, 0, 64 * n + 64);
  check_rep(q, r);
  if (hom_dim(q, r, r) != 1)
    throw VerificationError("constructed representation for " + root.str() + " is not a brick");
  return r;
}

// ---------------------------------------------------------------- layer submodules


Matrix incoming_image(const Quiver& q, const Rep& x, int vertex) {
  const int d = x.dims.at_vertex(vertex);
  int cols = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k)
    if (q.arrows()[k].head == vertex) cols += x.maps[k].cols();
  Matrix all(d, cols);
  int c0 = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    if (q.arrows()[k].head != vertex) continue;
    const auto& m = x.maps[k];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < m.cols(); ++j) all(i, c0 + j) = m(i, j);
    c0 += m.cols();
  }
  const Field f(x.p);
  Matrix t = modp::transpose(all);
  const auto piv = modp::rref(f, t);
  Matrix basis(d, static_cast<int>(piv.size()));
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (int i = 0; i < d; ++i) basis(i, static_cast<int>(r)) = t(static_cast<int>(r), i);
  return basis;
}

std::vector<Rep> submodules_with_layer(const Quiver& q, const Rep& x, int j, int e) {
  const int dj = x.dims.at_vertex(j);
  if (e < 0 || e > dj) throw InputError("layer size out of range");
  const Field f(x.p);
  const Matrix u0 = incoming_image(q, x, j);
  const Matrix proj = modp::left_nullspace(f, u0);  // m × dj, kernel = U0
  const int m = proj.rows();
  std::vector<Rep> out;
  modp::for_each_rref(f, e, m, [&](const Matrix& a) {
    // U_j = ker(a · proj)
    const Matrix basis = modp::nullspace(f, modp::multiply(f, a, proj));  // dj × (dj − e)
    const Matrix coords = modp::left_inverse(f, basis);
    Rep u;
    u.p = x.p;
    u.dims = x.dims;
    u.dims[static_cast<std::size_t>(j - 1)] = dj - e;
    for (std::size_t k = 0; k < q.arrow_count(); ++k) {
      const auto& arrow = q.arrows()[k];
      if (arrow.head == j)
        u.maps.push_back(modp::multiply(f, coords, x.maps[k]));
      else if (arrow.tail == j)
        u.maps.push_back(modp::multiply(f, x.maps[k], basis));
      else
        u.maps.push_back(x.maps[k]);
    }
    out.push_back(std::move(u));
  });
  return out;
}

// ---------------------------------------------------------------- RepTheory

RepTheory::RepTheory(Quiver q) : roots_(std::move(q)) {
  const std::size_t nu = roots_.size();
  hom_ = compute_hom_matrix(2);
  const auto check = compute_hom_matrix(3);
  verify(check == hom_, "Hom matrix differs between p = 2 and p = 3");
  ext_.resize(nu * nu);
  for (std::size_t b = 0; b < nu; ++b) {
    verify(hom_[idx(static_cast<int>(b), static_cast<int>(b))] == 1, "indecomposable is not a brick");
    for (std::size_t g = 0; g < nu; ++g) {
      const int e = hom_[idx(static_cast<int>(b), static_cast<int>(g))] -
                    euler_form(quiver(), roots_.root(b).dim, roots_.root(g).dim);
      verify(e >= 0, "negative Ext dimension");
      ext_[idx(static_cast<int>(b), static_cast<int>(g))] = e;
    }
    verify(ext_[idx(static_cast<int>(b), static_cast<int>(b))] == 0, "indecomposable is not rigid");
  }
  // Kahn's algorithm with smallest index first.
  std::vector<std::vector<int>> succ(nu);
  std::vector<int> indeg(nu, 0);
  for (std::size_t b = 0; b < nu; ++b)
    for (std::size_t g = 0; g < nu; ++g) {
      if (b == g) continue;
      if (hom(static_cast<int>(b), static_cast<int>(g)) != 0) {
        succ[b].push_back(static_cast<int>(g));
        ++indeg[g];
      }
      if (ext(static_cast<int>(b), static_cast<int>(g)) != 0) {
        succ[g].push_back(static_cast<int>(b));
        ++indeg[b];
      }
    }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t b = 0; b < nu; ++b)
    if (indeg[b] == 0) ready.push(static_cast<int>(b));
  while (!ready.empty()) {
    const int b = ready.top();
    ready.pop();
    directed_order_.push_back(b);
    for (int g : succ[static_cast<std::size_t>(b)])
      if (--indeg[static_cast<std::size_t>(g)] == 0) ready.push(g);
  }
  verify(directed_order_.size() == nu, "Hom/Ext relation on indecomposables has a cycle");
}

std::vector<int> RepTheory::compute_hom_matrix(std::uint32_t p) const {
  const std::size_t nu = roots_.size();
  std::vector<int> h(nu * nu);
  for (std::size_t b = 0; b < nu; ++b)
    for (std::size_t g = 0; g < nu; ++g)
      h[idx(static_cast<int>(b), static_cast<int>(g))] =
          hom_dim(quiver(), indecomposable(static_cast<int>(b), p), indecomposable(static_cast<int>(g), p));
  return h;
}

std::vector<std::vector<int>> RepTheory::hom_matrix() const {
  const auto nu = static_cast<int>(roots_.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(nu), std::vector<int>(static_cast<std::size_t>(nu)));
  for (int b = 0; b < nu; ++b)
    for (int g = 0; g < nu; ++g) m[b][g] = hom(b, g);
  return m;
}

std::vector<std::vector<int>> RepTheory::ext_matrix() const {
  const auto nu = static_cast<int>(roots_.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(nu), std::vector<int>(static_cast<std::size_t>(nu)));
  for (int b = 0; b < nu; ++b)
    for (int g = 0; g < nu; ++g) m[b][g] = ext(b, g);
  return m;
}

const Field& RepTheory::field(std::uint32_t p) const {
  std::lock_guard lock(mutex_);
  auto& slot = fields_[p];
  if (!slot) slot = std::make_unique<Field>(p);
  return *slot;
}

const Rep& RepTheory::indecomposable(int root, std::uint32_t p) const {
  const auto key = std::make_pair(root, p);
  {
    std::lock_guard lock(mutex_);
    const auto it = indecomposables_.find(key);
    if (it != indecomposables_.end()) return *it->second;
  }
  auto rep = std::make_unique<Rep>(indecomposable_rep(quiver(), roots_.root(static_cast<std::size_t>(root)).dim, p));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = indecomposables_.emplace(key, std::move(rep));
  return *it->second;
}

Rep RepTheory::build(const KostantPartition& lambda, std::uint32_t p) const {
  Rep r = zero_rep(quiver(), p);
  for (std::size_t b = 0; b < lambda.root_count(); ++b)
    for (int k = 0; k < lambda[b]; ++k) r = direct_sum(r, indecomposable(static_cast<int>(b), p));
  return r;
}

std::vector<int> RepTheory::hom_vector(const KostantPartition& lambda) const {
  const std::size_t nu = roots_.size();
  std::vector<int> hv(nu, 0);
  for (std::size_t g = 0; g < nu; ++g) {
    if (lambda[g] == 0) continue;
    for (std::size_t b = 0; b < nu; ++b) hv[b] += lambda[g] * hom(static_cast<int>(b), static_cast<int>(g));
  }
  return hv;
}

std::vector<int> RepTheory::measure(const Rep& x) const {
  std::vector<int> hv(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b)
    hv[b] = hom_dim(quiver(), indecomposable(static_cast<int>(b), x.p), x);
  return hv;
}

KostantPartition RepTheory::from_hom_vector(const std::vector<int>& hv, const DimVector& dims) const {
  KostantPartition lambda(roots_.size());
  for (auto it = directed_order_.rbegin(); it != directed_order_.rend(); ++it) {
    const int b = *it;
    int value = hv[static_cast<std::size_t>(b)];
    for (std::size_t g = 0; g < roots_.size(); ++g)
      if (static_cast<int>(g) != b && lambda[g] != 0) value -= lambda[g] * hom(b, static_cast<int>(g));
    verify(value >= 0, "identify: inconsistent Hom fingerprint");
    lambda[static_cast<std::size_t>(b)] = value;
  }
  verify(roots_.dimvec(lambda) == dims, "identify: recovered partition has the wrong dimension vector");
  return lambda;
}

KostantPartition RepTheory::identify(const Rep& x) const { return from_hom_vector(measure(x), x.dims); }

int RepTheory::hom_between(const KostantPartition& a, const KostantPartition& b) const {
  int s = 0;
  for (std::size_t i = 0; i < a.root_count(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.root_count(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * hom(static_cast<int>(i), static_cast<int>(j));
  }
  return s;
}

int RepTheory::ext_between(const KostantPartition& a, const KostantPartition& b) const {
  int s = 0;
  for (std::size_t i = 0; i < a.root_count(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.root_count(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * ext(static_cast<int>(i), static_cast<int>(j));
  }
  return s;
}

int RepTheory::top_multiplicity(const KostantPartition& lambda, int vertex) const {
  return hom_between(lambda, roots_.semisimple_at(vertex, 1));
}

std::vector<std::vector<int>> hom_matrix(const Quiver& q) { return RepTheory(q).hom_matrix(); }
std::vector<std::vector<int>> ext_matrix(const Quiver& q) { return RepTheory(q).ext_matrix(); }

}  // namespace hallbase
