#include "hallbase/basis.hpp"

#include "hallbase/errors.hpp"

namespace hallbase {

LaurentMatrix bar(const LaurentMatrix& m) {
  LaurentMatrix out = m;
  for (auto& row : out)
    for (auto& x : row) x = x.bar();
  return out;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b.front().size();
  LaurentMatrix c(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    verify(a[i].size() == k, "Laurent matrix shape mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[t][j].is_zero()) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

bool is_upper_triangular(const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i && j < m[i].size(); ++j)
      if (!m[i][j].is_zero()) return false;
  return true;
}

LaurentMatrix inverse_unitriangular(const LaurentMatrix& m) {
  verify(is_upper_triangular(m), "inverse_unitriangular: matrix is not upper triangular");
  const std::size_t n = m.size();
  LaurentMatrix x(n, std::vector<LaurentPoly>(n));
  const LaurentPoly one = LaurentPoly::constant(1);
  for (std::size_t j = 0; j < n; ++j) {
    verify(m[j][j].is_unit(), "inverse_unitriangular: diagonal entry " + m[j][j].str() + " is not a unit");
    x[j][j] = divide_exact(one, m[j][j]);
    for (std::size_t i = j; i-- > 0;) {
      LaurentPoly s;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (!m[i][k].is_zero() && !x[k][j].is_zero()) s += m[i][k] * x[k][j];
      x[i][j] = divide_exact(-s, m[i][i]);
    }
  }
  return x;
}

BasisLab::BasisLab(const MonoidWords& monoid) : monoid_(monoid) {}

int BasisLab::tilde_exponent(const KostantPartition& lambda) const {
  return -theory().roots().length(lambda) + theory().dim_end(lambda);
}

UPlusElement BasisLab::to_tilde(const UPlusElement& u) const {
  UPlusElement out;
  for (const auto& [lambda, c] : u) out.emplace(lambda, c.shifted(-tilde_exponent(lambda)));
  return out;
}

UPlusElement BasisLab::from_tilde(const UPlusElement& ut) const {
  UPlusElement out;
  for (const auto& [lambda, c] : ut) out.emplace(lambda, c.shifted(tilde_exponent(lambda)));
  return out;
}

UPlusElement BasisLab::star_multiply(const UPlusElement& a, const UPlusElement& b) const {
  const auto& rt = theory();
  const auto& rs = rt.roots();
  const auto& engine = monoid_.engine();
  UPlusElement out;
  for (const auto& [mu, ca] : a) {
    if (ca.is_zero()) continue;
    if (mu.root_count() != rt.root_count()) throw InputError("element does not belong to this quiver");
    const auto supp = mu.support();
    const bool layer = supp.size() == 1 && rs.root(static_cast<std::size_t>(supp[0])).dim.total() == 1;
    for (const auto& [nu, cb] : b) {
      if (cb.is_zero()) continue;
      if (nu.root_count() != rt.root_count()) throw InputError("element does not belong to this quiver");
      if (mu.empty()) {
        out[nu] += ca * cb;
        continue;
      }
      const LaurentPoly scale = ca * cb * LaurentPoly::monomial(euler_form(rt.quiver(), rs.dimvec(mu), rs.dimvec(nu)));
      PolyMap phi;
      if (layer) {
        int vertex = 1;
        while (rs.simple(vertex) != supp[0]) ++vertex;
        phi = engine.layer_column(vertex, mu[static_cast<std::size_t>(supp[0])], nu);
      } else {
        phi = engine.general_hall_all(mu, nu);
      }
      for (const auto& [lambda, f] : phi) out[lambda] += scale * LaurentPoly::from_q(f);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

UPlusElement BasisLab::divided_power(int vertex, int e) const {
  const auto& rs = theory().roots();
  if (vertex < 1 || vertex > rs.vertex_count()) throw InputError("vertex " + std::to_string(vertex) + " out of range");
  if (e < 0) throw InputError("divided power exponent must be non-negative");
  const UPlusElement generator{{rs.single(rs.simple(vertex)), LaurentPoly::constant(1)}};
  UPlusElement p{{rs.zero(), LaurentPoly::constant(1)}};
  for (int k = 0; k < e; ++k) p = star_multiply(generator, p);
  const LaurentPoly f = quantum_factorial_v(e);
  for (auto& [lambda, c] : p) c = divide_exact(c, f);
  return p;
}

UPlusElement BasisLab::monomial(const Word& w) const {
  const auto& rt = theory();
  const int shift = delta(w) + epsilon(rt.quiver(), w);
  UPlusElement direct;
  if (w.empty()) {
    direct.emplace(rt.roots().zero(), LaurentPoly::constant(1));
  } else {
    for (const auto& [lambda, g] : monoid_.engine().gamma_word(w))
      direct.emplace(lambda, LaurentPoly::from_q(g).shifted(shift));
  }
  UPlusElement product{{rt.roots().zero(), LaurentPoly::constant(1)}};
  const auto tf = tight_form(w);
  for (auto run = tf.rbegin(); run != tf.rend(); ++run)
    product = star_multiply(divided_power(run->vertex, run->exponent), product);
  verify(product == direct, "monomial " + w.str() + ": layer expansion disagrees with the divided-power product");
  return direct;
}

std::map<KostantPartition, Word> BasisLab::directed_representatives(const DimVector& d) const {
  std::map<KostantPartition, Word> reps;
  for (const auto& lambda : theory().roots().partitions(d)) reps.emplace(lambda, monoid_.directed_word(lambda));
  return reps;
}

TransitionMatrix BasisLab::transition_matrix(const DimVector& d, const std::map<KostantPartition, Word>& reps,
                                             TieBreak tie) const {
  const auto& rt = theory();
  if (d.size() != static_cast<std::size_t>(rt.quiver().vertex_count()) || !d.is_nonnegative())
    throw InputError("dimension vector " + d.str() + " does not fit the quiver");
  TransitionMatrix t;
  t.dims = d;
  t.order = linear_extension(rt, rt.roots().partitions(d), tie);
  const std::size_t n = t.order.size();
  std::map<KostantPartition, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos.emplace(t.order[k], k);
  t.entries.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const auto& mu = t.order[col];
    const auto it = reps.find(mu);
    if (it == reps.end()) throw InputError("no representative for " + rt.roots().label(mu));
    if (monoid_.wp(it->second) != mu)
      throw InputError("word " + it->second.str() + " is not in the fibre of " + rt.roots().label(mu));
    t.reps.push_back(it->second);
    for (const auto& [lambda, c] : to_tilde(monomial(it->second))) t.entries[pos.at(lambda)][col] = c;
  }
  verify(is_upper_triangular(t.entries), "transition matrix is not triangular along the degeneration order");
  for (std::size_t k = 0; k < n; ++k) verify(!t.entries[k][k].is_zero(), "transition matrix has a zero diagonal entry");
  return t;
}

LaurentMatrix BasisLab::bar_matrix(const TransitionMatrix& f) const {
  const std::size_t n = f.order.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& x = f.entries[k][k];
    if (!x.is_unit())
      throw InputError("representative " + f.reps[k].str() + " is not distinguished (diagonal " + x.str() + ")");
    verify(x == LaurentPoly::constant(1), "distinguished monomial " + f.reps[k].str() + " has diagonal " + x.str());
  }
  const LaurentMatrix r = multiply(f.entries, bar(inverse_unitriangular(f.entries)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        verify(r[i][i] == LaurentPoly::constant(1), "bar matrix diagonal is not 1");
      } else if (!r[i][j].is_zero()) {
        verify(less(theory(), f.order[i], f.order[j]), "bar matrix is not triangular along the degeneration order");
      }
    }
  return r;
}

CanonicalBasis BasisLab::canonical_basis(const DimVector& d, const std::map<KostantPartition, Word>& reps,
                                         TieBreak tie) const {
  const TransitionMatrix f = transition_matrix(d, reps, tie);
  const LaurentMatrix r = bar_matrix(f);
  const std::size_t n = f.order.size();
  LaurentMatrix zeta(n, std::vector<LaurentPoly>(n));
  for (std::size_t l = 0; l < n; ++l) {
    zeta[l][l] = LaurentPoly::constant(1);
    for (std::size_t k = l; k-- > 0;) {
      LaurentPoly a;
      for (std::size_t c = k + 1; c <= l; ++c)
        if (!r[k][c].is_zero() && !zeta[c][l].is_zero()) a += r[k][c] * zeta[c][l].bar();
      verify(a.bar() == -a, "canonical basis recursion: defect is not bar-antisymmetric");
      zeta[k][l] = a.negative_part();
      verify(zeta[k][l].is_zero() || less(theory(), f.order[k], f.order[l]),
             "canonical basis coefficient outside the degeneration order");
    }
  }
  // c = Σ ζ ũ = Σ (F⁻¹ζ) m and every m^{(w)} is bar-invariant.
  const LaurentMatrix in_monomials = multiply(inverse_unitriangular(f.entries), zeta);
  for (const auto& row : in_monomials)
    for (const auto& x : row) verify(x.is_bar_invariant(), "canonical basis element is not bar-invariant");

  CanonicalBasis out{d, f.order, {}};
  for (std::size_t l = 0; l < n; ++l) {
    UPlusElement c;
    for (std::size_t k = 0; k <= l; ++k)
      if (!zeta[k][l].is_zero()) c.emplace(f.order[k], zeta[k][l]);
    out.elements.push_back(std::move(c));
  }
  return out;
}

CanonicalBasis BasisLab::canonical_basis(const DimVector& d) const {
  return canonical_basis(d, directed_representatives(d));
}

}  // namespace hallbase
