#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hallbase/modp.hpp"
#include "hallbase/quiver.hpp"
#include "hallbase/roots.hpp"

namespace hallbase {

/// A representation of a quiver over the field with `p` elements. `maps[a]`
/// belongs to arrow a of the quiver and has shape dims[head] × dims[tail].
struct Rep {
  std::uint32_t p = 2;
  DimVector dims;
  std::vector<modp::Matrix> maps;
};

/// A homomorphism as one matrix per vertex (shape dims_B[i] × dims_A[i]).
using RepMorphism = std::vector<modp::Matrix>;

Rep zero_rep(const Quiver& q, std::uint32_t p);
Rep simple_rep(const Quiver& q, int vertex, std::uint32_t p);
Rep direct_sum(const Rep& a, const Rep& b);
/// Throws VerificationError when matrix shapes or entries are inconsistent.
void check_rep(const Quiver& q, const Rep& r);

/// dim Hom(A, B), by rank of the linear system f_h A_ρ = B_ρ f_t.
int hom_dim(const Quiver& q, const Rep& a, const Rep& b);
std::vector<RepMorphism> hom_basis(const Quiver& q, const Rep& a, const Rep& b);

/// The indecomposable with dimension vector `root`, built by BGP reflection
/// functors: reflect at a sink until the root becomes simple, then apply the
/// inverse reflection functors on the way back.
Rep indecomposable_rep(const Quiver& q, const DimVector& root, std::uint32_t p);

/// Every submodule U ⊆ X with X/U ≅ e·S_j. U_i = X_i off j; U_j runs over the
/// codimension-e subspaces of X_j containing the images of arrows into j.
/// Each returned rep is expressed in an echelon basis of U_j.
std::vector<Rep> submodules_with_layer(const Quiver& q, const Rep& x, int j, int e);

/// Basis matrix (columns) of the sum of images of arrows into `vertex`.
modp::Matrix incoming_image(const Quiver& q, const Rep& x, int vertex);

/// Dimension-vector-level facts about kQ-modules shared by all later stages:
/// roots, the Hom/Ext matrices on Φ⁺ and a Hom-directed root order. Read-only
/// after construction apart from internally synchronized caches.
class RepTheory {
 public:
  explicit RepTheory(Quiver q);
  RepTheory(const RepTheory&) = delete;
  RepTheory& operator=(const RepTheory&) = delete;

  const Quiver& quiver() const { return roots_.quiver(); }
  const RootSystem& roots() const { return roots_; }
  std::size_t root_count() const { return roots_.size(); }

  /// h(β,γ) = dim Hom(M(β), M(γ)); ext(β,γ) = h(β,γ) − <β,γ>.
  int hom(int beta, int gamma) const { return hom_[idx(beta, gamma)]; }
  int ext(int beta, int gamma) const { return ext_[idx(beta, gamma)]; }
  std::vector<std::vector<int>> hom_matrix() const;
  std::vector<std::vector<int>> ext_matrix() const;

  /// Roots ordered so that Hom(β,γ) ≠ 0 (β ≠ γ) puts β first and
  /// Ext(β,γ) ≠ 0 puts γ first; ties by canonical index.
  const std::vector<int>& directed_order() const { return directed_order_; }

  const modp::Field& field(std::uint32_t p) const;
  const Rep& indecomposable(int root, std::uint32_t p) const;
  /// M(λ) as a block sum in canonical root order.
  Rep build(const KostantPartition& lambda, std::uint32_t p) const;

  /// hv(λ)_β = Σ_γ λ(γ) h(β,γ).
  std::vector<int> hom_vector(const KostantPartition& lambda) const;
  /// dim Hom(M(β), X) for every β, computed on the explicit module.
  std::vector<int> measure(const Rep& x) const;
  /// The unique λ whose hom vector is `hv`; throws VerificationError if none.
  KostantPartition from_hom_vector(const std::vector<int>& hv, const DimVector& dims) const;
  KostantPartition identify(const Rep& x) const;

  int dim_end(const KostantPartition& lambda) const { return hom_between(lambda, lambda); }
  int hom_between(const KostantPartition& a, const KostantPartition& b) const;
  int ext_between(const KostantPartition& a, const KostantPartition& b) const;
  /// dim Hom(M(λ), S_vertex): multiplicity of S_vertex in the top.
  int top_multiplicity(const KostantPartition& lambda, int vertex) const;

 private:
  std::size_t idx(int b, int g) const { return static_cast<std::size_t>(b) * roots_.size() + static_cast<std::size_t>(g); }
  std::vector<int> compute_hom_matrix(std::uint32_t p) const;

  RootSystem roots_;
  std::vector<int> hom_;
  std::vector<int> ext_;
  std::vector<int> directed_order_;

  mutable std::mutex mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<modp::Field>> fields_;
  mutable std::map<std::pair<int, std::uint32_t>, std::unique_ptr<Rep>> indecomposables_;
};

/// Convenience wrappers matching the module interface.
std::vector<std::vector<int>> hom_matrix(const Quiver& q);
std::vector<std::vector<int>> ext_matrix(const Quiver& q);

}  // namespace hallbase
