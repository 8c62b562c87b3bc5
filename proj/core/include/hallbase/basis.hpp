#pragma once

#include <map>
#include <vector>

#include "hallbase/laurent.hpp"
#include "hallbase/monoid.hpp"
#include "hallbase/order.hpp"

namespace hallbase {

/// Σ c_λ u_λ (or Σ c_λ ũ_λ, depending on context) over Z[v, v⁻¹].
using UPlusElement = std::map<KostantPartition, LaurentPoly>;
using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// m^{(w_μ)} = Σ_λ entries[λ][μ] ũ_λ, rows and columns along `order`.
struct TransitionMatrix {
  DimVector dims;
  std::vector<KostantPartition> order;
  std::vector<Word> reps;
  LaurentMatrix entries;
};

/// c_λ = Σ_μ coeff[μ][λ] ũ_μ along `order`.
struct CanonicalBasis {
  DimVector dims;
  std::vector<KostantPartition> order;
  std::vector<UPlusElement> elements;  // ũ-coordinates, elements[k] = c_{order[k]}
};

LaurentMatrix bar(const LaurentMatrix& m);
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b);
/// Inverse of an upper triangular matrix with unit diagonal entries ±v^k.
LaurentMatrix inverse_unitriangular(const LaurentMatrix& m);
bool is_upper_triangular(const LaurentMatrix& m);

/// The twisted Hall algebra U⁺ with u_μ ⋆ u_ν = v^{<μ,ν>} Σ_λ φ^λ_{μν}(v²) u_λ.
class BasisLab {
 public:
  explicit BasisLab(const MonoidWords& monoid);

  const MonoidWords& monoid() const { return monoid_; }
  const RepTheory& theory() const { return monoid_.theory(); }

  /// t(λ) = −ℓ(λ) + dim End M(λ), so that ũ_λ = v^{t(λ)} u_λ.
  int tilde_exponent(const KostantPartition& lambda) const;
  /// u-coordinates → ũ-coordinates.
  UPlusElement to_tilde(const UPlusElement& u) const;
  UPlusElement from_tilde(const UPlusElement& ut) const;

  /// In u-coordinates.
  UPlusElement star_multiply(const UPlusElement& a, const UPlusElement& b) const;
  /// E_i^{(e)} = u_{S_i}^{⋆e} / [e]!, in u-coordinates.
  UPlusElement divided_power(int vertex, int e) const;
  /// m^{(w)} = v^{δ(w)+ε(w)} Σ_λ γ_w^λ(v²) u_λ in u-coordinates, checked
  /// against the product of divided powers.
  UPlusElement monomial(const Word& w) const;

  /// Throws InputError if a representative is missing or lies in the wrong fibre.
  TransitionMatrix transition_matrix(const DimVector& d, const std::map<KostantPartition, Word>& reps,
                                     TieBreak tie = TieBreak::Lexicographic) const;
  /// Directed words with the default directed partition.
  std::map<KostantPartition, Word> directed_representatives(const DimVector& d) const;
  /// R = F · bar(F⁻¹): ι(ũ_μ) = Σ_λ R[λ][μ] ũ_λ. Requires unit diagonal.
  LaurentMatrix bar_matrix(const TransitionMatrix& f) const;

  CanonicalBasis canonical_basis(const DimVector& d, const std::map<KostantPartition, Word>& reps,
                                 TieBreak tie = TieBreak::Lexicographic) const;
  CanonicalBasis canonical_basis(const DimVector& d) const;

 private:
  const MonoidWords& monoid_;
};

}  // namespace hallbase
