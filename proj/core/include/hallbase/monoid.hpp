#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hallbase/hall.hpp"
#include "hallbase/words.hpp"

namespace hallbase {

/// Ordered sequence of disjoint sets of 0-based root indices.
using DirectedPartitionOrder = std::vector<std::vector<int>>;

/// The generic-extension monoid: M ∗ N is the unique maximal extension with
/// N as submodule and M as quotient.
class MonoidWords {
 public:
  explicit MonoidWords(const HallEngine& engine, std::size_t fibre_cap = 1000000);
  MonoidWords(const MonoidWords&) = delete;
  MonoidWords& operator=(const MonoidWords&) = delete;

  const HallEngine& engine() const { return engine_; }
  const RepTheory& theory() const { return engine_.theory(); }
  const RootSystem& roots() const { return engine_.theory().roots(); }

  /// [S_i] ∗ [M(ν)]
  KostantPartition star_simple(int vertex, const KostantPartition& nu) const;
  /// [M(μ)] ∗ [M(ν)]; throws VerificationError if the maximum is not unique.
  KostantPartition star(const KostantPartition& mu, const KostantPartition& nu) const;
  /// ℘(w) = S_{i_1} ∗ (S_{i_2} ∗ (⋯ ∗ S_{i_m})).
  KostantPartition wp(const Word& w) const;

  /// ℘⁻¹(λ) in lexicographic order. Throws ResourceError past the cap.
  std::vector<Word> fibre(const KostantPartition& lambda) const;
  /// γ_w^{℘(w)} = 1
  bool is_distinguished(const Word& w) const;

  /// Empty string when valid, otherwise the violated condition.
  std::string check_directed_partition(const KostantPartition& lambda, const DirectedPartitionOrder& order) const;
  /// Singleton parts along the Hom-directed root order, restricted to supp(λ).
  DirectedPartitionOrder default_directed_partition(const KostantPartition& lambda) const;
  /// w_λ for the given parts and vertex order; asserts ℘(w_λ) = λ and that
  /// w_λ is distinguished.
  Word directed_word(const KostantPartition& lambda, const DirectedPartitionOrder& order,
                     const std::vector<int>& vertex_order) const;
  Word directed_word(const KostantPartition& lambda) const;
  /// Every valid ordered partition of supp(λ) and every (dfb) vertex order.
  std::vector<Word> all_directed_words(const KostantPartition& lambda, std::size_t cap = 100000) const;

 private:
  bool reaches(const KostantPartition& state, const DimVector& remaining, const KostantPartition& target,
               std::map<std::pair<KostantPartition, DimVector>, bool>& memo) const;

  const HallEngine& engine_;
  std::size_t fibre_cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, KostantPartition>, KostantPartition> simple_memo_;
  mutable std::map<std::pair<KostantPartition, KostantPartition>, KostantPartition> star_memo_;
};

}  // namespace hallbase
