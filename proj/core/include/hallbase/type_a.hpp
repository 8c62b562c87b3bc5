#pragma once

#include <vector>

#include "hallbase/roots.hpp"
#include "hallbase/words.hpp"

namespace hallbase {

/// True for the linear orientation 1 → 2 → ⋯ → n.
bool is_linear_a(const Quiver& q);

/// Combinatorics of the linear A_n quiver. Root β_ij (i ≤ j) is the interval
/// module M_ij with top S_i and socle S_j; λ_ij = λ(β_ij).
class TypeA {
 public:
  /// Throws InputError unless the quiver is linear A_n.
  explicit TypeA(const RootSystem& rs);

  int n() const { return n_; }
  int root_index(int i, int j) const { return index_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  int at(const KostantPartition& lambda, int i, int j) const;

  KostantPartition sigma(int i, const KostantPartition& lambda) const;
  /// σ_{i_1} ⋯ σ_{i_m}(0)
  KostantPartition wp(const Word& w) const;
  /// Run-by-run submodule-uniqueness criterion on the tight form.
  bool is_distinguished(const Word& w) const;

 private:
  const RootSystem& rs_;
  int n_;
  std::vector<int> index_;
};

}  // namespace hallbase
