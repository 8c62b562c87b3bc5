#pragma once

#include <utility>
#include <vector>

#include "hallbase/rep.hpp"
#include "hallbase/roots.hpp"

namespace hallbase {

/// λ ≤ μ: M(λ) is a degeneration of M(μ). Same dimension vector and
/// hv(λ) ≥ hv(μ) pointwise.
bool leq(const RepTheory& rt, const KostantPartition& lambda, const KostantPartition& mu);
bool less(const RepTheory& rt, const KostantPartition& lambda, const KostantPartition& mu);

enum class TieBreak {
  Lexicographic,         // smallest multiplicity profile first
  ReverseLexicographic,  // largest multiplicity profile first
};

/// A total order refining ≤, smaller elements first.
std::vector<KostantPartition> linear_extension(const RepTheory& rt, std::vector<KostantPartition> items,
                                               TieBreak tie = TieBreak::Lexicographic);

std::vector<KostantPartition> max_elements(const RepTheory& rt, const std::vector<KostantPartition>& items);

/// Cover pairs (i, j) with items[i] < items[j] and nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const RepTheory& rt,
                                                                 const std::vector<KostantPartition>& items);

}  // namespace hallbase
