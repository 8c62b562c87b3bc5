#include "hallbase/order.hpp"

#include <algorithm>
#include <set>

#include "hallbase/errors.hpp"

namespace hallbase {

bool leq(const RepTheory& rt, const KostantPartition& lambda, const KostantPartition& mu) {
  if (rt.roots().dimvec(lambda) != rt.roots().dimvec(mu)) return false;
  const auto a = rt.hom_vector(lambda);
  const auto b = rt.hom_vector(mu);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool less(const RepTheory& rt, const KostantPartition& lambda, const KostantPartition& mu) {
  return lambda != mu && leq(rt, lambda, mu);
}

std::vector<KostantPartition> linear_extension(const RepTheory& rt, std::vector<KostantPartition> items,
                                               TieBreak tie) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  const std::size_t n = items.size();
  std::vector<std::vector<int>> hv;
  hv.reserve(n);
  for (const auto& x : items) hv.push_back(rt.hom_vector(x));
  auto below = [&](std::size_t i, std::size_t j) {  // items[i] < items[j]
    if (i == j || rt.roots().dimvec(items[i]) != rt.roots().dimvec(items[j])) return false;
    for (std::size_t b = 0; b < hv[i].size(); ++b)
      if (hv[i][b] < hv[j][b]) return false;
    return true;
  };
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below(i, j)) ++indeg[j];
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.insert(i);
  std::vector<KostantPartition> out;
  while (!ready.empty()) {
    const auto it = tie == TieBreak::Lexicographic ? ready.begin() : std::prev(ready.end());
    const std::size_t i = *it;
    ready.erase(it);
    out.push_back(items[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (below(i, j) && --indeg[j] == 0) ready.insert(j);
  }
  verify(out.size() == n, "degeneration order has a cycle (two partitions share a hom vector)");
  return out;
}

std::vector<KostantPartition> max_elements(const RepTheory& rt, const std::vector<KostantPartition>& items) {
  std::vector<KostantPartition> out;
  for (const auto& x : items) {
    bool maximal = true;
    for (const auto& y : items)
      if (less(rt, x, y)) {
        maximal = false;
        break;
      }
    if (maximal && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const RepTheory& rt,
                                                                 const std::vector<KostantPartition>& items) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (!less(rt, items[i], items[j])) continue;
      bool cover = true;
      for (std::size_t k = 0; k < items.size() && cover; ++k)
        if (less(rt, items[i], items[k]) && less(rt, items[k], items[j])) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace hallbase
