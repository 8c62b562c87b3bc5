#include "hallbase/monoid.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hallbase/errors.hpp"
#include "hallbase/order.hpp"

namespace hallbase {

namespace {

KostantPartition unique_max(const RepTheory& rt, const std::vector<KostantPartition>& support, const char* what) {
  const auto top = max_elements(rt, support);
  verify(top.size() == 1, std::string(what) + ": maximal extension is not unique (" +
                              std::to_string(top.size()) + " maxima)");
  return top.front();
}

}  // namespace

MonoidWords::MonoidWords(const HallEngine& engine, std::size_t fibre_cap) : engine_(engine), fibre_cap_(fibre_cap) {}

KostantPartition MonoidWords::star_simple(int vertex, const KostantPartition& nu) const {
  const auto key = std::make_pair(vertex, nu);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = simple_memo_.find(key); it != simple_memo_.end()) return it->second;
  }
  std::vector<KostantPartition> support;
  for (const auto& [lambda, poly] : engine_.layer_column(vertex, 1, nu)) support.push_back(lambda);
  verify(!support.empty(), "star_simple: no extension found");
  const auto result = unique_max(theory(), support, "star_simple");
  std::lock_guard lock(mutex_);
  return simple_memo_.emplace(key, result).first->second;
}

KostantPartition MonoidWords::star(const KostantPartition& mu, const KostantPartition& nu) const {
  if (mu.empty()) return nu;
  if (nu.empty()) return mu;
  const auto key = std::make_pair(mu, nu);
  {
    std::lock_guard lock(mutex_);
    if (const auto it = star_memo_.find(key); it != star_memo_.end()) return it->second;
  }
  const auto& rs = roots();
  if (rs.length(mu) + rs.length(nu) > engine_.options().max_general_length)
    throw ResourceError("star: total length exceeds the configured bound " +
                        std::to_string(engine_.options().max_general_length));
  const auto support = engine_.extension_support(mu, nu);
  verify(!support.empty(), "star: no extension found");
  const auto result = unique_max(theory(), support, "star");
  std::lock_guard lock(mutex_);
  return star_memo_.emplace(key, result).first->second;
}

KostantPartition MonoidWords::wp(const Word& w) const {
  const int n = theory().quiver().vertex_count();
  KostantPartition cur = roots().zero();
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (*it < 1 || *it > n) throw InputError("letter " + std::to_string(*it) + " is not a vertex");
    cur = star_simple(*it, cur);
  }
  return cur;
}

bool MonoidWords::reaches(const KostantPartition& state, const DimVector& remaining, const KostantPartition& target,
                          std::map<std::pair<KostantPartition, DimVector>, bool>& memo) const {
  if (remaining.is_zero()) return state == target;
  const auto key = std::make_pair(state, remaining);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  bool ok = false;
  for (int i = 1; i <= static_cast<int>(remaining.size()) && !ok; ++i) {
    if (remaining.at_vertex(i) == 0) continue;
    DimVector rest = remaining;
    rest[static_cast<std::size_t>(i - 1)] -= 1;
    ok = reaches(star_simple(i, state), rest, target, memo);
  }
  memo.emplace(key, ok);
  return ok;
}

std::vector<Word> MonoidWords::fibre(const KostantPartition& lambda) const {
  const DimVector d = roots().dimvec(lambda);
  std::map<std::pair<KostantPartition, DimVector>, bool> memo;
  // Suffixes are built right to left; letters are collected reversed.
  std::vector<Word> out;
  std::vector<int> suffix;
  std::function<void(const KostantPartition&, const DimVector&)> walk = [&](const KostantPartition& state,
                                                                              const DimVector& remaining) {
    if (remaining.is_zero()) {
      out.emplace_back(std::vector<int>(suffix.rbegin(), suffix.rend()));
      if (out.size() > fibre_cap_) throw ResourceError("fibre exceeds the word cap " + std::to_string(fibre_cap_));
      return;
    }
    for (int i = 1; i <= static_cast<int>(remaining.size()); ++i) {
      if (remaining.at_vertex(i) == 0) continue;
      DimVector rest = remaining;
      rest[static_cast<std::size_t>(i - 1)] -= 1;
      const auto next = star_simple(i, state);
      if (!reaches(next, rest, lambda, memo)) continue;
      suffix.push_back(i);
      walk(next, rest);
      suffix.pop_back();
    }
  };
  if (reaches(roots().zero(), d, lambda, memo)) walk(roots().zero(), d);
  std::sort(out.begin(), out.end());
  return out;
}

bool MonoidWords::is_distinguished(const Word& w) const { return engine_.gamma_at(w, wp(w)).is_one(); }

std::string MonoidWords::check_directed_partition(const KostantPartition& lambda,
                                                  const DirectedPartitionOrder& order) const {
  const auto& rt = theory();
  const int nr = static_cast<int>(rt.root_count());
  std::set<int> seen;
  for (const auto& part : order) {
    if (part.empty()) return "empty part";
    for (int b : part) {
      if (b < 0 || b >= nr) return "root index " + std::to_string(b + 1) + " out of range";
      if (!seen.insert(b).second) return "root " + std::to_string(b + 1) + " appears twice";
    }
  }
  for (int b : lambda.support())
    if (!seen.count(b)) return "root " + std::to_string(b + 1) + " of the support is not covered";
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (int b : order[r])
      for (int g : order[r])
        if (rt.ext(b, g) != 0)
          return "(a) fails: Ext between roots " + std::to_string(b + 1) + " and " + std::to_string(g + 1) +
                 " in one part";
    for (std::size_t s = r + 1; s < order.size(); ++s)
      for (int b : order[r])
        for (int g : order[s]) {
          if (rt.ext(b, g) != 0)
            return "(b) fails: Ext(" + std::to_string(b + 1) + ", " + std::to_string(g + 1) + ") != 0";
          if (rt.hom(g, b) != 0)
            return "(b) fails: Hom(" + std::to_string(g + 1) + ", " + std::to_string(b + 1) + ") != 0";
        }
  }
  return {};
}

DirectedPartitionOrder MonoidWords::default_directed_partition(const KostantPartition& lambda) const {
  DirectedPartitionOrder out;
  for (int b : theory().directed_order())
    if (lambda[static_cast<std::size_t>(b)] > 0) out.push_back({b});
  return out;
}

Word MonoidWords::directed_word(const KostantPartition& lambda, const DirectedPartitionOrder& order,
                                const std::vector<int>& vertex_order) const {
  if (const auto why = check_directed_partition(lambda, order); !why.empty())
    throw InputError("invalid directed partition: " + why);
  const auto& q = theory().quiver();
  std::vector<int> position(static_cast<std::size_t>(q.vertex_count()) + 1, -1);
  if (static_cast<int>(vertex_order.size()) != q.vertex_count()) throw InputError("vertex order has wrong length");
  for (std::size_t k = 0; k < vertex_order.size(); ++k) {
    const int v = vertex_order[k];
    if (v < 1 || v > q.vertex_count() || position[static_cast<std::size_t>(v)] >= 0)
      throw InputError("vertex order is not a permutation");
    position[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  for (const auto& a : q.arrows())
    if (position[static_cast<std::size_t>(a.tail)] > position[static_cast<std::size_t>(a.head)])
      throw InputError("vertex order puts a head before its tail");

  std::vector<int> letters;
  for (const auto& part : order) {
    DimVector d = q.zero();
    for (int b : part) d += lambda[static_cast<std::size_t>(b)] * roots().root(static_cast<std::size_t>(b)).dim;
    for (int v : vertex_order)
      for (int k = 0; k < d.at_vertex(v); ++k) letters.push_back(v);
  }
  Word w(std::move(letters));
  verify(wp(w) == lambda, "directed word " + w.str() + " does not lie in the fibre");
  verify(is_distinguished(w), "directed word " + w.str() + " is not distinguished");
  return w;
}

Word MonoidWords::directed_word(const KostantPartition& lambda) const {
  return directed_word(lambda, default_directed_partition(lambda), vertex_order_dfb(theory().quiver()));
}

std::vector<Word> MonoidWords::all_directed_words(const KostantPartition& lambda, std::size_t cap) const {
  const auto support = lambda.support();
  const auto vorders = all_vertex_orders_dfb(theory().quiver());
  std::set<Word> out;
  std::size_t visited = 0;
  // Ordered set partitions: assign each support root a block label, blocks used 0..k-1.
  std::vector<int> block(support.size(), 0);
  std::function<void(std::size_t, int)> assign = [&](std::size_t pos, int used) {
    if (pos == support.size()) {
      // Every permutation of the blocks gives an ordered partition.
      std::vector<int> perm(static_cast<std::size_t>(used));
      for (int k = 0; k < used; ++k) perm[static_cast<std::size_t>(k)] = k;
      do {
        if (++visited > cap) throw ResourceError("directed partition enumeration exceeds the cap");
        DirectedPartitionOrder order(static_cast<std::size_t>(used));
        for (std::size_t i = 0; i < support.size(); ++i)
          order[static_cast<std::size_t>(perm[static_cast<std::size_t>(block[i])])].push_back(support[i]);
        if (!check_directed_partition(lambda, order).empty()) continue;
        for (const auto& vo : vorders) out.insert(directed_word(lambda, order, vo));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[pos] = b;
      assign(pos + 1, std::max(used, b + 1));
    }
  };
  assign(0, 0);
  return {out.begin(), out.end()};
}

}  // namespace hallbase
