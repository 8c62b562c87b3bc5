#include "hallbase/roots.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hallbase/errors.hpp"

namespace hallbase {

// ---------------------------------------------------------------- KostantPartition

bool KostantPartition::empty() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 0; });
}

std::vector<int> KostantPartition::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

int KostantPartition::summand_count() const {
  int s = 0;
  for (int m : mult_) s += m;
  return s;
}

KostantPartition& KostantPartition::operator+=(const KostantPartition& o) {
  if (o.mult_.size() != mult_.size()) throw InputError("partition size mismatch");
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] += o.mult_[i];
  return *this;
}

std::size_t KostantPartition::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int m : mult_) {
    h ^= static_cast<std::size_t>(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- roots

namespace {

// Largest coordinate of any positive root for each simply-laced type.
int max_root_coordinate(const std::string& type) {
  if (type.empty()) return 6;
  switch (type[0]) {
    case 'A': return 1;
    case 'D': return 2;
    case 'E':
      if (type == "E6") return 3;
      if (type == "E7") return 4;
      return 6;
    default: return 6;
  }
}

}  // namespace

std::vector<Root> positive_roots(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<DimVector> found;
  for (const auto& comp : q.diagnosis().components) {
    const int bound = max_root_coordinate(comp.type);
    const auto& verts = comp.vertices;
    DimVector d(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == verts.size()) {
        if (!d.is_zero() && tits_form(q, d) == 1) found.push_back(d);
        return;
      }
      for (int c = 0; c <= bound; ++c) {
        d[static_cast<std::size_t>(verts[pos] - 1)] = c;
        rec(pos + 1);
      }
      d[static_cast<std::size_t>(verts[pos] - 1)] = 0;
    };
    rec(0);
  }
  std::sort(found.begin(), found.end());
  std::vector<Root> roots;
  roots.reserve(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) roots.push_back({static_cast<int>(i), found[i]});
  return roots;
}

RootSystem::RootSystem(Quiver q) : quiver_(std::move(q)), roots_(positive_roots(quiver_)) {
  for (const auto& r : roots_) by_dim_.emplace(r.dim, r.index);
}

int RootSystem::find(const DimVector& d) const {
  const auto it = by_dim_.find(d);
  return it == by_dim_.end() ? -1 : it->second;
}

int RootSystem::simple(int vertex) const {
  if (vertex < 1 || vertex > vertex_count())
    throw InputError("vertex " + std::to_string(vertex) + " out of range 1.." +
                     std::to_string(vertex_count()));
  return find(quiver_.unit(vertex));
}

KostantPartition RootSystem::single(int root_index, int mult) const {
  KostantPartition p(roots_.size());
  p[static_cast<std::size_t>(root_index)] = mult;
  return p;
}

KostantPartition RootSystem::semisimple_at(int vertex, int e) const {
  return single(simple(vertex), e);
}

KostantPartition RootSystem::semisimple(const DimVector& d) const {
  KostantPartition p(roots_.size());
  for (int v = 1; v <= vertex_count(); ++v) p[static_cast<std::size_t>(simple(v))] = d.at_vertex(v);
  return p;
}

DimVector RootSystem::dimvec(const KostantPartition& p) const {
  DimVector d(static_cast<std::size_t>(vertex_count()));
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (p[i] != 0) d += p[i] * roots_[i].dim;
  return d;
}

int RootSystem::length(const KostantPartition& p) const { return dimvec(p).total(); }

std::vector<KostantPartition> enumerate_partitions(const RootSystem& rs, const DimVector& d) {
  if (d.size() != static_cast<std::size_t>(rs.vertex_count()))
    throw InputError("dimension vector " + d.str() + " has wrong length");
  if (!d.is_nonnegative()) throw InputError("dimension vector " + d.str() + " is negative");
  std::vector<KostantPartition> out;
  KostantPartition cur(rs.size());
  DimVector remaining = d;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == rs.size()) {
      if (remaining.is_zero()) out.push_back(cur);
      return;
    }
    const auto& beta = rs.root(k).dim;
    int m = 0;
    DimVector saved = remaining;
    while (true) {
      cur[k] = m;
      rec(k + 1);
      if (!beta.fits_in(remaining)) break;
      remaining -= beta;
      ++m;
    }
    remaining = saved;
    cur[k] = 0;
  };
  rec(0);
  return out;
}

const std::vector<KostantPartition>& RootSystem::partitions(const DimVector& d) const {
  {
    std::lock_guard lock(mutex_);
    const auto it = partition_cache_.find(d);
    if (it != partition_cache_.end()) return *it->second;
  }
  auto computed = std::make_unique<std::vector<KostantPartition>>(enumerate_partitions(*this, d));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = partition_cache_.emplace(d, std::move(computed));
  return *it->second;
}

std::string RootSystem::root_label(int root_index) const {
  const auto& d = roots_.at(static_cast<std::size_t>(root_index)).dim;
  if (d.total() == 1)
    for (int v = 1; v <= vertex_count(); ++v)
      if (d.at_vertex(v) == 1) return "S" + std::to_string(v);
  return "M" + d.str();
}

std::string RootSystem::label(const KostantPartition& p) const {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.root_count(); ++i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (p[i] != 1) os << p[i];
    os << root_label(static_cast<int>(i));
  }
  return os.str();
}

}  // namespace hallbase
