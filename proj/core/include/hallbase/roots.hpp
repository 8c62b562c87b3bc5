#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hallbase/quiver.hpp"

namespace hallbase {

/// A positive root; `index` is its 0-based position in the canonical list.
struct Root {
  int index = 0;
  DimVector dim;
};

/// Multiplicity function on the positive roots, stored densely in canonical
/// root order. Two partitions compare equal iff they describe the same
/// isoclass M(λ) = ⊕ λ(β) M(β).
class KostantPartition {
 public:
  KostantPartition() = default;
  explicit KostantPartition(std::size_t root_count) : mult_(root_count, 0) {}
  explicit KostantPartition(std::vector<int> mult) : mult_(std::move(mult)) {}

  std::size_t root_count() const { return mult_.size(); }
  int operator[](std::size_t root) const { return mult_[root]; }
  int& operator[](std::size_t root) { return mult_[root]; }
  const std::vector<int>& multiplicities() const { return mult_; }

  bool empty() const;
  /// Root indices with non-zero multiplicity, ascending.
  std::vector<int> support() const;
  int summand_count() const;

  KostantPartition& operator+=(const KostantPartition& o);
  friend KostantPartition operator+(KostantPartition a, const KostantPartition& b) { return a += b; }

  friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
  friend auto operator<=>(const KostantPartition&, const KostantPartition&) = default;

  std::size_t hash() const;

 private:
  std::vector<int> mult_;
};

struct KostantPartitionHash {
  std::size_t operator()(const KostantPartition& p) const { return p.hash(); }
};

/// Positive roots of a Dynkin quiver (Gabriel) plus Kostant-partition
/// bookkeeping. Roots are sorted lexicographically by dimension vector.
class RootSystem {
 public:
  explicit RootSystem(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count(); }
  std::size_t size() const { return roots_.size(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t i) const { return roots_[i]; }

  /// Index of the root with this dimension vector, or -1.
  int find(const DimVector& d) const;
  /// Index of the simple root at a 1-based vertex.
  int simple(int vertex) const;

  KostantPartition zero() const { return KostantPartition(roots_.size()); }
  KostantPartition single(int root_index, int mult = 1) const;
  /// e·S_vertex
  KostantPartition semisimple_at(int vertex, int e) const;
  KostantPartition semisimple(const DimVector& d) const;

  DimVector dimvec(const KostantPartition& p) const;
  /// ℓ(λ) = total dimension of M(λ).
  int length(const KostantPartition& p) const;

  /// Λ_d in lexicographic order of multiplicity profiles. Memoized; thread-safe.
  const std::vector<KostantPartition>& partitions(const DimVector& d) const;

  /// "S1+2·M(1,1)" style label; simples shown as S<i>.
  std::string label(const KostantPartition& p) const;
  std::string root_label(int root_index) const;

 private:
  Quiver quiver_;
  std::vector<Root> roots_;
  std::map<DimVector, int> by_dim_;
  mutable std::mutex mutex_;
  mutable std::map<DimVector, std::unique_ptr<std::vector<KostantPartition>>> partition_cache_;
};

/// Free-standing form of the root enumeration.
std::vector<Root> positive_roots(const Quiver& q);

/// Free-standing form of Λ_d enumeration (no memo).
std::vector<KostantPartition> enumerate_partitions(const RootSystem& rs, const DimVector& d);

}  // namespace hallbase
