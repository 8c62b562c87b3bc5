#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hallbase {

/// Non-negative integer vector indexed by vertex (position 0 holds vertex 1).
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  explicit DimVector(std::vector<int> v) : v_(std::move(v)) {}
  DimVector(std::initializer_list<int> v) : v_(v) {}

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }

  /// Value at a 1-based vertex label.
  int at_vertex(int vertex) const { return v_[static_cast<std::size_t>(vertex - 1)]; }

  const std::vector<int>& values() const { return v_; }

  int total() const;
  bool is_zero() const;
  bool is_nonnegative() const;
  /// Componentwise a <= b.
  bool fits_in(const DimVector& bound) const;

  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(int k, DimVector a);

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  static DimVector unit(std::size_t n, int vertex);

  /// "(1,1,2)"
  std::string str() const;

 private:
  std::vector<int> v_;
};

struct Arrow {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ComponentDiagnosis {
  std::vector<int> vertices;  // 1-based labels, ascending
  std::string type;           // "A3", "D4", "E6", ... or empty when rejected
  bool accepted = false;
  std::string reason;         // set when rejected
};

struct DynkinDiagnosis {
  bool accepted = false;
  bool positive_definite = false;
  std::vector<ComponentDiagnosis> components;
  std::string message;
  /// "A2 + D4"
  std::string type_string() const;
};

/// Structural and Dynkin check on raw quiver data. Never throws.
DynkinDiagnosis validate_dynkin(int vertex_count, const std::vector<Arrow>& arrows);

/// A finite quiver whose underlying graph is a disjoint union of simply-laced
/// Dynkin diagrams. Vertices are 1..n. Construction validates.
class Quiver {
 public:
  /// Throws InputError with the diagnosis when validation fails.
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool is_sink(int vertex) const;
  bool is_source(int vertex) const;

  /// Same arrow list with every arrow incident to `vertex` reversed.
  Quiver reflected_at(int vertex) const;

  const DynkinDiagnosis& diagnosis() const { return diagnosis_; }

  /// Canonical text identifying the quiver up to arrow listing order.
  std::string fingerprint() const;

  DimVector zero() const { return DimVector(static_cast<std::size_t>(n_)); }
  DimVector unit(int vertex) const { return DimVector::unit(static_cast<std::size_t>(n_), vertex); }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  DynkinDiagnosis diagnosis_;
};

/// <a, b> = sum_i a_i b_i - sum_arrows a_tail b_head.
int euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
int tits_form(const Quiver& q, const DimVector& a);
int symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Topological order (tails before heads), smallest label first among ties.
std::vector<int> vertex_order_dfb(const Quiver& q);

/// Every topological order of the vertices, lexicographically sorted.
/// Capped; throws ResourceError past `cap` orders.
std::vector<std::vector<int>> all_vertex_orders_dfb(const Quiver& q, std::size_t cap = 100000);

/// {"vertices": n, "arrows": [[t,h], ...]}
Quiver parse_quiver(std::string_view json_text);
Quiver load_quiver_file(const std::string& path);
std::string quiver_to_json(const Quiver& q);

}  // namespace hallbase
