#include "hallbase/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hallbase/errors.hpp"

namespace hallbase {

// ---------------------------------------------------------------- DimVector

int DimVector::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool DimVector::fits_in(const DimVector& bound) const {
  if (bound.size() != size()) return false;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > bound.v_[i]) return false;
  return true;
}

DimVector& DimVector::operator+=(const DimVector& o) {
  if (o.size() != size()) throw InputError("dimension vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  if (o.size() != size()) throw InputError("dimension vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

DimVector operator*(int k, DimVector a) {
  for (auto& x : a.v_) x *= k;
  return a;
}

DimVector DimVector::unit(std::size_t n, int vertex) {
  DimVector d(n);
  d.v_.at(static_cast<std::size_t>(vertex - 1)) = 1;
  return d;
}

std::string DimVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- Dynkin check

namespace {

// Leading principal minors of the symmetrized form matrix, by fraction-free
// elimination. All minors of a Cartan-like matrix stay small.
bool leading_minors_positive(int n, const std::vector<Arrow>& arrows) {
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  for (const auto& a : arrows) {
    m[a.tail - 1][a.head - 1] -= 1;
    m[a.head - 1][a.tail - 1] -= 1;
  }
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    // After Bareiss step k-1, m[k][k] is the k-th leading principal minor.
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] -
                       static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<long long>(num / prev);
      }
    prev = m[k][k];
  }
  return true;
}

ComponentDiagnosis classify_component(const std::vector<int>& verts,
                                      const std::vector<std::vector<int>>& adj,
                                      std::size_t edge_count) {
  ComponentDiagnosis c;
  c.vertices = verts;
  const std::size_t k = verts.size();
  if (edge_count != k - 1) {
    c.reason = "component contains a cycle (underlying graph is not a tree)";
    return c;
  }
  std::vector<int> branch;
  for (int v : verts) {
    const auto deg = adj[v].size();
    if (deg > 3) {
      c.reason = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg);
      return c;
    }
    if (deg == 3) branch.push_back(v);
  }
  if (branch.empty()) {
    c.accepted = true;
    c.type = "A" + std::to_string(k);
    return c;
  }
  if (branch.size() > 1) {
    c.reason = "more than one branch vertex";
    return c;
  }
  const int centre = branch.front();
  std::vector<int> arms;
  for (int start : adj[centre]) {
    int len = 1, prev = centre, cur = start;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    c.accepted = true;
    c.type = "D" + std::to_string(k);
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) {
    c.accepted = true;
    c.type = "E" + std::to_string(k);
  } else {
    c.reason = "branch arms (" + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
               std::to_string(arms[2]) + ") are not of type D or E";
  }
  return c;
}

}  // namespace

std::string DynkinDiagnosis::type_string() const {
  std::string s;
  for (const auto& c : components) {
    if (!s.empty()) s += " + ";
    s += c.accepted ? c.type : std::string("?");
  }
  return s;
}

DynkinDiagnosis validate_dynkin(int vertex_count, const std::vector<Arrow>& arrows) {
  DynkinDiagnosis d;
  if (vertex_count < 1) {
    d.message = "quiver must have at least one vertex";
    return d;
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows) {
    if (a.tail < 1 || a.tail > vertex_count || a.head < 1 || a.head > vertex_count) {
      d.message = "arrow " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                  " refers to a vertex outside 1.." + std::to_string(vertex_count);
      return d;
    }
    if (a.tail == a.head) {
      d.message = "loop at vertex " + std::to_string(a.tail);
      return d;
    }
    const auto key = std::minmax(a.tail, a.head);
    if (!seen.insert({key.first, key.second}).second) {
      d.message = "vertices " + std::to_string(key.first) + " and " + std::to_string(key.second) +
                  " are joined by more than one arrow (not a tree; oriented cycle or multiple edge)";
      return d;
    }
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count) + 1);
  for (const auto& a : arrows) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  std::vector<int> comp(static_cast<std::size_t>(vertex_count) + 1, -1);
  int ncomp = 0;
  bool all_ok = true;
  for (int s = 1; s <= vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> verts;
    std::queue<int> bfs;
    bfs.push(s);
    comp[s] = ncomp;
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      verts.push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = ncomp;
          bfs.push(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::size_t edges = 0;
    for (const auto& a : arrows)
      if (comp[a.tail] == ncomp) ++edges;
    auto c = classify_component(verts, adj, edges);
    all_ok = all_ok && c.accepted;
    d.components.push_back(std::move(c));
    ++ncomp;
  }
  d.positive_definite = leading_minors_positive(vertex_count, arrows);
  if (all_ok != d.positive_definite) {
    d.message = "internal: ADE shape test and positive-definiteness disagree";
    return d;
  }
  d.accepted = all_ok;
  if (!all_ok) {
    for (const auto& c : d.components)
      if (!c.accepted) {
        std::string vs;
        for (int v : c.vertices) vs += (vs.empty() ? "" : ",") + std::to_string(v);
        d.message = "component {" + vs + "} is not a simply-laced Dynkin diagram: " + c.reason;
        break;
      }
  } else {
    d.message = "Dynkin quiver of type " + d.type_string();
  }
  return d;
}

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)), diagnosis_(validate_dynkin(n_, arrows_)) {
  if (!diagnosis_.accepted) throw InputError("invalid quiver: " + diagnosis_.message);
}

bool Quiver::is_sink(int vertex) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [vertex](const Arrow& a) { return a.tail == vertex; });
}

bool Quiver::is_source(int vertex) const {
  return std::none_of(arrows_.begin(), arrows_.end(),
                      [vertex](const Arrow& a) { return a.head == vertex; });
}

Quiver Quiver::reflected_at(int vertex) const {
  auto arrows = arrows_;
  for (auto& a : arrows)
    if (a.tail == vertex || a.head == vertex) std::swap(a.tail, a.head);
  return Quiver(n_, std::move(arrows));
}

std::string Quiver::fingerprint() const {
  std::vector<std::pair<int, int>> sorted;
  for (const auto& a : arrows_) sorted.emplace_back(a.tail, a.head);
  std::sort(sorted.begin(), sorted.end());
  std::string s = "n=" + std::to_string(n_) + ";";
  for (const auto& [t, h] : sorted) s += std::to_string(t) + ">" + std::to_string(h) + ";";
  return s;
}

// ---------------------------------------------------------------- forms

namespace {
void check_len(const Quiver& q, const DimVector& a) {
  if (a.size() != static_cast<std::size_t>(q.vertex_count()))
    throw InputError("dimension vector " + a.str() + " does not match a quiver with " +
                     std::to_string(q.vertex_count()) + " vertices");
}
}  // namespace

int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  check_len(q, a);
  check_len(q, b);
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  for (const auto& r : q.arrows()) s -= a.at_vertex(r.tail) * b.at_vertex(r.head);
  return s;
}

int tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

int symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

// ---------------------------------------------------------------- vertex orders

std::vector<int> vertex_order_dfb(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : q.arrows()) ++indeg[a.head];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& a : q.arrows())
      if (a.tail == v && --indeg[a.head] == 0) ready.push(a.head);
  }
  verify(static_cast<int>(order.size()) == n, "vertex_order_dfb: quiver has an oriented cycle");
  return order;
}

std::vector<std::vector<int>> all_vertex_orders_dfb(const Quiver& q, std::size_t cap) {
  const int n = q.vertex_count();
  std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& a : q.arrows()) ++indeg[a.head];
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      if (out.size() >= cap) throw ResourceError("vertex order enumeration cap exceeded");
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v] || indeg[v] != 0) continue;
      used[v] = 1;
      cur.push_back(v);
      for (const auto& a : q.arrows())
        if (a.tail == v) --indeg[a.head];
      rec();
      for (const auto& a : q.arrows())
        if (a.tail == v) ++indeg[a.head];
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------- JSON

Quiver parse_quiver(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("quiver JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw InputError("quiver JSON must be an object with \"vertices\" and \"arrows\"");
  if (!j["vertices"].is_number_integer()) throw InputError("\"vertices\" must be an integer");
  if (!j["arrows"].is_array()) throw InputError("\"arrows\" must be an array");
  const int n = j["vertices"].get<int>();
  std::vector<Arrow> arrows;
  for (const auto& a : j["arrows"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw InputError("each arrow must be a pair of integers [tail, head]");
    arrows.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return Quiver(n, std::move(arrows));
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open quiver file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

std::string quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = q.vertex_count();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) j["arrows"].push_back({a.tail, a.head});
  return j.dump();
}

}  // namespace hallbase
