#pragma once

// Finite colored crystal graphs with dense operator tables.

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "base.hpp"

namespace kac {

inline constexpr int kNull = -1;    // operator returns 0
inline constexpr int kEscape = -2;  // operator leaves the vertex set

template <class V, class Hash = std::hash<V>>
class CrystalGraph {
 public:
  Rank rank;
  std::vector<int> colors;  // contiguous, increasing
  std::vector<V> vertices;
  std::vector<Weight> weights;
  std::vector<int> f_to, e_to;  // [vertex * colors + slot]
  std::unordered_map<V, int, Hash> index;

  int size() const { return static_cast<int>(vertices.size()); }
  int num_colors() const { return static_cast<int>(colors.size()); }
  int slot(int k) const { return k - colors.front(); }
  bool has_color(int k) const { return !colors.empty() && k >= colors.front() && k <= colors.back(); }

  int f(int v, int k) const { return f_to[static_cast<std::size_t>(v * num_colors() + slot(k))]; }
  int e(int v, int k) const { return e_to[static_cast<std::size_t>(v * num_colors() + slot(k))]; }
  int& f(int v, int k) { return f_to[static_cast<std::size_t>(v * num_colors() + slot(k))]; }
  int& e(int v, int k) { return e_to[static_cast<std::size_t>(v * num_colors() + slot(k))]; }
  int target(int v, int k, Dir d) const { return d == Dir::F ? f(v, k) : e(v, k); }

  std::optional<int> find(const V& v) const {
    auto it = index.find(v);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  struct Edge {
    int src, color, dst;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// Edges b →ᵏ b' (f̃_k b = b') in vertex order, then color order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < size(); ++v)
      for (int k : colors)
        if (f(v, k) >= 0) out.push_back({v, k, f(v, k)});
    return out;
  }

  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count_if(f_to.begin(), f_to.end(), [](int t) { return t >= 0; }));
  }
};

/// Closure of `source` under all ẽ_k, f̃_k, in BFS order. `op(k, dir, v)`
/// returns the image or nullopt; `wt(v)` its weight. Throws SizeCapExceeded
/// once more than `cap` vertices are discovered.
template <class V, class Hash = std::hash<V>, class Op, class Wt>
CrystalGraph<V, Hash> generate_closure(const Rank& rank, std::vector<int> colors, const V& source, Op&& op,
                                       Wt&& wt, std::size_t cap = static_cast<std::size_t>(-1)) {
  CrystalGraph<V, Hash> g;
  g.rank = rank;
  g.colors = std::move(colors);
  const int nc = g.num_colors();
  auto add = [&](const V& v) {
    auto [it, inserted] = g.index.emplace(v, g.size());
    if (inserted) {
      if (g.vertices.size() >= cap) throw SizeCapExceeded(g.vertices.size() + 1, cap);
      g.vertices.push_back(v);
      g.weights.push_back(wt(v));
      g.f_to.insert(g.f_to.end(), static_cast<std::size_t>(nc), kNull);
      g.e_to.insert(g.e_to.end(), static_cast<std::size_t>(nc), kNull);
    }
    return it->second;
  };
  add(source);
  for (int v = 0; v < g.size(); ++v) {
    for (int k : g.colors) {
      for (Dir d : {Dir::F, Dir::E}) {
        std::optional<V> y = op(k, d, g.vertices[static_cast<std::size_t>(v)]);
        if (!y) continue;
        int t = add(*y);
        (d == Dir::F ? g.f(v, k) : g.e(v, k)) = t;
      }
    }
  }
  return g;
}

/// Graph on a prescribed vertex list; images outside the list are marked kEscape.
template <class V, class Hash = std::hash<V>, class Op, class Wt>
CrystalGraph<V, Hash> build_graph(const Rank& rank, std::vector<int> colors, std::vector<V> verts, Op&& op,
                                  Wt&& wt) {
  CrystalGraph<V, Hash> g;
  g.rank = rank;
  g.colors = std::move(colors);
  g.vertices = std::move(verts);
  const int nc = g.num_colors();
  g.index.reserve(g.vertices.size());
  for (int v = 0; v < g.size(); ++v) g.index.emplace(g.vertices[static_cast<std::size_t>(v)], v);
  g.f_to.assign(g.vertices.size() * static_cast<std::size_t>(nc), kNull);
  g.e_to.assign(g.vertices.size() * static_cast<std::size_t>(nc), kNull);
  for (int v = 0; v < g.size(); ++v) {
    const V& x = g.vertices[static_cast<std::size_t>(v)];
    g.weights.push_back(wt(x));
    for (int k : g.colors)
      for (Dir d : {Dir::F, Dir::E}) {
        std::optional<V> y = op(k, d, x);
        if (!y) continue;
        auto it = g.index.find(*y);
        (d == Dir::F ? g.f(v, k) : g.e(v, k)) = it == g.index.end() ? kEscape : it->second;
      }
  }
  return g;
}

struct HighestWeightCensus {
  std::vector<int> genuine;  // ẽ-killed vertices of weight λ
  std::vector<int> fake;     // ẽ-killed vertices of any other weight
};

template <class G>
HighestWeightCensus highest_weight_elements(const G& g, const Weight& lambda) {
  HighestWeightCensus out;
  for (int v = 0; v < g.size(); ++v) {
    bool killed = std::all_of(g.colors.begin(), g.colors.end(), [&](int k) { return g.e(v, k) == kNull; });
    if (!killed) continue;
    (g.weights[static_cast<std::size_t>(v)] == lambda ? out.genuine : out.fake).push_back(v);
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Connected components of the underlying undirected graph (e- and f-edges).
template <class G>
int count_components(const G& g) {
  UnionFind uf(g.size());
  int comps = g.size();
  for (int v = 0; v < g.size(); ++v)
    for (int k : g.colors)
      for (int t : {g.f(v, k), g.e(v, k)})
        if (t >= 0 && uf.unite(v, t)) --comps;
  return comps;
}

template <class G>
std::string to_dot(const G& g, const std::string& name = "crystal") {
  std::string s = "digraph " + name + " {\n";
  for (int v = 0; v < g.size(); ++v) s += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
  for (const auto& e : g.edges()) {
    s += "  " + std::to_string(e.src) + " -> " + std::to_string(e.dst) + " [label=\"" + std::to_string(e.color) +
         "\"];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace kac
