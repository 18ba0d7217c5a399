#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "turan7/error.hpp"

namespace turan7 {

// Abstract (unembedded) graphs on up to 12 vertices, as adjacency bitmask rows.
struct SmallGraph {
  int n = 0;
  std::array<uint16_t, 12> adj{};

  static constexpr int kMaxN = 12;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void add_edge(int u, int v) {
    adj[u] |= static_cast<uint16_t>(1u << v);
    adj[v] |= static_cast<uint16_t>(1u << u);
  }
  void remove_edge(int u, int v) {
    adj[u] &= static_cast<uint16_t>(~(1u << v));
    adj[v] &= static_cast<uint16_t>(~(1u << u));
  }
  int degree(int v) const { return __builtin_popcount(adj[v]); }
  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  bool connected() const {
    if (n == 0) return true;
    uint16_t seen = 1, frontier = 1;
    while (frontier) {
      uint16_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (1u << n) - 1;
  }

  bool two_connected() const {
    if (n < 3 || !connected()) return false;
    // small n: deleting any vertex must leave a connected graph
    for (int v = 0; v < n; ++v) {
      uint16_t alive = static_cast<uint16_t>(((1u << n) - 1) & ~(1u << v));
      int start = __builtin_ctz(alive);
      uint16_t seen = static_cast<uint16_t>(1u << start), frontier = seen;
      while (frontier) {
        uint16_t next = 0;
        for (int u = 0; u < n; ++u)
          if ((frontier >> u) & 1) next |= adj[u];
        next &= alive;
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != alive) return false;
    }
    return true;
  }
};

// Upper-triangle bit packing of the adjacency matrix under a vertex->position map.
inline uint64_t adjacency_code(const SmallGraph& g, const int* pos) {
  uint64_t code = 0;
  int bit = 0;
  static thread_local std::array<int, SmallGraph::kMaxN> vert_at;
  for (int v = 0; v < g.n; ++v) vert_at[pos[v]] = v;
  for (int p = 0; p < g.n; ++p)
    for (int q = p + 1; q < g.n; ++q, ++bit)
      if (g.has_edge(vert_at[p], vert_at[q])) code |= 1ULL << bit;
  return code;
}

inline SmallGraph graph_from_code(int n, uint64_t code) {
  SmallGraph g;
  g.n = n;
  int bit = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++bit)
      if ((code >> bit) & 1) g.add_edge(p, q);
  return g;
}

namespace detail {

// Iterated colour refinement followed by individualisation on the first
// non-singleton cell; the canonical code is the minimum adjacency packing
// over all discrete colourings reached.
class Canonicalizer {
 public:
  explicit Canonicalizer(const SmallGraph& g) : g_(g) {}

  uint64_t run() {
    best_set_ = false;
    std::array<int, SmallGraph::kMaxN> colors{};
    colors.fill(0);
    descend(colors);
    return best_;
  }

 private:
  using Colors = std::array<int, SmallGraph::kMaxN>;

  int refine(Colors& c) const {
    int ncolors = dense(c);
    while (true) {
      std::array<uint64_t, SmallGraph::kMaxN> sig{};
      for (int v = 0; v < g_.n; ++v) {
        uint64_t s = 0;
        uint16_t m = g_.adj[v];
        while (m) {
          int u = __builtin_ctz(m);
          m &= m - 1;
          s += 1ULL << (4 * c[u]);  // n <= 12 so counts fit in 4 bits
        }
        sig[v] = (static_cast<uint64_t>(c[v]) << 48) | s;
      }
      std::array<int, SmallGraph::kMaxN> order{};
      for (int v = 0; v < g_.n; ++v) order[v] = v;
      std::sort(order.begin(), order.begin() + g_.n,
                [&](int a, int b) { return sig[a] < sig[b]; });
      Colors nc{};
      int k = 0;
      for (int i = 0; i < g_.n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++k;
        nc[order[i]] = k;
      }
      if (k + 1 == ncolors) return ncolors;
      ncolors = k + 1;
      c = nc;
    }
  }

  int dense(Colors& c) const {
    std::array<int, SmallGraph::kMaxN> order{};
    for (int v = 0; v < g_.n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + g_.n, [&](int a, int b) {
      return c[a] != c[b] ? c[a] < c[b] : a < b;
    });
    int k = 0;
    Colors nc{};
    for (int i = 0; i < g_.n; ++i) {
      if (i > 0 && c[order[i]] != c[order[i - 1]]) ++k;
      nc[order[i]] = k;
    }
    c = nc;
    return k + 1;
  }

  void descend(Colors colors) {
    int ncolors = refine(colors);
    if (ncolors == g_.n) {
      uint64_t code = adjacency_code(g_, colors.data());
      if (!best_set_ || code < best_) {
        best_ = code;
        best_set_ = true;
      }
      return;
    }
    // first non-singleton colour class
    std::array<int, SmallGraph::kMaxN> count{};
    for (int v = 0; v < g_.n; ++v) count[colors[v]]++;
    int target = 0;
    while (count[target] < 2) ++target;
    for (int v = 0; v < g_.n; ++v) {
      if (colors[v] != target) continue;
      Colors child = colors;
      for (int u = 0; u < g_.n; ++u)
        if (child[u] >= target) ++child[u];
      child[v] = target;
      descend(child);
    }
  }

  const SmallGraph& g_;
  uint64_t best_ = 0;
  bool best_set_ = false;
};

}  // namespace detail

// Canonical code: equal codes iff isomorphic. Fits in 64 bits for n <= 11.
inline uint64_t canonical_code(const SmallGraph& g) {
  if (g.n > 11) throw Error(Errc::too_large, "canonical_code supports n <= 11");
  if (g.n <= 1) return 0;
  return detail::Canonicalizer(g).run();
}

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  return a.n == b.n && canonical_code(a) == canonical_code(b);
}

}  // namespace turan7
