#pragma once

#include <optional>
#include <set>
#include <vector>

#include "turan7/plane_graph.hpp"

namespace turan7 {

// Every realized length of a simple x-y path, found by exhaustive DFS.
struct PathSpectrum {
  Vertex source = -1;
  Vertex target = -1;
  std::set<int> lengths;

  bool contains(int l) const { return lengths.count(l) != 0; }
};

namespace detail {

// Backtracking search for a simple cycle of length exactly `len` whose smallest
// vertex is `anchor`, restricted to vertices >= anchor (exhausted anchors deleted).
// Prunes by BFS distance back to the anchor.
inline bool cycle_from_anchor(const PlaneGraph& g, Vertex anchor, int len,
                              std::vector<Vertex>* witness) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> queue{anchor};
  dist[anchor] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    for (Vertex u = anchor; u < n; ++u)
      if (g.adjacent(v, u) && dist[u] == -1) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }

  std::vector<Vertex> path{anchor};
  VertexSet on_path;
  on_path.set(anchor);
  // depth-first extension; path.size() counts vertices, cycle needs `len` of them
  struct Frame {
    Vertex v;
    Vertex next;  // next candidate neighbor to try
  };
  std::vector<Frame> stack{{anchor, anchor}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    int have = static_cast<int>(path.size());
    if (have == len) {
      if (g.adjacent(fr.v, anchor)) {
        if (witness) *witness = path;
        return true;
      }
      on_path.reset(fr.v);
      path.pop_back();
      stack.pop_back();
      continue;
    }
    bool advanced = false;
    for (Vertex u = fr.next; u < n; ++u) {
      if (!g.adjacent(fr.v, u) || on_path.test(u)) continue;
      if (dist[u] == -1 || dist[u] > len - have) continue;  // cannot return in time
      fr.next = u + 1;
      path.push_back(u);
      on_path.set(u);
      stack.push_back({u, anchor});
      advanced = true;
      break;
    }
    if (!advanced) {
      on_path.reset(fr.v);
      path.pop_back();
      stack.pop_back();
    }
  }
  return false;
}

}  // namespace detail

// True iff g contains a simple cycle of length exactly `len`; fills `witness`
// with the vertex sequence when given.
inline bool has_cycle_of_length(const PlaneGraph& g, int len,
                                std::vector<Vertex>* witness = nullptr) {
  if (len < 3) throw Error(Errc::bad_argument, "cycle length must be >= 3");
  if (len > g.vertex_count()) return false;
  // a cycle whose smallest vertex is a uses len vertices >= a
  for (Vertex a = 0; a + len <= g.vertex_count(); ++a)
    if (detail::cycle_from_anchor(g, a, len, witness)) return true;
  return false;
}

constexpr int kSpectrumGuard = 12;

// Exhaustive DFS over simple x-y paths. Exponential; guarded.
inline PathSpectrum path_spectrum(const PlaneGraph& g, Vertex x, Vertex y,
                                  int guard = kSpectrumGuard) {
  if (x == y) throw Error(Errc::bad_argument, "path spectrum endpoints must differ");
  if (g.vertex_count() > guard)
    throw Error(Errc::too_large, "path_spectrum guard is " + std::to_string(guard) +
                                     " vertices, graph has " +
                                     std::to_string(g.vertex_count()));
  PathSpectrum s;
  s.source = x;
  s.target = y;
  const int n = g.vertex_count();
  VertexSet on_path;
  on_path.set(x);
  struct Frame {
    Vertex v;
    Vertex next;
  };
  std::vector<Frame> stack{{x, 0}};
  while (!stack.empty()) {
    Frame& fr = stack.back();
    bool advanced = false;
    for (Vertex u = fr.next; u < n; ++u) {
      if (!g.adjacent(fr.v, u) || on_path.test(u)) continue;
      fr.next = u + 1;
      if (u == y) {
        // first arrival at y ends the path; record and keep scanning siblings
        s.lengths.insert(static_cast<int>(stack.size()));
        continue;
      }
      on_path.set(u);
      stack.push_back({u, 0});
      advanced = true;
      break;
    }
    if (!advanced) {
      on_path.reset(fr.v);
      stack.pop_back();
    }
  }
  return s;
}

inline bool has_hamiltonian_path_between(const PlaneGraph& g, Vertex x, Vertex y,
                                         int guard = kSpectrumGuard) {
  return path_spectrum(g, x, y, guard).contains(g.vertex_count() - 1);
}

// Length of a shortest cycle, by BFS from every vertex.
inline int girth(const PlaneGraph& g) {
  const int n = g.vertex_count();
  int best = -1;
  for (Vertex r = 0; r < n; ++r) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<Vertex> queue{r};
    dist[r] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      if (best != -1 && 2 * dist[v] >= best) break;
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          int cand = dist[u] + dist[v] + 1;
          if (best == -1 || cand < best) best = cand;
        }
      }
    }
  }
  if (best == -1) throw Error(Errc::acyclic, "graph has no cycle");
  return best;
}

}  // namespace turan7
