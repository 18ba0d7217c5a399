#pragma once

#include <set>
#include <vector>

#include "turan7/plane_graph.hpp"

// Test-only oracles, independent of the library's search code paths.

namespace turan7::testing {

// Lengths of all simple cycles, by plain recursive DFS anchored at each
// minimum vertex. No pruning; exponential; fine for n <= 9.
inline void naive_cycles_rec(const PlaneGraph& g, Vertex anchor, Vertex cur,
                             std::vector<bool>& used, int len, std::set<int>& out) {
  for (Vertex u : g.neighbors(cur)) {
    if (u == anchor && len >= 3) out.insert(len);
    if (u <= anchor || used[u]) continue;
    used[u] = true;
    naive_cycles_rec(g, anchor, u, used, len + 1, out);
    used[u] = false;
  }
}

inline std::set<int> naive_cycle_lengths(const PlaneGraph& g) {
  std::set<int> out;
  std::vector<bool> used(g.vertex_count(), false);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    used.assign(g.vertex_count(), false);
    used[a] = true;
    naive_cycles_rec(g, a, a, used, 1, out);
  }
  return out;
}

// Two triangles sharing one vertex.
inline PlaneGraph bowtie() {
  return PlaneGraph::build(5, {{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}});
}

inline PlaneGraph path(int k) {
  std::vector<std::vector<Vertex>> rot(k);
  for (int v = 0; v + 1 < k; ++v) {
    rot[v].push_back(v + 1);
    rot[v + 1].push_back(v);
  }
  return PlaneGraph::build(k, rot);
}

}  // namespace turan7::testing
