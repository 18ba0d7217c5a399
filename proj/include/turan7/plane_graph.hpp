#pragma once

#include <algorithm>
#include <bitset>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "turan7/error.hpp"

namespace turan7 {

using Vertex = int;
using EdgeId = int;
using FaceId = int;

// Darts (half-edges): edge k owns darts 2k and 2k+1, reversal flips the low bit.
// Dart 2k leaves the smaller endpoint of edge k.
using Dart = int;

constexpr int kMaxVertices = 128;
using VertexSet = std::bitset<kMaxVertices>;

struct Face {
  std::vector<Dart> boundary;  // darts in tracing order (phi = sigma after reversal)
  int length() const { return static_cast<int>(boundary.size()); }
};

// Immutable combinatorial plane embedding: per-vertex clockwise rotation of darts,
// faces derived once at construction. Rotation systems that do not embed in the
// sphere (per connected component) are rejected.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  static PlaneGraph build(int vertex_count,
                          const std::vector<std::vector<Vertex>>& clockwise_neighbors) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
      throw Error(Errc::malformed_rotation,
                  "vertex count " + std::to_string(vertex_count) + " out of range");
    if (static_cast<int>(clockwise_neighbors.size()) > vertex_count)
      throw Error(Errc::malformed_rotation, "more rotation lines than vertices");

    PlaneGraph g;
    g.n_ = vertex_count;

    std::map<std::pair<Vertex, Vertex>, int> seen;  // unordered pair -> endpoints listed
    for (int v = 0; v < static_cast<int>(clockwise_neighbors.size()); ++v) {
      VertexSet row;
      for (Vertex u : clockwise_neighbors[v]) {
        if (u < 0 || u >= vertex_count)
          throw Error(Errc::malformed_rotation,
                      "neighbor " + std::to_string(u) + " of " + std::to_string(v) +
                          " out of range");
        if (u == v) throw Error(Errc::non_simple, "loop at vertex " + std::to_string(v));
        if (row.test(u))
          throw Error(Errc::non_simple, "parallel edge " + std::to_string(v) + "-" +
                                            std::to_string(u));
        row.set(u);
        seen[{std::min(u, v), std::max(u, v)}]++;
      }
    }
    for (const auto& [e, cnt] : seen) {
      if (cnt != 2)
        throw Error(Errc::malformed_rotation,
                    "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                        " listed at only one endpoint");
      g.edges_.push_back(e);
    }
    // seen is an ordered map, so edge ids are already lexicographic.

    g.adj_.assign(vertex_count, VertexSet{});
    g.edge_id_.clear();
    for (EdgeId e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
      auto [a, b] = g.edges_[e];
      g.adj_[a].set(b);
      g.adj_[b].set(a);
      g.edge_id_[{a, b}] = e;
    }

    g.rot_.assign(vertex_count, {});
    g.neighbors_.assign(vertex_count, {});
    for (int v = 0; v < static_cast<int>(clockwise_neighbors.size()); ++v) {
      for (Vertex u : clockwise_neighbors[v]) {
        EdgeId e = g.edge_id_.at({std::min(u, v), std::max(u, v)});
        g.rot_[v].push_back(v < u ? 2 * e : 2 * e + 1);
        g.neighbors_[v].push_back(u);
      }
    }

    g.index_darts();
    g.trace_faces();
    g.check_genus();
    return g;
  }

  // Builds an embedding from its face cycles (each face as a cyclic vertex list).
  // Orientations are propagated across shared edges; useful for graphs specified
  // by their drawings.
  static PlaneGraph from_faces(int vertex_count, const std::vector<std::vector<Vertex>>& faces) {
    std::map<std::pair<Vertex, Vertex>, int> pair_count;
    for (const auto& f : faces) {
      if (f.size() < 2) throw Error(Errc::parse, "face with fewer than 2 vertices");
      for (size_t i = 0; i < f.size(); ++i) {
        Vertex a = f[i], b = f[(i + 1) % f.size()];
        if (a == b) throw Error(Errc::parse, "repeated vertex on face boundary");
        pair_count[{std::min(a, b), std::max(a, b)}]++;
      }
    }
    std::map<std::pair<Vertex, Vertex>, EdgeId> ids;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [p, c] : pair_count) {
      if (c != 2)
        throw Error(Errc::parse, "edge " + std::to_string(p.first) + "-" +
                                     std::to_string(p.second) + " bounds " +
                                     std::to_string(c) + " face sides, expected 2");
      ids[p] = static_cast<EdgeId>(edges.size());
      edges.push_back(p);
    }
    auto dart_of = [&](Vertex a, Vertex b) {
      EdgeId e = ids.at({std::min(a, b), std::max(a, b)});
      return a < b ? 2 * e : 2 * e + 1;
    };

    int m = static_cast<int>(edges.size());
    std::vector<int> orient(faces.size(), -1);  // 0 = as given, 1 = reversed
    std::vector<bool> dart_used(2 * m, false);
    std::vector<std::vector<int>> faces_of_pair(m);
    for (size_t fi = 0; fi < faces.size(); ++fi)
      for (size_t i = 0; i < faces[fi].size(); ++i) {
        Vertex a = faces[fi][i], b = faces[fi][(i + 1) % faces[fi].size()];
        faces_of_pair[ids.at({std::min(a, b), std::max(a, b)})].push_back(static_cast<int>(fi));
      }

    std::vector<Dart> sigma_next(2 * m, -1);
    auto face_darts = [&](int fi, int dir) {
      std::vector<Dart> ds;
      const auto& f = faces[fi];
      size_t k = f.size();
      for (size_t i = 0; i < k; ++i) {
        Vertex a = dir == 0 ? f[i] : f[(k - i) % k];
        Vertex b = dir == 0 ? f[(i + 1) % k] : f[k - 1 - i];
        ds.push_back(dart_of(a, b));
      }
      return ds;
    };

    for (size_t start = 0; start < faces.size(); ++start) {
      if (orient[start] != -1) continue;
      std::vector<int> queue{static_cast<int>(start)};
      orient[start] = 0;
      while (!queue.empty()) {
        int fi = queue.back();
        queue.pop_back();
        auto ds = face_darts(fi, orient[fi]);
        for (Dart d : ds) {
          if (dart_used[d]) throw Error(Errc::parse, "face list is not consistently orientable");
          dart_used[d] = true;
        }
        for (size_t i = 0; i < ds.size(); ++i) {
          Dart d = ds[i], next = ds[(i + 1) % ds.size()];
          sigma_next[d ^ 1] = next;  // phi(d) = next and phi = sigma after reversal
          for (int other : faces_of_pair[d >> 1]) {
            if (orient[other] != -1) continue;
            // the other side must traverse this edge in the opposite direction
            auto as_given = face_darts(other, 0);
            bool has_rev = std::find(as_given.begin(), as_given.end(), d ^ 1) != as_given.end();
            bool has_fwd = std::find(as_given.begin(), as_given.end(), d) != as_given.end();
            if (has_rev && has_fwd) continue;  // both darts in one face; no constraint
            orient[other] = has_rev ? 0 : 1;
            queue.push_back(other);
          }
        }
      }
    }

    // Assemble clockwise neighbor lists by walking sigma at each vertex.
    std::vector<std::vector<Dart>> at(vertex_count);
    for (EdgeId e = 0; e < m; ++e) {
      at[edges[e].first].push_back(2 * e);
      at[edges[e].second].push_back(2 * e + 1);
    }
    std::vector<std::vector<Vertex>> nbrs(vertex_count);
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (at[v].empty()) continue;
      Dart d0 = at[v][0], d = d0;
      size_t steps = 0;
      do {
        const auto& pr = edges[d >> 1];
        nbrs[v].push_back((d & 1) == 0 ? pr.second : pr.first);
        d = sigma_next[d];
        if (d < 0 || ++steps > at[v].size())
          throw Error(Errc::parse, "face list does not induce a rotation at vertex " +
                                       std::to_string(v));
      } while (d != d0);
      if (nbrs[v].size() != at[v].size())
        throw Error(Errc::parse, "face list splits the rotation at vertex " + std::to_string(v));
    }
    return build(vertex_count, nbrs);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  static Dart reversal(Dart d) { return d ^ 1; }
  Vertex dart_origin(Dart d) const {
    const auto& e = edges_[d >> 1];
    return (d & 1) == 0 ? e.first : e.second;
  }
  Vertex dart_target(Dart d) const { return dart_origin(d ^ 1); }
  EdgeId edge_of(Dart d) const { return d >> 1; }

  // sigma: next dart clockwise around the origin of d
  Dart next_at_origin(Dart d) const { return sigma_[d]; }
  Dart prev_at_origin(Dart d) const { return sigma_inv_[d]; }
  FaceId face_of(Dart d) const { return face_of_[d]; }
  std::pair<FaceId, FaceId> faces_of_edge(EdgeId e) const {
    return {face_of_[2 * e], face_of_[2 * e + 1]};
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const VertexSet& neighbor_set(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rot_; }

  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const {
    auto it = edge_id_.find({std::min(u, v), std::max(u, v)});
    if (it == edge_id_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Vertex> face_vertices(FaceId f) const {
    std::vector<Vertex> vs;
    vs.reserve(faces_[f].boundary.size());
    for (Dart d : faces_[f].boundary) vs.push_back(dart_origin(d));
    return vs;
  }

  // Sorted edge ids of a face boundary; the comparison key for hole detection.
  std::vector<EdgeId> face_edge_key(FaceId f) const {
    std::vector<EdgeId> es;
    es.reserve(faces_[f].boundary.size());
    for (Dart d : faces_[f].boundary) es.push_back(d >> 1);
    std::sort(es.begin(), es.end());
    return es;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<int> stack{0};
    VertexSet vis;
    vis.set(0);
    int cnt = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : neighbors_[v])
        if (!vis.test(u)) {
          vis.set(u);
          ++cnt;
          stack.push_back(u);
        }
    }
    return cnt == n_;
  }

  // True iff >= 3 vertices, connected, and no cutvertex (lowpoint computation).
  bool is_two_connected() const {
    if (n_ < 3 || !connected()) return false;
    std::vector<int> disc(n_, -1), low(n_, 0), parent(n_, -1), child_count(n_, 0);
    std::vector<std::pair<Vertex, size_t>> stack;
    int timer = 0;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0});
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < neighbors_[v].size()) {
        Vertex u = neighbors_[v][i++];
        if (disc[u] == -1) {
          parent[u] = v;
          child_count[v]++;
          disc[u] = low[u] = timer++;
          stack.push_back({u, 0});
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (p != 0 && low[v] >= disc[p]) return false;  // p is a cutvertex
        }
      }
    }
    return child_count[0] < 2;
  }

  int distance(Vertex x, Vertex y) const {
    if (x == y) return 0;
    std::vector<int> dist(n_, -1);
    std::vector<Vertex> queue{x};
    dist[x] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      for (Vertex u : neighbors_[v])
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          if (u == y) return dist[u];
          queue.push_back(u);
        }
    }
    throw Error(Errc::disconnected, "no path between " + std::to_string(x) + " and " +
                                        std::to_string(y));
  }

  bool operator==(const PlaneGraph& o) const { return n_ == o.n_ && neighbors_ == o.neighbors_; }

 private:
  void index_darts() {
    sigma_.assign(dart_count(), -1);
    sigma_inv_.assign(dart_count(), -1);
    for (Vertex v = 0; v < n_; ++v) {
      const auto& r = rot_[v];
      for (size_t i = 0; i < r.size(); ++i) {
        Dart d = r[i], nx = r[(i + 1) % r.size()];
        sigma_[d] = nx;
        sigma_inv_[nx] = d;
      }
    }
  }

  void trace_faces() {
    face_of_.assign(dart_count(), -1);
    for (Dart d0 = 0; d0 < dart_count(); ++d0) {
      if (face_of_[d0] != -1) continue;
      Face f;
      Dart d = d0;
      do {
        face_of_[d] = static_cast<FaceId>(faces_.size());
        f.boundary.push_back(d);
        d = sigma_[d ^ 1];  // phi = sigma after reversal
      } while (d != d0);
      faces_.push_back(std::move(f));
    }
  }

  void check_genus() const {
    // Euler per connected component (components with at least one edge).
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    for (Vertex s = 0; s < n_; ++s) {
      if (comp[s] != -1) continue;
      std::vector<Vertex> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : neighbors_[v])
          if (comp[u] == -1) {
            comp[u] = ncomp;
            stack.push_back(u);
          }
      }
      ++ncomp;
    }
    std::vector<int> vc(ncomp, 0), ec(ncomp, 0), fc(ncomp, 0);
    for (Vertex v = 0; v < n_; ++v) vc[comp[v]]++;
    for (const auto& e : edges_) ec[comp[e.first]]++;
    for (const auto& f : faces_) fc[comp[dart_origin(f.boundary[0])]]++;
    for (int c = 0; c < ncomp; ++c) {
      if (ec[c] == 0) continue;  // isolated vertex
      if (vc[c] - ec[c] + fc[c] != 2)
        throw Error(Errc::not_planar, "rotation system has genus > 0 (V-E+F = " +
                                          std::to_string(vc[c] - ec[c] + fc[c]) + ")");
    }
  }

  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::map<std::pair<Vertex, Vertex>, EdgeId> edge_id_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<VertexSet> adj_;
  std::vector<Dart> sigma_, sigma_inv_;
  std::vector<FaceId> face_of_;
  std::vector<Face> faces_;
};

}  // namespace turan7
