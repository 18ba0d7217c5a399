#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan7/plane_graph.hpp"

namespace turan7 {

// Canonical forms for connected combinatorial maps, identifying mirror images.
// Two plane graphs get equal forms iff some relabeling carries one rotation
// system to the other or to its reverse, i.e. they have the same facial
// structure up to redrawing on the sphere.

namespace detail {

// Traversal encoding of the map from a start dart: darts are numbered in
// discovery order; for each dart in order we emit (label of sigma(d), label of
// reversal(d)). Equal encodings <=> an orientation-respecting iso maps one
// start dart to the other.
inline void map_encoding(const PlaneGraph& g, Dart start, bool mirrored,
                         std::vector<int>& out) {
  const int D = g.dart_count();
  static thread_local std::vector<int> label;
  static thread_local std::vector<Dart> order;
  label.assign(D, -1);
  order.clear();
  order.reserve(D);
  label[start] = 0;
  order.push_back(start);
  for (size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    Dart s = mirrored ? g.prev_at_origin(d) : g.next_at_origin(d);
    Dart r = PlaneGraph::reversal(d);
    for (Dart x : {s, r})
      if (label[x] == -1) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    out.push_back(label[s]);
    out.push_back(label[r]);
  }
}

// Vertex discovery labels induced by the dart traversal from `start`.
inline std::vector<int> vertex_labels(const PlaneGraph& g, Dart start, bool mirrored) {
  const int D = g.dart_count();
  std::vector<int> label(D, -1);
  std::vector<Dart> order;
  label[start] = 0;
  order.push_back(start);
  for (size_t i = 0; i < order.size(); ++i) {
    Dart d = order[i];
    Dart s = mirrored ? g.prev_at_origin(d) : g.next_at_origin(d);
    Dart r = PlaneGraph::reversal(d);
    for (Dart x : {s, r})
      if (label[x] == -1) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
  }
  std::vector<int> vlab(g.vertex_count(), -1);
  int next = 0;
  for (Dart d : order) {
    Vertex v = g.dart_origin(d);
    if (vlab[v] == -1) vlab[v] = next++;
  }
  return vlab;
}

}  // namespace detail

// Minimum encoding over all start darts and both orientations.
inline std::vector<int> map_canonical_form(const PlaneGraph& g) {
  if (g.dart_count() == 0) return {g.vertex_count()};
  std::vector<int> best, cur;
  for (bool mir : {false, true})
    for (Dart s = 0; s < g.dart_count(); ++s) {
      cur.clear();
      detail::map_encoding(g, s, mir, cur);
      if (best.empty() || cur < best) best.swap(cur);
    }
  best.push_back(g.vertex_count());
  return best;
}

// Canonical form of (map, distinguished face): start darts restricted to the
// face boundary (or its mirror image, which consists of the reversed darts).
inline std::vector<int> rooted_canonical_form(const PlaneGraph& g, FaceId root) {
  std::vector<int> best, cur;
  for (Dart d : g.face(root).boundary) {
    cur.clear();
    detail::map_encoding(g, d, false, cur);
    if (best.empty() || cur < best) best.swap(cur);
    cur.clear();
    detail::map_encoding(g, PlaneGraph::reversal(d), true, cur);
    if (cur < best) best.swap(cur);
  }
  best.push_back(g.vertex_count());
  return best;
}

// Canonical form of (map, unordered marked vertex pair).
inline std::vector<int> marked_canonical_form(const PlaneGraph& g, Vertex x, Vertex y) {
  std::vector<int> best, cur;
  for (bool mir : {false, true})
    for (Dart s = 0; s < g.dart_count(); ++s) {
      cur.clear();
      detail::map_encoding(g, s, mir, cur);
      auto vlab = detail::vertex_labels(g, s, mir);
      cur.push_back(std::min(vlab[x], vlab[y]));
      cur.push_back(std::max(vlab[x], vlab[y]));
      if (best.empty() || cur < best) best.swap(cur);
    }
  best.push_back(g.vertex_count());
  return best;
}

inline std::string form_to_string(const std::vector<int>& f) {
  std::string s;
  s.reserve(f.size() * 3);
  for (int v : f) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

}  // namespace turan7
