#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan7/canonical.hpp"
#include "turan7/map_canon.hpp"
#include "turan7/plane_graph.hpp"

namespace turan7 {

// The triangular-block catalog. Labels B2..B7b are the embedded graphs of the
// figure catalog; a 6-vertex near triangulation whose outer cycle has no chord
// falls in its own class.
enum class BlockClass {
  B2,
  B3,
  B4a,
  B4b,
  B5a,
  B5b,
  B5c,
  B5d,
  B6a,
  B6b,
  B6c,
  B6d,
  B6e,
  B6f,
  B6g,
  B6h,
  B6i,
  B6_chordless_NT,
  B7a,
  B7b,
  Other,
};

inline const char* block_class_name(BlockClass c) {
  switch (c) {
    case BlockClass::B2: return "B2";
    case BlockClass::B3: return "B3";
    case BlockClass::B4a: return "B4a";
    case BlockClass::B4b: return "B4b";
    case BlockClass::B5a: return "B5a";
    case BlockClass::B5b: return "B5b";
    case BlockClass::B5c: return "B5c";
    case BlockClass::B5d: return "B5d";
    case BlockClass::B6a: return "B6a";
    case BlockClass::B6b: return "B6b";
    case BlockClass::B6c: return "B6c";
    case BlockClass::B6d: return "B6d";
    case BlockClass::B6e: return "B6e";
    case BlockClass::B6f: return "B6f";
    case BlockClass::B6g: return "B6g";
    case BlockClass::B6h: return "B6h";
    case BlockClass::B6i: return "B6i";
    case BlockClass::B6_chordless_NT: return "B6_chordless_NT";
    case BlockClass::B7a: return "B7a";
    case BlockClass::B7b: return "B7b";
    case BlockClass::Other: return "Other";
  }
  return "?";
}

namespace catalog {

inline PlaneGraph cycle(int k) {
  if (k < 3) throw Error(Errc::bad_argument, "cycle needs >= 3 vertices");
  std::vector<Vertex> fwd(k), rev(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = i;
    rev[i] = k - 1 - i;
  }
  return PlaneGraph::from_faces(k, {fwd, rev});
}

inline PlaneGraph k2() { return PlaneGraph::build(2, {{1}, {0}}); }

inline PlaneGraph b3() { return PlaneGraph::from_faces(3, {{0, 1, 2}, {0, 2, 1}}); }

inline PlaneGraph b4a() {
  return PlaneGraph::from_faces(4, {{0, 1, 3}, {1, 2, 3}, {0, 1, 2, 3}});
}

inline PlaneGraph b4b() {
  return PlaneGraph::from_faces(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 2}});
}

inline PlaneGraph b5a() {
  return PlaneGraph::from_faces(5, {{1, 2, 3}, {1, 3, 4}, {0, 1, 4}, {0, 1, 2, 3, 4}});
}

inline PlaneGraph b5b() {
  return PlaneGraph::from_faces(
      5, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}, {0, 1, 2, 3}});
}

inline PlaneGraph b5c() {
  return PlaneGraph::from_faces(
      5, {{1, 2, 3}, {0, 1, 4}, {1, 3, 4}, {0, 3, 4}, {0, 1, 2, 3}});
}

inline PlaneGraph b5d() {
  return PlaneGraph::from_faces(
      5, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
}

inline PlaneGraph b6a() {
  return PlaneGraph::from_faces(
      6, {{0, 1, 2}, {2, 3, 4}, {2, 4, 5}, {0, 2, 5}, {0, 1, 2, 3, 4, 5}});
}

inline PlaneGraph b6b() {
  return PlaneGraph::from_faces(
      6, {{2, 3, 4}, {2, 4, 5}, {1, 2, 5}, {0, 1, 5}, {0, 1, 2, 3, 4, 5}});
}

inline PlaneGraph b6c() {
  return PlaneGraph::from_faces(
      6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
}

inline PlaneGraph b6d() {
  return PlaneGraph::from_faces(
      6, {{1, 2, 3}, {1, 3, 5}, {3, 4, 5}, {1, 4, 5}, {0, 1, 4}, {0, 1, 2, 3, 4}});
}

inline PlaneGraph b6e() {
  return PlaneGraph::from_faces(
      6, {{1, 2, 5}, {2, 3, 5}, {1, 3, 5}, {1, 3, 4}, {0, 1, 4}, {0, 1, 2, 3, 4}});
}

inline PlaneGraph b6f() {
  return PlaneGraph::from_faces(
      6, {{0, 1, 2}, {0, 2, 5}, {2, 3, 5}, {3, 4, 5}, {0, 4, 5}, {0, 1, 2, 3, 4}});
}

inline PlaneGraph b6g() {
  return PlaneGraph::from_faces(6, {{1, 2, 3},
                                    {1, 3, 4},
                                    {1, 4, 5},
                                    {3, 4, 5},
                                    {0, 1, 5},
                                    {0, 3, 5},
                                    {0, 1, 2, 3}});
}

inline PlaneGraph b6h() {
  return PlaneGraph::from_faces(6, {{1, 2, 3},
                                    {1, 3, 5},
                                    {0, 1, 5},
                                    {3, 4, 5},
                                    {0, 4, 5},
                                    {0, 3, 4},
                                    {0, 1, 2, 3}});
}

inline PlaneGraph b6i() {
  return PlaneGraph::from_faces(6, {{0, 1, 4},
                                    {1, 3, 4},
                                    {0, 3, 4},
                                    {1, 2, 5},
                                    {2, 3, 5},
                                    {1, 3, 5},
                                    {0, 1, 2, 3}});
}

inline PlaneGraph b7a() {
  return PlaneGraph::from_faces(7, {{0, 1, 2},
                                    {2, 3, 4},
                                    {0, 4, 5},
                                    {0, 2, 6},
                                    {2, 4, 6},
                                    {0, 4, 6},
                                    {0, 1, 2, 3, 4, 5}});
}

inline PlaneGraph b7b() {
  return PlaneGraph::from_faces(7, {{1, 2, 3},
                                    {1, 3, 4},
                                    {3, 4, 5},
                                    {0, 3, 5},
                                    {0, 1, 5},
                                    {1, 5, 6},
                                    {1, 6, 5, 4},
                                    {0, 1, 2, 3}});
}

inline PlaneGraph octahedron() {
  return PlaneGraph::from_faces(6, {{0, 1, 2},
                                    {3, 4, 5},
                                    {0, 1, 5},
                                    {1, 3, 5},
                                    {1, 2, 3},
                                    {2, 3, 4},
                                    {0, 2, 4},
                                    {0, 4, 5}});
}

// The two exceptional flowers: a B5b resp. B5c block (vertices 0..4, outer
// cycle 0-1-2-3) plus petal apexes 5 and 6, each joined to 1 and 3.
inline PlaneGraph exceptional_flower_b5b() {
  return PlaneGraph::from_faces(7, {{0, 1, 4},
                                    {1, 2, 4},
                                    {2, 3, 4},
                                    {0, 3, 4},
                                    {1, 5, 3, 2},
                                    {1, 6, 3, 0},
                                    {1, 5, 3, 6}});
}

inline PlaneGraph exceptional_flower_b5c() {
  return PlaneGraph::from_faces(7, {{0, 1, 4},
                                    {1, 2, 4},
                                    {0, 2, 4},
                                    {0, 2, 3},
                                    {1, 5, 3, 2},
                                    {1, 6, 3, 0},
                                    {1, 5, 3, 6}});
}

// Girth-8 host with two degree-3 vertices joined by three length-4 paths.
inline PlaneGraph theta_4_4_4() {
  return PlaneGraph::from_faces(11, {{0, 2, 3, 4, 1, 7, 6, 5},
                                     {0, 5, 6, 7, 1, 10, 9, 8},
                                     {0, 8, 9, 10, 1, 4, 3, 2}});
}

struct MarkedGraph {
  PlaneGraph graph;
  Vertex x;
  Vertex y;
};

// Markings from the Hamiltonian-path exception figure.
inline MarkedGraph marked_b6a() { return {b6a(), 4, 0}; }
inline MarkedGraph marked_b6c() { return {b6c(), 4, 1}; }
inline MarkedGraph marked_b6d() { return {b6d(), 3, 4}; }

}  // namespace catalog

// Named graphs for the CLI and tests: catalog labels, "cN" cycles, and the
// construction ingredients.
inline std::optional<PlaneGraph> builtin_graph(const std::string& name) {
  using namespace catalog;
  static const std::map<std::string, PlaneGraph (*)()> table = {
      {"k2", k2},
      {"b2", k2},
      {"b3", b3},
      {"k3", b3},
      {"b4a", b4a},
      {"b4b", b4b},
      {"k4", b4b},
      {"b5a", b5a},
      {"b5b", b5b},
      {"b5c", b5c},
      {"b5d", b5d},
      {"b6a", b6a},
      {"b6b", b6b},
      {"b6c", b6c},
      {"b6d", b6d},
      {"b6e", b6e},
      {"b6f", b6f},
      {"b6g", b6g},
      {"b6h", b6h},
      {"b6i", b6i},
      {"b7a", b7a},
      {"b7b", b7b},
      {"octahedron", octahedron},
      {"flower-b5b", exceptional_flower_b5b},
      {"flower-b5c", exceptional_flower_b5c},
      {"theta-4-4-4", theta_4_4_4},
  };
  auto it = table.find(name);
  if (it != table.end()) return it->second();
  if (name.size() >= 2 && name[0] == 'c') {
    try {
      size_t used = 0;
      int k = std::stoi(name.substr(1), &used);
      if (used + 1 == name.size() && k >= 3) return cycle(k);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

namespace detail {

inline const std::map<std::vector<int>, BlockClass>& block_form_table() {
  static const std::map<std::vector<int>, BlockClass> table = [] {
    std::map<std::vector<int>, BlockClass> t;
    using namespace catalog;
    t[map_canonical_form(b3())] = BlockClass::B3;
    t[map_canonical_form(b4a())] = BlockClass::B4a;
    t[map_canonical_form(b4b())] = BlockClass::B4b;
    t[map_canonical_form(b5a())] = BlockClass::B5a;
    t[map_canonical_form(b5b())] = BlockClass::B5b;
    t[map_canonical_form(b5c())] = BlockClass::B5c;
    t[map_canonical_form(b5d())] = BlockClass::B5d;
    t[map_canonical_form(b6a())] = BlockClass::B6a;
    t[map_canonical_form(b6b())] = BlockClass::B6b;
    t[map_canonical_form(b6c())] = BlockClass::B6c;
    t[map_canonical_form(b6d())] = BlockClass::B6d;
    t[map_canonical_form(b6e())] = BlockClass::B6e;
    t[map_canonical_form(b6f())] = BlockClass::B6f;
    t[map_canonical_form(b6g())] = BlockClass::B6g;
    t[map_canonical_form(b6h())] = BlockClass::B6h;
    t[map_canonical_form(b6i())] = BlockClass::B6i;
    t[map_canonical_form(b7a())] = BlockClass::B7a;
    t[map_canonical_form(b7b())] = BlockClass::B7b;
    return t;
  }();
  return table;
}

}  // namespace detail

// True iff at most one face is a non-triangle. `outer` gets the index of the
// non-triangular face (or any face for triangulations).
inline bool is_near_triangulation_map(const PlaneGraph& g, FaceId* outer = nullptr) {
  int big = -1;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.face(f).length() == 3) continue;
    if (big != -1) return false;
    big = f;
  }
  if (outer) *outer = big == -1 ? 0 : big;
  return true;
}

inline bool outer_cycle_has_chord(const PlaneGraph& g, FaceId outer) {
  auto cyc = g.face_vertices(outer);
  int k = static_cast<int>(cyc.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // consecutive around the cycle
      if (g.adjacent(cyc[i], cyc[j])) return true;
    }
  return false;
}

// Classification of a standalone block map against the catalog, with the
// chordless 6-vertex near-triangulation family as its own class.
inline BlockClass classify_map(const PlaneGraph& b) {
  int n = b.vertex_count();
  if (n == 2) return BlockClass::B2;
  if (n < 2 || n > 7) return BlockClass::Other;
  const auto& table = detail::block_form_table();
  auto it = table.find(map_canonical_form(b));
  if (it != table.end()) return it->second;
  if (n == 6) {
    FaceId outer;
    if (is_near_triangulation_map(b, &outer) && !outer_cycle_has_chord(b, outer))
      return BlockClass::B6_chordless_NT;
  }
  return BlockClass::Other;
}

}  // namespace turan7
