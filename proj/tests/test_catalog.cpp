#include <catch2/catch_amalgamated.hpp>

#include "turan7/catalog.hpp"
#include "turan7/cycle_search.hpp"
#include "turan7/map_canon.hpp"

using namespace turan7;

TEST_CASE("catalog graphs have the figure face structure") {
  struct Row {
    const char* name;
    int v, e, f;
  };
  for (const Row& r : {Row{"b3", 3, 3, 2},
                       Row{"b4a", 4, 5, 3},
                       Row{"b4b", 4, 6, 4},
                       Row{"b5a", 5, 7, 4},
                       Row{"b5b", 5, 8, 5},
                       Row{"b5c", 5, 8, 5},
                       Row{"b5d", 5, 9, 6},
                       Row{"b6a", 6, 9, 5},
                       Row{"b6b", 6, 9, 5},
                       Row{"b6c", 6, 9, 5},
                       Row{"b6d", 6, 10, 6},
                       Row{"b6e", 6, 10, 6},
                       Row{"b6f", 6, 10, 6},
                       Row{"b6g", 6, 11, 7},
                       Row{"b6h", 6, 11, 7},
                       Row{"b6i", 6, 11, 7},
                       Row{"b7a", 7, 12, 7},
                       Row{"b7b", 7, 13, 8},
                       Row{"octahedron", 6, 12, 8},
                       Row{"flower-b5b", 7, 12, 7},
                       Row{"flower-b5c", 7, 12, 7},
                       Row{"theta-4-4-4", 11, 12, 3}}) {
    auto g = builtin_graph(r.name);
    INFO(r.name);
    REQUIRE(g.has_value());
    REQUIRE(g->vertex_count() == r.v);
    REQUIRE(g->edge_count() == r.e);
    REQUIRE(g->face_count() == r.f);
  }
}

TEST_CASE("catalog maps classify as themselves") {
  for (auto [name, cls] : {std::pair<const char*, BlockClass>{"b3", BlockClass::B3},
                           {"b4a", BlockClass::B4a},
                           {"b4b", BlockClass::B4b},
                           {"b5a", BlockClass::B5a},
                           {"b5b", BlockClass::B5b},
                           {"b5c", BlockClass::B5c},
                           {"b5d", BlockClass::B5d},
                           {"b6a", BlockClass::B6a},
                           {"b6b", BlockClass::B6b},
                           {"b6c", BlockClass::B6c},
                           {"b6d", BlockClass::B6d},
                           {"b6e", BlockClass::B6e},
                           {"b6f", BlockClass::B6f},
                           {"b6g", BlockClass::B6g},
                           {"b6h", BlockClass::B6h},
                           {"b6i", BlockClass::B6i},
                           {"b7a", BlockClass::B7a},
                           {"b7b", BlockClass::B7b},
                           {"k2", BlockClass::B2}}) {
    INFO(name);
    REQUIRE(classify_map(*builtin_graph(name)) == cls);
  }
}

TEST_CASE("the catalog block forms are pairwise distinct") {
  std::set<std::vector<int>> forms;
  for (const char* name : {"b3", "b4a", "b4b", "b5a", "b5b", "b5c", "b5d", "b6a", "b6b",
                           "b6c", "b6d", "b6e", "b6f", "b6g", "b6h", "b6i", "b7a", "b7b"})
    forms.insert(map_canonical_form(*builtin_graph(name)));
  REQUIRE(forms.size() == 18);
}

TEST_CASE("chordless six-vertex near triangulations get their own class") {
  REQUIRE(classify_map(catalog::octahedron()) == BlockClass::B6_chordless_NT);
  REQUIRE(classify_map(catalog::cycle(6)) == BlockClass::Other);
  REQUIRE(classify_map(catalog::cycle(8)) == BlockClass::Other);
}

TEST_CASE("map canonical form identifies relabelings and mirrors") {
  auto g = catalog::b6g();
  // arbitrary relabeling
  std::vector<int> perm = {3, 5, 0, 2, 4, 1};
  std::vector<std::vector<Vertex>> rot(6);
  for (Vertex v = 0; v < 6; ++v)
    for (Vertex u : g.neighbors(v)) rot[perm[v]].push_back(perm[u]);
  auto relabeled = PlaneGraph::build(6, rot);
  REQUIRE(map_canonical_form(relabeled) == map_canonical_form(g));

  // mirror image: reverse every rotation
  std::vector<std::vector<Vertex>> mir(6);
  for (Vertex v = 0; v < 6; ++v) {
    mir[v] = g.neighbors(v);
    std::reverse(mir[v].begin(), mir[v].end());
  }
  auto mirrored = PlaneGraph::build(6, mir);
  REQUIRE(map_canonical_form(mirrored) == map_canonical_form(g));

  REQUIRE(map_canonical_form(catalog::b6a()) != map_canonical_form(catalog::b6b()));
  REQUIRE(map_canonical_form(catalog::b6g()) != map_canonical_form(catalog::b6h()));
}

TEST_CASE("rooted and marked canonical forms distinguish the markings") {
  auto a = catalog::marked_b6a();
  auto d = catalog::marked_b6d();
  REQUIRE(marked_canonical_form(a.graph, a.x, a.y) ==
          marked_canonical_form(a.graph, a.y, a.x));
  REQUIRE(marked_canonical_form(a.graph, a.x, a.y) !=
          marked_canonical_form(d.graph, d.x, d.y));
  // B6a has another vertex pair at distance two that does admit a Hamiltonian
  // path; the marked form must tell them apart.
  auto s = path_spectrum(a.graph, 1, 3);
  REQUIRE(s.contains(5));
  REQUIRE(marked_canonical_form(a.graph, a.x, a.y) != marked_canonical_form(a.graph, 1, 3));
}

TEST_CASE("builtin graph lookup") {
  REQUIRE(builtin_graph("c12")->vertex_count() == 12);
  REQUIRE_FALSE(builtin_graph("nope").has_value());
  REQUIRE_FALSE(builtin_graph("c2").has_value());
}
