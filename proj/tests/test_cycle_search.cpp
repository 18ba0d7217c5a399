#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "turan7/catalog.hpp"
#include "turan7/cycle_search.hpp"

using namespace turan7;

TEST_CASE("fixed-length cycle detection basics") {
  REQUIRE_FALSE(has_cycle_of_length(catalog::octahedron(), 7));
  auto c8 = catalog::cycle(8);
  REQUIRE_FALSE(has_cycle_of_length(c8, 7));
  REQUIRE(has_cycle_of_length(c8, 8));
}

TEST_CASE("witness cycles check out independently") {
  for (const char* name : {"b6a", "b7b", "octahedron", "flower-b5c"}) {
    auto g = *builtin_graph(name);
    for (int len = 3; len <= g.vertex_count(); ++len) {
      std::vector<Vertex> w;
      if (!has_cycle_of_length(g, len, &w)) continue;
      REQUIRE(static_cast<int>(w.size()) == len);
      std::set<Vertex> uniq(w.begin(), w.end());
      REQUIRE(static_cast<int>(uniq.size()) == len);
      for (int i = 0; i < len; ++i) REQUIRE(g.adjacent(w[i], w[(i + 1) % len]));
    }
  }
}

TEST_CASE("detection agrees with the naive all-cycles enumerator") {
  for (const char* name : {"b3", "b4a", "b4b", "b5b", "b5d", "b6a", "b6e", "b6i",
                           "b7a", "b7b", "octahedron", "flower-b5b", "c5", "c8"}) {
    auto g = *builtin_graph(name);
    auto lens = turan7::testing::naive_cycle_lengths(g);
    for (int len = 3; len <= g.vertex_count(); ++len)
      REQUIRE(has_cycle_of_length(g, len) == (lens.count(len) != 0));
  }
  auto bow = turan7::testing::bowtie();
  auto lens = turan7::testing::naive_cycle_lengths(bow);
  for (int len = 3; len <= 5; ++len)
    REQUIRE(has_cycle_of_length(bow, len) == (lens.count(len) != 0));
}

TEST_CASE("path spectra") {
  auto k4 = catalog::b4b();
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y)
      REQUIRE(path_spectrum(k4, x, y).lengths == std::set<int>{1, 2, 3});

  auto m = catalog::marked_b6a();
  auto s = path_spectrum(m.graph, m.x, m.y);
  REQUIRE(s.lengths == std::set<int>{2, 3, 4});  // no Hamiltonian path

  auto c8 = catalog::cycle(8);
  REQUIRE(path_spectrum(c8, 0, 1).lengths == std::set<int>{1, 7});
}

TEST_CASE("path spectrum is symmetric and starts at the distance") {
  for (const char* name : {"b5c", "b6b", "b6h", "b7a"}) {
    auto g = *builtin_graph(name);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
        auto s = path_spectrum(g, x, y);
        REQUIRE(s.lengths == path_spectrum(g, y, x).lengths);
        REQUIRE(*s.lengths.begin() == g.distance(x, y));
        REQUIRE(*s.lengths.rbegin() <= g.vertex_count() - 1);
      }
  }
}

TEST_CASE("path spectrum guard") {
  auto big = catalog::cycle(13);
  REQUIRE_THROWS_AS(path_spectrum(big, 0, 1), Error);
  REQUIRE_NOTHROW(path_spectrum(big, 0, 1, 13));
}

TEST_CASE("hamiltonian path queries reproduce the exceptional pairs") {
  auto k4 = catalog::b4b();
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) REQUIRE(has_hamiltonian_path_between(k4, x, y));

  auto a = catalog::marked_b6a();
  auto c = catalog::marked_b6c();
  auto d = catalog::marked_b6d();
  REQUIRE_FALSE(has_hamiltonian_path_between(a.graph, a.x, a.y));
  REQUIRE_FALSE(has_hamiltonian_path_between(c.graph, c.x, c.y));
  REQUIRE_FALSE(has_hamiltonian_path_between(d.graph, d.x, d.y));
}

TEST_CASE("girth") {
  REQUIRE(girth(catalog::cycle(8)) == 8);
  REQUIRE(girth(catalog::b4b()) == 3);
  REQUIRE(girth(*builtin_graph("theta-4-4-4")) == 8);
  REQUIRE_THROWS_AS(girth(turan7::testing::path(4)), Error);

  for (const char* name : {"b5a", "b6f", "b7b", "flower-b5b", "c6"}) {
    auto g = *builtin_graph(name);
    int expect = -1;
    for (int len = 3; len <= g.vertex_count() && expect == -1; ++len)
      if (has_cycle_of_length(g, len)) expect = len;
    REQUIRE(girth(g) == expect);
  }
}
