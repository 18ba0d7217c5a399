#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "turan7/catalog.hpp"
#include "turan7/plane_graph.hpp"
#include "turan7/rot_io.hpp"

using namespace turan7;

namespace {

void check_face_partition(const PlaneGraph& g) {
  std::vector<int> seen(g.dart_count(), 0);
  int total_len = 0;
  for (const auto& f : g.faces()) {
    total_len += f.length();
    for (Dart d : f.boundary) seen[d]++;
  }
  for (int c : seen) REQUIRE(c == 1);
  REQUIRE(total_len == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("triangle, K4 and octahedron satisfy Euler's formula") {
  auto c3 = catalog::cycle(3);
  REQUIRE(c3.vertex_count() == 3);
  REQUIRE(c3.edge_count() == 3);
  REQUIRE(c3.face_count() == 2);

  auto k4 = catalog::b4b();
  REQUIRE(k4.vertex_count() == 4);
  REQUIRE(k4.edge_count() == 6);
  REQUIRE(k4.face_count() == 4);
  for (const auto& f : k4.faces()) REQUIRE(f.length() == 3);

  auto oct = catalog::octahedron();
  REQUIRE(oct.vertex_count() == 6);
  REQUIRE(oct.edge_count() == 12);
  REQUIRE(oct.face_count() == 8);
  for (const auto& f : oct.faces()) REQUIRE(f.length() == 3);
}

TEST_CASE("C8 has two faces of length eight") {
  auto c8 = catalog::cycle(8);
  REQUIRE(c8.face_count() == 2);
  for (const auto& f : c8.faces()) REQUIRE(f.length() == 8);
}

TEST_CASE("face tracing partitions the darts") {
  for (const char* name : {"b4a", "b5c", "b6a", "b6g", "b7b", "octahedron", "c8",
                           "flower-b5b", "theta-4-4-4"}) {
    auto g = builtin_graph(name);
    REQUIRE(g.has_value());
    check_face_partition(*g);
  }
  check_face_partition(turan7::testing::bowtie());
}

TEST_CASE("cut edges appear twice on their face boundary") {
  auto k2 = catalog::k2();
  REQUIRE(k2.face_count() == 1);
  REQUIRE(k2.face(0).length() == 2);

  auto p4 = turan7::testing::path(4);
  REQUIRE(p4.face_count() == 1);
  REQUIRE(p4.face(0).length() == 6);
}

TEST_CASE("two-connectivity") {
  REQUIRE(catalog::b4b().is_two_connected());
  REQUIRE(catalog::octahedron().is_two_connected());
  REQUIRE_FALSE(turan7::testing::bowtie().is_two_connected());
  REQUIRE_FALSE(turan7::testing::path(3).is_two_connected());
  REQUIRE_FALSE(catalog::k2().is_two_connected());
  REQUIRE(catalog::cycle(3).is_two_connected());
}

TEST_CASE("two-connected face boundaries visit each vertex at most once") {
  for (const char* name : {"b4b", "b5a", "b6c", "b7a", "octahedron", "flower-b5c"}) {
    auto g = *builtin_graph(name);
    REQUIRE(g.is_two_connected());
    for (FaceId f = 0; f < g.face_count(); ++f) {
      auto vs = g.face_vertices(f);
      std::sort(vs.begin(), vs.end());
      REQUIRE(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
    }
  }
}

TEST_CASE("distances") {
  auto c8 = catalog::cycle(8);
  REQUIRE(c8.distance(0, 1) == 1);
  REQUIRE(c8.distance(0, 4) == 4);

  auto m = catalog::marked_b6a();
  REQUIRE(m.graph.distance(m.x, m.y) == 2);

  REQUIRE_THROWS_AS(PlaneGraph::build(3, {{1}, {0}, {}}).distance(0, 2), Error);
}

TEST_CASE("rot round-trip reproduces the embedding") {
  for (const char* name : {"b6d", "b7b", "octahedron", "theta-4-4-4"}) {
    auto g = *builtin_graph(name);
    auto parsed = read_rot_string(rot_string(g));
    REQUIRE(parsed.size() == 1);
    REQUIRE(parsed[0] == g);
    std::multiset<int> fl1, fl2;
    for (const auto& f : g.faces()) fl1.insert(f.length());
    for (const auto& f : parsed[0].faces()) fl2.insert(f.length());
    REQUIRE(fl1 == fl2);
  }
}

TEST_CASE("multiple graphs per rot stream") {
  std::string two =
      "n 3\n0: 1 2\n1: 2 0\n2: 0 1\n"
      "\n"
      "n 2\n0: 1\n1: 0\n";
  auto gs = read_rot_string(two);
  REQUIRE(gs.size() == 2);
  REQUIRE(gs[0].vertex_count() == 3);
  REQUIRE(gs[1].edge_count() == 1);
}

TEST_CASE("build rejects malformed input") {
  // loop
  REQUIRE_THROWS_MATCHES(PlaneGraph::build(2, {{0, 1}, {0}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("NonSimple")));
  // parallel edge
  REQUIRE_THROWS_AS(PlaneGraph::build(3, {{1, 1, 2}, {0, 2}, {0, 1}}), Error);
  // edge listed at one endpoint only
  REQUIRE_THROWS_MATCHES(PlaneGraph::build(3, {{1, 2}, {0}, {0, 1}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("MalformedRotation")));
}

TEST_CASE("build rejects rotation systems of positive genus") {
  // K4 with one twisted rotation embeds on the torus, not the sphere
  bool found_twist = false;
  std::vector<std::vector<Vertex>> rot = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  for (auto& perm :
       std::vector<std::vector<Vertex>>{{0, 2, 3}, {0, 3, 2}, {2, 0, 3}, {3, 0, 2}}) {
    auto r = rot;
    r[1] = perm;
    try {
      PlaneGraph::build(4, r);
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::not_planar);
      found_twist = true;
    }
  }
  REQUIRE(found_twist);
}

TEST_CASE("parser rejects inconsistent text") {
  REQUIRE_THROWS_AS(read_rot_string("n 2\n0: 1\n"), Error);      // pairing
  REQUIRE_THROWS_AS(read_rot_string("0: 1\n"), Error);           // no header
  REQUIRE_THROWS_AS(read_rot_string("n 2\n5: 0\n0: 5\n"), Error);  // id range
}
