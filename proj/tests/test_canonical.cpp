#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "turan7/canonical.hpp"

using namespace turan7;

namespace {

// All labeled graphs on n vertices, as edge bitmasks over the C(n,2) pairs.
int pair_count(int n) { return n * (n - 1) / 2; }

SmallGraph labeled(int n, uint64_t mask) {
  SmallGraph g;
  g.n = n;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1) g.add_edge(i, j);
  return g;
}

SmallGraph permuted(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph h;
  h.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

}  // namespace

TEST_CASE("canonical code counts all small graphs up to isomorphism") {
  // unlabeled graph counts 4, 11, 34 for n = 3, 4, 5
  for (auto [n, expect] : {std::pair{3, 4}, {4, 11}, {5, 34}}) {
    std::set<uint64_t> codes;
    for (uint64_t mask = 0; mask < (1ULL << pair_count(n)); ++mask)
      codes.insert(canonical_code(labeled(n, mask)));
    REQUIRE(static_cast<int>(codes.size()) == expect);
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937 rng(20240817);
  for (int n : {5, 6, 7, 9}) {
    std::vector<int> perm(n);
    for (int trial = 0; trial < 200; ++trial) {
      uint64_t mask = rng();
      mask = (mask << 32) | rng();
      mask &= (1ULL << pair_count(n)) - 1;
      auto g = labeled(n, mask);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      REQUIRE(canonical_code(g) == canonical_code(permuted(g, perm)));
    }
  }
}

TEST_CASE("code round-trips through graph_from_code") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    uint64_t mask = ((static_cast<uint64_t>(rng()) << 32) | rng()) &
                    ((1ULL << pair_count(n)) - 1);
    auto g = labeled(n, mask);
    uint64_t code = canonical_code(g);
    REQUIRE(canonical_code(graph_from_code(n, code)) == code);
  }
}

TEST_CASE("abstract connectivity predicates") {
  SmallGraph tri = labeled(3, 0b111);
  REQUIRE(tri.connected());
  REQUIRE(tri.two_connected());

  SmallGraph p3 = labeled(3, 0b011);  // edges 01, 02
  REQUIRE(p3.connected());
  REQUIRE_FALSE(p3.two_connected());

  SmallGraph disc = labeled(4, 0b000001);  // single edge 01 plus isolated
  REQUIRE_FALSE(disc.connected());

  // bowtie: triangles 012 and 034 sharing vertex 0
  SmallGraph bow;
  bow.n = 5;
  bow.add_edge(0, 1);
  bow.add_edge(0, 2);
  bow.add_edge(1, 2);
  bow.add_edge(0, 3);
  bow.add_edge(0, 4);
  bow.add_edge(3, 4);
  REQUIRE(bow.connected());
  REQUIRE_FALSE(bow.two_connected());
}
