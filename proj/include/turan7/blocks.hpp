#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "turan7/canonical.hpp"
#include "turan7/catalog.hpp"
#include "turan7/cycle_search.hpp"
#include "turan7/plane_graph.hpp"
#include "turan7/rational.hpp"

namespace turan7 {

// An edge class of the triangular-block decomposition: either a maximal
// edge-connected union of facial triangles, or a single edge lying in no
// facial triangle (trivial).
struct TriangularBlock {
  int id = -1;
  std::vector<EdgeId> edges;     // sorted
  std::vector<Vertex> vertices;  // sorted
  bool trivial = false;
  // faces of the block under the inherited embedding, as parent darts;
  // trivial blocks have none by convention
  std::vector<std::vector<Dart>> own_faces;
  std::vector<bool> own_face_is_hole;

  int hole_count() const {
    return static_cast<int>(std::count(own_face_is_hole.begin(), own_face_is_hole.end(), true));
  }
};

// Consecutive face vertices x1 x2 x3 whose chord x1x3 lives in a block that
// contains the whole triangle and has x1, x3 as junction vertices.
struct BadCherry {
  Vertex x1 = -1, x2 = -1, x3 = -1;
  EdgeId chord = -1;
  int block = -1;
  bool applied = false;  // taken by the (greedy, edge-disjoint) refinement
};

struct Petal {
  FaceId face = -1;
  int block = -1;
  std::vector<EdgeId> shared_edges;   // face edges belonging to the block
  bool leaky = false;                 // face ∩ block is disconnected
  bool bad_cherry_intersection = false;
  int refinement_length = 0;
};

struct ChargeValues {
  int e = 0;
  Rational n, f, g;
};

class Decomposition {
 public:
  explicit Decomposition(const PlaneGraph& g) : g_(&g) {
    if (!g.is_two_connected())
      throw Error(Errc::not_two_connected, "triangular-blocks need a 2-connected plane graph");
    build_blocks();
    trace_block_faces();
    match_holes();
    find_cherries_and_refinements();
  }

  const PlaneGraph& graph() const { return *g_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const TriangularBlock& block(int i) const { return blocks_[i]; }
  const std::vector<TriangularBlock>& blocks() const { return blocks_; }
  int block_of_edge(EdgeId e) const { return block_of_edge_[e]; }
  int blocks_at_vertex(Vertex v) const { return blocks_at_vertex_[v]; }
  bool is_junction(Vertex v) const { return blocks_at_vertex_[v] > 1; }

  const std::vector<BadCherry>& bad_cherries(FaceId f) const { return cherries_[f]; }
  int refinement_length(FaceId f) const { return refined_len_[f]; }
  const std::vector<EdgeId>& refined_edges(FaceId f) const { return refined_edges_[f]; }

  // face indices (into own_faces) of the block's holes
  std::vector<int> holes(int b) const {
    std::vector<int> out;
    for (size_t i = 0; i < blocks_[b].own_faces.size(); ++i)
      if (blocks_[b].own_face_is_hole[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  std::vector<Petal> petals(int b) const {
    std::vector<Petal> out;
    for (FaceId f = 0; f < g_->face_count(); ++f) {
      if (gface_owner_[f] == b) continue;
      Petal p;
      p.face = f;
      p.block = b;
      for (Dart d : g_->face(f).boundary)
        if (block_of_edge_[d >> 1] == b) p.shared_edges.push_back(d >> 1);
      if (p.shared_edges.empty()) continue;
      std::sort(p.shared_edges.begin(), p.shared_edges.end());
      p.leaky = intersection_disconnected(f, b);
      p.bad_cherry_intersection = is_cherry_intersection(f, b, p.shared_edges);
      p.refinement_length = refined_len_[f];
      out.push_back(std::move(p));
    }
    return out;
  }

  ChargeValues charge(int b) const {
    const auto& blk = blocks_[b];
    ChargeValues c;
    c.e = static_cast<int>(blk.edges.size());
    for (Vertex v : blk.vertices) c.n += Rational(1, blocks_at_vertex_[v]);
    if (!blk.trivial) {
      int non_hole = static_cast<int>(blk.own_faces.size()) - blk.hole_count();
      c.f += non_hole;
    }
    // petal contributions, attributed over the refined cycles
    for (FaceId f = 0; f < g_->face_count(); ++f) {
      if (gface_owner_[f] == b) continue;
      int cnt = 0;
      for (EdgeId e : refined_edges_[f])
        if (block_of_edge_[e] == b) ++cnt;
      if (cnt > 0) c.f += Rational(cnt, refined_len_[f]);
    }
    c.g = Rational(24) * c.f - Rational(17) * c.e + Rational(6) * c.n;
    return c;
  }

  // standalone copy of the block with its inherited embedding
  PlaneGraph block_map(int b) const {
    const auto& blk = blocks_[b];
    std::vector<int> local(g_->vertex_count(), -1);
    for (size_t i = 0; i < blk.vertices.size(); ++i) local[blk.vertices[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> rot(blk.vertices.size());
    for (Vertex v : blk.vertices)
      for (Dart d : g_->rotations()[v])
        if (block_of_edge_[d >> 1] == b) rot[local[v]].push_back(local[g_->dart_target(d)]);
    return PlaneGraph::build(static_cast<int>(blk.vertices.size()), rot);
  }

  BlockClass classify(int b) const {
    if (blocks_[b].trivial) return BlockClass::B2;
    return classify_map(block_map(b));
  }

 private:
  void build_blocks() {
    const PlaneGraph& g = *g_;
    // facial triangles and their edge-sharing union-find
    std::vector<FaceId> tris;
    for (FaceId f = 0; f < g.face_count(); ++f)
      if (g.face(f).length() == 3) tris.push_back(f);
    std::vector<int> uf(tris.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    std::vector<std::vector<int>> tris_of_edge(g.edge_count());
    for (size_t t = 0; t < tris.size(); ++t)
      for (Dart d : g.face(tris[t]).boundary) tris_of_edge[d >> 1].push_back(static_cast<int>(t));
    for (const auto& ts : tris_of_edge)
      for (size_t i = 1; i < ts.size(); ++i) uf[find(ts[i])] = find(ts[0]);

    std::map<int, std::set<EdgeId>> groups;  // root -> edges
    for (size_t t = 0; t < tris.size(); ++t)
      for (Dart d : g.face(tris[t]).boundary) groups[find(static_cast<int>(t))].insert(d >> 1);

    std::vector<std::vector<EdgeId>> edge_sets;
    for (auto& [root, es] : groups) edge_sets.emplace_back(es.begin(), es.end());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (tris_of_edge[e].empty()) edge_sets.push_back({e});
    std::sort(edge_sets.begin(), edge_sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    block_of_edge_.assign(g.edge_count(), -1);
    for (auto& es : edge_sets) {
      TriangularBlock blk;
      blk.id = static_cast<int>(blocks_.size());
      blk.edges = es;
      blk.trivial = es.size() == 1 && tris_of_edge[es.front()].empty();
      std::set<Vertex> vs;
      for (EdgeId e : es) {
        block_of_edge_[e] = blk.id;
        vs.insert(g.edges()[e].first);
        vs.insert(g.edges()[e].second);
      }
      blk.vertices.assign(vs.begin(), vs.end());
      blocks_.push_back(std::move(blk));
    }

    blocks_at_vertex_.assign(g.vertex_count(), 0);
    for (const auto& blk : blocks_)
      for (Vertex v : blk.vertices) blocks_at_vertex_[v]++;
  }

  void trace_block_faces() {
    const PlaneGraph& g = *g_;
    // restricted rotation: next block dart at the same origin
    std::vector<Dart> next_in_block(g.dart_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::map<int, std::vector<Dart>> per_block;
      for (Dart d : g.rotations()[v]) per_block[block_of_edge_[d >> 1]].push_back(d);
      for (auto& [b, ds] : per_block)
        for (size_t i = 0; i < ds.size(); ++i) next_in_block[ds[i]] = ds[(i + 1) % ds.size()];
    }
    for (auto& blk : blocks_) {
      if (blk.trivial) continue;
      std::set<Dart> done;
      for (EdgeId e : blk.edges)
        for (Dart d0 : {2 * e, 2 * e + 1}) {
          if (done.count(d0)) continue;
          std::vector<Dart> boundary;
          Dart d = d0;
          do {
            done.insert(d);
            boundary.push_back(d);
            d = next_in_block[d ^ 1];
          } while (d != d0);
          blk.own_faces.push_back(std::move(boundary));
        }
      blk.own_face_is_hole.assign(blk.own_faces.size(), true);
    }
  }

  void match_holes() {
    const PlaneGraph& g = *g_;
    std::map<std::vector<EdgeId>, std::vector<FaceId>> gfaces;
    for (FaceId f = 0; f < g.face_count(); ++f) gfaces[g.face_edge_key(f)].push_back(f);
    gface_owner_.assign(g.face_count(), -1);
    for (auto& blk : blocks_) {
      for (size_t i = 0; i < blk.own_faces.size(); ++i) {
        std::vector<EdgeId> key;
        for (Dart d : blk.own_faces[i]) key.push_back(d >> 1);
        std::sort(key.begin(), key.end());
        auto it = gfaces.find(key);
        if (it == gfaces.end()) continue;
        for (FaceId f : it->second) {
          if (gface_owner_[f] != -1) continue;
          gface_owner_[f] = blk.id;
          blk.own_face_is_hole[i] = false;
          break;
        }
      }
    }
  }

  void find_cherries_and_refinements() {
    const PlaneGraph& g = *g_;
    cherries_.assign(g.face_count(), {});
    refined_edges_.assign(g.face_count(), {});
    refined_len_.assign(g.face_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f) {
      auto cyc = g.face_vertices(f);
      int k = static_cast<int>(cyc.size());
      std::set<EdgeId> face_edges;
      for (Dart d : g.face(f).boundary) face_edges.insert(d >> 1);
      auto& cs = cherries_[f];
      for (int i = 0; i < k; ++i) {
        Vertex a = cyc[(i + k - 1) % k], b = cyc[i], c = cyc[(i + 1) % k];
        if (a == c) continue;  // faces of length 2 (never in 2-connected inputs)
        auto chord = g.edge_between(a, c);
        if (!chord || face_edges.count(*chord)) continue;
        EdgeId ab = *g.edge_between(a, b), bc = *g.edge_between(b, c);
        int blk = block_of_edge_[ab];
        if (block_of_edge_[bc] != blk || block_of_edge_[*chord] != blk) continue;
        if (!is_junction(a) || !is_junction(c)) continue;
        cs.push_back({a, b, c, *chord, blk, false});
      }
      // greedy edge-disjoint application in boundary order; overlapping
      // cherries cannot both be replaced
      std::set<EdgeId> consumed;
      for (auto& ch : cs) {
        EdgeId ab = *g.edge_between(ch.x1, ch.x2), bc = *g.edge_between(ch.x2, ch.x3);
        if (consumed.count(ab) || consumed.count(bc)) continue;
        ch.applied = true;
        consumed.insert(ab);
        consumed.insert(bc);
      }
      auto& re = refined_edges_[f];
      for (EdgeId e : face_edges)
        if (!consumed.count(e)) re.push_back(e);
      for (const auto& ch : cs)
        if (ch.applied) re.push_back(ch.chord);
      std::sort(re.begin(), re.end());
      refined_len_[f] = static_cast<int>(re.size());
    }
  }

  bool intersection_disconnected(FaceId f, int b) const {
    const PlaneGraph& g = *g_;
    std::map<Vertex, Vertex> parent;
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int parts = 0;
    for (Dart d : g.face(f).boundary) {
      if (block_of_edge_[d >> 1] != b) continue;
      Vertex u = g.dart_origin(d), v = g.dart_target(d);
      for (Vertex x : {u, v})
        if (!parent.count(x)) {
          parent[x] = x;
          ++parts;
        }
      if (find(u) != find(v)) {
        parent[find(u)] = find(v);
        --parts;
      }
    }
    return parts > 1;
  }

  bool is_cherry_intersection(FaceId f, int b, const std::vector<EdgeId>& shared) const {
    if (shared.size() != 2) return false;
    for (const auto& ch : cherries_[f]) {
      if (ch.block != b || !ch.applied) continue;
      EdgeId ab = *g_->edge_between(ch.x1, ch.x2), bc = *g_->edge_between(ch.x2, ch.x3);
      std::vector<EdgeId> path = {std::min(ab, bc), std::max(ab, bc)};
      if (path == shared) return true;
    }
    return false;
  }

  const PlaneGraph* g_;
  std::vector<TriangularBlock> blocks_;
  std::vector<int> block_of_edge_;
  std::vector<int> blocks_at_vertex_;
  std::vector<int> gface_owner_;  // block whose own face realizes this G-face, or -1
  std::vector<std::vector<BadCherry>> cherries_;
  std::vector<std::vector<EdgeId>> refined_edges_;
  std::vector<int> refined_len_;
};

inline Decomposition decompose(const PlaneGraph& g) { return Decomposition(g); }

// Smallest-then-lexicographic vertex set S with |S| <= max_order whose
// incident edge count is at most alpha * |S|, if any.
inline std::optional<std::vector<Vertex>> find_sparse_set(const PlaneGraph& g,
                                                          const Rational& alpha,
                                                          int max_order) {
  if (max_order > 6) throw Error(Errc::guard_exceeded, "sparse-set order capped at 6");
  const int n = g.vertex_count();
  std::vector<Vertex> pick;
  std::optional<std::vector<Vertex>> found;
  auto incident = [&](const std::vector<Vertex>& s) {
    VertexSet in;
    for (Vertex v : s) in.set(v);
    int cnt = 0;
    for (const auto& [a, b] : g.edges())
      if (in.test(a) || in.test(b)) ++cnt;
    return cnt;
  };
  std::function<bool(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      if (Rational(incident(pick)) <= alpha * static_cast<long long>(pick.size())) {
        found = pick;
        return true;
      }
      return false;
    }
    for (Vertex v = start; v < n; ++v) {
      pick.push_back(v);
      if (rec(v + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= std::min(max_order, n); ++size) {
    pick.clear();
    if (rec(0, size)) return found;
  }
  return std::nullopt;
}

// Membership in the paper's graph class: 2-connected, C7-free, and no
// (18/7)-sparse set of order at most 4.
inline bool in_P_n(const PlaneGraph& g) {
  if (!g.is_two_connected()) return false;
  if (has_cycle_of_length(g, 7)) return false;
  return !find_sparse_set(g, Rational(18, 7), 4).has_value();
}

struct LedgerRow {
  int block = -1;
  BlockClass cls = BlockClass::Other;
  int e = 0;
  Rational n, f, g;
  bool exceptional = false;
};

struct ChargeLedger {
  int n = 0, e = 0, f = 0;
  std::vector<LedgerRow> rows;
  std::vector<std::vector<int>> groups;
  std::vector<Rational> group_sums;
  Rational total_g;
  bool verdict = false;
  bool identities_hold = false;
};

namespace detail {

// An exceptional flower: a B5b/B5c block whose hole is its 4-face, with
// exactly two 4-petals through opposite corners of the hole and four trivial
// petal edges. Returns those four trivial block ids.
inline std::optional<std::vector<int>> exceptional_flower(const Decomposition& dec, int b,
                                                          BlockClass cls) {
  if (cls != BlockClass::B5b && cls != BlockClass::B5c) return std::nullopt;
  const auto& blk = dec.block(b);
  const PlaneGraph& g = dec.graph();

  // single hole, and it is the quadrilateral face
  int quad = -1;
  for (size_t i = 0; i < blk.own_faces.size(); ++i) {
    bool hole = blk.own_face_is_hole[i];
    if (blk.own_faces[i].size() == 4) {
      if (!hole) return std::nullopt;
      quad = static_cast<int>(i);
    } else if (hole) {
      return std::nullopt;
    }
  }
  if (quad == -1) return std::nullopt;

  auto petals = dec.petals(b);
  if (petals.size() != 2) return std::nullopt;

  std::vector<Vertex> mids, ends_all, apexes;
  std::vector<EdgeId> outer_edges;
  for (const auto& p : petals) {
    if (g.face(p.face).length() != 4) return std::nullopt;
    if (p.leaky || p.shared_edges.size() != 2) return std::nullopt;
    auto [a1, b1] = g.edges()[p.shared_edges[0]];
    auto [a2, b2] = g.edges()[p.shared_edges[1]];
    Vertex mid = (a1 == a2 || a1 == b2) ? a1 : b1;
    Vertex e1 = a1 == mid ? b1 : a1, e2 = a2 == mid ? b2 : a2;
    if (e1 == e2 || mid == e1 || mid == e2) return std::nullopt;
    mids.push_back(mid);
    ends_all.push_back(std::min(e1, e2));
    ends_all.push_back(std::max(e1, e2));
    Vertex apex = -1;
    for (Vertex v : g.face_vertices(p.face))
      if (std::find(blk.vertices.begin(), blk.vertices.end(), v) == blk.vertices.end()) {
        if (apex != -1) return std::nullopt;
        apex = v;
      }
    if (apex == -1) return std::nullopt;
    apexes.push_back(apex);
    for (Dart d : g.face(p.face).boundary) {
      EdgeId e = d >> 1;
      if (dec.block_of_edge(e) != b) outer_edges.push_back(e);
    }
  }
  if (mids[0] == mids[1] || apexes[0] == apexes[1]) return std::nullopt;
  if (ends_all[0] != ends_all[2] || ends_all[1] != ends_all[3]) return std::nullopt;
  if (outer_edges.size() != 4) return std::nullopt;

  // both petals pass through opposite corners of the hole quadrilateral
  std::vector<Vertex> hole_cycle;
  for (Dart d : blk.own_faces[quad]) hole_cycle.push_back(g.dart_origin(d));
  auto pos = [&](Vertex v) {
    return static_cast<int>(std::find(hole_cycle.begin(), hole_cycle.end(), v) -
                            hole_cycle.begin());
  };
  int p0 = pos(mids[0]), p1 = pos(mids[1]);
  if (p0 >= 4 || p1 >= 4 || (p0 + p1) % 2 != 0) return std::nullopt;

  std::vector<int> trivials;
  for (EdgeId e : outer_edges) {
    int tb = dec.block_of_edge(e);
    if (!dec.block(tb).trivial) return std::nullopt;
    trivials.push_back(tb);
  }
  std::sort(trivials.begin(), trivials.end());
  if (std::adjacent_find(trivials.begin(), trivials.end()) != trivials.end())
    return std::nullopt;

  // final check: the flower subgraph matches the catalog flower
  std::vector<Vertex> fv = blk.vertices;
  fv.push_back(apexes[0]);
  fv.push_back(apexes[1]);
  std::sort(fv.begin(), fv.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (size_t i = 0; i < fv.size(); ++i) local[fv[i]] = static_cast<int>(i);
  SmallGraph flower;
  flower.n = static_cast<int>(fv.size());
  for (EdgeId e : blk.edges)
    flower.add_edge(local[g.edges()[e].first], local[g.edges()[e].second]);
  for (EdgeId e : outer_edges)
    flower.add_edge(local[g.edges()[e].first], local[g.edges()[e].second]);
  static const uint64_t kTargetB5b = canonical_code([] {
    auto f = catalog::exceptional_flower_b5b();
    SmallGraph s;
    s.n = f.vertex_count();
    for (auto [a, b2] : f.edges()) s.add_edge(a, b2);
    return s;
  }());
  static const uint64_t kTargetB5c = canonical_code([] {
    auto f = catalog::exceptional_flower_b5c();
    SmallGraph s;
    s.n = f.vertex_count();
    for (auto [a, b2] : f.edges()) s.add_edge(a, b2);
    return s;
  }());
  uint64_t want = cls == BlockClass::B5b ? kTargetB5b : kTargetB5c;
  if (canonical_code(flower) != want) return std::nullopt;
  return trivials;
}

}  // namespace detail

inline ChargeLedger charge_report(const PlaneGraph& g) {
  Decomposition dec(g);
  ChargeLedger led;
  led.n = g.vertex_count();
  led.e = g.edge_count();
  led.f = g.face_count();

  Rational sum_n, sum_f, sum_g;
  int sum_e = 0;
  for (int b = 0; b < dec.block_count(); ++b) {
    auto c = dec.charge(b);
    LedgerRow row;
    row.block = b;
    row.cls = dec.classify(b);
    row.e = c.e;
    row.n = c.n;
    row.f = c.f;
    row.g = c.g;
    led.rows.push_back(row);
    sum_e += c.e;
    sum_n += c.n;
    sum_f += c.f;
    sum_g += c.g;
  }
  led.total_g = sum_g;
  led.identities_hold = sum_e == led.e && sum_n == Rational(led.n) &&
                        sum_f == Rational(led.f) &&
                        sum_g == Rational(24LL * led.f - 17LL * led.e + 6LL * led.n);

  // partition: each exceptional flower grouped with its four trivial blocks
  std::vector<int> claimed_by(dec.block_count(), -1);
  std::vector<std::pair<int, std::vector<int>>> flowers;
  for (int b = 0; b < dec.block_count(); ++b) {
    auto quad = detail::exceptional_flower(dec, b, led.rows[b].cls);
    if (!quad) continue;
    led.rows[b].exceptional = true;
    for (int t : *quad) {
      if (claimed_by[t] != -1)
        throw Error(Errc::exceptional_overlap,
                    "trivial block " + std::to_string(t) + " lies in two exceptional flowers");
      claimed_by[t] = b;
    }
    flowers.push_back({b, *quad});
  }
  std::vector<bool> grouped(dec.block_count(), false);
  for (auto& [b, quad] : flowers) {
    std::vector<int> grp{b};
    grp.insert(grp.end(), quad.begin(), quad.end());
    std::sort(grp.begin(), grp.end());
    for (int x : grp) grouped[x] = true;
    led.groups.push_back(std::move(grp));
  }
  for (int b = 0; b < dec.block_count(); ++b)
    if (!grouped[b]) led.groups.push_back({b});
  std::sort(led.groups.begin(), led.groups.end());

  led.verdict = true;
  for (const auto& grp : led.groups) {
    Rational s;
    for (int b : grp) s += led.rows[b].g;
    led.group_sums.push_back(s);
    if (s > Rational(0)) led.verdict = false;
  }
  return led;
}

}  // namespace turan7
