#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "turan7/blocks.hpp"
#include "turan7/canonical.hpp"
#include "turan7/cycle_search.hpp"
#include "turan7/map_canon.hpp"
#include "turan7/plane_graph.hpp"
#include "turan7/rot_io.hpp"

namespace turan7 {

constexpr int kEnumerationGuard = 9;

inline std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("TURAN7_CACHE_DIR")) return env;
  return ".turan7-cache";
}

namespace detail {

inline int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(first, last) over jobs slices of [0, total).
inline void parallel_ranges(long long total, int jobs,
                            const std::function<void(long long, long long, int)>& fn) {
  jobs = std::max(1, std::min<long long>(jobs, total == 0 ? 1 : total));
  if (jobs == 1) {
    fn(0, total, 0);
    return;
  }
  std::vector<std::thread> ts;
  long long chunk = (total + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    long long lo = t * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    ts.emplace_back([&, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& t : ts) t.join();
}

inline std::vector<uint64_t> generate_level(const std::vector<SmallGraph>& parents, int n,
                                            int jobs) {
  std::vector<std::unordered_set<uint64_t>> partial(std::max(1, jobs));
  parallel_ranges(static_cast<long long>(parents.size()), jobs,
                  [&](long long lo, long long hi, int tid) {
                    auto& out = partial[tid];
                    for (long long i = lo; i < hi; ++i) {
                      SmallGraph child = parents[i];
                      child.n = n;
                      for (uint16_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                        child.adj[n - 1] = mask;
                        for (int v = 0; v < n - 1; ++v)
                          if ((mask >> v) & 1)
                            child.adj[v] |= static_cast<uint16_t>(1u << (n - 1));
                          else
                            child.adj[v] &= static_cast<uint16_t>(~(1u << (n - 1)));
                        out.insert(canonical_code(child));
                      }
                    }
                  });
  std::unordered_set<uint64_t> all;
  for (auto& p : partial) all.insert(p.begin(), p.end());
  std::vector<uint64_t> codes(all.begin(), all.end());
  std::sort(codes.begin(), codes.end());
  return codes;
}

inline std::optional<std::vector<uint64_t>> load_level(int n) {
  std::ifstream in(cache_dir() / ("graphs_n" + std::to_string(n) + ".txt"));
  if (!in) return std::nullopt;
  std::string tag;
  size_t count = 0;
  if (!(in >> tag >> count) || tag != "count") return std::nullopt;
  std::vector<uint64_t> codes;
  codes.reserve(count);
  uint64_t c;
  while (in >> std::hex >> c) codes.push_back(c);
  if (codes.size() != count) return std::nullopt;
  return codes;
}

inline void store_level(int n, const std::vector<uint64_t>& codes) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir(), ec);
  if (ec) return;  // cache is best-effort
  auto final_path = cache_dir() / ("graphs_n" + std::to_string(n) + ".txt");
  auto tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "count " << std::dec << codes.size() << "\n" << std::hex;
    for (uint64_t c : codes) out << c << "\n";
  }
  std::filesystem::rename(tmp, final_path, ec);
}

}  // namespace detail

// All graphs on n unlabeled vertices, one canonical representative per
// isomorphism class, in canonical-code order. Cached in memory and on disk.
inline const std::vector<SmallGraph>& all_graphs(int n, int jobs = 0) {
  if (n < 1 || n > kEnumerationGuard)
    throw Error(Errc::guard_exceeded,
                "abstract enumeration guarded at n <= " + std::to_string(kEnumerationGuard));
  if (jobs <= 0) jobs = detail::default_jobs();
  static std::map<int, std::vector<SmallGraph>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  for (int k = 1; k <= n; ++k) {
    if (memo.count(k)) continue;
    std::vector<uint64_t> codes;
    if (auto cached = detail::load_level(k)) {
      codes = std::move(*cached);
    } else if (k == 1) {
      codes = {0};
    } else {
      codes = detail::generate_level(memo.at(k - 1), k, jobs);
      detail::store_level(k, codes);
    }
    auto& slot = memo[k];
    slot.reserve(codes.size());
    for (uint64_t c : codes) slot.push_back(graph_from_code(k, c));
  }
  return memo.at(n);
}

// ---------------------------------------------------------------------------
// Incremental face-based planarity embedding (Demoucron-Malgrange-Pertuiset):
// grow from a cycle, placing one bridge path at a time into an admissible
// face. Fragments with a unique admissible face are placed first, which makes
// the greedy choice safe; branching over admissible faces instead enumerates
// every embedding of a 2-connected graph.
// ---------------------------------------------------------------------------

namespace detail {

struct DmpState {
  std::vector<std::vector<Vertex>> faces;  // directed boundary cycles
  uint16_t placed_vertices = 0;
  std::array<uint16_t, SmallGraph::kMaxN> placed_adj{};  // embedded edges

  bool edge_placed(int u, int v) const { return (placed_adj[u] >> v) & 1; }
  void place_edge(int u, int v) {
    placed_adj[u] |= static_cast<uint16_t>(1u << v);
    placed_adj[v] |= static_cast<uint16_t>(1u << u);
  }
};

struct Fragment {
  std::vector<Vertex> path;  // attachment, interior..., attachment
  uint16_t attachments = 0;
};

inline std::vector<Fragment> dmp_fragments(const SmallGraph& g, const DmpState& st) {
  std::vector<Fragment> out;
  // chords between placed vertices
  for (int u = 0; u < g.n; ++u) {
    if (!((st.placed_vertices >> u) & 1)) continue;
    uint16_t m = g.adj[u] & st.placed_vertices & ~st.placed_adj[u];
    while (m) {
      int v = __builtin_ctz(m);
      m &= m - 1;
      if (v <= u) continue;
      Fragment f;
      f.path = {u, v};
      f.attachments = static_cast<uint16_t>((1u << u) | (1u << v));
      out.push_back(std::move(f));
    }
  }
  // components of the unplaced vertices, with their placed neighbors
  uint16_t rest = static_cast<uint16_t>(((1u << g.n) - 1) & ~st.placed_vertices);
  uint16_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if (!((rest >> s) & 1) || ((seen >> s) & 1)) continue;
    uint16_t comp = static_cast<uint16_t>(1u << s), frontier = comp;
    while (frontier) {
      uint16_t nxt = 0;
      for (int v = 0; v < g.n; ++v)
        if ((frontier >> v) & 1) nxt |= g.adj[v];
      frontier = nxt & rest & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    Fragment f;
    uint16_t att = 0;
    for (int v = 0; v < g.n; ++v)
      if ((comp >> v) & 1) att |= g.adj[v] & st.placed_vertices;
    f.attachments = att;
    // path: lowest attachment, through the component, to the first other
    // attachment found by BFS (deterministic)
    int a = __builtin_ctz(att);
    std::array<int, SmallGraph::kMaxN> prev{};
    prev.fill(-2);
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
      if (((comp >> v) & 1) && g.has_edge(a, v)) {
        prev[v] = -1;
        queue.push_back(v);
      }
    int hit = -1;
    for (size_t qi = 0; qi < queue.size() && hit == -1; ++qi) {
      int v = queue[qi];
      uint16_t m = g.adj[v];
      while (m) {
        int w = __builtin_ctz(m);
        m &= m - 1;
        if ((att >> w) & 1 && w != a) {
          hit = w;
          prev[w] = v;
          break;
        }
        if (((comp >> w) & 1) && prev[w] == -2) {
          prev[w] = v;
          queue.push_back(w);
        }
      }
    }
    std::vector<int> rev{hit};
    for (int v = prev[hit]; v != -1; v = prev[v]) rev.push_back(v);
    rev.push_back(a);
    f.path.assign(rev.rbegin(), rev.rend());
    out.push_back(std::move(f));
  }
  return out;
}

inline uint16_t face_vertex_mask(const std::vector<Vertex>& cyc) {
  uint16_t m = 0;
  for (Vertex v : cyc) m |= static_cast<uint16_t>(1u << v);
  return m;
}

inline void dmp_place(DmpState& st, int face_idx, const std::vector<Vertex>& path) {
  std::vector<Vertex> cyc = st.faces[face_idx];
  int k = static_cast<int>(cyc.size());
  int i = -1, j = -1;
  for (int t = 0; t < k; ++t) {
    if (cyc[t] == path.front()) i = t;
    if (cyc[t] == path.back()) j = t;
  }
  std::vector<Vertex> f1, f2;
  for (int t = i;; t = (t + 1) % k) {
    f1.push_back(cyc[t]);
    if (t == j) break;
  }
  for (size_t t = path.size() - 2; t >= 1; --t) f1.push_back(path[t]);
  for (int t = j;; t = (t + 1) % k) {
    f2.push_back(cyc[t]);
    if (t == i) break;
  }
  for (size_t t = 1; t + 1 < path.size(); ++t) f2.push_back(path[t]);
  st.faces[face_idx] = std::move(f1);
  st.faces.push_back(std::move(f2));
  for (size_t t = 0; t + 1 < path.size(); ++t) st.place_edge(path[t], path[t + 1]);
  for (Vertex v : path) st.placed_vertices |= static_cast<uint16_t>(1u << v);
}

// rotation lists (clockwise up to global mirror) from the directed face cycles
inline std::vector<std::vector<Vertex>> dmp_rotations(int n, const DmpState& st) {
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> sigma;
  for (const auto& cyc : st.faces) {
    int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      Vertex u = cyc[t], v = cyc[(t + 1) % k], w = cyc[(t + 2) % k];
      sigma[{v, u}] = {v, w};  // phi(u->v) = v->w, so sigma(v->u) = v->w
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  std::vector<bool> started(n, false);
  for (const auto& [from, to] : sigma) {
    Vertex v = from.first;
    if (started[v]) continue;
    started[v] = true;
    auto cur = from;
    do {
      rot[v].push_back(cur.second);
      cur = sigma.at(cur);
    } while (cur != from);
  }
  return rot;
}

inline std::optional<std::vector<Vertex>> find_cycle(const SmallGraph& g, uint16_t within) {
  // proper DFS so that every non-tree edge closes with an ancestor
  std::array<int, SmallGraph::kMaxN> parent{}, disc{};
  parent.fill(-2);
  disc.fill(-1);
  int timer = 0;
  int root = __builtin_ctz(within);
  parent[root] = -1;
  disc[root] = timer++;
  std::vector<std::pair<int, uint16_t>> stack{{root, static_cast<uint16_t>(g.adj[root] & within)}};
  while (!stack.empty()) {
    auto& [v, todo] = stack.back();
    if (!todo) {
      stack.pop_back();
      continue;
    }
    int u = __builtin_ctz(todo);
    todo &= todo - 1;
    if (u == parent[v]) continue;
    if (disc[u] == -1) {
      parent[u] = v;
      disc[u] = timer++;
      uint16_t next_todo = static_cast<uint16_t>(g.adj[u] & within);
      stack.push_back({u, next_todo});
    } else if (disc[u] < disc[v]) {
      std::vector<Vertex> cyc;
      for (int x = v; x != u; x = parent[x]) cyc.push_back(x);
      cyc.push_back(u);
      std::reverse(cyc.begin(), cyc.end());
      return cyc;
    }
  }
  return std::nullopt;
}

// decision-mode DMP on one 2-connected subgraph (vertex mask `verts`)
inline std::optional<DmpState> dmp_embed(const SmallGraph& g, uint16_t verts) {
  auto cyc = find_cycle(g, verts);
  if (!cyc) return std::nullopt;
  DmpState st;
  std::vector<Vertex> rev(cyc->rbegin(), cyc->rend());
  st.faces.push_back(*cyc);
  st.faces.push_back(rev);
  for (size_t t = 0; t < cyc->size(); ++t) {
    st.place_edge((*cyc)[t], (*cyc)[(t + 1) % cyc->size()]);
    st.placed_vertices |= static_cast<uint16_t>(1u << (*cyc)[t]);
  }
  while (true) {
    auto frags = dmp_fragments(g, st);
    if (frags.empty()) return st;
    int best = -1, best_face = -1, best_count = 1 << 30;
    for (size_t fi = 0; fi < frags.size(); ++fi) {
      int count = 0, first_face = -1;
      for (size_t fc = 0; fc < st.faces.size(); ++fc)
        if ((face_vertex_mask(st.faces[fc]) & frags[fi].attachments) == frags[fi].attachments) {
          ++count;
          if (first_face == -1) first_face = static_cast<int>(fc);
        }
      if (count == 0) return std::nullopt;  // non-planar
      if (count < best_count) {
        best_count = count;
        best = static_cast<int>(fi);
        best_face = first_face;
      }
    }
    dmp_place(st, best_face, frags[best].path);
  }
}

inline void dmp_all(const SmallGraph& g, DmpState st,
                    const std::function<void(const DmpState&)>& emit) {
  auto frags = dmp_fragments(g, st);
  if (frags.empty()) {
    emit(st);
    return;
  }
  const Fragment& f = frags.front();
  for (size_t fc = 0; fc < st.faces.size(); ++fc) {
    if ((face_vertex_mask(st.faces[fc]) & f.attachments) != f.attachments) continue;
    DmpState child = st;
    dmp_place(child, static_cast<int>(fc), f.path);
    dmp_all(g, std::move(child), emit);
  }
}

// biconnected components as edge sets, plus bridges, via DFS lowpoints
inline void bicomponents(const SmallGraph& g, uint16_t comp,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
  std::array<int, SmallGraph::kMaxN> disc{}, low{}, parent{};
  disc.fill(-1);
  parent.fill(-1);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;
  int root = __builtin_ctz(comp);
  std::vector<std::pair<int, uint16_t>> stack{{root, g.adj[root] & comp}};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    auto& [v, todo] = stack.back();
    if (todo) {
      int u = __builtin_ctz(todo);
      todo &= todo - 1;
      if (u == parent[v]) continue;
      if (disc[u] == -1) {
        parent[u] = v;
        estack.push_back({v, u});
        disc[u] = low[u] = timer++;
        stack.push_back({u, g.adj[u] & comp});
      } else if (disc[u] < disc[v]) {
        estack.push_back({v, u});
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      if (stack.empty()) break;
      int p = stack.back().first;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<std::pair<int, int>> bicomp;
        while (!estack.empty()) {
          auto e = estack.back();
          estack.pop_back();
          bicomp.push_back(e);
          if (e == std::make_pair(p, v)) break;
        }
        if (!bicomp.empty()) out.push_back(std::move(bicomp));
      }
    }
  }
}

}  // namespace detail

// Attempts a planar embedding of an abstract graph (per biconnected
// component); nullopt means non-planar. Guarded at 12 vertices.
inline std::optional<PlaneGraph> embed_planar(const SmallGraph& g) {
  if (g.n > SmallGraph::kMaxN)
    throw Error(Errc::guard_exceeded, "embed_planar supports n <= 12");
  // per-component edge bound
  {
    uint16_t seen = 0;
    for (int s = 0; s < g.n; ++s) {
      if ((seen >> s) & 1) continue;
      uint16_t comp = static_cast<uint16_t>(1u << s), frontier = comp;
      while (frontier) {
        uint16_t nxt = 0;
        for (int v = 0; v < g.n; ++v)
          if ((frontier >> v) & 1) nxt |= g.adj[v];
        frontier = nxt & ~comp;
        comp |= nxt;
      }
      seen |= comp;
      int vc = __builtin_popcount(comp), ec = 0;
      for (int v = 0; v < g.n; ++v)
        if ((comp >> v) & 1) ec += __builtin_popcount(g.adj[v]);
      ec /= 2;
      if (vc >= 3 && ec > 3 * vc - 6) return std::nullopt;
    }
  }

  std::vector<std::vector<Vertex>> rot(g.n);
  uint16_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1) continue;
    uint16_t comp = static_cast<uint16_t>(1u << s), frontier = comp;
    while (frontier) {
      uint16_t nxt = 0;
      for (int v = 0; v < g.n; ++v)
        if ((frontier >> v) & 1) nxt |= g.adj[v];
      frontier = nxt & ~comp;
      comp |= nxt;
    }
    seen |= comp;
    if (__builtin_popcount(comp) == 1) continue;

    std::vector<std::vector<std::pair<int, int>>> bicomps;
    detail::bicomponents(g, comp, bicomps);
    for (const auto& bc : bicomps) {
      if (bc.size() == 1) {  // bridge
        rot[bc[0].first].push_back(bc[0].second);
        rot[bc[0].second].push_back(bc[0].first);
        continue;
      }
      SmallGraph sub;
      sub.n = g.n;
      uint16_t verts = 0;
      for (auto [u, v] : bc) {
        sub.add_edge(u, v);
        verts |= static_cast<uint16_t>((1u << u) | (1u << v));
      }
      auto st = detail::dmp_embed(sub, verts);
      if (!st) return std::nullopt;
      auto sub_rot = detail::dmp_rotations(g.n, *st);
      for (int v = 0; v < g.n; ++v)
        rot[v].insert(rot[v].end(), sub_rot[v].begin(), sub_rot[v].end());
    }
  }
  return PlaneGraph::build(g.n, rot);
}

// Every embedding of a 2-connected planar graph, one representative per map
// equivalence class (mirrors identified), in canonical-form order.
inline std::vector<PlaneGraph> all_planar_embeddings(const SmallGraph& g) {
  if (!g.two_connected())
    throw Error(Errc::bad_argument, "all_planar_embeddings needs a 2-connected graph");
  uint16_t verts = static_cast<uint16_t>((1u << g.n) - 1);
  auto cyc = detail::find_cycle(g, verts);
  if (!cyc) return {};
  detail::DmpState st;
  std::vector<Vertex> rev(cyc->rbegin(), cyc->rend());
  st.faces.push_back(*cyc);
  st.faces.push_back(rev);
  for (size_t t = 0; t < cyc->size(); ++t) {
    st.place_edge((*cyc)[t], (*cyc)[(t + 1) % cyc->size()]);
    st.placed_vertices |= static_cast<uint16_t>(1u << (*cyc)[t]);
  }
  std::map<std::vector<int>, PlaneGraph> unique;
  detail::dmp_all(g, std::move(st), [&](const detail::DmpState& done) {
    auto pg = PlaneGraph::build(g.n, detail::dmp_rotations(g.n, done));
    unique.emplace(map_canonical_form(pg), std::move(pg));
  });
  std::vector<PlaneGraph> out;
  out.reserve(unique.size());
  for (auto& [form, pg] : unique) out.push_back(std::move(pg));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive planar Turán search
// ---------------------------------------------------------------------------

struct SearchResult {
  int n = 0;
  int ell = 0;
  int max_edges = -1;
  std::vector<PlaneGraph> witnesses;
  long long graphs_examined = 0;
  long long elapsed_ms = 0;
};

// Maximum edge count of an n-vertex planar graph with no cycle of length ell,
// with every extremal witness, certified by exhaustion over the isomorphism
// classes. Scans edge counts downward from the planar bound.
inline SearchResult ex_planar(int n, int ell, int jobs = 0, bool use_cache = true) {
  if (n < 1 || n > kEnumerationGuard)
    throw Error(Errc::guard_exceeded, "ex_planar guarded at n <= 9");
  if (ell < 3) throw Error(Errc::bad_argument, "cycle length must be >= 3");
  if (jobs <= 0) jobs = detail::default_jobs();

  auto cache_file =
      cache_dir() / ("ex_n" + std::to_string(n) + "_l" + std::to_string(ell) + ".json");
  if (use_cache) {
    std::ifstream in(cache_file);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        SearchResult r;
        r.n = j.at("n");
        r.ell = j.at("ell");
        r.max_edges = j.at("max_edges");
        r.graphs_examined = j.at("graphs_examined");
        r.elapsed_ms = j.at("elapsed_ms");
        for (const auto& w : j.at("witnesses"))
          r.witnesses.push_back(read_rot_string(w.get<std::string>()).at(0));
        return r;
      } catch (const std::exception&) {
        // fall through to recompute
      }
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  const auto& graphs = all_graphs(n, jobs);
  int max_m = n < 3 ? n * (n - 1) / 2 : 3 * n - 6;
  std::vector<std::vector<size_t>> by_edges(max_m + 1);
  for (size_t i = 0; i < graphs.size(); ++i) {
    int m = graphs[i].edge_count();
    if (m <= max_m) by_edges[m].push_back(i);
  }

  SearchResult res;
  res.n = n;
  res.ell = ell;
  std::atomic<long long> examined{0};
  for (int m = max_m; m >= 0 && res.max_edges == -1; --m) {
    const auto& bucket = by_edges[m];
    std::vector<std::vector<PlaneGraph>> found(std::max(1, jobs));
    detail::parallel_ranges(static_cast<long long>(bucket.size()), jobs,
                            [&](long long lo, long long hi, int tid) {
                              for (long long i = lo; i < hi; ++i) {
                                const SmallGraph& ag = graphs[bucket[i]];
                                examined.fetch_add(1, std::memory_order_relaxed);
                                auto emb = embed_planar(ag);
                                if (!emb) continue;
                                if (ell <= n && has_cycle_of_length(*emb, ell)) continue;
                                found[tid].push_back(std::move(*emb));
                              }
                            });
    for (auto& part : found)
      for (auto& w : part) res.witnesses.push_back(std::move(w));
    if (!res.witnesses.empty()) res.max_edges = m;
  }
  std::sort(res.witnesses.begin(), res.witnesses.end(),
            [](const PlaneGraph& a, const PlaneGraph& b) {
              return map_canonical_form(a) < map_canonical_form(b);
            });
  res.graphs_examined = examined.load();
  res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

  if (use_cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    if (!ec) {
      nlohmann::json j;
      j["n"] = res.n;
      j["ell"] = res.ell;
      j["max_edges"] = res.max_edges;
      j["graphs_examined"] = res.graphs_examined;
      j["elapsed_ms"] = res.elapsed_ms;
      j["witnesses"] = nlohmann::json::array();
      for (const auto& w : res.witnesses) j["witnesses"].push_back(rot_string(w));
      std::ofstream out(cache_file);
      out << j.dump(2) << "\n";
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

// One planar embedding of every 2-connected planar graph on n vertices
// (all map-inequivalent embeddings when all_embeddings is set).
inline std::vector<PlaneGraph> corpus_two_connected_planar(int n, bool c7_free_only = false,
                                                           bool all_embeddings = false,
                                                           int jobs = 0) {
  if (jobs <= 0) jobs = detail::default_jobs();
  const auto& graphs = all_graphs(n, jobs);
  std::vector<std::vector<PlaneGraph>> parts(std::max(1, jobs));
  detail::parallel_ranges(
      static_cast<long long>(graphs.size()), jobs, [&](long long lo, long long hi, int tid) {
        for (long long i = lo; i < hi; ++i) {
          const SmallGraph& ag = graphs[i];
          if (!ag.two_connected()) continue;
          auto emb = embed_planar(ag);
          if (!emb) continue;
          if (c7_free_only && has_cycle_of_length(*emb, 7)) continue;
          if (all_embeddings) {
            for (auto& e : all_planar_embeddings(ag)) parts[tid].push_back(std::move(e));
          } else {
            parts[tid].push_back(std::move(*emb));
          }
        }
      });
  std::vector<PlaneGraph> out;
  for (auto& p : parts)
    for (auto& g : p) out.push_back(std::move(g));
  return out;
}

// Members of the paper's class: 2-connected, C7-free, no small sparse set.
inline std::vector<PlaneGraph> corpus_P_n(int n, bool all_embeddings = false, int jobs = 0) {
  if (n < 7 || n > kEnumerationGuard)
    throw Error(Errc::guard_exceeded, "corpus_P_n covers 7 <= n <= 9");
  auto base = corpus_two_connected_planar(n, /*c7_free_only=*/true, all_embeddings, jobs);
  std::vector<PlaneGraph> out;
  for (auto& g : base)
    if (!find_sparse_set(g, Rational(18, 7), 4).has_value()) out.push_back(std::move(g));
  return out;
}

}  // namespace turan7
