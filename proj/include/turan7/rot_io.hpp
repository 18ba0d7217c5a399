#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turan7/plane_graph.hpp"

namespace turan7 {

// .rot text format, one graph per blank-line-separated block:
//   n <vertex_count>
//   <v>: <u1> <u2> ... <uk>     neighbors of v in clockwise order
// Vertices without neighbors may omit their line.

inline std::vector<PlaneGraph> read_rot(std::istream& in) {
  std::vector<PlaneGraph> out;
  int n = -1;
  std::vector<std::vector<Vertex>> rows;
  auto flush = [&]() {
    if (n < 0) return;
    out.push_back(PlaneGraph::build(n, rows));
    n = -1;
    rows.clear();
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) {
      flush();
      continue;
    }
    auto fail = [&](const std::string& msg) {
      throw Error(Errc::parse, "line " + std::to_string(lineno) + ": " + msg);
    };
    if (first == "n") {
      if (n >= 0) fail("second 'n' line without blank separator");
      if (!(ls >> n) || n < 0) fail("bad vertex count");
      rows.assign(n, {});
    } else {
      if (n < 0) fail("rotation line before 'n' line");
      if (first.empty() || first.back() != ':') fail("expected '<v>:'");
      int v = -1;
      try {
        v = std::stoi(first.substr(0, first.size() - 1));
      } catch (const std::exception&) {
        fail("bad vertex id '" + first + "'");
      }
      if (v < 0 || v >= n) fail("vertex id out of range");
      if (!rows[v].empty()) fail("duplicate rotation line for vertex " + std::to_string(v));
      int u;
      while (ls >> u) rows[v].push_back(u);
      if (!ls.eof()) fail("trailing junk");
    }
  }
  flush();
  return out;
}

inline std::vector<PlaneGraph> read_rot_string(const std::string& s) {
  std::istringstream in(s);
  return read_rot(in);
}

inline void write_rot(std::ostream& out, const PlaneGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    out << v << ":";
    for (Vertex u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
}

inline std::string rot_string(const PlaneGraph& g) {
  std::ostringstream out;
  write_rot(out, g);
  return out.str();
}

}  // namespace turan7
