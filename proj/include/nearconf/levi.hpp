#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearconf/structure.hpp"

namespace nearconf {

/// Bipartite incidence graph of a structure. Vertices 0..np-1 are the
/// points (in canonical order), np..np+nl-1 the lines (in canonical order).
/// Constructible raw, without any linearity checks, so invalid structures
/// and arbitrary bipartite graphs can be probed too.
struct LeviGraph {
  int np = 0;
  int nl = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  static LeviGraph raw(int num_points, int num_lines,
                       const std::vector<std::pair<int, int>>& point_line_edges) {
    LeviGraph g;
    g.np = num_points;
    g.nl = num_lines;
    g.adj.resize(num_points + num_lines);
    std::set<std::pair<int, int>> seen;
    for (auto [p, l] : point_line_edges) {
      if (p < 0 || p >= num_points || l < 0 || l >= num_lines)
        throw std::out_of_range("levi edge endpoint out of range");
      if (!seen.insert({p, l}).second) continue;
      g.adj[p].push_back(num_points + l);
      g.adj[num_points + l].push_back(p);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
  }

  int num_vertices() const { return np + nl; }
  bool is_point_vertex(int v) const { return v < np; }
  int line_index(int v) const { return v - np; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int num_edges() const {
    int e = 0;
    for (int v = 0; v < np; ++v) e += degree(v);
    return e;
  }

  /// All edges as (point vertex, line vertex), sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < np; ++v)
      for (int w : adj[v]) out.push_back({v, w});
    return out;
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }

  LeviGraph without_edge(int point_vertex, int line_vertex) const {
    LeviGraph g = *this;
    auto drop = [](std::vector<int>& nb, int x) {
      nb.erase(std::remove(nb.begin(), nb.end(), x), nb.end());
    };
    drop(g.adj[point_vertex], line_vertex);
    drop(g.adj[line_vertex], point_vertex);
    return g;
  }
};

inline LeviGraph levi(const IncidenceStructure& s) {
  std::vector<std::pair<int, int>> edges;
  for (int li = 0; li < s.num_lines(); ++li)
    for (int p : s.line(li)) edges.push_back({p, li});
  return LeviGraph::raw(s.num_points(), s.num_lines(), edges);
}

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const LeviGraph& g) {
  const int n = g.num_vertices();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : g.adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

/// Cut-edges, via one-pass low-link DFS. Returned as (point vertex, line
/// vertex) pairs in sorted order.
inline std::vector<std::pair<int, int>> bridges(const LeviGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> out;
  int timer = 0;

  struct Frame {
    int v;
    size_t next_child = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child < g.adj[f.v].size()) {
        int w = g.adj[f.v][f.next_child++];
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          parent[w] = f.v;
          stack.push_back({w});
        } else if (w != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] > disc[u]) {
            int pv = g.is_point_vertex(u) ? u : v;
            int lv = g.is_point_vertex(u) ? v : u;
            out.push_back({pv, lv});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const LeviGraph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.num_vertices(), 0);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : g.adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

enum class DrawKind {
  FreePoint,
  FreeLine,
  PointOnLine,
  LineThroughPoint,
  PointOnTwoLines,
  LineThroughTwoPoints,
};

/// One drawing step in the reversed peel order. `refs` are the Levi
/// vertices (lines for a point instruction, points for a line instruction)
/// already placed when this one executes. refs[i] == -1 when unused.
struct DrawInstruction {
  DrawKind kind;
  int vertex;
  std::array<int, 2> refs{-1, -1};

  int num_refs() const { return (refs[0] >= 0 ? 1 : 0) + (refs[1] >= 0 ? 1 : 0); }
};

struct PeelTrace {
  std::vector<int> removed_order;            // order of vertex removals
  std::vector<DrawInstruction> instructions;  // replay order = reversed removals
  std::vector<int> leftover;                  // sorted vertices never removed
};

inline DrawKind draw_kind(bool point_vertex, int back_degree) {
  switch (back_degree) {
    case 0: return point_vertex ? DrawKind::FreePoint : DrawKind::FreeLine;
    case 1: return point_vertex ? DrawKind::PointOnLine : DrawKind::LineThroughPoint;
    case 2: return point_vertex ? DrawKind::PointOnTwoLines : DrawKind::LineThroughTwoPoints;
    default: throw std::logic_error("back degree must be < 3");
  }
}

/// Iteratively remove vertices of degree < 3 (smallest degree first, then
/// smallest vertex id), never touching `protect`. Each removal records the
/// neighbors present at removal time; reversing gives the draw instructions.
inline PeelTrace peel(const LeviGraph& g, const std::set<int>& protect = {}) {
  const int n = g.num_vertices();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> removed(n, 0);

  PeelTrace trace;
  std::vector<std::vector<int>> refs_at_removal;
  while (true) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[v] || protect.count(v) || deg[v] >= 3) continue;
      if (pick == -1 || deg[v] < deg[pick] || (deg[v] == deg[pick] && v < pick)) pick = v;
    }
    if (pick == -1) break;
    std::vector<int> refs;
    for (int w : g.adj[pick])
      if (!removed[w]) {
        refs.push_back(w);
        --deg[w];
      }
    removed[pick] = 1;
    trace.removed_order.push_back(pick);
    refs_at_removal.push_back(std::move(refs));
  }

  for (int v = 0; v < n; ++v)
    if (!removed[v]) trace.leftover.push_back(v);

  for (int i = static_cast<int>(trace.removed_order.size()) - 1; i >= 0; --i) {
    DrawInstruction ins;
    ins.vertex = trace.removed_order[i];
    const auto& refs = refs_at_removal[i];
    ins.kind = draw_kind(g.is_point_vertex(ins.vertex), static_cast<int>(refs.size()));
    for (size_t j = 0; j < refs.size(); ++j) ins.refs[j] = refs[j];
    trace.instructions.push_back(ins);
  }
  return trace;
}

// ---- line-oriented trace text ----------------------------------------

inline std::string levi_vertex_name(const IncidenceStructure& s, int v) {
  if (v < s.num_points()) return s.point_name(v);
  return "L" + std::to_string(v - s.num_points());
}

inline int levi_vertex_from_name(const IncidenceStructure& s, const std::string& name) {
  if (name.size() >= 2 && name[0] == 'L' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int li = std::stoi(name.substr(1));
    if (li < 0 || li >= s.num_lines()) throw std::out_of_range("line index out of range: " + name);
    return s.num_points() + li;
  }
  return s.point_index(name);
}

inline std::string peel_trace_to_text(const IncidenceStructure& s, const PeelTrace& t) {
  std::ostringstream out;
  out << "nearconf-peeltrace-v1\n";
  out << "leftover:";
  for (int v : t.leftover) out << " " << levi_vertex_name(s, v);
  out << "\n";
  for (const auto& ins : t.instructions) {
    bool point = ins.vertex < s.num_points();
    out << (point ? "point " : "line ") << levi_vertex_name(s, ins.vertex);
    switch (ins.num_refs()) {
      case 0: out << " free"; break;
      case 1: out << (point ? " on" : " through") << " " << levi_vertex_name(s, ins.refs[0]); break;
      case 2:
        out << (point ? " on" : " through") << " " << levi_vertex_name(s, ins.refs[0]) << " "
            << levi_vertex_name(s, ins.refs[1]);
        break;
    }
    out << "\n";
  }
  return out.str();
}

inline PeelTrace peel_trace_from_text(const IncidenceStructure& s, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "nearconf-peeltrace-v1")
    throw std::runtime_error("bad peel trace header");
  PeelTrace t;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "leftover:") {
      std::string name;
      while (ls >> name) t.leftover.push_back(levi_vertex_from_name(s, name));
      std::sort(t.leftover.begin(), t.leftover.end());
      continue;
    }
    if (first != "point" && first != "line") throw std::runtime_error("bad trace line: " + line);
    bool point = first == "point";
    std::string name, mode;
    ls >> name >> mode;
    DrawInstruction ins;
    ins.vertex = levi_vertex_from_name(s, name);
    if ((ins.vertex < s.num_points()) != point)
      throw std::runtime_error("trace kind mismatch for " + name);
    std::vector<int> refs;
    std::string tok;
    while (ls >> tok) refs.push_back(levi_vertex_from_name(s, tok));
    if (mode == "free" && refs.empty()) {
    } else if ((mode == "on" || mode == "through") && refs.size() >= 1 && refs.size() <= 2) {
    } else {
      throw std::runtime_error("bad trace line: " + line);
    }
    ins.kind = draw_kind(point, static_cast<int>(refs.size()));
    for (size_t j = 0; j < refs.size(); ++j) ins.refs[j] = refs[j];
    t.instructions.push_back(ins);
  }
  for (int i = static_cast<int>(t.instructions.size()) - 1; i >= 0; --i)
    t.removed_order.push_back(t.instructions[i].vertex);
  return t;
}

}  // namespace nearconf
