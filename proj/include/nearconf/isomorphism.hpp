#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearconf/structure.hpp"

namespace nearconf {
namespace detail {

/// Levi-style bipartite adjacency: vertices 0..np-1 are points,
/// np..np+nl-1 are lines.
struct BipartiteAdjacency {
  int np = 0;
  int nl = 0;
  std::vector<std::vector<int>> adj;
};

inline BipartiteAdjacency levi_adjacency(const IncidenceStructure& s) {
  BipartiteAdjacency g;
  g.np = s.num_points();
  g.nl = s.num_lines();
  g.adj.resize(g.np + g.nl);
  for (int li = 0; li < g.nl; ++li)
    for (int p : s.line(li)) {
      g.adj[p].push_back(g.np + li);
      g.adj[g.np + li].push_back(p);
    }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

/// One joint color-refinement pass over both graphs until stable. Color ids
/// are assigned from the merged key set so they mean the same thing in both
/// graphs. Returns false if the color histograms ever disagree (the graphs
/// are then certainly non-isomorphic).
inline bool refine_joint_colors(const BipartiteAdjacency& a, const BipartiteAdjacency& b,
                                std::vector<int>& ca, std::vector<int>& cb) {
  auto histograms_match = [&](int num_colors) {
    std::vector<int> ha(num_colors, 0), hb(num_colors, 0);
    for (int c : ca) ++ha[c];
    for (int c : cb) ++hb[c];
    return ha == hb;
  };

  int num_colors = 0;
  for (int c : ca) num_colors = std::max(num_colors, c + 1);
  for (int c : cb) num_colors = std::max(num_colors, c + 1);
  if (!histograms_match(num_colors)) return false;

  while (true) {
    using Key = std::pair<int, std::vector<int>>;
    auto key_of = [](const BipartiteAdjacency& g, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      nb.reserve(g.adj[v].size());
      for (int w : g.adj[v]) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      return Key{col[v], std::move(nb)};
    };

    std::map<Key, int> ids;
    std::vector<Key> ka(ca.size()), kb(cb.size());
    for (size_t v = 0; v < ca.size(); ++v) ids.emplace(ka[v] = key_of(a, ca, (int)v), 0);
    for (size_t v = 0; v < cb.size(); ++v) ids.emplace(kb[v] = key_of(b, cb, (int)v), 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (size_t v = 0; v < ca.size(); ++v) ca[v] = ids[ka[v]];
    for (size_t v = 0; v < cb.size(); ++v) cb[v] = ids[kb[v]];

    if (!histograms_match(next)) return false;
    if (next == num_colors) return true;  // stable
    num_colors = next;
  }
}

inline bool adjacency_preserved(const BipartiteAdjacency& a, const BipartiteAdjacency& b,
                                const std::vector<int>& map_ab) {
  for (size_t v = 0; v < map_ab.size(); ++v) {
    std::vector<int> mapped;
    mapped.reserve(a.adj[v].size());
    for (int w : a.adj[v]) mapped.push_back(map_ab[w]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.adj[map_ab[v]]) return false;
  }
  return true;
}

inline std::optional<std::vector<int>> levi_isomorphism_search(const BipartiteAdjacency& a,
                                                               const BipartiteAdjacency& b,
                                                               std::vector<int> ca,
                                                               std::vector<int> cb) {
  if (!refine_joint_colors(a, b, ca, cb)) return std::nullopt;

  int num_colors = 0;
  for (int c : ca) num_colors = std::max(num_colors, c + 1);
  std::vector<int> class_size(num_colors, 0);
  for (int c : ca) ++class_size[c];

  int split_color = -1;
  for (int c = 0; c < num_colors; ++c)
    if (class_size[c] > 1 && (split_color < 0 || class_size[c] < class_size[split_color]))
      split_color = c;

  if (split_color < 0) {
    // Discrete coloring: the color classes define the candidate bijection.
    std::vector<int> map_ab(ca.size(), -1), b_of_color(num_colors, -1);
    for (size_t v = 0; v < cb.size(); ++v) b_of_color[cb[v]] = (int)v;
    for (size_t v = 0; v < ca.size(); ++v) map_ab[v] = b_of_color[ca[v]];
    if (adjacency_preserved(a, b, map_ab)) return map_ab;
    return std::nullopt;
  }

  int av = -1;
  for (size_t v = 0; v < ca.size(); ++v)
    if (ca[v] == split_color) {
      av = (int)v;
      break;
    }
  for (size_t bv = 0; bv < cb.size(); ++bv) {
    if (cb[bv] != split_color) continue;
    auto ca2 = ca;
    auto cb2 = cb;
    ca2[av] = num_colors;
    cb2[bv] = num_colors;
    if (auto r = levi_isomorphism_search(a, b, std::move(ca2), std::move(cb2))) return r;
  }
  return std::nullopt;
}

}  // namespace detail

/// A point bijection from s1 to s2 inducing a line bijection, if one exists.
/// Deterministic for fixed inputs: candidates are explored in canonical
/// vertex order, so repeated calls return the same bijection.
inline std::optional<std::map<std::string, std::string>> isomorphic(const IncidenceStructure& s1,
                                                                    const IncidenceStructure& s2) {
  if (s1.num_points() != s2.num_points() || s1.num_lines() != s2.num_lines()) return std::nullopt;
  if (signature(s1) != signature(s2)) return std::nullopt;

  auto a = detail::levi_adjacency(s1);
  auto b = detail::levi_adjacency(s2);
  std::vector<int> ca(a.np + a.nl), cb(b.np + b.nl);
  for (int v = 0; v < a.np + a.nl; ++v) ca[v] = v < a.np ? 0 : 1;
  for (int v = 0; v < b.np + b.nl; ++v) cb[v] = v < b.np ? 0 : 1;

  auto map_ab = detail::levi_isomorphism_search(a, b, std::move(ca), std::move(cb));
  if (!map_ab) return std::nullopt;
  std::map<std::string, std::string> out;
  for (int p = 0; p < s1.num_points(); ++p) out[s1.point_name(p)] = s2.point_name((*map_ab)[p]);
  return out;
}

}  // namespace nearconf
