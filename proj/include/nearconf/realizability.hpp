#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearconf/catalog.hpp"
#include "nearconf/isomorphism.hpp"
#include "nearconf/levi.hpp"
#include "nearconf/realization.hpp"
#include "nearconf/structure.hpp"

namespace nearconf {
namespace detail {

/// Structure induced by a set of Levi vertices: the component's lines keep
/// only their points inside the component.
inline IncidenceStructure component_structure(const IncidenceStructure& s, const LeviGraph& g,
                                              const std::vector<int>& vertices) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (int v : vertices) inside[v] = 1;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> lines;
  for (int v : vertices) {
    if (g.is_point_vertex(v)) {
      points.push_back(s.point_name(v));
    } else {
      std::vector<std::string> line;
      for (int w : g.adj[v])
        if (inside[w]) line.push_back(s.point_name(w));
      lines.push_back(std::move(line));
    }
  }
  return IncidenceStructure::validate(std::move(points), lines);
}

inline bool is_three_regular(const LeviGraph& g, const std::vector<int>& vertices) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (int v : vertices) inside[v] = 1;
  for (int v : vertices) {
    int d = 0;
    for (int w : g.adj[v]) d += inside[w];
    if (d != 3) return false;
  }
  return true;
}

}  // namespace detail

struct RealizabilityWitness {
  std::pair<int, int> bridge;     // (point vertex, line vertex) in levi(S)
  IncidenceStructure component;   // the 3-regular component left by its removal
  std::string catalog_match;      // matching catalog entry name, empty if none
};

struct RealizabilityVerdict {
  enum class Status { Realizable, NotRealizable, Unknown };

  Status status = Status::Realizable;
  std::optional<RealizabilityWitness> witness;  // present iff status != Realizable
  std::optional<Realization> certificate;       // coordinates, when cross-checked
  std::string note;

  static const char* status_name(Status s) {
    switch (s) {
      case Status::Realizable: return "Realizable";
      case Status::NotRealizable: return "NotRealizable";
      case Status::Unknown: return "Unknown";
    }
    return "?";
  }
};

/// The Levi-graph test: a near-configuration is geometric iff no cut-edge
/// removal leaves a 3-regular component whose configuration is
/// non-geometric. Components whose status the catalog cannot certify yield
/// Unknown rather than a claim. Every bridge is examined; the witness
/// reported is the first in canonical bridge order.
inline RealizabilityVerdict decide_realizability(const IncidenceStructure& s,
                                                 const std::vector<CatalogEntry>& entries) {
  if (!is_near_config(s))
    throw RealizationError(RealizationErrorKind::NotNearConfig,
                           "realizability test requires the near-configuration signature, got " +
                               signature(s).str());

  LeviGraph g = levi(s);
  std::optional<RealizabilityWitness> non_geometric, unknown;
  for (auto [pv, lv] : bridges(g)) {
    LeviGraph cut = g.without_edge(pv, lv);
    for (const auto& comp : connected_components(cut)) {
      if (!detail::is_three_regular(cut, comp)) continue;
      IncidenceStructure part = detail::component_structure(s, cut, comp);
      const CatalogEntry* match = nullptr;
      for (const auto& e : entries)
        if (isomorphic(part, e.structure)) {
          match = &e;
          break;
        }
      if (match && match->status == GeometricStatus::NonGeometric) {
        if (!non_geometric) non_geometric = {{pv, lv}, part, match->name};
      } else if (!match || match->status == GeometricStatus::Unknown) {
        if (!unknown) unknown = {{pv, lv}, part, match ? match->name : ""};
      }
    }
  }

  RealizabilityVerdict verdict;
  if (non_geometric) {
    verdict.status = RealizabilityVerdict::Status::NotRealizable;
    verdict.witness = std::move(non_geometric);
    verdict.note = "cut-edge leaves the non-geometric '" + verdict.witness->catalog_match +
                   "' component";
  } else if (unknown) {
    verdict.status = RealizabilityVerdict::Status::Unknown;
    verdict.witness = std::move(unknown);
    verdict.note = verdict.witness->catalog_match.empty()
                       ? "cut-edge leaves a 3-regular component not in the catalog"
                       : "cut-edge leaves '" + verdict.witness->catalog_match +
                             "', whose geometric status is unknown";
  }
  return verdict;
}

}  // namespace nearconf
