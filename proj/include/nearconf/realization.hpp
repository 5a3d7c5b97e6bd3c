#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearconf/projective.hpp"
#include "nearconf/structure.hpp"

namespace nearconf {

enum class RealizationErrorKind {
  MissingCoordinates,
  NotNearConfig,
  Disconnected,
  RetriesExhausted,
  NotRealizable,
  UnknownComponent,
};

class RealizationError : public std::runtime_error {
 public:
  RealizationError(RealizationErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  RealizationErrorKind kind() const { return kind_; }

 private:
  RealizationErrorKind kind_;
};

/// An incidence of a structure: a point name and a canonical line index.
struct Incidence {
  std::string point;
  int line = -1;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Exact homogeneous rational coordinates for every point and line of a
/// structure. `broken`, when set, names the one incidence exempted from the
/// dot-product-zero requirement (Steinitz realizations).
struct Realization {
  std::map<std::string, HomogeneousCoord> point_coords;
  std::vector<HomogeneousCoord> line_coords;  // by canonical line index
  std::optional<Incidence> broken;
  std::uint64_t seed = 0;
  std::optional<HomogeneousCoord> chart;  // line at infinity of the affine chart, if computed

  const HomogeneousCoord& point(const std::string& name) const {
    auto it = point_coords.find(name);
    if (it == point_coords.end())
      throw RealizationError(RealizationErrorKind::MissingCoordinates,
                             "no coordinates for point '" + name + "'");
    return it->second;
  }
};

struct Violation {
  enum class Kind {
    MissedIncidence,
    UnwantedIncidence,
    CoincidentPoints,
    CoincidentLines,
    BrokenIncidenceHolds,
    ZeroCoordinate,
  };
  Kind kind;
  std::string a, b;

  std::string str() const {
    switch (kind) {
      case Kind::MissedIncidence: return "missed incidence: point " + a + " not on line " + b;
      case Kind::UnwantedIncidence: return "unwanted incidence: point " + a + " on line " + b;
      case Kind::CoincidentPoints: return "coincident points: " + a + " and " + b;
      case Kind::CoincidentLines: return "coincident lines: " + a + " and " + b;
      case Kind::BrokenIncidenceHolds:
        return "designated broken incidence actually holds: point " + a + " on line " + b;
      case Kind::ZeroCoordinate: return "zero coordinate vector for " + a;
    }
    return "?";
  }
};

struct VerifyReport {
  std::vector<Violation> violations;
  int missed = 0;
  int unwanted = 0;

  bool pass() const { return violations.empty(); }

  std::string summary() const {
    return std::to_string(missed) + " missed / " + std::to_string(unwanted) + " unwanted";
  }

  std::string str() const {
    std::ostringstream out;
    out << summary() << "\n";
    for (const auto& v : violations) out << v.str() << "\n";
    return out.str();
  }
};

/// Build a Realization from point coordinates alone: each line coordinate is
/// the join of the line's first two points. The third and later points of a
/// line had better be on it; verify_realization is the arbiter.
inline Realization realization_from_point_coords(
    const IncidenceStructure& s, std::map<std::string, HomogeneousCoord> point_coords) {
  Realization r;
  r.point_coords = std::move(point_coords);
  r.line_coords.reserve(s.num_lines());
  for (int li = 0; li < s.num_lines(); ++li) {
    const auto& line = s.line(li);
    r.line_coords.push_back(
        cross(r.point(s.point_name(line[0])), r.point(s.point_name(line[1]))));
  }
  return r;
}

inline std::string line_label(const IncidenceStructure& s, int li) {
  std::string label = "{";
  bool first = true;
  for (int p : s.line(li)) {
    if (!first) label += " ";
    label += s.point_name(p);
    first = false;
  }
  return label + "}";
}

/// Exact check of all realization invariants: every incidence except the
/// broken one is a literal rational zero, every non-incidence is nonzero,
/// and coordinates are pairwise distinct. No tolerances anywhere.
inline VerifyReport verify_realization(const IncidenceStructure& s, const Realization& r) {
  if (static_cast<int>(r.line_coords.size()) != s.num_lines())
    throw RealizationError(RealizationErrorKind::MissingCoordinates,
                           "realization covers " + std::to_string(r.line_coords.size()) +
                               " lines, structure has " + std::to_string(s.num_lines()));
  for (const auto& name : s.points()) r.point(name);  // throws if missing

  VerifyReport report;
  for (int p = 0; p < s.num_points(); ++p)
    if (r.point(s.point_name(p)).is_zero())
      report.violations.push_back(
          {Violation::Kind::ZeroCoordinate, "point " + s.point_name(p), ""});
  for (int li = 0; li < s.num_lines(); ++li)
    if (r.line_coords[li].is_zero())
      report.violations.push_back({Violation::Kind::ZeroCoordinate, "line " + line_label(s, li), ""});
  if (!report.violations.empty()) return report;

  for (int li = 0; li < s.num_lines(); ++li) {
    const auto& line = s.line(li);
    for (int p = 0; p < s.num_points(); ++p) {
      bool is_incident = std::binary_search(line.begin(), line.end(), p);
      bool is_broken = r.broken && r.broken->line == li && r.broken->point == s.point_name(p);
      BigInt d = dot(r.point(s.point_name(p)), r.line_coords[li]);
      if (is_incident && !is_broken && d != 0) {
        ++report.missed;
        report.violations.push_back(
            {Violation::Kind::MissedIncidence, s.point_name(p), line_label(s, li)});
      } else if (is_incident && is_broken && d == 0) {
        report.violations.push_back(
            {Violation::Kind::BrokenIncidenceHolds, s.point_name(p), line_label(s, li)});
      } else if (!is_incident && d == 0) {
        ++report.unwanted;
        report.violations.push_back(
            {Violation::Kind::UnwantedIncidence, s.point_name(p), line_label(s, li)});
      }
    }
  }

  for (int p = 0; p < s.num_points(); ++p)
    for (int q = p + 1; q < s.num_points(); ++q)
      if (r.point(s.point_name(p)) == r.point(s.point_name(q)))
        report.violations.push_back(
            {Violation::Kind::CoincidentPoints, s.point_name(p), s.point_name(q)});
  for (int li = 0; li < s.num_lines(); ++li)
    for (int lj = li + 1; lj < s.num_lines(); ++lj)
      if (r.line_coords[li] == r.line_coords[lj])
        report.violations.push_back(
            {Violation::Kind::CoincidentLines, line_label(s, li), line_label(s, lj)});
  return report;
}

}  // namespace nearconf
