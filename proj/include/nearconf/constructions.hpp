#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nearconf/structure.hpp"

namespace nearconf {

class TooSmallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The cyclic (m_3) configuration: points 0..m-1, lines {i, i+1, i+3} mod m.
/// Linear exactly when m >= 7 (for m < 7 two translates of {0,1,3} share a
/// pair of points).
inline IncidenceStructure cyclic_config(int m) {
  if (m < 7) throw TooSmallError("cyclic configuration requires m >= 7, got " + std::to_string(m));
  std::vector<std::string> points;
  points.reserve(m);
  for (int i = 0; i < m; ++i) points.push_back(std::to_string(i));
  std::vector<std::vector<std::string>> lines;
  lines.reserve(m);
  for (int i = 0; i < m; ++i)
    lines.push_back({std::to_string(i), std::to_string((i + 1) % m), std::to_string((i + 3) % m)});
  return IncidenceStructure::validate(std::move(points), lines);
}

/// Near-configuration on n points with signature (n x^3, y^2+(n-2)y^3+y^4):
/// start from the cyclic ((n-1)_3) configuration, drop lines {0,1,3} and
/// {4,5,7}, add a point "inf" and the lines {0,1,3,inf}, {4,inf}, {5,7,inf}.
/// Exists if and only if n >= 9.
inline IncidenceStructure near_config(int n) {
  if (n < 9)
    throw TooSmallError("no structure with the near-configuration signature exists for n < 9 "
                        "(the size-4 line forces at least 9 lines); got n = " +
                        std::to_string(n));
  IncidenceStructure base = cyclic_config(n - 1);
  std::vector<std::string> points = base.points();
  points.push_back("inf");
  std::vector<std::vector<std::string>> lines;
  const std::vector<std::string> removed1{"0", "1", "3"}, removed2{"4", "5", "7"};
  for (int i = 0; i < base.num_lines(); ++i) {
    auto names = base.line_point_names(i);
    if (names == removed1 || names == removed2) continue;
    lines.push_back(names);
  }
  lines.push_back({"0", "1", "3", "inf"});
  lines.push_back({"4", "inf"});
  lines.push_back({"5", "7", "inf"});
  return IncidenceStructure::validate(std::move(points), lines);
}

/// Copy with every point renamed prefix + name.
inline IncidenceStructure relabel_prefixed(const IncidenceStructure& s, const std::string& prefix) {
  std::vector<std::string> points;
  points.reserve(s.num_points());
  for (const auto& name : s.points()) points.push_back(prefix + name);
  std::vector<std::vector<std::string>> lines;
  lines.reserve(s.num_lines());
  for (int i = 0; i < s.num_lines(); ++i) {
    std::vector<std::string> line;
    for (int p : s.line(i)) line.push_back(prefix + s.point_name(p));
    lines.push_back(std::move(line));
  }
  return IncidenceStructure::validate(std::move(points), lines);
}

/// Glue two disjoint 3-regular 3-uniform configurations A and B into a
/// near-configuration: A's canonically first line gains the smallest point q
/// of B's canonically first line, and that B-line shrinks to size 2 by
/// dropping q. The Levi edge between the size-4 line and q is then a
/// cut-edge whose removal leaves A's component 3-regular.
inline IncidenceStructure glued_compound(const IncidenceStructure& a, const IncidenceStructure& b) {
  auto check_config = [](const IncidenceStructure& s, const char* which) {
    Signature sig = signature(s);
    Signature want;
    want.point_degrees[3] = s.num_points();
    want.line_sizes[3] = s.num_lines();
    if (sig != want)
      throw std::invalid_argument(std::string(which) + " side of a compound must be an (m_3) configuration");
  };
  check_config(a, "first");
  check_config(b, "second");

  std::vector<std::string> points = a.points();
  for (const auto& name : b.points()) points.push_back(name);

  const std::string moved = b.point_name(b.line(0)[0]);
  std::vector<std::vector<std::string>> lines;
  for (int i = 0; i < a.num_lines(); ++i) {
    auto names = a.line_point_names(i);
    if (i == 0) names.push_back(moved);
    lines.push_back(std::move(names));
  }
  for (int i = 0; i < b.num_lines(); ++i) {
    auto names = b.line_point_names(i);
    if (i == 0) names.erase(names.begin());
    lines.push_back(std::move(names));
  }
  return IncidenceStructure::validate(std::move(points), lines);
}

/// Non-geometric near-configuration on n >= 14 points: a Fano copy glued to
/// a cyclic ((n-7)_3) configuration. The restriction to the Fano side has no
/// planar representation, so neither does the compound.
inline IncidenceStructure non_geometric_compound(int n) {
  if (n < 14)
    throw TooSmallError("the non-geometric compound requires n >= 14, got " + std::to_string(n));
  return glued_compound(relabel_prefixed(cyclic_config(7), "p"),
                        relabel_prefixed(cyclic_config(n - 7), "q"));
}

/// Combinatorial merge behind the two-broken-lines alignment: the designated
/// lines lose their broken points and fuse into one line of size four, and a
/// new size-2 line joins the two broken points. Point sets must be disjoint.
inline IncidenceStructure merged_compound(const IncidenceStructure& a, int line_a, int point_a,
                                          const IncidenceStructure& b, int line_b, int point_b) {
  for (const auto& name : a.points())
    for (const auto& other : b.points())
      if (name == other)
        throw std::invalid_argument("merged structures must have disjoint point sets");

  auto contains = [](const std::vector<int>& line, int p) {
    return std::binary_search(line.begin(), line.end(), p);
  };
  if (line_a < 0 || line_a >= a.num_lines() || !contains(a.line(line_a), point_a))
    throw std::invalid_argument("broken point must lie on the designated line");
  if (line_b < 0 || line_b >= b.num_lines() || !contains(b.line(line_b), point_b))
    throw std::invalid_argument("broken point must lie on the designated line");

  std::vector<std::string> points = a.points();
  for (const auto& name : b.points()) points.push_back(name);

  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> merged;
  for (int i = 0; i < a.num_lines(); ++i) {
    if (i == line_a) {
      for (int p : a.line(i))
        if (p != point_a) merged.push_back(a.point_name(p));
      continue;
    }
    lines.push_back(a.line_point_names(i));
  }
  for (int i = 0; i < b.num_lines(); ++i) {
    if (i == line_b) {
      for (int p : b.line(i))
        if (p != point_b) merged.push_back(b.point_name(p));
      continue;
    }
    lines.push_back(b.line_point_names(i));
  }
  lines.push_back(std::move(merged));
  lines.push_back({a.point_name(point_a), b.point_name(point_b)});
  return IncidenceStructure::validate(std::move(points), lines);
}

}  // namespace nearconf
