#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nearconf {

enum class StructureErrorKind {
  DuplicateLine,
  LineTooSmall,
  NonLinear,
  UnknownPoint,
  DuplicatePoint,
  BadPointName,
  DualNotSimple,
};

class StructureError : public std::runtime_error {
 public:
  StructureError(StructureErrorKind kind, std::string message,
                 std::pair<std::string, std::string> pair = {})
      : std::runtime_error(std::move(message)), kind_(kind), pair_(std::move(pair)) {}

  StructureErrorKind kind() const { return kind_; }
  /// For NonLinear: the offending point pair.
  const std::pair<std::string, std::string>& point_pair() const { return pair_; }

 private:
  StructureErrorKind kind_;
  std::pair<std::string, std::string> pair_;
};

/// A finite point-line incidence structure.
///
/// Points are opaque string identifiers kept in lexicographic order. Each
/// line is a sorted vector of point indices, the line list itself sorted,
/// so two structures are syntactically equal iff their canonical forms are.
/// Instances are immutable once built by validate(); every instance
/// satisfies: line sizes >= 2, no duplicate lines, and linearity (two
/// distinct points share at most one line).
class IncidenceStructure {
 public:
  static IncidenceStructure validate(std::vector<std::string> raw_points,
                                     const std::vector<std::vector<std::string>>& raw_lines) {
    for (const auto& name : raw_points) {
      if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
        throw StructureError(StructureErrorKind::BadPointName,
                             "point name empty or contains whitespace: '" + name + "'");
    }
    std::sort(raw_points.begin(), raw_points.end());
    if (std::adjacent_find(raw_points.begin(), raw_points.end()) != raw_points.end())
      throw StructureError(StructureErrorKind::DuplicatePoint, "duplicate point identifier");

    std::vector<std::vector<int>> lines;
    lines.reserve(raw_lines.size());
    for (const auto& raw : raw_lines) {
      std::vector<int> line;
      line.reserve(raw.size());
      for (const auto& name : raw) {
        auto it = std::lower_bound(raw_points.begin(), raw_points.end(), name);
        if (it == raw_points.end() || *it != name)
          throw StructureError(StructureErrorKind::UnknownPoint,
                               "line references unknown point '" + name + "'");
        line.push_back(static_cast<int>(it - raw_points.begin()));
      }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      if (line.size() < 2)
        throw StructureError(StructureErrorKind::LineTooSmall,
                             "line with fewer than two points");
      lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
      throw StructureError(StructureErrorKind::DuplicateLine,
                           "two lines with identical point sets");

    // Linearity: each unordered point pair on at most one line.
    std::set<std::pair<int, int>> used;
    for (const auto& line : lines)
      for (size_t i = 0; i < line.size(); ++i)
        for (size_t j = i + 1; j < line.size(); ++j)
          if (!used.insert({line[i], line[j]}).second)
            throw StructureError(
                StructureErrorKind::NonLinear,
                "points '" + raw_points[line[i]] + "' and '" + raw_points[line[j]] +
                    "' lie on two lines",
                {raw_points[line[i]], raw_points[line[j]]});

    return IncidenceStructure(std::move(raw_points), std::move(lines));
  }

  int num_points() const { return static_cast<int>(points_.size()); }
  int num_lines() const { return static_cast<int>(lines_.size()); }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::string& point_name(int i) const { return points_[i]; }
  const std::vector<int>& line(int i) const { return lines_[i]; }

  std::vector<std::string> line_point_names(int i) const {
    std::vector<std::string> names;
    names.reserve(lines_[i].size());
    for (int p : lines_[i]) names.push_back(points_[p]);
    return names;
  }

  int point_index(const std::string& name) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), name);
    if (it == points_.end() || *it != name)
      throw StructureError(StructureErrorKind::UnknownPoint, "unknown point '" + name + "'");
    return static_cast<int>(it - points_.begin());
  }

  /// Index of the line with exactly this point set, or -1.
  int find_line(std::vector<int> pts) const {
    std::sort(pts.begin(), pts.end());
    auto it = std::lower_bound(lines_.begin(), lines_.end(), pts);
    if (it == lines_.end() || *it != pts) return -1;
    return static_cast<int>(it - lines_.begin());
  }

  int point_degree(int p) const {
    int d = 0;
    for (const auto& line : lines_) d += std::binary_search(line.begin(), line.end(), p) ? 1 : 0;
    return d;
  }

  std::vector<int> lines_through(int p) const {
    std::vector<int> out;
    for (int i = 0; i < num_lines(); ++i)
      if (std::binary_search(lines_[i].begin(), lines_[i].end(), p)) out.push_back(i);
    return out;
  }

  int num_incidences() const {
    int total = 0;
    for (const auto& line : lines_) total += static_cast<int>(line.size());
    return total;
  }

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.points_ == b.points_ && a.lines_ == b.lines_;
  }

 private:
  IncidenceStructure(std::vector<std::string> points, std::vector<std::vector<int>> lines)
      : points_(std::move(points)), lines_(std::move(lines)) {}

  std::vector<std::string> points_;
  std::vector<std::vector<int>> lines_;
};

/// Degree/size multiplicity maps: f(x) = sum n_i x^{r_i} over point degrees,
/// g(y) = sum m_j y^{k_j} over line sizes.
struct Signature {
  std::map<int, int> point_degrees;  // degree -> number of points
  std::map<int, int> line_sizes;     // size -> number of lines

  friend bool operator==(const Signature&, const Signature&) = default;

  /// f'(1): total incidence count from the point side.
  long long point_incidences() const {
    long long s = 0;
    for (auto [r, n] : point_degrees) s += static_cast<long long>(r) * n;
    return s;
  }

  /// g'(1): total incidence count from the line side.
  long long line_incidences() const {
    long long s = 0;
    for (auto [k, m] : line_sizes) s += static_cast<long long>(k) * m;
    return s;
  }

  /// The target signature (n x^3, y^2 + (n-2) y^3 + y^4).
  static Signature near_config(int n) {
    Signature s;
    s.point_degrees[3] = n;
    s.line_sizes[2] = 1;
    s.line_sizes[3] = n - 2;
    s.line_sizes[4] = 1;
    return s;
  }

  std::string str() const {
    auto poly = [](const std::map<int, int>& terms, const char* var) {
      std::string out;
      for (auto [e, c] : terms) {
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c);
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
      return out.empty() ? std::string("0") : out;
    };
    return "(" + poly(point_degrees, "x") + ", " + poly(line_sizes, "y") + ")";
  }
};

inline Signature signature(const IncidenceStructure& s) {
  Signature sig;
  std::vector<int> degree(s.num_points(), 0);
  for (const auto& line : s.lines()) {
    ++sig.line_sizes[static_cast<int>(line.size())];
    for (int p : line) ++degree[p];
  }
  for (int d : degree) ++sig.point_degrees[d];
  return sig;
}

/// True iff the signature is exactly (n x^3, y^2 + (n-2) y^3 + y^4) with
/// n = number of points. Forces |lines| = n.
inline bool is_near_config(const IncidenceStructure& s) {
  return signature(s) == Signature::near_config(s.num_points());
}

/// Exchange the roles of points and lines. The dual's points are named
/// after the canonical indices of this structure's lines ("L00", "L01", ...).
/// Throws DualNotSimple if two points lie on exactly the same set of lines.
inline IncidenceStructure dual(const IncidenceStructure& s) {
  int width = 1;
  for (int v = s.num_lines() - 1; v >= 10; v /= 10) ++width;
  auto dual_name = [width](int i) {
    std::string digits = std::to_string(i);
    return "L" + std::string(width - digits.size(), '0') + digits;
  };

  std::vector<std::string> dual_points;
  dual_points.reserve(s.num_lines());
  for (int i = 0; i < s.num_lines(); ++i) dual_points.push_back(dual_name(i));

  std::vector<std::vector<std::string>> dual_lines(s.num_points());
  for (int i = 0; i < s.num_lines(); ++i)
    for (int p : s.line(i)) dual_lines[p].push_back(dual_name(i));

  std::set<std::vector<std::string>> seen;
  for (const auto& dl : dual_lines)
    if (!seen.insert(dl).second)
      throw StructureError(StructureErrorKind::DualNotSimple,
                           "two points lie on exactly the same set of lines");

  return IncidenceStructure::validate(std::move(dual_points), dual_lines);
}

}  // namespace nearconf
