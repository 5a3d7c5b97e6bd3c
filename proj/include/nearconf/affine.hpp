#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nearconf/projective.hpp"
#include "nearconf/realization.hpp"
#include "nearconf/structure.hpp"

namespace nearconf {

/// A realization pushed into an affine chart: a line at infinity avoiding
/// every realized point, exact rational coordinates for the points, and an
/// integer equation a X + b Y + c = 0 per structure line.
struct AffineView {
  HomogeneousCoord chart;  // line at infinity
  std::map<std::string, std::pair<Rational, Rational>> points;
  std::vector<std::array<BigInt, 3>> line_equations;  // per canonical line index
};

namespace detail {

/// Deterministic search for a chart line with nonzero dot against every
/// point: (0,0,1) first, then small integer triples by growing max-norm.
inline HomogeneousCoord find_chart(const IncidenceStructure& s, const Realization& r) {
  auto clear = [&](const HomogeneousCoord& chart) {
    for (const auto& name : s.points())
      if (dot(r.point(name), chart) == 0) return false;
    return true;
  };
  HomogeneousCoord standard(BigInt(0), BigInt(0), BigInt(1));
  if (clear(standard)) return standard;
  for (long long radius = 1;; ++radius) {
    for (long long a = -radius; a <= radius; ++a)
      for (long long b = -radius; b <= radius; ++b)
        for (long long c = -radius; c <= radius; ++c) {
          if (std::max({a < 0 ? -a : a, b < 0 ? -b : b, c < 0 ? -c : c}) != radius) continue;
          HomogeneousCoord chart(BigInt(a), BigInt(b), BigInt(c));
          if (chart.is_zero()) continue;
          if (clear(chart)) return chart;
        }
  }
}

}  // namespace detail

/// Push every point into an affine chart. Always succeeds: the points
/// impose finitely many conditions, so a clear chart line exists; the
/// search is deterministic, so the chart is reproducible from R alone.
inline AffineView to_affine(const IncidenceStructure& s, const Realization& r) {
  AffineView view;
  view.chart = r.chart.value_or(detail::find_chart(s, r));
  // Re-chart if a stored chart no longer avoids the points.
  for (const auto& name : s.points())
    if (dot(r.point(name), view.chart) == 0) {
      view.chart = detail::find_chart(s, r);
      break;
    }

  int pivot = 0;
  while (view.chart[pivot] == 0) ++pivot;
  std::array<int, 2> axes{};
  for (int i = 0, k = 0; i < 3; ++i)
    if (i != pivot) axes[k++] = i;

  Mat3 frame;  // rows: e_axes0, e_axes1, chart
  frame.m[0][axes[0]] = 1;
  frame.m[1][axes[1]] = 1;
  for (int j = 0; j < 3; ++j) frame.m[2][j] = view.chart[j];

  for (const auto& name : s.points()) {
    const HomogeneousCoord& p = r.point(name);
    Rational w(dot(p, view.chart));
    view.points[name] = {Rational(p[axes[0]]) / w, Rational(p[axes[1]]) / w};
  }
  Mat3 line_map = frame.adjugate().transposed();
  for (int li = 0; li < s.num_lines(); ++li) {
    HomogeneousCoord eq = apply_to_point(line_map, r.line_coords[li]);
    view.line_equations.push_back({eq[0], eq[1], eq[2]});
  }
  return view;
}

}  // namespace nearconf
