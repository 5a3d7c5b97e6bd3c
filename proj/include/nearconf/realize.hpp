#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nearconf/catalog.hpp"
#include "nearconf/constructions.hpp"
#include "nearconf/isomorphism.hpp"
#include "nearconf/levi.hpp"
#include "nearconf/projective.hpp"
#include "nearconf/realizability.hpp"
#include "nearconf/realization.hpp"
#include "nearconf/rng.hpp"
#include "nearconf/structure.hpp"

namespace nearconf {

/// Sampling policy for free choices. Windows grow x10 on every whole-run
/// restart: bad choices form a finite union of algebraic conditions, so a
/// large enough window always escapes.
struct ReplayOptions {
  int per_instruction_retries = 100;
  int run_restarts = 20;
  long long num_window = 100;
  long long den_window = 10;
};

/// Thrown by realize() when the structure is provably or possibly
/// non-geometric; carries the full Levi-graph verdict.
class RealizeVerdictError : public RealizationError {
 public:
  RealizeVerdictError(RealizationErrorKind kind, std::string message, RealizabilityVerdict v)
      : RealizationError(kind, std::move(message)), verdict(std::move(v)) {}
  RealizabilityVerdict verdict;
};

namespace detail {

/// Two independent objects incident with x: points spanning a line, or
/// lines through a point, depending on how x is read.
inline std::pair<HomogeneousCoord, HomogeneousCoord> incident_basis(const HomogeneousCoord& x) {
  const HomogeneousCoord axes[3] = {HomogeneousCoord(BigInt(1), BigInt(0), BigInt(0)),
                                    HomogeneousCoord(BigInt(0), BigInt(1), BigInt(0)),
                                    HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1))};
  std::optional<HomogeneousCoord> first;
  for (const auto& e : axes) {
    HomogeneousCoord c = cross(x, e);
    if (c.is_zero()) continue;
    if (!first) {
      first = c;
      continue;
    }
    if (!cross(*first, c).is_zero()) return {*first, c};
  }
  throw std::logic_error("incident_basis of zero vector");
}

inline HomogeneousCoord combine(const HomogeneousCoord& u, const HomogeneousCoord& v,
                                const Rational& su, const Rational& sv) {
  return HomogeneousCoord(su * Rational(u[0]) + sv * Rational(v[0]),
                          su * Rational(u[1]) + sv * Rational(v[1]),
                          su * Rational(u[2]) + sv * Rational(v[2]));
}

class ReplayEngine {
 public:
  ReplayEngine(const IncidenceStructure& s, const LeviGraph& g, Rng rng, long long num_window,
               long long den_window, int retries)
      : s_(s), g_(g), rng_(rng), num_window_(num_window), den_window_(den_window),
        retries_(retries), coord_(g.num_vertices()) {}

  void seed_vertex(int v, const HomogeneousCoord& c) {
    coord_[v] = c;
    placed_.push_back(v);
  }

  /// Checks a candidate coordinate against everything placed so far:
  /// distinct from same-kind objects, and dot products zero exactly on the
  /// graph's edges.
  bool acceptable(int v, const HomogeneousCoord& c) const {
    if (c.is_zero()) return false;
    for (int w : placed_) {
      if (g_.is_point_vertex(v) == g_.is_point_vertex(w)) {
        if (*coord_[w] == c) return false;
      } else {
        bool zero = dot(c, *coord_[w]) == 0;
        if (zero != g_.has_edge(v, w)) return false;
      }
    }
    return true;
  }

  bool execute(const DrawInstruction& ins) {
    switch (ins.kind) {
      case DrawKind::FreePoint:
      case DrawKind::FreeLine:
        for (int t = 0; t < retries_; ++t) {
          Rational a = rng_.rational(num_window_, den_window_);
          Rational b = rng_.rational(num_window_, den_window_);
          HomogeneousCoord c(a, b, Rational(1));
          if (acceptable(ins.vertex, c)) {
            seed_vertex(ins.vertex, c);
            return true;
          }
        }
        return false;
      case DrawKind::PointOnLine:
      case DrawKind::LineThroughPoint: {
        auto [u, v] = incident_basis(*coord_[ins.refs[0]]);
        for (int t = 0; t < retries_; ++t) {
          Rational a = rng_.rational(num_window_, den_window_);
          Rational b = rng_.rational(num_window_, den_window_);
          if (a == 0 && b == 0) continue;
          HomogeneousCoord c = combine(u, v, a, b);
          if (acceptable(ins.vertex, c)) {
            seed_vertex(ins.vertex, c);
            return true;
          }
        }
        return false;
      }
      case DrawKind::PointOnTwoLines:
      case DrawKind::LineThroughTwoPoints: {
        // Fully determined; a violation here means earlier random choices
        // were degenerate, so the whole run restarts.
        HomogeneousCoord c = cross(*coord_[ins.refs[0]], *coord_[ins.refs[1]]);
        if (!acceptable(ins.vertex, c)) return false;
        seed_vertex(ins.vertex, c);
        return true;
      }
    }
    return false;
  }

  Realization result(std::uint64_t seed) const {
    Realization r;
    r.seed = seed;
    for (int p = 0; p < s_.num_points(); ++p)
      if (coord_[p]) r.point_coords[s_.point_name(p)] = *coord_[p];
    r.line_coords.resize(s_.num_lines());
    for (int li = 0; li < s_.num_lines(); ++li)
      if (coord_[s_.num_points() + li]) r.line_coords[li] = *coord_[s_.num_points() + li];
    return r;
  }

 private:
  const IncidenceStructure& s_;
  const LeviGraph& g_;
  Rng rng_;
  long long num_window_;
  long long den_window_;
  int retries_;
  std::vector<std::optional<HomogeneousCoord>> coord_;
  std::vector<int> placed_;
};

inline Realization replay_on_graph(const IncidenceStructure& s, const LeviGraph& g,
                                   const PeelTrace& trace, std::uint64_t seed,
                                   const std::map<int, HomogeneousCoord>& seeds,
                                   const ReplayOptions& opts) {
  long long num_window = opts.num_window;
  for (int run = 0; run < opts.run_restarts; ++run) {
    ReplayEngine engine(s, g, Rng(seed).split("replay").split(run), num_window, opts.den_window,
                        opts.per_instruction_retries);
    for (const auto& [v, c] : seeds) engine.seed_vertex(v, c);
    bool ok = true;
    for (const auto& ins : trace.instructions)
      if (!engine.execute(ins)) {
        ok = false;
        break;
      }
    if (ok) return engine.result(seed);
    if (num_window < 1000000000LL) num_window *= 10;
  }
  throw RealizationError(RealizationErrorKind::RetriesExhausted,
                         "replay kept hitting degenerate samples; reseed and retry");
}

/// Induced connected components within a vertex subset, each sorted,
/// ordered by smallest member.
inline std::vector<std::vector<int>> components_within(const LeviGraph& g,
                                                       const std::vector<int>& vertices) {
  std::vector<char> inside(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (int v : vertices) inside[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int v : vertices) {
    if (seen[v]) continue;
    std::vector<int> comp{v};
    seen[v] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : g.adj[comp[i]])
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace detail

/// Execute a fully peeled trace with exact rational arithmetic. Every free
/// choice is drawn from a bounded rational window and re-sampled until the
/// placement has no unwanted incidences or coincidences.
inline Realization replay(const IncidenceStructure& s, const PeelTrace& trace, std::uint64_t seed,
                          const ReplayOptions& opts = {}) {
  if (!trace.leftover.empty())
    throw std::invalid_argument("replay requires a fully peeled trace (leftover must be empty)");
  LeviGraph g = levi(s);
  Realization r = detail::replay_on_graph(s, g, trace, seed, {}, opts);
  if (!verify_realization(s, r).pass())
    throw std::logic_error("replay produced a realization that fails verification");
  return r;
}

/// Steinitz drawing of a connected (m_3) configuration: all incidences but
/// one, the broken pair strictly non-incident. Defaults to breaking the
/// canonically first (line, point) pair.
inline Realization steinitz_realize(const IncidenceStructure& s, std::uint64_t seed,
                                    std::optional<Incidence> broken = {},
                                    const ReplayOptions& opts = {}) {
  Signature want;
  want.point_degrees[3] = s.num_points();
  want.line_sizes[3] = s.num_lines();
  if (signature(s) != want)
    throw std::invalid_argument("steinitz_realize requires an (m_3) configuration, got " +
                                signature(s).str());
  LeviGraph g = levi(s);
  if (connected_components(g).size() != 1)
    throw RealizationError(RealizationErrorKind::Disconnected,
                           "steinitz_realize requires a connected configuration");

  Incidence b = broken.value_or(Incidence{s.point_name(s.line(0)[0]), 0});
  if (b.line < 0 || b.line >= s.num_lines())
    throw std::invalid_argument("broken incidence line index out of range");
  int pv = s.point_index(b.point);
  if (!std::binary_search(s.line(b.line).begin(), s.line(b.line).end(), pv))
    throw std::invalid_argument("broken incidence is not an incidence of the structure");

  LeviGraph cut = g.without_edge(pv, s.num_points() + b.line);
  PeelTrace trace = peel(cut);
  if (!trace.leftover.empty())
    throw std::logic_error("peel left a core after breaking one incidence of a connected (m_3)");

  Realization r = detail::replay_on_graph(s, cut, trace, seed, {}, opts);
  r.broken = b;
  if (!verify_realization(s, r).pass())
    throw std::logic_error("steinitz replay produced a realization that fails verification");
  return r;
}

/// Full realization of a near-configuration: peel, then replay; when a
/// 3-regular core is left, seed it from a geometric catalog entry's exact
/// coordinates (the replay then starts by putting the cut point on the
/// seeded line, growing it to size four). Throws a verdict-carrying error
/// when the structure is non-geometric or the core cannot be certified.
inline Realization realize(const IncidenceStructure& s, std::uint64_t seed,
                           const std::vector<CatalogEntry>& entries = catalog(),
                           const ReplayOptions& opts = {}) {
  if (!is_near_config(s))
    throw RealizationError(RealizationErrorKind::NotNearConfig,
                           "realize requires the near-configuration signature, got " +
                               signature(s).str());
  LeviGraph g = levi(s);
  PeelTrace trace = peel(g);

  if (trace.leftover.empty()) {
    Realization r = detail::replay_on_graph(s, g, trace, seed, {}, opts);
    if (!verify_realization(s, r).pass())
      throw std::logic_error("replay produced a realization that fails verification");
    return r;
  }

  auto fail_with_verdict = [&]() -> RealizationError {
    RealizabilityVerdict verdict = decide_realizability(s, entries);
    switch (verdict.status) {
      case RealizabilityVerdict::Status::NotRealizable:
        return RealizeVerdictError(
            RealizationErrorKind::NotRealizable,
            "not realizable: " + verdict.note, std::move(verdict));
      case RealizabilityVerdict::Status::Unknown:
        return RealizeVerdictError(RealizationErrorKind::UnknownComponent,
                                   "cannot certify: " + verdict.note, std::move(verdict));
      case RealizabilityVerdict::Status::Realizable:
        break;
    }
    verdict.status = RealizabilityVerdict::Status::Unknown;
    verdict.note = "peel left a component the catalog cannot seed";
    return RealizeVerdictError(RealizationErrorKind::UnknownComponent, verdict.note,
                               std::move(verdict));
  };

  // Resolve every leftover component against the catalog before sampling.
  struct SeedPlan {
    std::map<int, HomogeneousCoord> coords;  // levi vertex -> catalog coordinate
  };
  std::vector<SeedPlan> plans;
  for (const auto& comp : detail::components_within(g, trace.leftover)) {
    if (!detail::is_three_regular(g, comp)) throw fail_with_verdict();
    IncidenceStructure part = detail::component_structure(s, g, comp);
    const CatalogEntry* match = nullptr;
    std::map<std::string, std::string> bijection;
    for (const auto& e : entries) {
      if (auto iso = isomorphic(part, e.structure)) {
        match = &e;
        bijection = std::move(*iso);
        break;
      }
    }
    if (!match || match->status != GeometricStatus::Geometric || !match->coordinates)
      throw fail_with_verdict();

    SeedPlan plan;
    std::vector<char> inside(g.num_vertices(), 0);
    for (int v : comp) inside[v] = 1;
    for (int v : comp) {
      if (g.is_point_vertex(v)) {
        plan.coords[v] = match->coordinates->point(bijection.at(s.point_name(v)));
      } else {
        std::vector<int> mapped;
        for (int w : g.adj[v])
          if (inside[w]) mapped.push_back(match->structure.point_index(bijection.at(s.point_name(w))));
        int li = match->structure.find_line(std::move(mapped));
        if (li < 0) throw std::logic_error("isomorphism did not map a component line to a catalog line");
        plan.coords[v] = match->coordinates->line_coords[li];
      }
    }
    plans.push_back(std::move(plan));
  }

  // Components after the first get an independent random projective
  // transform so distinct seeded drawings never collide.
  long long num_window = opts.num_window;
  for (int run = 0; run < opts.run_restarts; ++run) {
    Rng rng = Rng(seed).split("seed-transform").split(run);
    std::map<int, HomogeneousCoord> seeds = plans[0].coords;
    bool ok = true;
    for (size_t k = 1; k < plans.size() && ok; ++k) {
      bool placed_component = false;
      for (int attempt = 0; attempt < opts.per_instruction_retries; ++attempt) {
        Mat3 t;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) t.m[i][j] = rng.uniform_int(-num_window, num_window);
        if (t.det() == 0) continue;
        std::map<int, HomogeneousCoord> moved;
        for (const auto& [v, c] : plans[k].coords)
          moved[v] = g.is_point_vertex(v) ? apply_to_point(t, c) : apply_to_line(t, c);
        bool clean = true;
        for (const auto& [v, c] : moved) {
          for (const auto& [w, d] : seeds) {
            if (g.is_point_vertex(v) == g.is_point_vertex(w)) {
              if (c == d) clean = false;
            } else {
              if (dot(c, d) == 0) clean = false;
            }
            if (!clean) break;
          }
          if (!clean) break;
        }
        if (clean) {
          seeds.merge(moved);
          placed_component = true;
          break;
        }
      }
      ok = placed_component;
    }
    if (ok) {
      ReplayOptions run_opts = opts;
      run_opts.num_window = num_window;
      run_opts.run_restarts = 1;
      try {
        Realization r = detail::replay_on_graph(s, g, trace, seed ^ (0x9e37u + run), seeds, run_opts);
        r.seed = seed;
        if (verify_realization(s, r).pass()) return r;
      } catch (const RealizationError&) {
        // fall through to restart
      }
    }
    if (num_window < 1000000000LL) num_window *= 10;
  }
  throw RealizationError(RealizationErrorKind::RetriesExhausted,
                         "seeded replay kept hitting degenerate samples; reseed and retry");
}

/// Cross-checking variant: Realizable verdicts attempt a realization and
/// attach the coordinate certificate.
inline RealizabilityVerdict decide_realizability(const IncidenceStructure& s,
                                                 const std::vector<CatalogEntry>& entries,
                                                 std::uint64_t seed, const ReplayOptions& opts = {}) {
  RealizabilityVerdict verdict = decide_realizability(s, entries);
  if (verdict.status != RealizabilityVerdict::Status::Realizable) return verdict;
  try {
    verdict.certificate = realize(s, seed, entries, opts);
  } catch (const RealizeVerdictError& e) {
    return e.verdict;  // the realization pipeline knows better than the bridge scan
  } catch (const RealizationError& e) {
    verdict.note = std::string("certificate attempt failed: ") + e.what();
  }
  return verdict;
}

enum class AlignMode { MergeBrokenLines };

struct AlignResult {
  IncidenceStructure merged;
  Realization realization;
};

/// The compound alignment: map drawing B by an exact projective
/// transformation taking its broken line onto A's broken line (residual
/// freedom randomized), fuse the two size-2 remnants into one line of size
/// four, and add the new 2-line through the two broken points.
inline AlignResult align(const IncidenceStructure& sa, const Realization& ra, int line_a,
                         const std::string& point_a, const IncidenceStructure& sb,
                         const Realization& rb, int line_b, const std::string& point_b,
                         AlignMode mode, std::uint64_t seed, const ReplayOptions& opts = {}) {
  (void)mode;  // single mode today: MergeBrokenLines
  if (line_a < 0 || line_a >= sa.num_lines() || line_b < 0 || line_b >= sb.num_lines())
    throw std::invalid_argument("align: line index out of range");
  if (sa.line(line_a).size() != 3 || sb.line(line_b).size() != 3)
    throw std::invalid_argument("align merges two broken lines of size 3");

  IncidenceStructure merged = merged_compound(sa, line_a, sa.point_index(point_a),
                                              sb, line_b, sb.point_index(point_b));

  // Each input must be exactly a Steinitz drawing broken at the designated pair.
  auto check_side = [](const IncidenceStructure& s, const Realization& r, int line,
                       const std::string& point, const char* which) {
    Realization copy = r;
    copy.broken = Incidence{point, line};
    if (!verify_realization(s, copy).pass())
      throw std::invalid_argument(std::string("align: ") + which +
                                  " realization is not broken exactly at the designated pair");
  };
  check_side(sa, ra, line_a, point_a, "first");
  check_side(sb, rb, line_b, point_b, "second");

  // Names of the two retained points on each broken line.
  auto retained = [](const IncidenceStructure& s, int line, const std::string& point) {
    std::vector<std::string> out;
    for (int p : s.line(line))
      if (s.point_name(p) != point) out.push_back(s.point_name(p));
    return out;
  };
  auto keep_a = retained(sa, line_a, point_a);
  auto keep_b = retained(sb, line_b, point_b);
  const HomogeneousCoord& merged_line = ra.line_coords[line_a];
  std::array<HomogeneousCoord, 4> src{rb.point(keep_b[0]), rb.point(keep_b[1]),
                                      HomogeneousCoord(), HomogeneousCoord()};

  // Deterministic completion of the source frame.
  const HomogeneousCoord pool[5] = {HomogeneousCoord(BigInt(1), BigInt(0), BigInt(0)),
                                    HomogeneousCoord(BigInt(0), BigInt(1), BigInt(0)),
                                    HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1)),
                                    HomogeneousCoord(BigInt(1), BigInt(1), BigInt(1)),
                                    HomogeneousCoord(BigInt(1), BigInt(2), BigInt(3))};
  bool have_frame = false;
  for (int i = 0; i < 5 && !have_frame; ++i)
    for (int j = i + 1; j < 5 && !have_frame; ++j) {
      src[2] = pool[i];
      src[3] = pool[j];
      if (frame_matrix(src[0], src[1], src[2], src[3])) have_frame = true;
    }
  if (!have_frame) throw std::logic_error("align: could not complete a source frame");

  auto [span_u, span_v] = detail::incident_basis(merged_line);
  Rng rng = Rng(seed).split("align");
  long long num_window = opts.num_window;
  for (int attempt = 0; attempt < opts.per_instruction_retries * opts.run_restarts; ++attempt) {
    if (attempt > 0 && attempt % opts.per_instruction_retries == 0 && num_window < 1000000000LL)
      num_window *= 10;
    // Two random landing points on A's merged line, two random free points.
    auto sample_on_line = [&] {
      Rational a = rng.rational(num_window, opts.den_window);
      Rational b = rng.rational(num_window, opts.den_window);
      return detail::combine(span_u, span_v, a, b);
    };
    std::array<HomogeneousCoord, 4> dst{
        sample_on_line(), sample_on_line(),
        HomogeneousCoord(rng.rational(num_window, opts.den_window),
                         rng.rational(num_window, opts.den_window), Rational(1)),
        HomogeneousCoord(rng.rational(num_window, opts.den_window),
                         rng.rational(num_window, opts.den_window), Rational(1))};
    if (dst[0].is_zero() || dst[1].is_zero()) continue;
    auto transform = four_point_transform(src, dst);
    if (!transform) continue;

    Realization candidate;
    candidate.seed = seed;
    for (const auto& [name, coord] : ra.point_coords) candidate.point_coords[name] = coord;
    for (const auto& [name, coord] : rb.point_coords)
      candidate.point_coords[name] = apply_to_point(*transform, coord);

    candidate.line_coords.resize(merged.num_lines());
    std::vector<std::string> two_line{point_a, point_b};
    std::sort(two_line.begin(), two_line.end());
    std::vector<std::string> fused_line = keep_a;
    fused_line.insert(fused_line.end(), keep_b.begin(), keep_b.end());
    std::sort(fused_line.begin(), fused_line.end());
    bool degenerate = false;
    for (int li = 0; li < merged.num_lines() && !degenerate; ++li) {
      auto names = merged.line_point_names(li);
      if (names == fused_line) {
        candidate.line_coords[li] = merged_line;
      } else if (names == two_line) {
        HomogeneousCoord join = cross(candidate.point_coords.at(point_a),
                                      candidate.point_coords.at(point_b));
        if (join.is_zero()) degenerate = true;
        candidate.line_coords[li] = join;
      } else {
        std::vector<int> in_a;
        bool all_a = true;
        for (const auto& name : names)
          if (ra.point_coords.count(name) == 0) all_a = false;
        if (all_a) {
          for (const auto& name : names) in_a.push_back(sa.point_index(name));
          candidate.line_coords[li] = ra.line_coords[sa.find_line(std::move(in_a))];
        } else {
          std::vector<int> in_b;
          for (const auto& name : names) in_b.push_back(sb.point_index(name));
          candidate.line_coords[li] =
              apply_to_line(*transform, rb.line_coords[sb.find_line(std::move(in_b))]);
        }
      }
    }
    if (degenerate) continue;
    if (verify_realization(merged, candidate).pass()) return {merged, candidate};
  }
  throw RealizationError(RealizationErrorKind::RetriesExhausted,
                         "alignment kept producing unwanted incidences; reseed and retry");
}

}  // namespace nearconf
