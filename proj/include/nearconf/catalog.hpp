#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearconf/constructions.hpp"
#include "nearconf/realization.hpp"
#include "nearconf/structure.hpp"

namespace nearconf {

enum class GeometricStatus { Geometric, NonGeometric, Unknown };

inline const char* to_string(GeometricStatus s) {
  switch (s) {
    case GeometricStatus::Geometric: return "geometric";
    case GeometricStatus::NonGeometric: return "non-geometric";
    case GeometricStatus::Unknown: return "unknown";
  }
  return "?";
}

struct CatalogEntry {
  std::string name;
  IncidenceStructure structure;
  GeometricStatus status;
  std::optional<Realization> coordinates;
  std::string note;
};

namespace detail {

inline Realization named_realization(const IncidenceStructure& s,
                                     std::vector<std::pair<std::string, HomogeneousCoord>> pts) {
  std::map<std::string, HomogeneousCoord> coords(pts.begin(), pts.end());
  return realization_from_point_coords(s, std::move(coords));
}

inline CatalogEntry quadrangle_entry() {
  std::vector<std::string> points{"a", "b", "c", "d"};
  std::vector<std::vector<std::string>> lines{{"a", "b"}, {"a", "c"}, {"a", "d"},
                                              {"b", "c"}, {"b", "d"}, {"c", "d"}};
  auto s = IncidenceStructure::validate(points, lines);
  auto r = named_realization(s, {{"a", HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1))},
                                 {"b", HomogeneousCoord(BigInt(1), BigInt(0), BigInt(1))},
                                 {"c", HomogeneousCoord(BigInt(0), BigInt(1), BigInt(1))},
                                 {"d", HomogeneousCoord(BigInt(1), BigInt(1), BigInt(1))}});
  return {"quadrangle", s, GeometricStatus::Geometric, r,
          "the complete graph K4 as a (4_3, 6_2) configuration"};
}

inline CatalogEntry fano_entry() {
  return {"fano", cyclic_config(7), GeometricStatus::NonGeometric, std::nullopt,
          "the (7_3) configuration; Fano plane, not realizable by straight lines"};
}

inline CatalogEntry mobius_kantor_entry() {
  return {"mobius-kantor", cyclic_config(8), GeometricStatus::NonGeometric, std::nullopt,
          "the (8_3) configuration; admits no geometric realization"};
}

inline CatalogEntry cyclic9_entry() {
  auto s = cyclic_config(9);
  auto r = named_realization(s, {{"0", HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1))},
                                 {"1", HomogeneousCoord(BigInt(1), BigInt(0), BigInt(1))},
                                 {"2", HomogeneousCoord(BigInt(0), BigInt(1), BigInt(1))},
                                 {"3", HomogeneousCoord(BigInt(5), BigInt(0), BigInt(2))},
                                 {"4", HomogeneousCoord(BigInt(2), BigInt(-1), BigInt(1))},
                                 {"5", HomogeneousCoord(BigInt(15), BigInt(-5), BigInt(1))},
                                 {"6", HomogeneousCoord(BigInt(20), BigInt(-5), BigInt(9))},
                                 {"7", HomogeneousCoord(BigInt(20), BigInt(-5), BigInt(-3))},
                                 {"8", HomogeneousCoord(BigInt(0), BigInt(5), BigInt(23))}});
  return {"cyclic-9", s, GeometricStatus::Geometric, r,
          "the cyclic (9_3) configuration with exact rational coordinates"};
}

inline CatalogEntry desargues_entry() {
  std::vector<std::string> points{"o", "a", "b", "c", "a2", "b2", "c2", "ab", "bc", "ca"};
  std::vector<std::vector<std::string>> lines{
      {"o", "a", "a2"}, {"o", "b", "b2"},  {"o", "c", "c2"},  {"a", "b", "ab"},
      {"a2", "b2", "ab"}, {"b", "c", "bc"}, {"b2", "c2", "bc"}, {"a", "c", "ca"},
      {"a2", "c2", "ca"}, {"ab", "bc", "ca"}};
  auto s = IncidenceStructure::validate(points, lines);
  auto r = named_realization(s, {{"o", HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1))},
                                 {"a", HomogeneousCoord(BigInt(1), BigInt(0), BigInt(1))},
                                 {"b", HomogeneousCoord(BigInt(0), BigInt(1), BigInt(1))},
                                 {"c", HomogeneousCoord(BigInt(1), BigInt(1), BigInt(1))},
                                 {"a2", HomogeneousCoord(BigInt(2), BigInt(0), BigInt(1))},
                                 {"b2", HomogeneousCoord(BigInt(0), BigInt(3), BigInt(1))},
                                 {"c2", HomogeneousCoord(BigInt(4), BigInt(4), BigInt(1))},
                                 {"ab", HomogeneousCoord(BigInt(4), BigInt(-3), BigInt(1))},
                                 {"bc", HomogeneousCoord(BigInt(8), BigInt(-1), BigInt(-1))},
                                 {"ca", HomogeneousCoord(BigInt(1), BigInt(-2), BigInt(1))}});
  return {"desargues", s, GeometricStatus::Geometric, r,
          "Desargues' (10_3) configuration: two triangles in perspective"};
}

/// The 9-point near-configuration of the paper's opening example, with its
/// exact projective coordinates (one point at infinity).
inline CatalogEntry near9_entry() {
  std::vector<std::string> points{"a", "b", "c", "d", "e", "f", "g", "h", "inf"};
  std::vector<std::vector<std::string>> lines{
      {"a", "b", "c", "inf"}, {"d", "inf"}, {"g", "h", "inf"},
      {"c", "d", "f"}, {"b", "d", "e"}, {"a", "e", "g"},
      {"a", "f", "h"}, {"c", "e", "h"}, {"b", "f", "g"}};
  auto s = IncidenceStructure::validate(points, lines);
  auto r = named_realization(
      s, {{"a", HomogeneousCoord(BigInt(0), BigInt(0), BigInt(1))},
          {"b", HomogeneousCoord(BigInt(4), BigInt(0), BigInt(1))},
          {"c", HomogeneousCoord(BigInt(-4), BigInt(0), BigInt(1))},
          {"d", HomogeneousCoord(BigInt(0), BigInt(6), BigInt(1))},
          {"e", HomogeneousCoord(BigInt(2), BigInt(3), BigInt(1))},
          {"f", HomogeneousCoord(BigInt(-2), BigInt(3), BigInt(1))},
          {"g", HomogeneousCoord(BigInt(2), BigInt(3), BigInt(2))},
          {"h", HomogeneousCoord(BigInt(-2), BigInt(3), BigInt(2))},
          {"inf", HomogeneousCoord(BigInt(1), BigInt(0), BigInt(0))}});
  return {"near9-figure1", s, GeometricStatus::Geometric, r,
          "9-point near-configuration with one point at infinity"};
}

inline CatalogEntry near10_entry() {
  std::vector<std::string> points{"a", "b", "c", "d", "e", "f", "g", "h", "i", "inf"};
  std::vector<std::vector<std::string>> lines{
      {"a", "h", "i", "inf"}, {"d", "e"}, {"b", "f", "inf"}, {"c", "g", "inf"},
      {"a", "b", "d"}, {"a", "c", "e"}, {"d", "f", "i"}, {"e", "g", "i"},
      {"b", "g", "h"}, {"c", "f", "h"}};
  return {"near10-figure2", IncidenceStructure::validate(points, lines),
          GeometricStatus::Geometric, std::nullopt,
          "10-point near-configuration; three parallel lines meet at infinity"};
}

inline CatalogEntry near11_entry() {
  std::vector<std::string> points{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"};
  std::vector<std::vector<std::string>> lines{
      {"a", "d", "f", "j"}, {"i", "j"}, {"a", "c", "k"}, {"a", "b", "g"},
      {"b", "e", "h"}, {"c", "g", "i"}, {"b", "c", "d"}, {"d", "e", "g"},
      {"f", "h", "i"}, {"e", "f", "k"}, {"h", "j", "k"}};
  return {"near11-figure2", IncidenceStructure::validate(points, lines),
          GeometricStatus::Geometric, std::nullopt,
          "11-point near-configuration, entirely Euclidean"};
}

inline CatalogEntry near12_entry() {
  std::vector<std::string> points{"a", "b", "c", "d", "e", "f", "g", "h", "i1", "i2", "i3", "i4"};
  std::vector<std::vector<std::string>> lines{
      {"i1", "i2", "i3", "i4"}, {"c", "g"}, {"a", "b", "h"}, {"d", "e", "f"},
      {"a", "d", "i1"}, {"e", "h", "i1"}, {"a", "f", "i2"}, {"b", "e", "i2"},
      {"c", "h", "i3"}, {"d", "g", "i3"}, {"b", "g", "i4"}, {"c", "f", "i4"}};
  return {"near12-figure2", IncidenceStructure::validate(points, lines),
          GeometricStatus::Geometric, std::nullopt,
          "12-point near-configuration whose size-4 line is the line at infinity"};
}

inline CatalogEntry near13_entry() {
  std::vector<std::string> points{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j",
                                  "i1", "i2", "i3"};
  std::vector<std::vector<std::string>> lines{
      {"a", "b", "g", "h"}, {"i", "j"}, {"i1", "i2", "i3"},
      {"a", "d", "i1"}, {"b", "e", "i1"}, {"a", "c", "i2"}, {"b", "f", "i2"},
      {"c", "d", "i3"}, {"e", "f", "i3"}, {"c", "h", "i"}, {"d", "g", "i"},
      {"e", "h", "j"}, {"f", "g", "j"}};
  return {"near13-figure2", IncidenceStructure::validate(points, lines),
          GeometricStatus::Geometric, std::nullopt,
          "13-point near-configuration with three points on the line at infinity"};
}

}  // namespace detail

/// The named structures shipped with the library. Statuses are only as
/// strong as their backing: NonGeometric entries carry literature-backed
/// impossibility, Geometric entries with coordinates are verified exactly
/// by the test suite.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(detail::quadrangle_entry());
    v.push_back(detail::fano_entry());
    v.push_back(detail::mobius_kantor_entry());
    v.push_back(detail::cyclic9_entry());
    v.push_back(detail::desargues_entry());
    v.push_back(detail::near9_entry());
    v.push_back(detail::near10_entry());
    v.push_back(detail::near11_entry());
    v.push_back(detail::near12_entry());
    v.push_back(detail::near13_entry());
    return v;
  }();
  return entries;
}

inline const CatalogEntry* catalog_find(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

/// Resolve a catalog name, also accepting dynamic "cyclic-<m>" for any
/// m >= 7 (status Unknown unless a fixed entry covers it).
inline std::optional<IncidenceStructure> catalog_structure(std::string_view name) {
  if (const auto* e = catalog_find(name)) return e->structure;
  constexpr std::string_view prefix = "cyclic-";
  if (name.substr(0, prefix.size()) == prefix) {
    std::string digits(name.substr(prefix.size()));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return cyclic_config(std::stoi(digits));
  }
  return std::nullopt;
}

}  // namespace nearconf
