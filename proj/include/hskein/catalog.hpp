#pragma once
// Built-in manifold descriptors with their relation spec tables. The same
// JSON schema is accepted from user files, so every entry here can be
// overridden by pointing the CLI at a descriptor file.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hskein/descriptor.hpp"

namespace hskein {
namespace detail {

inline const std::map<std::string, const char*>& catalog_sources() {
  static const std::map<std::string, const char*> sources = {
      {"s3", R"json({
  "name": "s3",
  "pi1": {"kind": "free_abelian", "rank": 0},
  "b1": 0, "b1_boundary": 0, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": false, "cyclic_pi1": true},
  "boundary_tori": []
})json"},
      {"d3", R"json({
  "name": "d3",
  "pi1": {"kind": "free_abelian", "rank": 0},
  "b1": 0, "b1_boundary": 0, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": false, "cyclic_pi1": true},
  "boundary_tori": []
})json"},
      {"s1xd2", R"json({
  "name": "s1xd2",
  "pi1": {"kind": "free_abelian", "rank": 1},
  "b1": 1, "b1_boundary": 2, "h2_rank": 0,
  "pairing": [], "torus_class": [[[]]], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": true, "cyclic_pi1": true},
  "boundary_tori": [["b1", "1"]]
})json"},
      {"s2xs1", R"json({
  "name": "s2xs1",
  "pi1": {"kind": "free_abelian", "rank": 1, "names": ["a"]},
  "b1": 1, "b1_boundary": 0, "h2_rank": 1,
  "pairing": [[1]], "torus_class": [[[0]]], "sphere_subgroup": [[1]],
  "flags": {"pi2_zero": false, "atoroidal": true, "surface_product": false, "cyclic_pi1": true},
  "boundary_tori": [],
  "sphere_specs": [
    {"alpha": "<a, a, a^-1>", "moving": 1, "sphere": [1], "events": [[1, 2], [-1, 3]]}
  ]
})json"},
      {"t2xi", R"json({
  "name": "t2xi",
  "pi1": {"kind": "free_abelian", "rank": 2},
  "b1": 2, "b1_boundary": 4, "h2_rank": 1,
  "pairing": [[0, 0]],
  "torus_class": [[[0], [1]], [[-1], [0]]],
  "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": true, "cyclic_pi1": false},
  "boundary_tori": [["b1", "b2"], ["b1", "b2"]]
})json"},
      {"t3", R"json({
  "name": "t3",
  "pi1": {"kind": "free_abelian", "rank": 3},
  "b1": 3, "b1_boundary": 0, "h2_rank": 3,
  "pairing": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
  "torus_class": [
    [[0, 0, 0], [0, 0, 1], [0, -1, 0]],
    [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
    [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
  ],
  "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": false, "surface_product": false, "cyclic_pi1": false},
  "boundary_tori": [],
  "theta_specs": [
    {"alpha": "<b1, b2, b3>", "a": 1, "h": "b3^-1", "events": [[1, 2]]},
    {"alpha": "<b1, b2, b3>", "a": 1, "h": "b3^-1*b2^-1", "events": [[1, 2], [-1, 3]]}
  ],
  "delta_specs": [
    {"alpha": "<b1, b1^-1, b2>", "pair": [1, 2], "g": "b3", "band_events": [[1, 3]]}
  ]
})json"},
      {"l5_1", R"json({
  "name": "l5_1",
  "pi1": {"kind": "finite_cyclic", "order": 5},
  "b1": 0, "b1_boundary": 0, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": false, "cyclic_pi1": true},
  "boundary_tori": []
})json"},
      {"l7_2", R"json({
  "name": "l7_2",
  "pi1": {"kind": "finite_cyclic", "order": 7},
  "b1": 0, "b1_boundary": 0, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": false, "cyclic_pi1": true},
  "boundary_tori": []
})json"},
      {"f1xi", R"json({
  "name": "f1xi",
  "pi1": {"kind": "free_group", "rank": 2},
  "b1": 2, "b1_boundary": 4, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": true, "cyclic_pi1": false},
  "boundary_tori": [],
  "delta_specs": [
    {"alpha": "<x, x^-1>", "pair": [1, 2], "g": "y", "band_events": []}
  ]
})json"},
      {"f2xi", R"json({
  "name": "f2xi",
  "pi1": {"kind": "free_group", "rank": 4},
  "b1": 4, "b1_boundary": 8, "h2_rank": 0,
  "pairing": [], "torus_class": [], "sphere_subgroup": [],
  "flags": {"pi2_zero": true, "atoroidal": true, "surface_product": true, "cyclic_pi1": false},
  "boundary_tori": []
})json"},
  };
  return sources;
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, text] : detail::catalog_sources()) out.push_back(name);
    return out;
  }();
  return names;
}

inline const std::string& catalog_source(const std::string& name) {
  const auto& sources = detail::catalog_sources();
  auto it = sources.find(name);
  if (it == sources.end()) {
    std::string msg = "unknown catalog manifold '" + name + "'; available:";
    for (const auto& n : catalog_names()) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  static std::map<std::string, std::string> cache;
  auto [pos, inserted] = cache.try_emplace(name, it->second);
  return pos->second;
}

inline const CatalogEntry& catalog(const std::string& name) {
  static std::map<std::string, CatalogEntry> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, parse_catalog_entry(catalog_source(name), "catalog")).first;
  return it->second;
}

}  // namespace hskein
