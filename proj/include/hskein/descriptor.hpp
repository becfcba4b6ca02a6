#pragma once
// JSON descriptor format for manifolds and their relation spec tables.
// Occurrence indices in spec entries are 1-based and refer to the canonical
// ordering of the parsed class literal.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hskein/groups.hpp"
#include "hskein/intersect.hpp"
#include "hskein/wrap.hpp"

namespace hskein {

// One smoothing event of a relation: the crossing sign and the occurrence of
// the target component. Non-abelian tables may pin the smoothed class
// explicitly; abelian models can reconstruct it from the merge.
struct RelEvent {
  int sign = 1;
  size_t target = 0;  // 0-based occurrence index into alpha
  std::optional<WrapClass> smoothed;

  bool operator==(const RelEvent&) const = default;
};

// Self-homotopy of occurrence `a` of alpha along a central element h.
struct ThetaSpec {
  WrapClass alpha;
  size_t a = 0;
  GroupElem h;
  std::vector<RelEvent> events;
  bool events_given = false;

  bool operator==(const ThetaSpec&) const = default;
};

// Sphere sweep of occurrence `moving` of alpha along an H2 sphere class.
struct SphereSpec {
  WrapClass alpha;
  size_t moving = 0;
  std::vector<long long> sphere;
  std::vector<RelEvent> events;

  bool operator==(const SphereSpec&) const = default;
};

// Re-banding of the occurrence pair (first, second) of alpha through g.
struct DeltaSpec {
  WrapClass alpha;
  size_t first = 0;
  size_t second = 1;
  GroupElem g;
  std::vector<RelEvent> band_events;

  bool operator==(const DeltaSpec&) const = default;
};

struct CatalogEntry {
  ManifoldData manifold;
  std::vector<ThetaSpec> theta_specs;
  std::vector<SphereSpec> sphere_specs;
  std::vector<DeltaSpec> delta_specs;

  bool operator==(const CatalogEntry&) const = default;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void desc_fail(const std::string& where, const std::string& msg) {
  throw std::invalid_argument("descriptor " + where + ": " + msg);
}

inline const json& require_key(const json& j, const std::string& key,
                               const std::string& where) {
  if (!j.is_object() || !j.contains(key)) desc_fail(where, "missing key '" + key + "'");
  return j.at(key);
}

inline long long int_field(const json& j, const std::string& key,
                           const std::string& where) {
  const json& v = require_key(j, key, where);
  if (!v.is_number_integer()) desc_fail(where, "key '" + key + "' must be an integer");
  return v.get<long long>();
}

inline std::vector<long long> int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) desc_fail(where, "expected an array of integers");
  std::vector<long long> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) desc_fail(where, "expected an array of integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

inline GroupModel parse_group_model(const json& j, const std::string& where) {
  const json& kindv = require_key(j, "kind", where);
  if (!kindv.is_string()) desc_fail(where, "pi1 kind must be a string");
  const std::string kind = kindv.get<std::string>();
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& n : j.at("names")) {
      if (!n.is_string()) desc_fail(where, "pi1 names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  try {
    if (kind == "free_abelian") {
      std::vector<long long> torsion;
      if (j.contains("torsion")) torsion = int_vector(j.at("torsion"), where);
      return GroupModel::free_abelian(static_cast<int>(int_field(j, "rank", where)),
                                      std::move(torsion), std::move(names));
    }
    if (kind == "free_group")
      return GroupModel::free_group(static_cast<int>(int_field(j, "rank", where)),
                                    std::move(names));
    if (kind == "finite_cyclic") {
      if (!names.empty() && names.size() != 1)
        desc_fail(where, "finite_cyclic takes one generator name");
      return names.empty()
                 ? GroupModel::finite_cyclic(int_field(j, "order", where))
                 : GroupModel::finite_cyclic(int_field(j, "order", where), names[0]);
    }
  } catch (const std::invalid_argument& e) {
    desc_fail(where, e.what());
  }
  desc_fail(where, "unknown pi1 kind '" + kind + "'");
}

inline size_t occurrence_index(long long one_based, const WrapClass& alpha,
                               const std::string& where) {
  if (one_based < 1 || one_based > static_cast<long long>(alpha.parts.size()))
    desc_fail(where, "occurrence index " + std::to_string(one_based) + " out of range");
  return static_cast<size_t>(one_based - 1);
}

inline std::vector<RelEvent> parse_events(const json& v, const GroupModel& model,
                                          const WrapClass& alpha,
                                          const std::string& where) {
  if (!v.is_array()) desc_fail(where, "events must be an array");
  std::vector<RelEvent> out;
  for (const auto& e : v) {
    RelEvent ev;
    if (e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
        e[1].is_number_integer()) {
      ev.sign = e[0].get<int>();
      ev.target = occurrence_index(e[1].get<long long>(), alpha, where);
    } else if (e.is_object()) {
      ev.sign = static_cast<int>(int_field(e, "sign", where));
      ev.target = occurrence_index(int_field(e, "target", where), alpha, where);
      if (e.contains("smoothed"))
        ev.smoothed = parse_class(model, e.at("smoothed").get<std::string>());
    } else {
      desc_fail(where, "event entries must be [sign, target] pairs or objects");
    }
    if (ev.sign != 1 && ev.sign != -1) desc_fail(where, "event signs must be +1 or -1");
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace detail

inline CatalogEntry parse_catalog_entry(const nlohmann::json& j,
                                        const std::string& source = "descriptor") {
  using detail::desc_fail;
  using detail::int_field;
  using detail::require_key;
  using json = nlohmann::json;
  if (!j.is_object()) desc_fail(source, "top level must be an object");
  CatalogEntry entry;
  ManifoldData& m = entry.manifold;
  const json& namev = require_key(j, "name", source);
  if (!namev.is_string()) desc_fail(source, "name must be a string");
  m.name = namev.get<std::string>();
  const std::string where = source + " '" + m.name + "'";
  try {
    m.pi1 = detail::parse_group_model(require_key(j, "pi1", where), where);
    m.b1 = int_field(j, "b1", where);
    m.b1_boundary = int_field(j, "b1_boundary", where);
    m.h2_rank = int_field(j, "h2_rank", where);
    for (const auto& row : require_key(j, "pairing", where))
      m.pairing.push_back(detail::int_vector(row, where));
    for (const auto& row : require_key(j, "torus_class", where)) {
      m.torus_class.emplace_back();
      for (const auto& v : row) m.torus_class.back().push_back(detail::int_vector(v, where));
    }
    for (const auto& v : require_key(j, "sphere_subgroup", where))
      m.sphere_subgroup.push_back(detail::int_vector(v, where));
    const json& flags = require_key(j, "flags", where);
    auto flag = [&](const char* key) {
      const json& v = require_key(flags, key, where);
      if (!v.is_boolean()) desc_fail(where, std::string("flag '") + key + "' must be a boolean");
      return v.get<bool>();
    };
    m.flags.pi2_zero = flag("pi2_zero");
    m.flags.atoroidal = flag("atoroidal");
    m.flags.surface_product = flag("surface_product");
    m.flags.cyclic_pi1 = flag("cyclic_pi1");
    for (const auto& pair : require_key(j, "boundary_tori", where)) {
      if (!pair.is_array() || pair.size() != 2)
        desc_fail(where, "boundary_tori entries must be generator pairs");
      m.boundary_tori.emplace_back(parse_elem(m.pi1, pair[0].get<std::string>()),
                                   parse_elem(m.pi1, pair[1].get<std::string>()));
    }
    validate_manifold(m);

    for (const auto& t : j.value("theta_specs", nlohmann::json::array())) {
      ThetaSpec spec;
      spec.alpha = parse_class(m.pi1, require_key(t, "alpha", where).get<std::string>());
      spec.a = detail::occurrence_index(int_field(t, "a", where), spec.alpha, where);
      spec.h = parse_elem(m.pi1, require_key(t, "h", where).get<std::string>());
      if (t.contains("events")) {
        spec.events = detail::parse_events(t.at("events"), m.pi1, spec.alpha, where);
        spec.events_given = true;
      }
      entry.theta_specs.push_back(std::move(spec));
    }
    for (const auto& s : j.value("sphere_specs", nlohmann::json::array())) {
      SphereSpec spec;
      spec.alpha = parse_class(m.pi1, require_key(s, "alpha", where).get<std::string>());
      spec.moving = detail::occurrence_index(int_field(s, "moving", where), spec.alpha, where);
      spec.sphere = detail::int_vector(require_key(s, "sphere", where), where);
      if (spec.sphere.size() != static_cast<size_t>(m.h2_rank))
        desc_fail(where, "sphere spec class must be an H2-vector");
      spec.events = detail::parse_events(require_key(s, "events", where), m.pi1,
                                         spec.alpha, where);
      entry.sphere_specs.push_back(std::move(spec));
    }
    for (const auto& d : j.value("delta_specs", nlohmann::json::array())) {
      DeltaSpec spec;
      spec.alpha = parse_class(m.pi1, require_key(d, "alpha", where).get<std::string>());
      const json& pair = require_key(d, "pair", where);
      if (!pair.is_array() || pair.size() != 2)
        desc_fail(where, "delta spec 'pair' must be two occurrence indices");
      spec.first = detail::occurrence_index(pair[0].get<long long>(), spec.alpha, where);
      spec.second = detail::occurrence_index(pair[1].get<long long>(), spec.alpha, where);
      if (spec.first == spec.second) desc_fail(where, "delta spec pair must be distinct");
      spec.g = parse_elem(m.pi1, require_key(d, "g", where).get<std::string>());
      spec.band_events = detail::parse_events(require_key(d, "band_events", where),
                                              m.pi1, spec.alpha, where);
      entry.delta_specs.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    desc_fail(where, e.what());
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    if (msg.rfind("descriptor", 0) == 0) throw;
    desc_fail(where, msg);
  }
  return entry;
}

inline CatalogEntry parse_catalog_entry(const std::string& text,
                                        const std::string& source = "descriptor") {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("descriptor " + source + ": " + e.what());
  }
  return parse_catalog_entry(j, source);
}

inline nlohmann::json events_to_json(const GroupModel& model,
                                     const std::vector<RelEvent>& events) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : events) {
    if (e.smoothed) {
      out.push_back({{"sign", e.sign},
                     {"target", e.target + 1},
                     {"smoothed", render_class(model, *e.smoothed)}});
    } else {
      out.push_back({e.sign, e.target + 1});
    }
  }
  return out;
}

inline nlohmann::json catalog_entry_to_json(const CatalogEntry& entry) {
  const ManifoldData& m = entry.manifold;
  nlohmann::json pi1{{"names", m.pi1.names}};
  switch (m.pi1.kind) {
    case GroupModel::Kind::FreeAbelian:
      pi1["kind"] = "free_abelian";
      pi1["rank"] = m.pi1.rank;
      if (!m.pi1.torsion.empty()) pi1["torsion"] = m.pi1.torsion;
      break;
    case GroupModel::Kind::FreeGroup:
      pi1["kind"] = "free_group";
      pi1["rank"] = m.pi1.rank;
      break;
    case GroupModel::Kind::FiniteCyclic:
      pi1["kind"] = "finite_cyclic";
      pi1["order"] = m.pi1.torsion.at(0);
      break;
  }
  nlohmann::json tori = nlohmann::json::array();
  for (const auto& [g1, g2] : m.boundary_tori)
    tori.push_back({render_elem(m.pi1, g1), render_elem(m.pi1, g2)});
  nlohmann::json j{
      {"name", m.name},
      {"pi1", pi1},
      {"b1", m.b1},
      {"b1_boundary", m.b1_boundary},
      {"h2_rank", m.h2_rank},
      {"pairing", m.pairing},
      {"torus_class", m.torus_class},
      {"sphere_subgroup", m.sphere_subgroup},
      {"flags",
       {{"pi2_zero", m.flags.pi2_zero},
        {"atoroidal", m.flags.atoroidal},
        {"surface_product", m.flags.surface_product},
        {"cyclic_pi1", m.flags.cyclic_pi1}}},
      {"boundary_tori", tori},
  };
  if (!entry.theta_specs.empty()) {
    j["theta_specs"] = nlohmann::json::array();
    for (const auto& t : entry.theta_specs) {
      nlohmann::json spec{{"alpha", render_class(m.pi1, t.alpha)},
                          {"a", t.a + 1},
                          {"h", render_elem(m.pi1, t.h)}};
      if (t.events_given) spec["events"] = events_to_json(m.pi1, t.events);
      j["theta_specs"].push_back(std::move(spec));
    }
  }
  if (!entry.sphere_specs.empty()) {
    j["sphere_specs"] = nlohmann::json::array();
    for (const auto& s : entry.sphere_specs)
      j["sphere_specs"].push_back({{"alpha", render_class(m.pi1, s.alpha)},
                                   {"moving", s.moving + 1},
                                   {"sphere", s.sphere},
                                   {"events", events_to_json(m.pi1, s.events)}});
  }
  if (!entry.delta_specs.empty()) {
    j["delta_specs"] = nlohmann::json::array();
    for (const auto& d : entry.delta_specs)
      j["delta_specs"].push_back(
          {{"alpha", render_class(m.pi1, d.alpha)},
           {"pair", {d.first + 1, d.second + 1}},
           {"g", render_elem(m.pi1, d.g)},
           {"band_events", events_to_json(m.pi1, d.band_events)}});
  }
  return j;
}

}  // namespace hskein
