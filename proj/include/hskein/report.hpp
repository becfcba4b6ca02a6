#pragma once
// JSON payloads for the command line tools. Classes and coefficients are
// rendered through the same strings the parsers accept, so every payload
// round-trips: parse the strings back and you recover the objects. Term
// arrays follow the canonical wrapping-class order.

#include <string>
#include <vector>

#include <json.hpp>

#include "hskein/catalog.hpp"
#include "hskein/descriptor.hpp"
#include "hskein/intersect.hpp"
#include "hskein/paths.hpp"
#include "hskein/present.hpp"
#include "hskein/wrap.hpp"

namespace hskein {

inline nlohmann::json skein_terms_json(const GroupModel& m, const SkeinVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : v.terms())
    arr.push_back({{"class", render_class(m, k)}, {"coeff", c.str()}});
  return arr;
}

inline nlohmann::json uskein_terms_json(const GroupModel& m, const USkeinVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : v.terms())
    arr.push_back({{"class", render_class(m, k)}, {"coeff", c.str()}});
  return arr;
}

inline SkeinVector skein_terms_from_json(const GroupModel& m, const nlohmann::json& arr) {
  SkeinVector v;
  for (const auto& t : arr)
    v.add_term(parse_class(m, t.at("class").get<std::string>()),
               RPoly::parse(t.at("coeff").get<std::string>()));
  return v;
}

inline USkeinVector uskein_terms_from_json(const GroupModel& m, const nlohmann::json& arr) {
  USkeinVector v;
  for (const auto& t : arr)
    v.add_term(parse_class(m, t.at("class").get<std::string>()),
               UPoly::parse(t.at("coeff").get<std::string>()));
  return v;
}

inline nlohmann::json analyze_report(const CatalogEntry& entry) {
  const ManifoldData& m = entry.manifold;
  FreenessVerdict v = freeness_verdict(m);
  nlohmann::json j;
  j["manifold"] = m.name;
  j["abelian"] = m.pi1.abelian();
  j["b1"] = m.b1;
  j["b1_boundary"] = m.b1_boundary;
  j["h_verdict"] = to_string(v.h_verdict);
  j["h_clause"] = v.h_clause;
  j["c_verdict"] = to_string(v.c_verdict);
  j["c_clause"] = v.c_clause;
  j["assertions_used"] = v.assertions_used;
  return j;
}

inline nlohmann::json linking_report(const ManifoldData& m, const WrapClass& alpha) {
  LinkingSummand s = linking_module(m, alpha);
  nlohmann::json j;
  j["class"] = render_class(m.pi1, s.alpha);
  j["lambda"] = s.lambda;
  j["annihilator"] = s.annihilator.str();
  j["free"] = s.free();
  nlohmann::json occ = nlohmann::json::array();
  for (size_t i = 0; i < s.alpha.parts.size(); ++i)
    occ.push_back({{"index", i + 1},
                   {"part", render_elem(m.pi1, s.alpha.parts[i])},
                   {"iota", iota_alpha_a(m, s.alpha, i)}});
  j["occurrences"] = occ;
  return j;
}

inline nlohmann::json closure_report(const CatalogEntry& entry,
                                     const std::vector<WrapClass>& seeds,
                                     long long conj_bound,
                                     const std::vector<WrapClass>& classes) {
  const GroupModel& m = entry.manifold.pi1;
  nlohmann::json j;
  j["manifold"] = entry.manifold.name;
  j["conj_bound"] = conj_bound;
  nlohmann::json sj = nlohmann::json::array();
  for (const auto& s : seeds) sj.push_back(render_class(m, s));
  j["seeds"] = sj;
  nlohmann::json cj = nlohmann::json::array();
  for (const auto& c : classes) cj.push_back(render_class(m, c));
  j["classes"] = cj;
  return j;
}

inline nlohmann::json path_eval_report(const SymbolPath& p, const std::string& map,
                                       const SymbolVector& value) {
  nlohmann::json j;
  j["path"] = render_path(p);
  j["map"] = map;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [label, c] : value.terms())
    arr.push_back({{"label", label}, {"coeff", c.str()}});
  j["terms"] = arr;
  return j;
}

inline nlohmann::json path_eval_report(const SymbolPath& p, const std::string& map,
                                       const LinComb<std::string, LaurentPoly>& value) {
  nlohmann::json j;
  j["path"] = render_path(p);
  j["map"] = map;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [label, c] : value.terms())
    arr.push_back({{"label", label}, {"coeff", c.str()}});
  j["terms"] = arr;
  return j;
}

inline nlohmann::json certificate_json(const GroupModel& m, const TorsionCertificate& c) {
  nlohmann::json j;
  j["found"] = c.found;
  if (!c.found) return j;
  j["row_index"] = c.row_index;
  j["source"] = c.source;
  j["z_power"] = c.z_power;
  j["route"] = c.route;
  j["witness"] = render_class(m, c.witness);
  j["note"] = c.note;
  return j;
}

inline nlohmann::json present_report(const CatalogEntry& entry, const Presentation& p,
                                     long long conj_bound,
                                     const TorsionCertificate* cert = nullptr) {
  const GroupModel& m = entry.manifold.pi1;
  nlohmann::json j;
  j["manifold"] = entry.manifold.name;
  j["mode"] = to_string(p.mode);
  j["conj_bound"] = conj_bound;
  nlohmann::json gj = nlohmann::json::array();
  for (const auto& g : p.generators) gj.push_back(render_class(m, g));
  j["generators"] = gj;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : p.rows)
    rows.push_back({{"source", render_descriptor(m, r.source)},
                    {"terms", uskein_terms_json(m, r.value)}});
  j["rows"] = rows;
  nlohmann::json dj = nlohmann::json::array();
  for (const auto& d : p.dropped)
    dj.push_back({{"descriptor", render_descriptor(m, d.descriptor)}, {"rule", d.rule}});
  j["dropped"] = dj;
  j["incomplete"] = p.incomplete;
  j["zero_rows_dropped"] = p.zero_rows_dropped;
  if (cert) j["certificate"] = certificate_json(m, *cert);
  return j;
}

}  // namespace hskein
