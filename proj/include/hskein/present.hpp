#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hskein/descriptor.hpp"
#include "hskein/groups.hpp"
#include "hskein/intersect.hpp"
#include "hskein/lincomb.hpp"
#include "hskein/paths.hpp"
#include "hskein/ring.hpp"
#include "hskein/wrap.hpp"

// Presentations of the skein module over the class basis. Each basis class
// contributes relation rows from three families of sweeps: self-homotopies
// of one occurrence along a central direction (theta), sweeps of one
// occurrence across an embedded sphere class, and re-bandings of an
// occurrence pair through a conjugator (delta). Catalog tables may pin the
// sweep directions and crossing events; abelian models reconstruct default
// events from the intersection data.

namespace hskein {

enum class PresentMode { Plain, Graded };

inline std::string to_string(PresentMode m) {
  return m == PresentMode::Plain ? "plain" : "graded";
}

struct PresentBounds {
  long long conj = 3;  // radius for conjugator / double coset enumeration
};

enum class GenKind { Theta, Sphere, Delta };

inline std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::Theta: return "theta";
    case GenKind::Sphere: return "sphere";
    case GenKind::Delta: return "delta";
  }
  return "?";
}

// One relation generator attached to a basis class.
struct GenDescriptor {
  GenKind kind = GenKind::Theta;
  WrapClass alpha;
  size_t a = 0;  // moving occurrence (theta/sphere), first band end (delta)
  size_t b = 0;  // second band end (delta only)
  GroupElem h;   // central direction (theta only)
  GroupElem g;   // band conjugator (delta only)
  std::vector<long long> sphere;  // H2 class (sphere only)

  bool operator==(const GenDescriptor&) const = default;
};

inline std::string render_descriptor(const GroupModel& m, const GenDescriptor& d) {
  auto occ = [&](size_t i) {
    return i < d.alpha.parts.size() ? render_elem(m, d.alpha.parts[i])
                                    : std::string("?");
  };
  std::ostringstream os;
  os << to_string(d.kind) << "(" << render_class(m, d.alpha);
  os << "; a@" << (d.a + 1) << "=" << occ(d.a);
  switch (d.kind) {
    case GenKind::Theta:
      os << "; h=" << render_elem(m, d.h);
      break;
    case GenKind::Sphere: {
      os << "; S=[";
      for (size_t i = 0; i < d.sphere.size(); ++i)
        os << (i ? ", " : "") << d.sphere[i];
      os << "]";
      break;
    }
    case GenKind::Delta:
      os << "; b@" << (d.b + 1) << "=" << occ(d.b);
      os << "; g=" << render_elem(m, d.g);
      break;
  }
  os << ")";
  return os.str();
}

// Generators of the whole model: free directions first, then torsion ones.
inline std::vector<GroupElem> model_generators(const GroupModel& m) {
  std::vector<GroupElem> out;
  if (m.word_model()) {
    for (int i = 0; i < m.rank; ++i) {
      GroupElem e = identity(m);
      e.word = {i + 1};
      out.push_back(e);
    }
    return out;
  }
  for (int i = 0; i < m.rank; ++i) {
    GroupElem e = identity(m);
    e.vec[static_cast<size_t>(i)] = 1;
    out.push_back(e);
  }
  for (size_t i = 0; i < m.torsion.size(); ++i) {
    GroupElem e = identity(m);
    e.res[i] = 1;
    out.push_back(e);
  }
  return out;
}

// Generating set of the centralizer of a: the whole model when a is central,
// otherwise the maximal root of a.
inline std::vector<GroupElem> centralizer_generators(const GroupModel& m,
                                                     const GroupElem& a) {
  CentralizerData cd = centralizer_data(m, a);
  if (cd.whole_group) return model_generators(m);
  return {cd.root};
}

// ---- structure set: the full list of relation generators for one class ----

inline std::vector<GenDescriptor> structure_set(const ManifoldData& M,
                                                const WrapClass& alpha0,
                                                PresentMode mode,
                                                const PresentBounds& bounds = {}) {
  const GroupModel& m = M.pi1;
  WrapClass alpha = wrap_class_elems(m, alpha0.parts);
  if (mode == PresentMode::Graded && !no_trivial(m, alpha))
    throw std::invalid_argument(
        "structure_set: graded classes must not carry trivial components");
  const auto& parts = alpha.parts;
  auto essential_without = [&](const std::set<size_t>& skip) {
    for (size_t j = 0; j < parts.size(); ++j)
      if (!skip.count(j) && !is_identity(m, parts[j])) return true;
    return false;
  };

  std::vector<GenDescriptor> out;
  std::set<GroupElem> seen;
  for (size_t i = 0; i < parts.size(); ++i) {
    const GroupElem& a = parts[i];
    if (!seen.insert(a).second) continue;
    for (const auto& s : M.sphere_subgroup) {
      GenDescriptor d;
      d.kind = GenKind::Sphere;
      d.alpha = alpha;
      d.a = i;
      d.sphere = s;
      out.push_back(d);
    }
    if (is_identity(m, a)) continue;
    if (!essential_without({i})) continue;
    for (const auto& h : centralizer_generators(m, a)) {
      GenDescriptor d;
      d.kind = GenKind::Theta;
      d.alpha = alpha;
      d.a = i;
      d.h = h;
      out.push_back(d);
    }
  }

  std::set<std::pair<GroupElem, GroupElem>> seen_pairs;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = i + 1; j < parts.size(); ++j) {
      const GroupElem& a = parts[i];
      const GroupElem& b = parts[j];
      if (is_identity(m, a) || is_identity(m, b) || a == b) continue;
      if (!seen_pairs.insert(std::minmax(a, b)).second) continue;
      if (!essential_without({i, j})) continue;
      for (const auto& rep : double_cosets(m, a, b, bounds.conj)) {
        GenDescriptor d;
        d.kind = GenKind::Delta;
        d.alpha = alpha;
        d.a = i;
        d.b = j;
        d.g = rep.g;
        out.push_back(d);
      }
    }
  }
  return out;
}

// ---- reduction rules: drop sweeps that cannot carry a new relation ----

inline bool peripheral_element(const ManifoldData& M, const GroupElem& g) {
  if (M.pi1.word_model()) return false;
  for (const auto& [x, y] : M.boundary_tori)
    if (detail::pair_lattice(M.pi1, x, y).contains(detail::full_coords(M.pi1, g)))
      return true;
  return false;
}

struct DroppedGen {
  GenDescriptor descriptor;
  std::string rule;
};

struct ReducedStructureSet {
  std::vector<GenDescriptor> kept;
  std::vector<DroppedGen> dropped;
};

inline ReducedStructureSet reduce_structure_set(const ManifoldData& M,
                                                const std::vector<GenDescriptor>& in) {
  const GroupModel& m = M.pi1;
  ReducedStructureSet out;
  for (const auto& d : in) {
    std::string rule;
    switch (d.kind) {
      case GenKind::Sphere:
        break;  // sphere sweeps are never redundant
      case GenKind::Theta: {
        const GroupElem& a = d.alpha.parts[d.a];
        if (M.flags.surface_product)
          rule = "surface-product";
        else if (M.flags.pi2_zero && cyclic_subgroup_member(m, a, d.h))
          rule = "cyclic-root";
        else if (M.flags.pi2_zero && peripheral_element(M, d.h))
          rule = "peripheral";
        break;
      }
      case GenKind::Delta: {
        const GroupElem& a = d.alpha.parts[d.a];
        const GroupElem& b = d.alpha.parts[d.b];
        if (M.flags.cyclic_pi1)
          rule = "cyclic-fundamental-group";
        else if (cyclic_subgroup_member(m, a, b) && cyclic_subgroup_member(m, a, d.g))
          rule = "cyclic-root";
        else if (peripheral_element(M, d.g))
          rule = "peripheral";
        break;
      }
    }
    if (rule.empty())
      out.kept.push_back(d);
    else
      out.dropped.push_back(DroppedGen{d, rule});
  }
  return out;
}

// ---- default crossing events for abelian models ----

namespace detail {

inline std::vector<RelEvent> events_from_h2_class(const ManifoldData& M,
                                                  const WrapClass& alpha,
                                                  const std::vector<long long>& cls,
                                                  const std::set<size_t>& skip) {
  std::vector<RelEvent> out;
  for (size_t j = 0; j < alpha.parts.size(); ++j) {
    if (skip.count(j)) continue;
    long long e = iota(M, cls, abelianization(M.pi1, alpha.parts[j]));
    for (long long k = 0; k < std::abs(e); ++k)
      out.push_back(RelEvent{e > 0 ? 1 : -1, j, std::nullopt});
  }
  return out;
}

}  // namespace detail

inline std::vector<RelEvent> default_theta_events(const ManifoldData& M,
                                                  const WrapClass& alpha,
                                                  size_t a, const GroupElem& h) {
  auto cls = tau(M, abelianization(M.pi1, alpha.parts[a]),
                 abelianization(M.pi1, h));
  return detail::events_from_h2_class(M, alpha, cls, {a});
}

inline std::vector<RelEvent> default_sphere_events(const ManifoldData& M,
                                                   const WrapClass& alpha,
                                                   size_t moving,
                                                   const std::vector<long long>& sphere) {
  return detail::events_from_h2_class(M, alpha, sphere, {moving});
}

// The band sweep drags the second end along the conjugator.
inline std::vector<RelEvent> default_band_events(const ManifoldData& M,
                                                 const WrapClass& alpha, size_t i,
                                                 size_t j, const GroupElem& g) {
  auto cls = tau(M, abelianization(M.pi1, alpha.parts[j]),
                 abelianization(M.pi1, g));
  return detail::events_from_h2_class(M, alpha, cls, {i, j});
}

// ---- relation rows ----

// Class obtained by merging the moving occurrence into the target one.
inline WrapClass smoothed_merge(const GroupModel& m, const WrapClass& alpha,
                                size_t moving, size_t target) {
  std::vector<GroupElem> parts;
  for (size_t k = 0; k < alpha.parts.size(); ++k)
    if (k != moving && k != target) parts.push_back(alpha.parts[k]);
  parts.push_back(
      merge_classes(m, alpha.parts[moving], identity(m), alpha.parts[target]).rep);
  return wrap_class_elems(m, std::move(parts));
}

namespace detail {

inline std::vector<CrossingEvent<WrapClass>> materialize_events(
    const GroupModel& m, const WrapClass& alpha, size_t moving,
    const std::vector<RelEvent>& events) {
  std::vector<CrossingEvent<WrapClass>> out;
  for (const auto& ev : events) {
    if (ev.target >= alpha.parts.size() || ev.target == moving)
      throw std::invalid_argument("relation event targets a bad occurrence");
    WrapClass cls;
    if (ev.smoothed)
      cls = wrap_class_elems(m, ev.smoothed->parts);
    else if (!m.word_model())
      cls = smoothed_merge(m, alpha, moving, ev.target);
    else
      throw unsupported_model(
          "crossing events need explicit smoothed classes over a word model");
    out.push_back(CrossingEvent<WrapClass>{ev.sign, cls});
  }
  return out;
}

}  // namespace detail

// Self-homotopy row: the loop starts and ends at alpha, so the row is
// (q^(2 index) - 1) alpha plus z times the smoothing terms.
inline SkeinVector theta_generator(const ManifoldData& M, const WrapClass& alpha0,
                                   size_t a, const std::vector<RelEvent>& events) {
  const GroupModel& m = M.pi1;
  WrapClass alpha = wrap_class_elems(m, alpha0.parts);
  if (a >= alpha.parts.size())
    throw std::invalid_argument("theta_generator: occurrence out of range");
  PathWord<WrapClass> loop{alpha, alpha, detail::materialize_events(m, alpha, a, events)};
  return relative_value(loop);
}

// Sphere sweep row. Sweeping the moving occurrence across the sphere splits
// off a null-homotopic circle, so the leading terms sit on alpha itself:
// (q^(2 eps) - 1) u + z q (1 + q + ... + q^(2 eps - 1)), with eps the
// intersection number of the sphere with the rest of the class. Crossing
// events contribute the usual z-terms at u-degree zero.
inline USkeinVector sphere_generator(const ManifoldData& M, const WrapClass& alpha0,
                                     size_t moving, const std::vector<long long>& sphere,
                                     const std::vector<RelEvent>& events) {
  const GroupModel& m = M.pi1;
  WrapClass alpha = wrap_class_elems(m, alpha0.parts);
  if (moving >= alpha.parts.size())
    throw std::invalid_argument("sphere_generator: occurrence out of range");
  std::vector<long long> rest_hom(static_cast<size_t>(m.hom_rank()), 0);
  for (size_t j = 0; j < alpha.parts.size(); ++j) {
    if (j == moving) continue;
    auto v = abelianization(m, alpha.parts[j]);
    for (size_t k = 0; k < v.size(); ++k) rest_hom[k] += v[k];
  }
  long long eps = iota(M, sphere, rest_hom);

  USkeinVector out;
  LaurentPoly lead = LaurentPoly::term(Int(1), 2 * eps) - LaurentPoly(Int(1));
  UPoly coeff = UPoly::uterm(RPoly(lead), 1) +
                UPoly::uterm(RPoly::zterm(LaurentPoly::q(1) * geometric_sum(eps), 1), 0);
  out.add_term(alpha, coeff);

  PathWord<WrapClass> loop{alpha, alpha,
                           detail::materialize_events(m, alpha, moving, events)};
  LinComb<WrapClass, LaurentPoly> ct = crossing_terms(loop);
  for (const auto& [cls, c] : ct.terms())
    out.add_term(cls, UPoly::uterm(RPoly::zterm(c, 1), 0));
  return out;
}

// Band sweep row. The banded class at conjugator 1 and at g are joined by
// the sweep path; the row is z (q^-1 - q) times the relative value.
struct DeltaGen {
  WrapClass class_one;  // occurrences banded with the trivial conjugator
  WrapClass class_g;    // occurrences banded through g
  SkeinVector delta;    // relative value of the sweep path
  SkeinVector relation;
  long long index = 0;  // sum of band crossing signs
};

inline DeltaGen delta_generator(const ManifoldData& M, const WrapClass& alpha0,
                                size_t i, size_t j, const GroupElem& g,
                                const std::vector<RelEvent>& band_events) {
  const GroupModel& m = M.pi1;
  WrapClass alpha = wrap_class_elems(m, alpha0.parts);
  if (i >= alpha.parts.size() || j >= alpha.parts.size() || i == j)
    throw std::invalid_argument("delta_generator: bad occurrence pair");
  const GroupElem& a = alpha.parts[i];
  const GroupElem& b = alpha.parts[j];

  std::vector<GroupElem> rest;
  for (size_t k = 0; k < alpha.parts.size(); ++k)
    if (k != i && k != j) rest.push_back(alpha.parts[k]);
  auto with = [&](const ConjClass& banded) {
    std::vector<GroupElem> parts = rest;
    parts.push_back(banded.rep);
    return wrap_class_elems(m, std::move(parts));
  };

  DeltaGen out;
  out.class_one = with(merge_classes(m, a, identity(m), b));
  out.class_g = with(merge_classes(m, a, g, b));

  std::vector<CrossingEvent<WrapClass>> evs;
  GroupElem banded = mul(m, a, b);
  for (const auto& ev : band_events) {
    if (ev.target >= alpha.parts.size() || ev.target == i || ev.target == j)
      throw std::invalid_argument("band event targets a bad occurrence");
    WrapClass cls;
    if (ev.smoothed) {
      cls = wrap_class_elems(m, ev.smoothed->parts);
    } else if (!m.word_model()) {
      std::vector<GroupElem> parts;
      for (size_t k = 0; k < alpha.parts.size(); ++k)
        if (k != i && k != j && k != ev.target) parts.push_back(alpha.parts[k]);
      parts.push_back(merge_classes(m, banded, identity(m), alpha.parts[ev.target]).rep);
      cls = wrap_class_elems(m, std::move(parts));
    } else {
      throw unsupported_model(
          "band events need explicit smoothed classes over a word model");
    }
    evs.push_back(CrossingEvent<WrapClass>{ev.sign, cls});
  }

  PathWord<WrapClass> band{out.class_one, out.class_g, evs};
  out.index = path_index(band);
  out.delta = relative_value(band);
  out.relation =
      out.delta.scaled(RPoly::zterm(LaurentPoly::q(-1) - LaurentPoly::q(1), 1));
  return out;
}

// ---- moving rows between the plain and the u-graded bases ----

inline SkeinVector skein_from_graded(const GroupModel& m, const USkeinVector& v) {
  SkeinVector out;
  for (const auto& [cls, up] : v.terms())
    for (const auto& [d, c] : up.terms())
      out.add_term(u_act(m, cls, static_cast<size_t>(d)), c);
  return out;
}

inline USkeinVector graded_from_skein(const GroupModel& m, const SkeinVector& v) {
  USkeinVector out;
  for (const auto& [cls, c] : v.terms()) {
    auto [stripped, removed] = strip_trivial(m, cls);
    out.add_term(stripped, UPoly::uterm(c, static_cast<long long>(removed)));
  }
  return out;
}

inline USkeinVector plain_embed(const SkeinVector& v) {
  USkeinVector out;
  for (const auto& [cls, c] : v.terms()) out.add_term(cls, UPoly::uterm(c, 0));
  return out;
}

inline USkeinVector normalize_graded(const GroupModel& m, const USkeinVector& v) {
  return graded_from_skein(m, skein_from_graded(m, v));
}

// ---- assembling a presentation over a seed set ----

struct PresRow {
  GenDescriptor source;
  USkeinVector value;  // plain mode keeps everything at u-degree zero
};

struct Presentation {
  PresentMode mode = PresentMode::Plain;
  ManifoldData manifold;
  std::vector<WrapClass> generators;
  std::vector<PresRow> rows;
  std::vector<DroppedGen> dropped;
  std::vector<std::string> incomplete;  // sweeps with no usable event data
  size_t zero_rows_dropped = 0;
};

inline Presentation assemble_presentation(const CatalogEntry& entry,
                                          const std::vector<WrapClass>& seeds,
                                          PresentMode mode,
                                          const PresentBounds& bounds = {}) {
  const ManifoldData& M = entry.manifold;
  const GroupModel& m = M.pi1;

  Presentation P;
  P.mode = mode;
  P.manifold = M;

  std::vector<WrapClass> canon;
  for (const auto& s : seeds) {
    WrapClass c = wrap_class_elems(m, s.parts);
    if (mode == PresentMode::Graded) c = strip_trivial(m, c).first;
    canon.push_back(c);
  }
  if (mode == PresentMode::Plain) {
    P.generators = skein_closure(m, canon, bounds.conj);
  } else {
    StarSet star = star_closure(m, canon, bounds.conj);
    P.generators.assign(star.base.begin(), star.base.end());
  }

  auto push_row = [&](const GenDescriptor& d, const USkeinVector& graded) {
    USkeinVector v = mode == PresentMode::Plain
                         ? plain_embed(skein_from_graded(m, graded))
                         : normalize_graded(m, graded);
    if (v.is_zero()) {
      ++P.zero_rows_dropped;
      return;
    }
    P.rows.push_back(PresRow{d, v});
  };

  for (const auto& alpha : P.generators) {
    std::vector<GenDescriptor> descs = structure_set(M, alpha, mode, bounds);

    // Catalog tables override the enumerated directions for their slot: the
    // listed sweeps replace the default ones for that occurrence or pair.
    std::set<size_t> pinned_theta;
    std::set<std::pair<size_t, size_t>> pinned_delta;
    for (const auto& s : entry.theta_specs)
      if (s.alpha == alpha) pinned_theta.insert(s.a);
    for (const auto& s : entry.delta_specs)
      if (s.alpha == alpha) pinned_delta.insert(std::minmax(s.first, s.second));
    std::erase_if(descs, [&](const GenDescriptor& d) {
      if (d.kind == GenKind::Theta) return pinned_theta.count(d.a) > 0;
      if (d.kind == GenKind::Delta)
        return pinned_delta.count(std::minmax(d.a, d.b)) > 0;
      return false;
    });
    for (const auto& s : entry.theta_specs) {
      if (s.alpha != alpha) continue;
      GenDescriptor d;
      d.kind = GenKind::Theta;
      d.alpha = alpha;
      d.a = s.a;
      d.h = s.h;
      descs.push_back(d);
    }
    for (const auto& s : entry.delta_specs) {
      if (s.alpha != alpha) continue;
      GenDescriptor d;
      d.kind = GenKind::Delta;
      d.alpha = alpha;
      auto [lo, hi] = std::minmax(s.first, s.second);
      d.a = lo;
      d.b = hi;
      d.g = s.g;
      descs.push_back(d);
    }

    ReducedStructureSet red = reduce_structure_set(M, descs);
    P.dropped.insert(P.dropped.end(), red.dropped.begin(), red.dropped.end());

    // Fixed row order per class: band rows, then sphere rows, then torus
    // rows. Certificates scan rows in order, and the pure-z band rows are
    // the ones whose obstruction lives in the linking functional.
    std::stable_sort(red.kept.begin(), red.kept.end(),
                     [](const GenDescriptor& x, const GenDescriptor& y) {
                       auto rank = [](GenKind k) {
                         return k == GenKind::Delta ? 0 : k == GenKind::Sphere ? 1 : 2;
                       };
                       return rank(x.kind) < rank(y.kind);
                     });

    for (const auto& d : red.kept) {
      switch (d.kind) {
        case GenKind::Theta: {
          std::optional<std::vector<RelEvent>> events;
          for (const auto& s : entry.theta_specs)
            if (s.alpha == alpha && s.a == d.a && s.h == d.h && s.events_given)
              events = s.events;
          if (!events && !m.word_model())
            events = default_theta_events(M, alpha, d.a, d.h);
          if (!events) {
            P.incomplete.push_back(render_descriptor(m, d));
            break;
          }
          push_row(d, plain_embed(theta_generator(M, alpha, d.a, *events)));
          break;
        }
        case GenKind::Sphere: {
          std::optional<std::vector<RelEvent>> events;
          for (const auto& s : entry.sphere_specs)
            if (s.alpha == alpha && s.moving == d.a && s.sphere == d.sphere)
              events = s.events;
          if (!events && !m.word_model())
            events = default_sphere_events(M, alpha, d.a, d.sphere);
          if (!events) {
            P.incomplete.push_back(render_descriptor(m, d));
            break;
          }
          push_row(d, sphere_generator(M, alpha, d.a, d.sphere, *events));
          break;
        }
        case GenKind::Delta: {
          std::optional<std::vector<RelEvent>> events;
          for (const auto& s : entry.delta_specs)
            if (s.alpha == alpha && std::minmax(s.first, s.second) == std::minmax(d.a, d.b) &&
                s.g == d.g)
              events = s.band_events;
          if (!events && !m.word_model())
            events = default_band_events(M, alpha, d.a, d.b, d.g);
          if (!events) {
            P.incomplete.push_back(render_descriptor(m, d));
            break;
          }
          push_row(d, plain_embed(delta_generator(M, alpha, d.a, d.b, d.g, *events).relation));
          break;
        }
      }
    }
  }
  return P;
}

// ---- torsion certificates ----

// A row of the form z^k w with w nonzero modulo the obvious quotients
// certifies torsion: multiplication by z^k kills w, and w is seen to be
// nonzero either through the q->1, z->0 augmentation or through the linking
// functional on a single class (whose image must vanish when lambda = 0 and
// must reduce to zero modulo q^(2 lambda) - 1 otherwise).
struct TorsionCertificate {
  bool found = false;
  size_t row_index = 0;
  std::string source;
  long long z_power = 0;
  std::string route;  // "augmentation" or "linking-annihilator"
  WrapClass witness;
  std::string note;
};

namespace detail {

inline LaurentPoly reduce_exponents_mod(const LaurentPoly& p, long long modulus) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out += LaurentPoly::term(c, positive_mod(e, modulus));
  return out;
}

inline RPoly shift_z_down(const RPoly& p, long long k) {
  RPoly out;
  for (const auto& [d, c] : p.terms()) out += RPoly::zterm(c, d - k);
  return out;
}

}  // namespace detail

inline TorsionCertificate torsion_certificate(const Presentation& P) {
  const GroupModel& m = P.manifold.pi1;
  TorsionCertificate cert;
  for (size_t idx = 0; idx < P.rows.size(); ++idx) {
    SkeinVector row = skein_from_graded(m, P.rows[idx].value);
    if (row.is_zero()) continue;
    long long k = std::numeric_limits<long long>::max();
    for (const auto& [cls, c] : row.terms())
      k = std::min(k, c.terms().begin()->first);
    if (k < 1) continue;
    SkeinVector w;
    for (const auto& [cls, c] : row.terms())
      w.add_term(cls, detail::shift_z_down(c, k));

    auto fire = [&](const std::string& route, const WrapClass& witness,
                    const std::string& note) {
      cert.found = true;
      cert.row_index = idx;
      cert.source = render_descriptor(m, P.rows[idx].source);
      cert.z_power = k;
      cert.route = route;
      cert.witness = witness;
      cert.note = note;
    };

    for (const auto& [cls, c] : w.terms()) {
      Int aug = c.augmentation();
      if (aug != 0) {
        fire("augmentation", cls,
             "z^" + std::to_string(k) + " kills a cofactor with augmentation " +
                 aug.str() + " on " + render_class(m, cls));
        return cert;
      }
    }
    if (m.word_model()) continue;
    for (const auto& [cls, c] : w.terms()) {
      LaurentPoly p = c.at_z0();
      if (p.is_zero()) continue;
      long long lam = lambda_alpha(P.manifold, cls);
      if (lam == 0) {
        fire("linking-annihilator", cls,
             "lambda(" + render_class(m, cls) +
                 ") = 0 forces the z->0 cofactor to vanish; it is " + p.str());
        return cert;
      }
      LaurentPoly rem = detail::reduce_exponents_mod(p, 2 * lam);
      if (!rem.is_zero()) {
        fire("linking-annihilator", cls,
             "z->0 cofactor on " + render_class(m, cls) + " is " + rem.str() +
                 " mod " + cyclotomic_q2(lam).str());
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace hskein
