#pragma once

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hskein/groups.hpp"
#include "hskein/lincomb.hpp"
#include "hskein/ring.hpp"

// Wrapping classes: finite multisets of conjugacy classes, the free-module
// basis that link homotopy classes map onto. Vectors over them carry the
// skein coefficients.

namespace hskein {

struct WrapClass {
  std::vector<GroupElem> parts;  // canonical class reps in display order

  bool operator==(const WrapClass&) const = default;
  // Deterministic key order: component count first, then the reps.
  auto operator<=>(const WrapClass& o) const {
    if (auto c = parts.size() <=> o.parts.size(); c != 0) return c;
    return parts <=> o.parts;
  }
};

inline WrapClass wrap_class_elems(const GroupModel& m, std::vector<GroupElem> es) {
  std::vector<GroupElem> parts;
  parts.reserve(es.size());
  for (const auto& e : es) parts.push_back(conj_class(m, e).rep);
  std::sort(parts.begin(), parts.end(), [&](const GroupElem& a, const GroupElem& b) {
    return class_less(m, ConjClass{a}, ConjClass{b});
  });
  return WrapClass{std::move(parts)};
}

inline WrapClass wrap_class(const GroupModel& m, const std::vector<ConjClass>& cls) {
  std::vector<GroupElem> es;
  es.reserve(cls.size());
  for (const auto& c : cls) es.push_back(c.rep);
  return wrap_class_elems(m, std::move(es));
}

inline bool all_trivial(const GroupModel& m, const WrapClass& a) {
  return std::all_of(a.parts.begin(), a.parts.end(),
                     [&](const GroupElem& e) { return is_identity(m, e); });
}
inline bool no_trivial(const GroupModel& m, const WrapClass& a) {
  return std::none_of(a.parts.begin(), a.parts.end(),
                      [&](const GroupElem& e) { return is_identity(m, e); });
}

// Remove trivial components; returns the stripped class and how many were
// removed (the u-degree of the original over the stripped one).
inline std::pair<WrapClass, size_t> strip_trivial(const GroupModel& m,
                                                  const WrapClass& a) {
  WrapClass out;
  size_t removed = 0;
  for (const auto& e : a.parts) {
    if (is_identity(m, e))
      ++removed;
    else
      out.parts.push_back(e);
  }
  return {out, removed};
}

// Adjoin k trivial components (the u action on basis classes).
inline WrapClass u_act(const GroupModel& m, const WrapClass& a, size_t k = 1) {
  std::vector<GroupElem> parts = a.parts;
  for (size_t i = 0; i < k; ++i) parts.push_back(identity(m));
  return wrap_class_elems(m, std::move(parts));
}

// Total homology class: sum of the free H1 images of the parts.
inline std::vector<long long> homology_class(const GroupModel& m, const WrapClass& a) {
  std::vector<long long> h(m.hom_rank(), 0);
  for (const auto& e : a.parts) {
    auto v = abelianization(m, e);
    for (size_t i = 0; i < v.size(); ++i) h[i] += v[i];
  }
  return h;
}

inline std::string render_class(const GroupModel& m, const WrapClass& a) {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (i) os << ", ";
    os << render_elem(m, a.parts[i]);
  }
  os << ">";
  return os.str();
}

// Literal form `<b1, b2^-1, 1>`; `<>` is the empty link.
inline WrapClass parse_class(const GroupModel& m, const std::string& s) {
  size_t i = 0, n = s.size();
  while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  size_t j = n;
  while (j > i && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
  if (j - i < 2 || s[i] != '<' || s[j - 1] != '>')
    throw std::invalid_argument("wrapping class literal must be <...>");
  std::string body = s.substr(i + 1, j - i - 2);
  std::vector<GroupElem> es;
  std::string piece;
  int depth = 0;
  auto flush = [&] {
    size_t a = piece.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("empty component in wrapping class literal");
    es.push_back(parse_elem(m, piece));
    piece.clear();
  };
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      flush();
      continue;
    }
    piece.push_back(c);
  }
  if (piece.find_first_not_of(" \t") != std::string::npos)
    flush();
  else if (!es.empty())
    throw std::invalid_argument("trailing comma in wrapping class literal");
  return wrap_class_elems(m, std::move(es));
}

using SkeinVector = LinComb<WrapClass, RPoly>;
using USkeinVector = LinComb<WrapClass, UPoly>;

template <class Coeff>
std::string render_lincomb(const GroupModel& m, const LinComb<WrapClass, Coeff>& v) {
  return render_lincomb_with(v, [&](const WrapClass& k) { return render_class(m, k); });
}

// The q-power unit w with a == w * b across the whole vector, when one
// exists. Both zero counts as the trivial unit.
inline std::optional<QUnit> unit_quotient(const SkeinVector& a, const SkeinVector& b) {
  if (a.is_zero() && b.is_zero()) return QUnit{1, 0};
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [ka, ca] = *a.terms().begin();
  const auto& [kb, cb] = *b.terms().begin();
  if (!(ka == kb)) return std::nullopt;
  auto w = unit_quotient(ca, cb);
  if (!w) return std::nullopt;
  RPoly unit(LaurentPoly::term(Int(w->sign), w->exp));
  if (a == b.scaled(unit)) return w;
  return std::nullopt;
}

// ---- descendants and closure ----

// Classes reached from alpha by one band merge of two components. Bands
// between nontrivial components range over the double-coset representatives
// up to conj_bound plus the baseline band; in abelian models the band never
// changes the merged class.
inline std::set<WrapClass> descendants(const GroupModel& m, const WrapClass& alpha,
                                       long long conj_bound) {
  std::set<WrapClass> out;
  const auto& ps = alpha.parts;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j) {
      std::vector<GroupElem> bands{identity(m)};
      if (m.word_model() && !is_identity(m, ps[i]) && !is_identity(m, ps[j]))
        for (const auto& rep : double_cosets(m, ps[i], ps[j], conj_bound))
          bands.push_back(rep.g);
      for (const auto& g : bands) {
        std::vector<GroupElem> parts;
        for (size_t k = 0; k < ps.size(); ++k)
          if (k != i && k != j) parts.push_back(ps[k]);
        parts.push_back(merge_classes(m, ps[i], g, ps[j]).rep);
        out.insert(wrap_class_elems(m, std::move(parts)));
      }
    }
  return out;
}

// Least set containing the seeds and closed under descendants. Terminates
// because each merge drops the component count by one.
inline std::vector<WrapClass> skein_closure(const GroupModel& m,
                                            const std::vector<WrapClass>& seeds,
                                            long long conj_bound) {
  std::set<WrapClass> all;
  std::vector<WrapClass> queue;
  for (const auto& s : seeds) {
    WrapClass c = wrap_class_elems(m, s.parts);
    if (all.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    WrapClass a = queue.back();
    queue.pop_back();
    for (const auto& d : descendants(m, a, conj_bound))
      if (all.insert(d).second) queue.push_back(d);
  }
  return std::vector<WrapClass>(all.begin(), all.end());
}

// Closure modulo trivial components: membership ignores any number of
// adjoined trivial circles.
struct StarSet {
  std::set<WrapClass> base;  // trivial-free classes

  bool contains(const GroupModel& m, const WrapClass& a) const {
    return base.count(strip_trivial(m, a).first) > 0;
  }
};

inline StarSet star_closure(const GroupModel& m, const std::vector<WrapClass>& seeds,
                            long long conj_bound) {
  StarSet s;
  for (const auto& c : skein_closure(m, seeds, conj_bound))
    s.base.insert(strip_trivial(m, c).first);
  return s;
}

}  // namespace hskein
