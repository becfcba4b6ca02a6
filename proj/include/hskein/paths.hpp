#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hskein/lincomb.hpp"
#include "hskein/ring.hpp"

// Calculus of transverse paths: a path is reduced to its endpoint labels
// and the ordered list of signed crossings with the other components, each
// crossing carrying the label of the loop its smoothing produces. The
// closed-form evaluation replaces any inductive crossing-by-crossing
// resolution.

namespace hskein {

template <class Label>
struct CrossingEvent {
  int sign = 1;  // +1 or -1
  Label target;  // class of the loop created by smoothing this crossing

  bool operator==(const CrossingEvent&) const = default;
};

template <class Label>
struct PathWord {
  Label start{};
  Label end{};
  std::vector<CrossingEvent<Label>> events;

  bool operator==(const PathWord&) const = default;
};

// Sum of crossing signs.
template <class Label>
long long path_index(const PathWord<Label>& p) {
  long long e = 0;
  for (const auto& ev : p.events) e += ev.sign;
  return e;
}

// Closed form of the crossing-resolution sum: the k-th crossing contributes
// sign_k * q^(2*(sign_1+...+sign_{k-1}) + sign_k) on its target label.
template <class Label>
LinComb<Label, LaurentPoly> crossing_terms(const PathWord<Label>& p) {
  LinComb<Label, LaurentPoly> out;
  long long prefix = 0;
  for (const auto& ev : p.events) {
    out.add_term(ev.target, LaurentPoly::term(Int(ev.sign), 2 * prefix + ev.sign));
    prefix += ev.sign;
  }
  return out;
}

template <class Label>
PathWord<Label> compose(const PathWord<Label>& a, const PathWord<Label>& b) {
  if (!(a.end == b.start))
    throw std::invalid_argument("compose: endpoint labels do not meet");
  PathWord<Label> r;
  r.start = a.start;
  r.end = b.end;
  r.events = a.events;
  r.events.insert(r.events.end(), b.events.begin(), b.events.end());
  return r;
}

template <class Label>
PathWord<Label> invert(const PathWord<Label>& p) {
  PathWord<Label> r;
  r.start = p.end;
  r.end = p.start;
  r.events.assign(p.events.rbegin(), p.events.rend());
  for (auto& ev : r.events) ev.sign = -ev.sign;
  return r;
}

// Value of the loop obtained by closing the path onto its end component:
// q^(2 index) * [end] + z * crossing terms.
template <class Label>
LinComb<Label, RPoly> closure_value(const PathWord<Label>& p) {
  long long e = path_index(p);
  LinComb<Label, RPoly> out;
  out.add_term(p.end, RPoly(LaurentPoly::q(2 * e)));
  LinComb<Label, LaurentPoly> terms = crossing_terms(p);
  for (const auto& [k, c] : terms.terms()) out.add_term(k, RPoly::zterm(c, 1));
  return out;
}

// Relative value of the path between its two endpoint components:
// q^(2 index) * [end] - [start] + z * crossing terms.
template <class Label>
LinComb<Label, RPoly> relative_value(const PathWord<Label>& p) {
  LinComb<Label, RPoly> out = closure_value(p);
  out.add_term(p.start, RPoly(-1));
  return out;
}

// ---- literals for opaque string labels ----

using SymbolPath = PathWord<std::string>;
using SymbolVector = LinComb<std::string, RPoly>;

// Literal form: `start=A; events=(+1:T1)(-1:T2); end=B`.
inline SymbolPath parse_path(const std::string& s) {
  auto fail = [&](size_t pos, const std::string& what) {
    throw std::invalid_argument("path parse error at position " +
                                std::to_string(pos) + ": " + what);
  };
  auto trim = [](std::string t) {
    size_t a = t.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    size_t b = t.find_last_not_of(" \t");
    return t.substr(a, b - a + 1);
  };
  auto expect_key = [&](size_t& i, const std::string& key) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (s.compare(i, key.size(), key) != 0) fail(i, "expected '" + key + "'");
    i += key.size();
  };
  auto peek_key = [&](size_t at, const std::string& key) {
    while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    return s.compare(at, key.size(), key) == 0;
  };
  SymbolPath p;
  size_t i = 0;
  if (peek_key(i, "start=")) {
    expect_key(i, "start=");
    size_t semi = s.find(';', i);
    if (semi == std::string::npos) fail(i, "missing ';' after start");
    p.start = trim(s.substr(i, semi - i));
    if (p.start.empty()) fail(i, "empty start label");
    i = semi + 1;
  }
  expect_key(i, "events=");
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) return p;
    if (s[i] == ';') {
      ++i;
      break;
    }
    if (s[i] != '(') fail(i, "expected '(' or ';'");
    size_t colon = s.find(':', i);
    size_t close = s.find(')', i);
    if (colon == std::string::npos || close == std::string::npos || colon > close)
      fail(i, "event must look like (+1:LABEL)");
    std::string sign = trim(s.substr(i + 1, colon - i - 1));
    CrossingEvent<std::string> ev;
    if (sign == "+1" || sign == "+")
      ev.sign = 1;
    else if (sign == "-1" || sign == "-")
      ev.sign = -1;
    else
      fail(i + 1, "event sign must be +1 or -1");
    ev.target = trim(s.substr(colon + 1, close - colon - 1));
    if (ev.target.empty()) fail(colon + 1, "empty event label");
    p.events.push_back(std::move(ev));
    i = close + 1;
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size()) {
    expect_key(i, "end=");
    p.end = trim(s.substr(i));
    if (p.end.empty()) fail(i, "empty end label");
  }
  return p;
}

inline std::string render_path(const SymbolPath& p) {
  std::ostringstream os;
  if (!p.start.empty()) os << "start=" << p.start << "; ";
  os << "events=";
  for (const auto& ev : p.events)
    os << "(" << (ev.sign > 0 ? "+1" : "-1") << ":" << ev.target << ")";
  if (!p.end.empty()) os << "; end=" << p.end;
  return os.str();
}

// ---- the local two-crossing loop ----

// The loop through a pair of mixed crossings, evaluated three ways over
// symbolic corner labels K0-, K-0, K0+, K+0 (first smoothing then sign of
// the remaining crossing, and the reverse).
enum class LoopMode { Raw, Unpaired, Paired };

inline SymbolVector delta_loop(LoopMode mode) {
  SymbolPath loop;
  loop.start = "K";
  loop.end = "K";
  loop.events = {{+1, "K0-"}, {-1, "K-0"}, {-1, "K0+"}, {+1, "K+0"}};
  SymbolVector raw;
  LinComb<std::string, LaurentPoly> terms = crossing_terms(loop);
  for (const auto& [k, c] : terms.terms()) raw.add_term(k, RPoly(c));
  switch (mode) {
    case LoopMode::Raw:
      return raw;
    case LoopMode::Unpaired: {
      // Resolve the positive corners through the skein relation:
      // K0+ = q^2 K0- + q z K00, and K+0 likewise over K-0.
      std::map<std::string, SymbolVector> repl;
      repl["K0+"] = SymbolVector::term("K0-", RPoly(LaurentPoly::q(2))) +
                    SymbolVector::term("K00", RPoly::zterm(LaurentPoly::q(1), 1));
      repl["K+0"] = SymbolVector::term("K-0", RPoly(LaurentPoly::q(2))) +
                    SymbolVector::term("K00", RPoly::zterm(LaurentPoly::q(1), 1));
      return substitute(raw, repl);
    }
    case LoopMode::Paired: {
      // When the two crossings join the same pair of components, either
      // smoothing of a corner yields the same crossingless loop.
      return raw.map_keys([](const std::string& k) -> std::string {
        if (k == "K0-" || k == "K0+") return "K0o";
        return "Ko0";
      });
    }
  }
  return raw;
}

}  // namespace hskein
