#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hskein/ring.hpp"

// Free-module vectors: finitely supported maps from basis keys to ring
// coefficients, with zero terms pruned eagerly.

namespace hskein {

template <class Key, class Coeff>
class LinComb {
 public:
  LinComb() = default;
  static LinComb term(const Key& k, Coeff c) {
    LinComb v;
    v.add_term(k, std::move(c));
    return v;
  }

  const std::map<Key, Coeff>& terms() const { return t_; }
  Coeff coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Coeff{} : it->second;
  }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  std::vector<Key> support() const {
    std::vector<Key> ks;
    for (const auto& [k, c] : t_) ks.push_back(k);
    return ks;
  }

  LinComb& add_term(const Key& k, const Coeff& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
    return *this;
  }

  LinComb operator+(const LinComb& o) const {
    LinComb r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
  }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  LinComb operator-(const LinComb& o) const { return *this + (-o); }

  template <class Scalar>
  LinComb scaled(const Scalar& s) const {
    LinComb r;
    for (const auto& [k, c] : t_) r.add_term(k, c * s);
    return r;
  }

  // Apply fn to every coefficient, dropping terms that land on zero.
  template <class Fn>
  auto map_coeffs(Fn&& fn) const {
    using Out = decltype(fn(std::declval<const Coeff&>()));
    LinComb<Key, Out> r;
    for (const auto& [k, c] : t_) r.add_term(k, fn(c));
    return r;
  }
  // Apply fn to every key (a module map on basis elements).
  template <class Fn>
  LinComb map_keys(Fn&& fn) const {
    LinComb r;
    for (const auto& [k, c] : t_) r.add_term(fn(k), c);
    return r;
  }

  bool operator==(const LinComb&) const = default;

 private:
  std::map<Key, Coeff> t_;
};

// Replace basis keys by whole vectors (keys absent from repl are kept).
template <class Key, class Coeff>
LinComb<Key, Coeff> substitute(const LinComb<Key, Coeff>& v,
                               const std::map<Key, LinComb<Key, Coeff>>& repl) {
  LinComb<Key, Coeff> out;
  for (const auto& [k, c] : v.terms()) {
    auto it = repl.find(k);
    if (it == repl.end()) {
      out.add_term(k, c);
    } else {
      for (const auto& [k2, c2] : it->second.terms()) out.add_term(k2, c * c2);
    }
  }
  return out;
}

namespace detail {

inline bool coeff_is_plain(const LaurentPoly& p) {
  return p.terms().size() == 1 && p.terms().begin()->second > 0;
}
inline bool coeff_is_plain(const RPoly& p) {
  return p.terms().size() == 1 && coeff_is_plain(p.terms().begin()->second);
}
inline bool coeff_is_plain(const UPoly& p) {
  return p.terms().size() == 1 && coeff_is_plain(p.terms().begin()->second);
}

}  // namespace detail

template <class Key, class Coeff, class KeyRender>
std::string render_lincomb_with(const LinComb<Key, Coeff>& v, KeyRender&& kr) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one())
      os << kr(k);
    else if (detail::coeff_is_plain(c))
      os << c.str() << "*" << kr(k);
    else
      os << "(" << c.str() << ")*" << kr(k);
  }
  return os.str();
}

}  // namespace hskein
