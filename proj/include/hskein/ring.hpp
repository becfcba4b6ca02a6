#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Coefficient rings for skein computations:
//   LaurentPoly  Z[q, q^-1]
//   RPoly        Z[q, q^-1][z]
//   UPoly        Z[q, q^-1][z][u]
// All values are immutable in spirit: operations return new values and
// keep term maps free of zero coefficients.

namespace hskein {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {
struct Monomial {
  Int coeff;
  long long qe = 0;
  long long ze = 0;
  long long ue = 0;
};

// Shared parser for the rendered polynomial grammar:
//   expr := ['-'] term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := integer | ('q'|'z'|'u') ['^' integer]
// Whitespace is insignificant. Returns the monomial list; the callers
// reject variables their ring does not have.
inline std::vector<Monomial> parse_monomials(const std::string& s, bool allow_z,
                                             bool allow_u) {
  std::vector<Monomial> out;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(i) + ": " + what);
  };
  auto parse_int = [&]() -> Int {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return Int(s.substr(start, i - start));
  };
  skip();
  if (i == s.size()) fail("empty input");
  bool negative = false;
  if (s[i] == '-') {
    negative = true;
    ++i;
  } else if (s[i] == '+') {
    ++i;
  }
  while (true) {
    Monomial m;
    m.coeff = negative ? -1 : 1;
    bool saw_factor = false;
    while (true) {
      skip();
      if (i < s.size() &&
          (std::isdigit(static_cast<unsigned char>(s[i])))) {
        m.coeff *= parse_int();
        saw_factor = true;
      } else if (i < s.size() && (s[i] == 'q' || s[i] == 'z' || s[i] == 'u')) {
        char var = s[i];
        if (var == 'z' && !allow_z) fail("variable z not allowed here");
        if (var == 'u' && !allow_u) fail("variable u not allowed here");
        ++i;
        long long e = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
          ++i;
          Int big = parse_int();
          if (big > std::numeric_limits<long long>::max() ||
              big < std::numeric_limits<long long>::min())
            fail("exponent out of range");
          e = static_cast<long long>(big);
        }
        if (var == 'q') m.qe += e;
        if (var == 'z') m.ze += e;
        if (var == 'u') m.ue += e;
        if (var != 'q' && e < 0) fail("negative exponent on polynomial variable");
        saw_factor = true;
      } else {
        fail("expected factor");
      }
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("expected term");
    out.push_back(std::move(m));
    skip();
    if (i == s.size()) break;
    if (s[i] == '+') {
      negative = false;
      ++i;
    } else if (s[i] == '-') {
      negative = true;
      ++i;
    } else {
      fail("expected '+' or '-'");
    }
  }
  return out;
}

inline void render_coeff_and_vars(std::ostringstream& os, const Int& coeff,
                                  const std::string& vars, bool first) {
  Int a = coeff < 0 ? Int(-coeff) : coeff;
  if (first) {
    if (coeff < 0) os << "-";
  } else {
    os << (coeff < 0 ? " - " : " + ");
  }
  if (vars.empty()) {
    os << a.str();
  } else if (a == 1) {
    os << vars;
  } else {
    os << a.str() << "*" << vars;
  }
}
}  // namespace detail

// A unit of Z[q, q^-1] is exactly ±q^k.
struct QUnit {
  int sign = 1;
  long long exp = 0;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long n) { *this = LaurentPoly(Int(n)); }
  explicit LaurentPoly(const Int& n) {
    if (n != 0) c_[0] = n;
  }
  static LaurentPoly q(long long e = 1) { return term(1, e); }
  static LaurentPoly term(const Int& coeff, long long e) {
    LaurentPoly p;
    if (coeff != 0) p.c_[e] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.count(0) && c_.at(0) == 1; }
  std::optional<QUnit> as_unit() const {
    if (c_.size() != 1) return std::nullopt;
    const auto& [e, a] = *c_.begin();
    if (a == 1) return QUnit{1, e};
    if (a == -1) return QUnit{-1, e};
    return std::nullopt;
  }
  bool is_unit() const { return as_unit().has_value(); }

  const std::map<long long, Int>& terms() const { return c_; }
  Int coeff(long long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
  }
  long long min_exp() const { return c_.begin()->first; }
  long long max_exp() const { return c_.rbegin()->first; }
  // Value at q = 1.
  Int coeff_sum() const {
    Int s = 0;
    for (const auto& [e, a] : c_) s += a;
    return s;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.c_) {
      Int& slot = c_[e];
      slot += a;
      if (slot == 0) c_.erase(e);
    }
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, a] : o.c_) {
      Int& slot = c_[e];
      slot -= a;
      if (slot == 0) c_.erase(e);
    }
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, a] : c_) r.c_[e] = -a;
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) {
        Int& slot = r.c_[ea + eb];
        slot += ca * cb;
        if (slot == 0) r.c_.erase(ea + eb);
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  // Multiplication by q^e.
  LaurentPoly shifted(long long e) const {
    LaurentPoly r;
    for (const auto& [ee, a] : c_) r.c_[ee + e] = a;
    return r;
  }

  // Evaluation at a nonzero rational. q = 0 is not in the allowed
  // specialization set: q is a unit of the coefficient ring.
  Rational at(const Rational& qv) const {
    if (qv == 0) throw std::domain_error("q must not specialize to 0");
    Rational s = 0;
    for (const auto& [e, a] : c_) {
      Rational p = 1;
      for (long long k = 0; k < (e < 0 ? -e : e); ++k) p *= qv;
      if (e < 0) p = 1 / p;
      s += Rational(a) * p;
    }
    return s;
  }

  bool operator==(const LaurentPoly&) const = default;
  auto operator<=>(const LaurentPoly&) const = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      std::string vars;
      if (it->first == 1)
        vars = "q";
      else if (it->first != 0)
        vars = "q^" + std::to_string(it->first);
      detail::render_coeff_and_vars(os, it->second, vars, first);
      first = false;
    }
    return os.str();
  }
  static LaurentPoly parse(const std::string& s) {
    LaurentPoly p;
    for (const auto& m : detail::parse_monomials(s, false, false))
      p += term(m.coeff, m.qe);
    return p;
  }

 private:
  std::map<long long, Int> c_;
};

// q^{2 lambda} - 1; zero when lambda == 0 (the annihilator of a free summand).
inline LaurentPoly cyclotomic_q2(long long lambda) {
  if (lambda < 0) throw std::invalid_argument("cyclotomic_q2: negative argument");
  if (lambda == 0) return LaurentPoly();
  return LaurentPoly::q(2 * lambda) - LaurentPoly(1);
}

// The unique Laurent polynomial p with p * (1 - q) = 1 - q^{2 eps}.
// eps >= 0: 1 + q + ... + q^{2 eps - 1}; eps < 0: -(q^-1 + ... + q^{-2|eps|}).
inline LaurentPoly geometric_sum(long long eps) {
  LaurentPoly p;
  if (eps > 0)
    for (long long k = 0; k < 2 * eps; ++k) p += LaurentPoly::q(k);
  else if (eps < 0)
    for (long long k = 1; k <= -2 * eps; ++k) p -= LaurentPoly::q(-k);
  return p;
}

class RPoly {
 public:
  RPoly() = default;
  RPoly(long long n) : RPoly(LaurentPoly(n)) {}
  RPoly(const Int& n) : RPoly(LaurentPoly(n)) {}
  RPoly(const LaurentPoly& p) {
    if (!p.is_zero()) z_[0] = p;
  }
  static RPoly z(long long d = 1) { return zterm(LaurentPoly(1), d); }
  static RPoly zterm(const LaurentPoly& coeff, long long d) {
    if (d < 0) throw std::invalid_argument("negative z-degree");
    RPoly p;
    if (!coeff.is_zero()) p.z_[d] = coeff;
    return p;
  }

  bool is_zero() const { return z_.empty(); }
  bool is_one() const { return z_.size() == 1 && z_.count(0) && z_.at(0).is_one(); }
  std::optional<QUnit> as_unit() const {
    if (z_.size() != 1 || !z_.count(0)) return std::nullopt;
    return z_.at(0).as_unit();
  }
  bool is_unit() const { return as_unit().has_value(); }

  const std::map<long long, LaurentPoly>& terms() const { return z_; }
  LaurentPoly zcoeff(long long d) const {
    auto it = z_.find(d);
    return it == z_.end() ? LaurentPoly() : it->second;
  }

  RPoly& operator+=(const RPoly& o) {
    for (const auto& [d, p] : o.z_) {
      LaurentPoly& slot = z_[d];
      slot += p;
      if (slot.is_zero()) z_.erase(d);
    }
    return *this;
  }
  RPoly& operator-=(const RPoly& o) {
    for (const auto& [d, p] : o.z_) {
      LaurentPoly& slot = z_[d];
      slot -= p;
      if (slot.is_zero()) z_.erase(d);
    }
    return *this;
  }
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  RPoly operator-() const {
    RPoly r;
    for (const auto& [d, p] : z_) r.z_[d] = -p;
    return r;
  }
  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    RPoly r;
    for (const auto& [da, pa] : a.z_)
      for (const auto& [db, pb] : b.z_) {
        LaurentPoly& slot = r.z_[da + db];
        slot += pa * pb;
        if (slot.is_zero()) r.z_.erase(da + db);
      }
    return r;
  }
  RPoly& operator*=(const RPoly& o) { return *this = *this * o; }

  // z -> 0 with q kept symbolic.
  LaurentPoly at_z0() const { return zcoeff(0); }
  // Full numeric specialization; q = 0 rejected.
  Rational at(const Rational& qv, const Rational& zv) const {
    if (qv == 0) throw std::domain_error("q must not specialize to 0");
    Rational s = 0;
    for (const auto& [d, p] : z_) {
      Rational zp = 1;
      for (long long k = 0; k < d; ++k) zp *= zv;
      s += p.at(qv) * zp;
    }
    return s;
  }
  // q -> 1, z -> 0: the coefficient augmentation.
  Int augmentation() const { return zcoeff(0).coeff_sum(); }

  bool operator==(const RPoly&) const = default;
  auto operator<=>(const RPoly&) const = default;

  std::string str() const {
    if (z_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, p] : z_) {
      std::string zvars;
      if (d == 1)
        zvars = "z";
      else if (d != 0)
        zvars = "z^" + std::to_string(d);
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string vars = zvars;
        if (it->first != 0) {
          if (!vars.empty()) vars += "*";
          vars += it->first == 1 ? "q" : "q^" + std::to_string(it->first);
        }
        detail::render_coeff_and_vars(os, it->second, vars, first);
        first = false;
      }
    }
    return os.str();
  }
  static RPoly parse(const std::string& s) {
    RPoly p;
    for (const auto& m : detail::parse_monomials(s, true, false))
      p += zterm(LaurentPoly::term(m.coeff, m.qe), m.ze);
    return p;
  }

 private:
  std::map<long long, LaurentPoly> z_;  // z-degree (>= 0) -> coefficient
};

class UPoly {
 public:
  UPoly() = default;
  UPoly(long long n) : UPoly(RPoly(n)) {}
  UPoly(const LaurentPoly& p) : UPoly(RPoly(p)) {}
  UPoly(const RPoly& p) {
    if (!p.is_zero()) u_[0] = p;
  }
  static UPoly u(long long d = 1) { return uterm(RPoly(1), d); }
  static UPoly uterm(const RPoly& coeff, long long d) {
    if (d < 0) throw std::invalid_argument("negative u-degree");
    UPoly p;
    if (!coeff.is_zero()) p.u_[d] = coeff;
    return p;
  }

  bool is_zero() const { return u_.empty(); }
  bool is_one() const { return u_.size() == 1 && u_.count(0) && u_.at(0).is_one(); }
  const std::map<long long, RPoly>& terms() const { return u_; }
  RPoly ucoeff(long long d) const {
    auto it = u_.find(d);
    return it == u_.end() ? RPoly() : it->second;
  }

  UPoly& operator+=(const UPoly& o) {
    for (const auto& [d, p] : o.u_) {
      RPoly& slot = u_[d];
      slot += p;
      if (slot.is_zero()) u_.erase(d);
    }
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    for (const auto& [d, p] : o.u_) {
      RPoly& slot = u_[d];
      slot -= p;
      if (slot.is_zero()) u_.erase(d);
    }
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r;
    for (const auto& [d, p] : u_) r.u_[d] = -p;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (const auto& [da, pa] : a.u_)
      for (const auto& [db, pb] : b.u_) {
        RPoly& slot = r.u_[da + db];
        slot += pa * pb;
        if (slot.is_zero()) r.u_.erase(da + db);
      }
    return r;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  bool operator==(const UPoly&) const = default;
  auto operator<=>(const UPoly&) const = default;

  std::string str() const {
    if (u_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ud, rp] : u_) {
      std::string uvars;
      if (ud == 1)
        uvars = "u";
      else if (ud != 0)
        uvars = "u^" + std::to_string(ud);
      for (const auto& [zd, p] : rp.terms()) {
        std::string zvars = uvars;
        if (zd != 0) {
          if (!zvars.empty()) zvars += "*";
          zvars += zd == 1 ? "z" : "z^" + std::to_string(zd);
        }
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
          std::string vars = zvars;
          if (it->first != 0) {
            if (!vars.empty()) vars += "*";
            vars += it->first == 1 ? "q" : "q^" + std::to_string(it->first);
          }
          detail::render_coeff_and_vars(os, it->second, vars, first);
          first = false;
        }
      }
    }
    return os.str();
  }
  static UPoly parse(const std::string& s) {
    UPoly p;
    for (const auto& m : detail::parse_monomials(s, true, true))
      p += uterm(RPoly::zterm(LaurentPoly::term(m.coeff, m.qe), m.ze), m.ue);
    return p;
  }

 private:
  std::map<long long, RPoly> u_;  // u-degree (>= 0) -> coefficient
};

// The q-power unit w with a == w * b, when one exists. Both zero counts as
// the trivial unit; zero against nonzero has none.
inline std::optional<QUnit> unit_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return QUnit{1, 0};
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  long long k = a.min_exp() - b.min_exp();
  for (int sign : {1, -1}) {
    LaurentPoly candidate = b.shifted(k);
    if (sign < 0) candidate = -candidate;
    if (candidate == a) return QUnit{sign, k};
  }
  return std::nullopt;
}

inline std::optional<QUnit> unit_quotient(const RPoly& a, const RPoly& b) {
  if (a.is_zero() && b.is_zero()) return QUnit{1, 0};
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto& [da, pa] = *a.terms().begin();
  const auto& [db, pb] = *b.terms().begin();
  if (da != db) return std::nullopt;
  auto w = unit_quotient(pa, pb);
  if (!w) return std::nullopt;
  RPoly scaled;
  for (const auto& [d, p] : b.terms()) {
    LaurentPoly sp = p.shifted(w->exp);
    if (w->sign < 0) sp = -sp;
    scaled += RPoly::zterm(sp, d);
  }
  if (scaled == a) return w;
  return std::nullopt;
}

template <class Poly>
bool equal_up_to_unit(const Poly& a, const Poly& b) {
  return unit_quotient(a, b).has_value();
}

}  // namespace hskein
