#pragma once
// Smith normal form over Q[q] for matrices of Laurent polynomials. Powers of
// q are units of the coefficient ring, so rows are rescaled into Q[q] first
// and the invariant factors are normalized to primitive integer polynomials
// with positive leading coefficient.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hskein/ring.hpp"

namespace hskein {
namespace detail {

// Dense polynomial over Q, coefficients by ascending degree.
struct QPoly {
  std::vector<Rational> c;

  // Requires min_exp >= 0; callers rescale whole rows by q-powers first.
  static QPoly from_laurent(const LaurentPoly& p) {
    QPoly out;
    if (p.is_zero()) return out;
    if (p.min_exp() < 0)
      throw std::invalid_argument("from_laurent: negative exponent not cleared");
    out.c.assign(static_cast<size_t>(p.max_exp()) + 1, Rational(0));
    for (const auto& [e, coeff] : p.terms()) out.c[static_cast<size_t>(e)] = Rational(coeff);
    out.trim();
    return out;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }

  bool operator==(const QPoly&) const = default;
};

inline QPoly qp_scale(const QPoly& a, const Rational& s) {
  if (s == 0) return {};
  QPoly out = a;
  for (auto& x : out.c) x *= s;
  return out;
}

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.trim();
  return out;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.zero() || b.zero()) return {};
  QPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) { return qp_add(a, qp_scale(b, Rational(-1))); }

// Returns {quotient, remainder} with deg(r) < deg(b).
inline std::pair<QPoly, QPoly> qp_divmod(const QPoly& a, const QPoly& b) {
  if (b.zero()) throw std::invalid_argument("polynomial division by zero");
  QPoly r = a, quot;
  if (a.deg() >= b.deg()) quot.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, Rational(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    const int shift = r.deg() - b.deg();
    const Rational f = r.lead() / b.lead();
    quot.c[static_cast<size_t>(shift)] += f;
    QPoly sub;
    sub.c.assign(static_cast<size_t>(shift) + b.c.size(), Rational(0));
    for (size_t i = 0; i < b.c.size(); ++i)
      sub.c[static_cast<size_t>(shift) + i] = b.c[i] * f;
    r = qp_sub(r, sub);
  }
  quot.trim();
  return {quot, r};
}

// Strip q^k factors (units of Z[q^{+-1}]) and rescale to a primitive integer
// polynomial with positive leading coefficient.
inline QPoly qp_normalize_unit(const QPoly& a) {
  if (a.zero()) return a;
  size_t val = 0;
  while (val < a.c.size() && a.c[val] == 0) ++val;
  QPoly out;
  out.c.assign(a.c.begin() + static_cast<long>(val), a.c.end());
  Int lcm = 1, gcd = 0;
  for (const auto& x : out.c) {
    if (x == 0) continue;
    lcm = lcm / boost::multiprecision::gcd(lcm, boost::multiprecision::denominator(x)) *
          boost::multiprecision::denominator(x);
  }
  for (auto& x : out.c) x *= Rational(lcm);
  for (const auto& x : out.c)
    gcd = boost::multiprecision::gcd(
        gcd, boost::multiprecision::abs(boost::multiprecision::numerator(x)));
  if (gcd != 0)
    for (auto& x : out.c) x /= Rational(gcd);
  if (out.lead() < 0)
    for (auto& x : out.c) x = -x;
  return out;
}

inline LaurentPoly qp_to_laurent(const QPoly& a) {
  LaurentPoly out;
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    if (boost::multiprecision::denominator(a.c[i]) != 1)
      throw std::invalid_argument("invariant factor is not integral");
    out = out + LaurentPoly::term(boost::multiprecision::numerator(a.c[i]),
                                  static_cast<long long>(i));
  }
  return out;
}

}  // namespace detail

// Invariant factors d1 | d2 | ... of a matrix over Q[q] with q inverted,
// one entry per nonzero diagonal slot, unit-normalized as primitive integer
// polynomials. Zero rows/columns contribute nothing.
inline std::vector<LaurentPoly> smith_normal_form_q(
    const std::vector<std::vector<LaurentPoly>>& matrix) {
  using detail::QPoly;
  const size_t rows = matrix.size();
  const size_t cols = rows == 0 ? 0 : matrix[0].size();
  std::vector<std::vector<QPoly>> a(rows, std::vector<QPoly>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != cols)
      throw std::invalid_argument("smith_normal_form_q: ragged matrix");
    // Rescale the whole row by a q-power (a unit) so entries land in Q[q].
    long long shift = 0;
    for (const auto& p : matrix[i])
      if (!p.is_zero()) shift = std::min(shift, p.min_exp());
    for (size_t j = 0; j < cols; ++j)
      a[i][j] = QPoly::from_laurent(matrix[i][j].shifted(-shift));
  }

  std::vector<QPoly> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // Find the entry of least degree in the remaining block.
    size_t pi = top, pj = top;
    bool found = false;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = top; j < cols; ++j) {
        if (a[i][j].zero()) continue;
        if (!found || a[i][j].deg() < a[pi][pj].deg()) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(a[pi], a[top]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][top]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = top + 1; i < rows; ++i) {
        if (a[i][top].zero()) continue;
        auto [quot, rem] = detail::qp_divmod(a[i][top], a[top][top]);
        for (size_t j = top; j < cols; ++j)
          a[i][j] = detail::qp_sub(a[i][j], detail::qp_mul(quot, a[top][j]));
        if (!rem.zero()) {
          std::swap(a[i], a[top]);
          clean = false;
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        if (a[top][j].zero()) continue;
        auto [quot, rem] = detail::qp_divmod(a[top][j], a[top][top]);
        for (size_t i = top; i < rows; ++i)
          a[i][j] = detail::qp_sub(a[i][j], detail::qp_mul(quot, a[i][top]));
        if (!rem.zero()) {
          for (size_t i = top; i < rows; ++i) std::swap(a[i][j], a[i][top]);
          clean = false;
        }
      }
    }
    diag.push_back(a[top][top]);
    ++top;
  }

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      auto [quot, rem] = detail::qp_divmod(diag[i + 1], diag[i]);
      if (rem.zero()) continue;
      // Replace (a, b) by (gcd, lcm).
      QPoly x = diag[i], y = diag[i + 1];
      while (!y.zero()) {
        auto [q2, r2] = detail::qp_divmod(x, y);
        x = y;
        y = r2;
      }
      const QPoly g = x;
      auto [ab_over_g, r3] = detail::qp_divmod(detail::qp_mul(diag[i], diag[i + 1]), g);
      diag[i] = g;
      diag[i + 1] = ab_over_g;
      changed = true;
    }
  }

  std::vector<LaurentPoly> out;
  for (const auto& d : diag) out.push_back(detail::qp_to_laurent(detail::qp_normalize_unit(d)));
  return out;
}

}  // namespace hskein
