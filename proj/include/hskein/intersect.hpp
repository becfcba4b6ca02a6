#pragma once
// Manifold descriptors carrying intersection-pairing data, the per-class
// linking invariant lambda with its cyclic annihilator, linking numbers of
// paths, and the freeness verdicts decided by descriptor flags.

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hskein/groups.hpp"
#include "hskein/paths.hpp"
#include "hskein/ring.hpp"
#include "hskein/wrap.hpp"

namespace hskein {

// Raised when an operation needs a group model the descriptor does not
// provide (e.g. pairing computations outside abelian fundamental groups).
struct unsupported_model : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ManifoldFlags {
  bool pi2_zero = false;         // user assertion: pi2(M) = 0
  bool atoroidal = false;        // user assertion: essential tori are peripheral
  bool surface_product = false;  // user assertion: M = F x I
  bool cyclic_pi1 = false;       // must agree with the group model

  bool operator==(const ManifoldFlags&) const = default;
};

// n = b1 is the free rank of H1, m = h2_rank the rank of H2. `pairing` is the
// m x n matrix of the intersection form H2 x H1 -> Z, `torus_class` the
// alternating n x n table of H2-vectors swept by commuting generator pairs
// (abelian models only), `sphere_subgroup` generators of im(pi2 -> H2).
struct ManifoldData {
  std::string name;
  GroupModel pi1;
  long long b1 = 0;
  long long b1_boundary = 0;
  long long h2_rank = 0;
  std::vector<std::vector<long long>> pairing;
  std::vector<std::vector<std::vector<long long>>> torus_class;
  std::vector<std::vector<long long>> sphere_subgroup;
  ManifoldFlags flags;
  std::vector<std::pair<GroupElem, GroupElem>> boundary_tori;

  bool operator==(const ManifoldData&) const = default;
};

inline void validate_manifold(const ManifoldData& m) {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("manifold '" + m.name + "': " + msg);
  };
  if (m.b1 < 0 || m.b1_boundary < 0 || m.h2_rank < 0)
    fail("negative rank field");
  if (m.b1 != m.pi1.hom_rank())
    fail("b1 does not match the free rank of H1 of the group model");
  const size_t n = static_cast<size_t>(m.b1);
  const size_t h2 = static_cast<size_t>(m.h2_rank);
  if (m.pairing.size() != h2) fail("pairing must have h2_rank rows");
  for (const auto& row : m.pairing)
    if (row.size() != n) fail("pairing rows must have b1 columns");
  if (m.pi1.abelian()) {
    if (m.torus_class.size() != n) fail("torus_class must be b1 x b1");
    for (const auto& row : m.torus_class) {
      if (row.size() != n) fail("torus_class must be b1 x b1");
      for (const auto& v : row)
        if (v.size() != h2) fail("torus_class entries must be H2-vectors");
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < h2; ++k) {
          if (m.torus_class[i][j][k] != -m.torus_class[j][i][k])
            fail("torus_class must be antisymmetric");
          if (i == j && m.torus_class[i][i][k] != 0)
            fail("torus_class diagonal must vanish");
        }
  } else if (!m.torus_class.empty()) {
    fail("torus_class is defined for abelian models only");
  }
  for (const auto& s : m.sphere_subgroup)
    if (s.size() != h2) fail("sphere_subgroup entries must be H2-vectors");
  if (m.flags.pi2_zero && !m.sphere_subgroup.empty())
    fail("pi2_zero flag inconsistent with nonempty sphere_subgroup");
  if (m.flags.cyclic_pi1 != m.pi1.cyclic())
    fail("cyclic_pi1 flag does not match the group model");
}

// <v, P w> for an H2-vector v and an H1-vector w.
inline long long iota(const ManifoldData& m, const std::vector<long long>& v,
                      const std::vector<long long>& w) {
  if (v.size() != m.pairing.size())
    throw std::invalid_argument("iota: H2-vector has wrong length");
  long long total = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (w.size() != m.pairing[i].size())
      throw std::invalid_argument("iota: H1-vector has wrong length");
    for (size_t j = 0; j < w.size(); ++j) total += v[i] * m.pairing[i][j] * w[j];
  }
  return total;
}

// Bilinear extension of the torus_class table; the H2-class swept when a
// moves around h.
inline std::vector<long long> tau(const ManifoldData& m,
                                  const std::vector<long long>& a,
                                  const std::vector<long long>& h) {
  const size_t n = static_cast<size_t>(m.b1);
  if (a.size() != n || h.size() != n)
    throw std::invalid_argument("tau: H1-vector has wrong length");
  std::vector<long long> out(static_cast<size_t>(m.h2_rank), 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (a[i] == 0 || h[j] == 0) continue;
      for (size_t k = 0; k < out.size(); ++k)
        out[k] += a[i] * h[j] * m.torus_class[i][j][k];
    }
  return out;
}

// Signed crossing count of the torus swept by (a, h), shifted by a sphere
// class, against the remaining components beta.
inline long long iota_f(const ManifoldData& m, const GroupElem& a,
                        const GroupElem& h, const std::vector<long long>& sphere,
                        const WrapClass& beta) {
  if (!m.pi1.abelian())
    throw unsupported_model("iota_f needs an abelian fundamental group model");
  std::vector<long long> cls = tau(m, abelianization(m.pi1, a), abelianization(m.pi1, h));
  if (!sphere.empty()) {
    if (sphere.size() != cls.size())
      throw std::invalid_argument("iota_f: sphere class has wrong length");
    for (size_t k = 0; k < cls.size(); ++k) cls[k] += sphere[k];
  }
  return iota(m, cls, homology_class(m.pi1, beta));
}

// Nonnegative generator of the subgroup of Z hit by self-homotopies of the
// occurrence `idx` of alpha: gcd over free pi1 generators and over sphere
// generators, 0 when everything pairs to zero.
inline long long iota_alpha_a(const ManifoldData& m, const WrapClass& alpha,
                              size_t idx) {
  if (!m.pi1.abelian())
    throw unsupported_model("iota_alpha_a needs an abelian fundamental group model");
  if (idx >= alpha.parts.size())
    throw std::invalid_argument("iota_alpha_a: occurrence index out of range");
  WrapClass rest;
  for (size_t i = 0; i < alpha.parts.size(); ++i)
    if (i != idx) rest.parts.push_back(alpha.parts[i]);
  const std::vector<long long> rest_hom = homology_class(m.pi1, rest);
  const std::vector<long long> a_hom = abelianization(m.pi1, alpha.parts[idx]);
  long long g = 0;
  for (size_t j = 0; j < static_cast<size_t>(m.b1); ++j) {
    std::vector<long long> h(static_cast<size_t>(m.b1), 0);
    h[j] = 1;
    g = std::gcd(g, std::abs(iota(m, tau(m, a_hom, h), rest_hom)));
  }
  for (const auto& s : m.sphere_subgroup)
    g = std::gcd(g, std::abs(iota(m, s, rest_hom)));
  return g;
}

// lambda(alpha): gcd of the per-occurrence invariants.
inline long long lambda_alpha(const ManifoldData& m, const WrapClass& alpha) {
  long long g = 0;
  for (size_t i = 0; i < alpha.parts.size(); ++i)
    g = std::gcd(g, iota_alpha_a(m, alpha, i));
  return g;
}

// One cyclic summand of the linking-number module: Z[q^{+-1}] modulo
// q^{2 lambda} - 1, free exactly when lambda = 0.
struct LinkingSummand {
  WrapClass alpha;
  long long lambda = 0;
  LaurentPoly annihilator;

  bool free() const { return annihilator.is_zero(); }
};

inline LinkingSummand linking_module(const ManifoldData& m, const WrapClass& alpha) {
  LinkingSummand s;
  s.alpha = wrap_class_elems(m.pi1, alpha.parts);
  s.lambda = lambda_alpha(m, s.alpha);
  s.annihilator = cyclotomic_q2(s.lambda);
  return s;
}

// Linking number of a path ending at the standard link of alpha: the path
// index reduced mod lambda(alpha); modulus 0 means the plain integer.
struct LinkingValue {
  long long residue = 0;
  long long modulus = 0;
};

inline LinkingValue linking_number(const ManifoldData& m, const WrapClass& alpha,
                                   const SymbolPath& gamma) {
  if (!m.pi1.abelian())
    throw unsupported_model("linking_number needs an abelian fundamental group model");
  const std::string standard = render_class(m.pi1, alpha);
  if (!gamma.end.empty() && gamma.end != standard)
    throw std::invalid_argument("linking_number: path ends at '" + gamma.end +
                                "', expected the standard link '" + standard + "'");
  LinkingValue v;
  v.modulus = lambda_alpha(m, alpha);
  long long idx = path_index(gamma);
  v.residue = v.modulus == 0 ? idx : detail::positive_mod(idx, v.modulus);
  return v;
}

enum class Freeness { Free, Torsion, Undecided };

inline const char* to_string(Freeness f) {
  switch (f) {
    case Freeness::Free: return "FREE";
    case Freeness::Torsion: return "TORSION";
    default: return "UNDECIDED";
  }
}

// Verdicts for the full module (h_) and its q -> 1 quotient (c_), each with
// the clause that decided it and the descriptor flags that were taken on
// trust to reach it.
struct FreenessVerdict {
  Freeness h_verdict = Freeness::Undecided;
  std::string h_clause;
  Freeness c_verdict = Freeness::Undecided;
  std::string c_clause;
  std::vector<std::string> assertions_used;
};

inline FreenessVerdict freeness_verdict(const ManifoldData& m) {
  FreenessVerdict v;
  if (!m.pi1.abelian()) {
    v.h_verdict = Freeness::Torsion;
    v.h_clause = "non-abelian fundamental group";
  } else if (2 * m.b1 == m.b1_boundary) {
    v.h_verdict = Freeness::Free;
    v.h_clause = "abelian, 2b1=b1(boundary)";
  } else {
    v.h_verdict = Freeness::Torsion;
    v.h_clause = "abelian but 2b1 != b1(boundary)";
  }
  if (m.flags.pi2_zero && m.flags.atoroidal) {
    v.c_verdict = Freeness::Free;
    v.c_clause = "pi2 trivial and atoroidal";
  } else {
    v.c_verdict = Freeness::Undecided;
    v.c_clause = m.flags.pi2_zero ? "atoroidal not asserted" : "pi2 not asserted trivial";
  }
  v.assertions_used.push_back(std::string("pi2_zero=") +
                              (m.flags.pi2_zero ? "true" : "false") + " (user assertion)");
  v.assertions_used.push_back(std::string("atoroidal=") +
                              (m.flags.atoroidal ? "true" : "false") + " (user assertion)");
  return v;
}

}  // namespace hskein
