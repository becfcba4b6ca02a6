#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Supported fundamental-group models: finitely generated free abelian
// (with torsion), free, and finite cyclic. Elements are plain values;
// every operation takes the model explicitly.

namespace hskein {

struct GroupModel {
  enum class Kind { FreeAbelian, FreeGroup, FiniteCyclic };
  Kind kind = Kind::FreeAbelian;
  int rank = 0;                    // free rank (abelian) / generator count (free)
  std::vector<long long> torsion;  // torsion orders, each >= 2
  std::vector<std::string> names;  // one per generator, torsion names last

  static GroupModel free_abelian(int rank, std::vector<long long> torsion = {},
                                 std::vector<std::string> names = {}) {
    GroupModel m;
    m.kind = Kind::FreeAbelian;
    m.rank = rank;
    m.torsion = std::move(torsion);
    m.names = std::move(names);
    m.finish_();
    return m;
  }
  static GroupModel free_group(int rank, std::vector<std::string> names = {}) {
    GroupModel m;
    m.kind = Kind::FreeGroup;
    m.rank = rank;
    m.names = std::move(names);
    m.finish_();
    return m;
  }
  static GroupModel finite_cyclic(long long order, std::string name = "t") {
    GroupModel m;
    m.kind = Kind::FiniteCyclic;
    m.rank = 0;
    m.torsion = {order};
    m.names = {std::move(name)};
    m.finish_();
    return m;
  }

  bool operator==(const GroupModel&) const = default;

  bool word_model() const { return kind == Kind::FreeGroup; }
  // Abelian as a group (free groups of rank <= 1 included).
  bool abelian() const { return !word_model() || rank <= 1; }
  bool cyclic() const {
    if (kind == Kind::FiniteCyclic) return true;
    if (kind == Kind::FreeGroup) return rank <= 1;
    return (rank == 1 && torsion.empty()) || (rank == 0 && torsion.size() <= 1);
  }
  // Free rank of H1.
  int hom_rank() const { return word_model() ? rank : rank; }
  size_t generator_count() const {
    return word_model() ? static_cast<size_t>(rank) : rank + torsion.size();
  }

 private:
  void finish_() {
    if (rank < 0) throw std::invalid_argument("group rank must be >= 0");
    for (long long k : torsion)
      if (k < 2) throw std::invalid_argument("torsion orders must be >= 2");
    if (names.empty()) {
      if (word_model()) {
        static const char* defaults[] = {"x", "y", "z", "w"};
        for (int i = 0; i < rank; ++i)
          names.push_back(i < 4 ? defaults[i] : "g" + std::to_string(i + 1));
      } else {
        for (size_t i = 0; i < generator_count(); ++i)
          names.push_back("b" + std::to_string(i + 1));
      }
    }
    if (names.size() != generator_count())
      throw std::invalid_argument("generator name count does not match model");
  }
};

namespace detail {

inline long long positive_mod(long long x, long long k) {
  long long r = x % k;
  return r < 0 ? r + k : r;
}
inline long long floor_div(long long x, long long p) {
  long long q = x / p;
  if ((x % p != 0) && ((x < 0) != (p < 0))) --q;
  return q;
}

// Letter order: generator index first, positive letter before its inverse.
inline std::pair<int, int> letter_key(int l) {
  return {std::abs(l), l < 0 ? 1 : 0};
}
// Coordinate order: positive before negative before zero, small powers first.
inline std::pair<int, long long> coord_key(long long v) {
  if (v > 0) return {0, v};
  if (v < 0) return {1, -v};
  return {2, 0};
}

}  // namespace detail

struct GroupElem {
  std::vector<long long> vec;  // abelian free part
  std::vector<long long> res;  // abelian torsion residues, reduced mod order
  std::vector<int> word;       // free model: reduced word, letters +-(i+1)

  bool operator==(const GroupElem&) const = default;

  // Graded order: shorter elements first, then generator position with
  // positive powers before inverses. Shortlex in the letter order for words.
  std::strong_ordering operator<=>(const GroupElem& o) const {
    if (auto c = word.size() <=> o.word.size(); c != 0) return c;
    for (size_t i = 0; i < word.size(); ++i)
      if (word[i] != o.word[i])
        return detail::letter_key(word[i]) <=> detail::letter_key(o.word[i]);
    long long ga = 0, gb = 0;
    for (long long v : vec) ga += std::abs(v);
    for (long long v : res) ga += v;
    for (long long v : o.vec) gb += std::abs(v);
    for (long long v : o.res) gb += v;
    if (auto c = ga <=> gb; c != 0) return c;
    if (auto c = vec.size() <=> o.vec.size(); c != 0) return c;
    for (size_t i = 0; i < vec.size(); ++i)
      if (vec[i] != o.vec[i])
        return detail::coord_key(vec[i]) <=> detail::coord_key(o.vec[i]);
    return res <=> o.res;
  }
};

namespace detail {
inline bool word_shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  return false;
}
inline std::vector<int> word_append(std::vector<int> a, const std::vector<int>& b) {
  for (int l : b) {
    if (!a.empty() && a.back() == -l)
      a.pop_back();
    else
      a.push_back(l);
  }
  return a;
}
inline std::vector<int> word_inverse(const std::vector<int>& a) {
  std::vector<int> r(a.rbegin(), a.rend());
  for (int& l : r) l = -l;
  return r;
}

// Integer column echelon form (Hermite-style staircase with positive
// pivots), used for exact membership and canonical coset reduction in
// abelian models. Coordinates are the free part followed by the torsion
// residues; the torsion relations are adjoined as generators.
class Lattice {
 public:
  Lattice(size_t dim, std::vector<std::vector<long long>> gens) : dim_(dim) {
    std::vector<std::vector<long long>> cols = std::move(gens);
    size_t row = 0;
    while (row < dim_ && !cols.empty()) {
      // Combine columns until at most one has a nonzero entry at this row.
      while (true) {
        size_t best = cols.size();
        for (size_t c = 0; c < cols.size(); ++c)
          if (cols[c][row] != 0 &&
              (best == cols.size() ||
               std::abs(cols[c][row]) < std::abs(cols[best][row])))
            best = c;
        if (best == cols.size()) break;  // all zero at this row
        bool others = false;
        for (size_t c = 0; c < cols.size(); ++c) {
          if (c == best || cols[c][row] == 0) continue;
          long long q = floor_div(cols[c][row], cols[best][row]);
          for (size_t r = 0; r < dim_; ++r) cols[c][r] -= q * cols[best][r];
          if (cols[c][row] != 0) others = true;
        }
        if (!others) {
          auto col = cols[best];
          if (col[row] < 0)
            for (auto& v : col) v = -v;
          pivots_.push_back({row, col[row]});
          echelon_.push_back(col);
          cols.erase(cols.begin() + best);
          break;
        }
      }
      ++row;
    }
  }

  std::vector<long long> reduce(std::vector<long long> x) const {
    for (size_t c = 0; c < echelon_.size(); ++c) {
      auto [row, p] = pivots_[c];
      long long q = floor_div(x[row], p);
      if (q != 0)
        for (size_t r = 0; r < dim_; ++r) x[r] -= q * echelon_[c][r];
    }
    return x;
  }
  bool contains(const std::vector<long long>& x) const {
    auto r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
  }

 private:
  size_t dim_;
  std::vector<std::vector<long long>> echelon_;
  std::vector<std::pair<size_t, long long>> pivots_;
};

}  // namespace detail

inline GroupElem identity(const GroupModel& m) {
  GroupElem e;
  if (!m.word_model()) {
    e.vec.assign(m.rank, 0);
    e.res.assign(m.torsion.size(), 0);
  }
  return e;
}

inline bool is_identity(const GroupModel& m, const GroupElem& a) {
  return a == identity(m);
}

inline GroupElem normalized(const GroupModel& m, GroupElem a) {
  if (!m.word_model())
    for (size_t i = 0; i < m.torsion.size(); ++i)
      a.res[i] = detail::positive_mod(a.res[i], m.torsion[i]);
  return a;
}

inline GroupElem mul(const GroupModel& m, const GroupElem& a, const GroupElem& b) {
  GroupElem r;
  if (m.word_model()) {
    r.word = detail::word_append(a.word, b.word);
  } else {
    r.vec.resize(m.rank);
    r.res.resize(m.torsion.size());
    for (int i = 0; i < m.rank; ++i) r.vec[i] = a.vec[i] + b.vec[i];
    for (size_t i = 0; i < m.torsion.size(); ++i)
      r.res[i] = detail::positive_mod(a.res[i] + b.res[i], m.torsion[i]);
  }
  return r;
}

inline GroupElem inverse(const GroupModel& m, const GroupElem& a) {
  GroupElem r;
  if (m.word_model()) {
    r.word = detail::word_inverse(a.word);
  } else {
    r = a;
    for (auto& v : r.vec) v = -v;
    for (size_t i = 0; i < m.torsion.size(); ++i)
      r.res[i] = detail::positive_mod(-a.res[i], m.torsion[i]);
  }
  return r;
}

inline GroupElem power(const GroupModel& m, const GroupElem& a, long long k) {
  GroupElem base = k < 0 ? inverse(m, a) : a;
  long long n = k < 0 ? -k : k;
  GroupElem r = identity(m);
  for (long long i = 0; i < n; ++i) r = mul(m, r, base);
  return r;
}

inline long long word_length(const GroupModel& m, const GroupElem& a) {
  if (m.word_model()) return static_cast<long long>(a.word.size());
  long long len = 0;
  for (long long v : a.vec) len += std::abs(v);
  for (size_t i = 0; i < m.torsion.size(); ++i)
    len += std::min(a.res[i], m.torsion[i] - a.res[i]);
  return len;
}

// Total order used everywhere a deterministic element order is needed.
inline bool elem_less(const GroupModel&, const GroupElem& a, const GroupElem& b) {
  return a < b;
}

// Free part of the image in H1.
inline std::vector<long long> abelianization(const GroupModel& m, const GroupElem& a) {
  if (!m.word_model()) return a.vec;
  std::vector<long long> v(m.rank, 0);
  for (int l : a.word) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

// ---- conjugacy classes ----

struct ConjClass {
  GroupElem rep;  // canonical representative

  bool operator==(const ConjClass&) const = default;
  auto operator<=>(const ConjClass&) const = default;
};

inline ConjClass conj_class(const GroupModel& m, const GroupElem& x) {
  if (!m.word_model()) return ConjClass{normalized(m, x)};
  // Cyclic reduction, then the least rotation in the letter order.
  std::vector<int> w = x.word;
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return ConjClass{GroupElem{}};
  std::vector<int> best = w;
  for (size_t s = 1; s < w.size(); ++s) {
    std::vector<int> rot(w.begin() + s, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + s);
    if (detail::word_shortlex_less(rot, best)) best = rot;
  }
  GroupElem r;
  r.word = std::move(best);
  return ConjClass{r};
}

inline bool is_trivial(const GroupModel& m, const ConjClass& c) {
  return is_identity(m, c.rep);
}

// Class order with the trivial class first.
inline bool class_less(const GroupModel& m, const ConjClass& a, const ConjClass& b) {
  bool ta = is_trivial(m, a), tb = is_trivial(m, b);
  if (ta != tb) return ta;
  return elem_less(m, a.rep, b.rep);
}

// Class of a * g * b * g^-1, the merge of two link components along a band
// whose core follows g. In abelian models the conjugator drops out.
inline ConjClass merge_classes(const GroupModel& m, const GroupElem& a,
                               const GroupElem& g, const GroupElem& b) {
  GroupElem gbg = mul(m, mul(m, g, b), inverse(m, g));
  return conj_class(m, mul(m, a, gbg));
}

// ---- rendering and parsing of element literals ----

inline std::string render_elem(const GroupModel& m, const GroupElem& a) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& name, long long e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e != 1) os << "^" << e;
    first = false;
  };
  if (m.word_model()) {
    size_t i = 0;
    while (i < a.word.size()) {
      size_t j = i;
      while (j < a.word.size() && a.word[j] == a.word[i]) ++j;
      int l = a.word[i];
      long long e = static_cast<long long>(j - i) * (l > 0 ? 1 : -1);
      emit(m.names[std::abs(l) - 1], e);
      i = j;
    }
  } else {
    for (int i = 0; i < m.rank; ++i) emit(m.names[i], a.vec[i]);
    for (size_t i = 0; i < m.torsion.size(); ++i)
      emit(m.names[m.rank + i], a.res[i]);
  }
  return first ? "1" : os.str();
}

// Literals: `1`, products like `b1^2*b3^-1` or `x*y^-1*x` (`+` is accepted
// as a synonym for `*` in abelian models), or a coordinate vector
// `[2,0,-1]` covering the free part (and optionally the torsion residues).
inline GroupElem parse_elem(const GroupModel& m, const std::string& s) {
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("element parse error at position " +
                                std::to_string(i) + ": " + what);
  };
  auto parse_int = [&]() -> long long {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  };
  skip();
  if (i == s.size()) fail("empty literal");
  if (s[i] == '[') {
    if (m.word_model()) fail("vector literals need an abelian model");
    ++i;
    std::vector<long long> coords;
    skip();
    if (i < s.size() && s[i] == ']') {
      ++i;
    } else {
      while (true) {
        coords.push_back(parse_int());
        skip();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ']') {
          ++i;
          break;
        }
        fail("expected ',' or ']'");
      }
    }
    skip();
    if (i != s.size()) fail("trailing input");
    size_t total = m.generator_count();
    if (coords.size() != static_cast<size_t>(m.rank) && coords.size() != total)
      fail("coordinate count does not match model");
    GroupElem e = identity(m);
    for (size_t c = 0; c < coords.size(); ++c) {
      if (c < static_cast<size_t>(m.rank))
        e.vec[c] = coords[c];
      else
        e.res[c - m.rank] = coords[c];
    }
    return normalized(m, e);
  }
  GroupElem acc = identity(m);
  bool any = false;
  while (true) {
    skip();
    if (i < s.size() && s[i] == '1' &&
        (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
      ++i;  // identity factor
    } else {
      size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      if (i == start) fail("expected generator name");
      std::string name = s.substr(start, i - start);
      auto it = std::find(m.names.begin(), m.names.end(), name);
      if (it == m.names.end()) fail("unknown generator '" + name + "'");
      int gi = static_cast<int>(it - m.names.begin());
      long long e = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_int();
      }
      GroupElem g = identity(m);
      if (m.word_model()) {
        int letter = (gi + 1) * (e < 0 ? -1 : 1);
        for (long long k = 0; k < std::llabs(e); ++k) g.word.push_back(letter);
      } else if (gi < m.rank) {
        g.vec[gi] = e;
      } else {
        g.res[gi - m.rank] = detail::positive_mod(e, m.torsion[gi - m.rank]);
      }
      acc = mul(m, acc, g);
    }
    any = true;
    skip();
    if (i < s.size() && (s[i] == '*' || (s[i] == '+' && !m.word_model()))) {
      ++i;
      continue;
    }
    break;
  }
  skip();
  if (i != s.size() || !any) fail("trailing input");
  return acc;
}

// ---- centralizers and cyclic subgroups ----

struct CentralizerData {
  bool whole_group = false;  // abelian models, and the identity in free ones
  GroupElem root;            // maximal root: a == root^exponent
  long long exponent = 0;
};

inline CentralizerData centralizer_data(const GroupModel& m, const GroupElem& a) {
  CentralizerData d;
  d.root = a;
  d.exponent = 1;
  if (m.word_model()) {
    d.whole_group = a.word.empty();
    if (a.word.empty()) {
      d.exponent = 0;
      return d;
    }
    // Peel the conjugating shell: a = p c p^-1 with c cyclically reduced.
    std::vector<int> w = a.word, p;
    while (w.size() >= 2 && w.front() == -w.back()) {
      p.push_back(w.front());
      w.erase(w.begin());
      w.pop_back();
    }
    // Maximal root of c is its shortest exact period.
    size_t n = w.size();
    for (size_t d_len = 1; d_len <= n; ++d_len) {
      if (n % d_len != 0) continue;
      bool periodic = true;
      for (size_t k = d_len; k < n && periodic; ++k)
        periodic = w[k] == w[k - d_len];
      if (periodic) {
        std::vector<int> root(w.begin(), w.begin() + d_len);
        std::vector<int> shell_inv = detail::word_inverse(p);
        GroupElem r;
        r.word = detail::word_append(detail::word_append(p, root), shell_inv);
        d.root = r;
        d.exponent = static_cast<long long>(n / d_len);
        break;
      }
    }
    return d;
  }
  d.whole_group = true;
  if (is_identity(m, a)) {
    d.root = identity(m);
    d.exponent = 0;
    return d;
  }
  bool free_zero = std::all_of(a.vec.begin(), a.vec.end(),
                               [](long long v) { return v == 0; });
  bool res_zero = std::all_of(a.res.begin(), a.res.end(),
                              [](long long v) { return v == 0; });
  if (!free_zero && res_zero) {
    long long g = 0;
    for (long long v : a.vec) g = std::gcd(g, v);
    GroupElem r = identity(m);
    for (int i = 0; i < m.rank; ++i) r.vec[i] = a.vec[i] / g;
    d.root = r;
    d.exponent = g;
  } else if (m.kind == GroupModel::Kind::FiniteCyclic) {
    GroupElem t = identity(m);
    t.res[0] = 1;
    d.root = t;
    d.exponent = a.res[0];
  }
  // Mixed free/torsion elements keep themselves as root (no proper root
  // is claimed; the filters that consume this stay conservative).
  return d;
}

// k with g == root(a)^k, if any.
inline std::optional<long long> cyclic_subgroup_member(const GroupModel& m,
                                                       const GroupElem& a,
                                                       const GroupElem& g) {
  GroupElem r = centralizer_data(m, a).root;
  if (is_identity(m, r)) {
    if (is_identity(m, g)) return 0;
    return std::nullopt;
  }
  long long bound;
  if (m.word_model()) {
    bound = static_cast<long long>(g.word.size()) + 1;
  } else {
    bound = 1;
    for (size_t i = 0; i < g.vec.size(); ++i)
      bound = std::max(bound, std::abs(g.vec[i]) + 1);
    long long torsion_span = 1;
    for (long long k : m.torsion) torsion_span = std::lcm(torsion_span, k);
    if (!m.torsion.empty()) bound = std::max(bound, torsion_span);
  }
  for (long long k = -bound; k <= bound; ++k)
    if (power(m, r, k) == g) return k;
  return std::nullopt;
}

// ---- double cosets ----

struct CosetRep {
  GroupElem g, a, b;

  bool operator==(const CosetRep&) const = default;
  auto operator<=>(const CosetRep&) const = default;
};

namespace detail {

inline std::vector<long long> full_coords(const GroupModel& m, const GroupElem& e) {
  std::vector<long long> x(e.vec);
  x.insert(x.end(), e.res.begin(), e.res.end());
  return x;
}
inline GroupElem from_full_coords(const GroupModel& m, const std::vector<long long>& x) {
  GroupElem e = identity(m);
  for (int i = 0; i < m.rank; ++i) e.vec[i] = x[i];
  for (size_t i = 0; i < m.torsion.size(); ++i) e.res[i] = x[m.rank + i];
  return normalized(m, e);
}
inline Lattice pair_lattice(const GroupModel& m, const GroupElem& a,
                            const GroupElem& b) {
  size_t dim = m.rank + m.torsion.size();
  std::vector<std::vector<long long>> gens{full_coords(m, a), full_coords(m, b)};
  for (size_t i = 0; i < m.torsion.size(); ++i) {
    std::vector<long long> rel(dim, 0);
    rel[m.rank + i] = m.torsion[i];
    gens.push_back(rel);
  }
  return Lattice(dim, gens);
}

template <class Fn>
void enumerate_ball_abelian(const GroupModel& m, long long bound, Fn&& fn) {
  size_t dim = m.rank + m.torsion.size();
  std::vector<long long> x(dim, 0);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
    if (i == dim) {
      fn(from_full_coords(m, x));
      return;
    }
    if (i < static_cast<size_t>(m.rank)) {
      for (long long v = -left; v <= left; ++v) {
        x[i] = v;
        rec(i + 1, left - std::abs(v));
      }
    } else {
      long long k = m.torsion[i - m.rank];
      for (long long v = 0; v < k; ++v) {
        long long w = std::min(v, k - v);
        if (w > left) continue;
        x[i] = v;
        rec(i + 1, left - w);
      }
    }
    x[i] = 0;
  };
  rec(0, bound);
}

template <class Fn>
void enumerate_ball_free(const GroupModel& m, long long bound, Fn&& fn) {
  std::vector<std::vector<int>> frontier{{}};
  fn(GroupElem{});
  for (long long len = 1; len <= bound; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int gi = 1; gi <= m.rank; ++gi)
        for (int l : {gi, -gi}) {
          if (!w.empty() && w.back() == -l) continue;
          auto nw = w;
          nw.push_back(l);
          GroupElem e;
          e.word = nw;
          fn(e);
          next.push_back(std::move(nw));
        }
    frontier = std::move(next);
  }
}

}  // namespace detail

template <class Fn>
void enumerate_ball(const GroupModel& m, long long bound, Fn&& fn) {
  if (m.word_model())
    detail::enumerate_ball_free(m, bound, std::forward<Fn>(fn));
  else
    detail::enumerate_ball_abelian(m, bound, std::forward<Fn>(fn));
}

// Representatives of the non-baseline double cosets <a> g <b> met by the
// ball of elements of length <= bound. The coset of the identity is the
// baseline banding and is always excluded.
inline std::vector<CosetRep> double_cosets(const GroupModel& m, const GroupElem& a,
                                           const GroupElem& b, long long bound) {
  if (is_identity(m, a) || is_identity(m, b))
    throw std::invalid_argument("double_cosets: both core elements must be nontrivial");
  std::vector<CosetRep> out;
  if (!m.word_model()) {
    detail::Lattice lat = detail::pair_lattice(m, a, b);
    std::set<std::vector<long long>> seen;
    detail::enumerate_ball_abelian(m, bound, [&](const GroupElem& g) {
      auto canon = lat.reduce(detail::full_coords(m, g));
      if (std::all_of(canon.begin(), canon.end(), [](long long v) { return v == 0; }))
        return;  // baseline coset
      if (seen.insert(canon).second)
        out.push_back(CosetRep{detail::from_full_coords(m, canon), a, b});
    });
  } else {
    long long mbound = 2 * bound + 4;
    auto orbit_products = [&](const GroupElem& g) {
      std::vector<GroupElem> prods;
      for (long long mm = -mbound; mm <= mbound; ++mm) {
        GroupElem left = mul(m, power(m, a, mm), g);
        for (long long nn = -mbound; nn <= mbound; ++nn)
          prods.push_back(mul(m, left, power(m, b, nn)));
      }
      return prods;
    };
    std::set<GroupElem> claimed;
    std::vector<GroupElem> ball;
    detail::enumerate_ball_free(m, bound, [&](const GroupElem& g) {
      if (!is_identity(m, g)) ball.push_back(g);
    });
    std::sort(ball.begin(), ball.end(), [&](const GroupElem& x, const GroupElem& y) {
      return elem_less(m, x, y);
    });
    for (const auto& g : ball) {
      if (claimed.count(g)) continue;
      auto orbit = orbit_products(g);
      bool baseline = false;
      GroupElem canon = g;
      for (const auto& p : orbit) {
        if (is_identity(m, p)) baseline = true;
        if (elem_less(m, p, canon)) canon = p;
        claimed.insert(p);
      }
      if (!baseline) out.push_back(CosetRep{canon, a, b});
    }
  }
  std::sort(out.begin(), out.end(), [&](const CosetRep& x, const CosetRep& y) {
    return elem_less(m, x.g, y.g);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hskein
