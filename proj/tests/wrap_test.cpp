#include "hskein/wrap.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hskein {
namespace {

constexpr int kPropertyIterations = 200;

WrapClass wc(const GroupModel& m, const std::string& s) { return parse_class(m, s); }

TEST(WrapClasses, CanonicalOrderAndLiterals) {
  GroupModel z3 = GroupModel::free_abelian(3);
  WrapClass a = wc(z3, "<b2, 1, b1>");
  EXPECT_EQ(render_class(z3, a), "<1, b1, b2>");
  EXPECT_EQ(parse_class(z3, render_class(z3, a)), a);
  EXPECT_EQ(wc(z3, "<[0,1,0], [1,0,0], 1>"), a);
  EXPECT_EQ(render_class(z3, WrapClass{}), "<>");
  EXPECT_EQ(parse_class(z3, "<>"), WrapClass{});

  GroupModel f2 = GroupModel::free_group(2);
  // Components are stored as conjugacy normal forms.
  EXPECT_EQ(render_class(f2, wc(f2, "<y*x, x*y>")), "<x*y, x*y>");
  EXPECT_THROW(parse_class(z3, "<b1,>"), std::invalid_argument);
  EXPECT_THROW(parse_class(z3, "b1"), std::invalid_argument);
}

TEST(WrapClasses, KeyOrderIsCountFirst) {
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_LT(wc(z3, "<b3>"), wc(z3, "<1, b1>"));
  EXPECT_LT(wc(z3, "<1, b1>"), wc(z3, "<1, b2>"));
}

TEST(WrapClasses, TrivialityAndStripping) {
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_TRUE(all_trivial(z3, wc(z3, "<1, 1>")));
  EXPECT_TRUE(all_trivial(z3, WrapClass{}));
  EXPECT_FALSE(all_trivial(z3, wc(z3, "<1, b1>")));
  EXPECT_TRUE(no_trivial(z3, wc(z3, "<b1, b2>")));
  EXPECT_FALSE(no_trivial(z3, wc(z3, "<1, b1>")));

  auto [stripped, removed] = strip_trivial(z3, wc(z3, "<1, 1, b2>"));
  EXPECT_EQ(stripped, wc(z3, "<b2>"));
  EXPECT_EQ(removed, 2u);
  EXPECT_EQ(u_act(z3, stripped, 2), wc(z3, "<1, 1, b2>"));
}

TEST(WrapClasses, HomologyClassSumsParts) {
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_EQ(homology_class(z3, wc(z3, "<b1, b1, b2^-1>")),
            (std::vector<long long>{2, -1, 0}));
  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_EQ(homology_class(f2, wc(f2, "<x*y^-1*x, y>")),
            (std::vector<long long>{2, 0}));
}

TEST(LinCombs, ArithmeticAndPruning) {
  GroupModel z3 = GroupModel::free_abelian(3);
  WrapClass a = wc(z3, "<b1>"), b = wc(z3, "<b2>");
  SkeinVector v = SkeinVector::term(a, RPoly::parse("q^2 - 1"));
  v.add_term(b, RPoly::parse("z*q"));
  EXPECT_EQ(v.coeff(a), RPoly::parse("q^2 - 1"));
  EXPECT_TRUE(v.coeff(wc(z3, "<b3>")).is_zero());
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v + v, v.scaled(RPoly(2)));

  // Cancelling terms leave the support.
  SkeinVector w = v;
  w.add_term(a, -RPoly::parse("q^2 - 1"));
  EXPECT_EQ(w.support(), std::vector<WrapClass>{b});
  EXPECT_TRUE(SkeinVector::term(a, RPoly()).is_zero());

  // Specializing coefficients drops vanishing terms.
  auto at_q1 = v.map_coeffs([](const RPoly& c) {
    return c.at(Rational(1), Rational(5));
  });
  EXPECT_TRUE(at_q1.coeff(a) == Rational(0));
  EXPECT_TRUE(at_q1.coeff(b) == Rational(5));
}

TEST(LinCombs, RenderedForm) {
  GroupModel z3 = GroupModel::free_abelian(3);
  SkeinVector v = SkeinVector::term(wc(z3, "<1, b2>"), RPoly::parse("q^2 - 1"));
  v.add_term(wc(z3, "<b2>"), RPoly::parse("z*q"));
  EXPECT_EQ(render_lincomb(z3, v), "z*q*<b2> + (q^2 - 1)*<1, b2>");
  EXPECT_EQ(render_lincomb(z3, SkeinVector()), "0");
  EXPECT_EQ(render_lincomb(z3, SkeinVector::term(wc(z3, "<b1>"), RPoly(1))),
            "<b1>");
}

TEST(Descendants, AbelianMergesIgnoreTheBand) {
  GroupModel z3 = GroupModel::free_abelian(3);
  auto d = descendants(z3, wc(z3, "<b1, b2, b3>"), 1);
  std::set<WrapClass> want = {wc(z3, "<b1*b2, b3>"), wc(z3, "<b1*b3, b2>"),
                              wc(z3, "<b2*b3, b1>")};
  EXPECT_EQ(d, want);

  // Merging away a trivial component just removes it.
  EXPECT_EQ(descendants(z3, wc(z3, "<1, b2>"), 1),
            (std::set<WrapClass>{wc(z3, "<b2>")}));
  EXPECT_TRUE(descendants(z3, wc(z3, "<b1>"), 1).empty());
}

TEST(Descendants, FreeBandsFollowCosets) {
  GroupModel f2 = GroupModel::free_group(2);
  // At bound 1 the only band between x and y is the baseline.
  EXPECT_EQ(descendants(f2, wc(f2, "<x, y>"), 1),
            (std::set<WrapClass>{wc(f2, "<x*y>")}));
  // Larger bounds add one merge per double coset.
  auto d2 = descendants(f2, wc(f2, "<x, y>"), 2);
  EXPECT_TRUE(d2.count(wc(f2, "<x*y>")));
  size_t cosets = double_cosets(f2, parse_elem(f2, "x"), parse_elem(f2, "y"), 2).size();
  EXPECT_GT(cosets, 0u);
  EXPECT_GT(d2.size(), 1u);
  for (const auto& c : d2) EXPECT_EQ(c.parts.size(), 1u);
}

TEST(SkeinClosure, FrozenExamples) {
  GroupModel z3 = GroupModel::free_abelian(3);
  auto closure = skein_closure(z3, {wc(z3, "<b1, b2, b3>")}, 1);
  std::vector<WrapClass> want = {wc(z3, "<b1*b2*b3>"),  wc(z3, "<b1, b2*b3>"),
                                 wc(z3, "<b2, b1*b3>"), wc(z3, "<b3, b1*b2>"),
                                 wc(z3, "<b1, b2, b3>")};
  EXPECT_EQ(closure, want);

  GroupModel f2 = GroupModel::free_group(2);
  auto fc = skein_closure(f2, {wc(f2, "<x, y>")}, 1);
  EXPECT_EQ(fc, (std::vector<WrapClass>{wc(f2, "<x*y>"), wc(f2, "<x, y>")}));

  GroupModel z1 = GroupModel::free_abelian(1, {}, {"a"});
  auto sc = skein_closure(z1, {wc(z1, "<a, a, a^-1>")}, 1);
  std::vector<WrapClass> swant = {wc(z1, "<a>"), wc(z1, "<1, a>"),
                                  wc(z1, "<a^2, a^-1>"), wc(z1, "<a, a, a^-1>")};
  EXPECT_EQ(sc, swant);
}

TEST(SkeinClosure, ClosedAndIdempotentProperty) {
  std::mt19937 rng(29);
  GroupModel f2 = GroupModel::free_group(2);
  std::uniform_int_distribution<int> letter(1, 2), sign(0, 1), len(0, 2),
      count(1, 2);
  auto random_class = [&] {
    std::vector<GroupElem> parts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      GroupElem e;
      int l = len(rng);
      for (int k = 0; k < l; ++k)
        e.word = detail::word_append(e.word, {letter(rng) * (sign(rng) ? 1 : -1)});
      parts.push_back(e);
    }
    return wrap_class_elems(f2, parts);
  };
  for (int it = 0; it < kPropertyIterations; ++it) {
    std::vector<WrapClass> seeds = {random_class(), random_class()};
    auto closure = skein_closure(f2, seeds, 1);
    std::set<WrapClass> in(closure.begin(), closure.end());
    size_t max_len = 0;
    for (const auto& s : seeds) max_len = std::max(max_len, s.parts.size());
    for (const auto& c : closure) {
      EXPECT_LE(c.parts.size(), max_len);
      for (const auto& d : descendants(f2, c, 1)) EXPECT_TRUE(in.count(d));
    }
    EXPECT_EQ(skein_closure(f2, closure, 1), closure);
  }
}

TEST(StarSets, MembershipIgnoresTrivialCircles) {
  GroupModel z1 = GroupModel::free_abelian(1, {}, {"a"});
  StarSet s = star_closure(z1, {wc(z1, "<a, a, a^-1>")}, 1);
  std::set<WrapClass> base = {wc(z1, "<a>"), wc(z1, "<a^2, a^-1>"),
                              wc(z1, "<a, a, a^-1>")};
  EXPECT_EQ(s.base, base);
  EXPECT_TRUE(s.contains(z1, wc(z1, "<1, 1, a>")));
  EXPECT_TRUE(s.contains(z1, wc(z1, "<a^2, a^-1>")));
  EXPECT_FALSE(s.contains(z1, wc(z1, "<a^2>")));
}

TEST(UAction, CommutesWithStripping) {
  std::mt19937 rng(31);
  GroupModel z2 = GroupModel::free_abelian(2);
  std::uniform_int_distribution<long long> coord(-2, 2);
  std::uniform_int_distribution<int> count(0, 3), pad(0, 2);
  for (int it = 0; it < kPropertyIterations; ++it) {
    std::vector<GroupElem> parts;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      GroupElem e = identity(z2);
      e.vec = {coord(rng), coord(rng)};
      parts.push_back(e);
    }
    WrapClass a = wrap_class_elems(z2, parts);
    size_t k = pad(rng);
    auto [stripped, removed] = strip_trivial(z2, u_act(z2, a, k));
    auto [base, base_removed] = strip_trivial(z2, a);
    EXPECT_EQ(stripped, base);
    EXPECT_EQ(removed, base_removed + k);
  }
}

}  // namespace
}  // namespace hskein
