#include "hskein/groups.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace hskein {
namespace {

constexpr int kPropertyIterations = 2000;

GroupElem fe(const GroupModel& m, const std::string& s) { return parse_elem(m, s); }

GroupElem random_elem(const GroupModel& m, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  int len = len_dist(rng);
  GroupElem e = identity(m);
  if (m.word_model()) {
    std::uniform_int_distribution<int> gen_dist(1, m.rank);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int i = 0; i < len; ++i) {
      GroupElem l;
      l.word = {gen_dist(rng) * (sign_dist(rng) ? 1 : -1)};
      e = mul(m, e, l);
    }
  } else {
    std::uniform_int_distribution<long long> coord_dist(-max_len, max_len);
    for (auto& v : e.vec) v = coord_dist(rng);
    for (size_t i = 0; i < m.torsion.size(); ++i)
      e.res[i] = detail::positive_mod(coord_dist(rng), m.torsion[i]);
  }
  return e;
}

TEST(ElemLiterals, ParseAndRenderExamples) {
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_EQ(fe(z3, "b1^2*b3^-1").vec, (std::vector<long long>{2, 0, -1}));
  EXPECT_EQ(fe(z3, "[2,0,-1]"), fe(z3, "b1^2*b3^-1"));
  EXPECT_EQ(fe(z3, "b1+b2"), fe(z3, "b1*b2"));
  EXPECT_EQ(render_elem(z3, fe(z3, "b1^2*b3^-1")), "b1^2*b3^-1");
  EXPECT_EQ(render_elem(z3, identity(z3)), "1");
  EXPECT_TRUE(is_identity(z3, fe(z3, "1")));

  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_EQ(fe(f2, "x*y^-1*x").word, (std::vector<int>{1, -2, 1}));
  EXPECT_EQ(render_elem(f2, fe(f2, "x*x*y^-1")), "x^2*y^-1");
  EXPECT_EQ(fe(f2, "x*x^-1"), identity(f2));

  GroupModel c5 = GroupModel::finite_cyclic(5);
  EXPECT_EQ(fe(c5, "t^7").res, (std::vector<long long>{2}));
  EXPECT_EQ(render_elem(c5, fe(c5, "t^-1")), "t^4");
}

TEST(ElemLiterals, RejectsMalformedInput) {
  GroupModel z3 = GroupModel::free_abelian(3);
  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_THROW(parse_elem(z3, ""), std::invalid_argument);
  EXPECT_THROW(parse_elem(z3, "b4"), std::invalid_argument);
  EXPECT_THROW(parse_elem(z3, "[1,2]"), std::invalid_argument);
  EXPECT_THROW(parse_elem(f2, "[1,2]"), std::invalid_argument);
  EXPECT_THROW(parse_elem(f2, "x+y"), std::invalid_argument);
  EXPECT_THROW(parse_elem(z3, "b1^"), std::invalid_argument);
}

TEST(ElemLiterals, RoundTripProperty) {
  std::mt19937 rng(7);
  std::vector<GroupModel> models = {
      GroupModel::free_abelian(3), GroupModel::free_group(2),
      GroupModel::finite_cyclic(7), GroupModel::free_abelian(2, {4})};
  for (const auto& m : models)
    for (int i = 0; i < kPropertyIterations / 4; ++i) {
      GroupElem e = random_elem(m, rng, 6);
      EXPECT_EQ(parse_elem(m, render_elem(m, e)), e);
    }
}

TEST(GroupOps, AxiomsOnRandomElements) {
  std::mt19937 rng(11);
  std::vector<GroupModel> models = {GroupModel::free_abelian(2, {3}),
                                    GroupModel::free_group(3)};
  for (const auto& m : models)
    for (int i = 0; i < kPropertyIterations / 2; ++i) {
      GroupElem a = random_elem(m, rng, 5), b = random_elem(m, rng, 5),
                c = random_elem(m, rng, 5);
      EXPECT_EQ(mul(m, mul(m, a, b), c), mul(m, a, mul(m, b, c)));
      EXPECT_EQ(mul(m, a, inverse(m, a)), identity(m));
      EXPECT_EQ(power(m, a, 3), mul(m, a, mul(m, a, a)));
      EXPECT_EQ(power(m, a, -2), inverse(m, mul(m, a, a)));
    }
}

TEST(ConjClasses, FreeNormalFormExamples) {
  GroupModel f2 = GroupModel::free_group(2);
  // Cyclic reduction strips the conjugating shell.
  EXPECT_EQ(conj_class(f2, fe(f2, "x*y*x^-1")), conj_class(f2, fe(f2, "y")));
  // Least rotation in the letter order x < x^-1 < y < y^-1.
  EXPECT_EQ(render_elem(f2, conj_class(f2, fe(f2, "y*x")).rep), "x*y");
  EXPECT_EQ(render_elem(f2, conj_class(f2, fe(f2, "y^-1*x")).rep), "x*y^-1");
  // A class and its inverse class stay distinct.
  EXPECT_NE(conj_class(f2, fe(f2, "x*y")),
            conj_class(f2, inverse(f2, fe(f2, "x*y"))));
  EXPECT_TRUE(is_trivial(f2, conj_class(f2, fe(f2, "x*y*y^-1*x^-1"))));
}

TEST(ConjClasses, ConjugationInvarianceProperty) {
  std::mt19937 rng(13);
  GroupModel f2 = GroupModel::free_group(2);
  for (int i = 0; i < kPropertyIterations; ++i) {
    GroupElem x = random_elem(f2, rng, 6), g = random_elem(f2, rng, 4);
    EXPECT_EQ(conj_class(f2, mul(f2, mul(f2, g, x), inverse(f2, g))),
              conj_class(f2, x));
  }
}

TEST(ConjClasses, TrivialSortsFirst) {
  GroupModel f2 = GroupModel::free_group(2);
  ConjClass trivial = conj_class(f2, identity(f2));
  ConjClass other = conj_class(f2, fe(f2, "x"));
  EXPECT_TRUE(class_less(f2, trivial, other));
  EXPECT_FALSE(class_less(f2, other, trivial));
}

TEST(MergeClasses, AbelianAddsAndFreeBands) {
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_EQ(merge_classes(z3, fe(z3, "b1"), fe(z3, "b3^5"), fe(z3, "b2")),
            conj_class(z3, fe(z3, "b1*b2")));
  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_EQ(merge_classes(f2, fe(f2, "x"), identity(f2), fe(f2, "y")),
            conj_class(f2, fe(f2, "x*y")));
  EXPECT_EQ(merge_classes(f2, fe(f2, "x"), fe(f2, "x"), fe(f2, "x^-1")),
            conj_class(f2, identity(f2)));
}

TEST(MergeClasses, BandSlideInvarianceProperty) {
  // The merged class only depends on the double coset <a> g <b>.
  std::mt19937 rng(17);
  std::vector<GroupModel> models = {GroupModel::free_abelian(2, {4}),
                                    GroupModel::free_group(2)};
  std::uniform_int_distribution<long long> exp_dist(-3, 3);
  for (const auto& m : models)
    for (int i = 0; i < kPropertyIterations / 2; ++i) {
      GroupElem a = random_elem(m, rng, 4), b = random_elem(m, rng, 4),
                g = random_elem(m, rng, 4);
      GroupElem g2 = mul(m, mul(m, power(m, a, exp_dist(rng)), g),
                         power(m, b, exp_dist(rng)));
      EXPECT_EQ(merge_classes(m, a, g, b), merge_classes(m, a, g2, b));
    }
}

TEST(CentralizerRoots, FrozenExamples) {
  GroupModel f2 = GroupModel::free_group(2);
  auto d = centralizer_data(f2, fe(f2, "x*x"));
  EXPECT_FALSE(d.whole_group);
  EXPECT_EQ(d.root, fe(f2, "x"));
  EXPECT_EQ(d.exponent, 2);

  d = centralizer_data(f2, power(f2, fe(f2, "x*y"), 3));
  EXPECT_EQ(d.root, fe(f2, "x*y"));
  EXPECT_EQ(d.exponent, 3);

  // Conjugated powers keep the conjugating shell on the root.
  d = centralizer_data(f2, fe(f2, "y*x^2*y^-1"));
  EXPECT_EQ(d.root, fe(f2, "y*x*y^-1"));
  EXPECT_EQ(d.exponent, 2);

  d = centralizer_data(f2, fe(f2, "x*y"));
  EXPECT_EQ(d.exponent, 1);

  GroupModel z2 = GroupModel::free_abelian(2);
  d = centralizer_data(z2, fe(z2, "[2,4]"));
  EXPECT_TRUE(d.whole_group);
  EXPECT_EQ(d.root, fe(z2, "[1,2]"));
  EXPECT_EQ(d.exponent, 2);

  GroupModel c5 = GroupModel::finite_cyclic(5);
  d = centralizer_data(c5, fe(c5, "t^3"));
  EXPECT_EQ(d.root, fe(c5, "t"));
  EXPECT_EQ(d.exponent, 3);

  d = centralizer_data(f2, identity(f2));
  EXPECT_TRUE(d.whole_group);
  EXPECT_EQ(d.exponent, 0);
}

TEST(CentralizerRoots, RootPowerRecoversElement) {
  std::mt19937 rng(19);
  std::vector<GroupModel> models = {GroupModel::free_group(2),
                                    GroupModel::free_abelian(3)};
  for (const auto& m : models)
    for (int i = 0; i < kPropertyIterations / 2; ++i) {
      GroupElem a = random_elem(m, rng, 6);
      auto d = centralizer_data(m, a);
      if (is_identity(m, a)) continue;
      EXPECT_EQ(power(m, d.root, d.exponent), a);
      // The root itself is not a proper power.
      EXPECT_EQ(centralizer_data(m, d.root).exponent,
                is_identity(m, d.root) ? 0 : 1);
    }
}

TEST(CyclicMembership, ResolvesPowersOfTheRoot) {
  GroupModel z3 = GroupModel::free_abelian(3);
  GroupElem a = fe(z3, "b1^2");
  EXPECT_EQ(cyclic_subgroup_member(z3, a, fe(z3, "b1^-3")), -3);
  EXPECT_EQ(cyclic_subgroup_member(z3, a, identity(z3)), 0);
  EXPECT_FALSE(cyclic_subgroup_member(z3, a, fe(z3, "b2")).has_value());

  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_EQ(cyclic_subgroup_member(f2, fe(f2, "x^2"), fe(f2, "x^-3")), -3);
  EXPECT_FALSE(cyclic_subgroup_member(f2, fe(f2, "x^2"), fe(f2, "y")).has_value());
  EXPECT_FALSE(
      cyclic_subgroup_member(f2, identity(f2), fe(f2, "x")).has_value());

  GroupModel c5 = GroupModel::finite_cyclic(5);
  auto k = cyclic_subgroup_member(c5, fe(c5, "t^2"), fe(c5, "t^3"));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(power(c5, centralizer_data(c5, fe(c5, "t^2")).root, *k), fe(c5, "t^3"));
}

TEST(DoubleCosets, FrozenAbelianExamples) {
  // Z with a = b = t: the two factors already cover the group.
  GroupModel z1 = GroupModel::free_abelian(1, {}, {"t"});
  EXPECT_TRUE(double_cosets(z1, fe(z1, "t"), fe(z1, "t"), 5).empty());

  // Z^3 with a = b1, b = b1^-1: directions transverse to b1 survive.
  GroupModel z3 = GroupModel::free_abelian(3);
  auto reps = double_cosets(z3, fe(z3, "b1"), fe(z3, "b1^-1"), 1);
  std::set<GroupElem> got;
  for (const auto& r : reps) got.insert(r.g);
  std::set<GroupElem> want = {fe(z3, "b2"), fe(z3, "b2^-1"), fe(z3, "b3"),
                              fe(z3, "b3^-1")};
  EXPECT_EQ(got, want);

  // Index-two sublattice in Z^2.
  GroupModel z2 = GroupModel::free_abelian(2);
  reps = double_cosets(z2, fe(z2, "[2,0]"), fe(z2, "[0,2]"), 2);
  got.clear();
  for (const auto& r : reps) got.insert(r.g);
  want = {fe(z2, "[0,1]"), fe(z2, "[1,0]"), fe(z2, "[1,1]")};
  EXPECT_EQ(got, want);

  GroupModel c5 = GroupModel::finite_cyclic(5);
  EXPECT_TRUE(double_cosets(c5, fe(c5, "t"), fe(c5, "t^2"), 4).empty());

  EXPECT_THROW(double_cosets(z3, identity(z3), fe(z3, "b1"), 1),
               std::invalid_argument);
}

TEST(DoubleCosets, FrozenFreeExamples) {
  GroupModel f2 = GroupModel::free_group(2);
  // <x> g <y> with g in the length-1 ball: every candidate slides to the
  // identity, so only the baseline coset is met.
  EXPECT_TRUE(double_cosets(f2, fe(f2, "x"), fe(f2, "y"), 1).empty());

  // <x^2> g <y^2>: the odd-exponent letters survive as two cosets.
  auto reps = double_cosets(f2, fe(f2, "x^2"), fe(f2, "y^2"), 1);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_EQ(reps[0].g, fe(f2, "x"));
  EXPECT_EQ(reps[1].g, fe(f2, "y"));
}

TEST(DoubleCosets, RepresentativesAreStableUnderSlides) {
  // Sliding g by powers of a and b never changes its coset representative.
  GroupModel z2 = GroupModel::free_abelian(2);
  GroupElem a = fe(z2, "[2,0]"), b = fe(z2, "[0,2]");
  auto reps = double_cosets(z2, a, b, 2);
  detail::Lattice lat = detail::pair_lattice(z2, a, b);
  std::mt19937 rng(23);
  std::uniform_int_distribution<long long> exp_dist(-3, 3);
  for (const auto& r : reps)
    for (int i = 0; i < 50; ++i) {
      GroupElem slid = mul(z2, mul(z2, power(z2, a, exp_dist(rng)), r.g),
                           power(z2, b, exp_dist(rng)));
      EXPECT_EQ(lat.reduce(detail::full_coords(z2, slid)),
                detail::full_coords(z2, r.g));
    }
}

TEST(Abelianization, MatchesExponentSums) {
  GroupModel f2 = GroupModel::free_group(2);
  EXPECT_EQ(abelianization(f2, fe(f2, "x*y^-1*x")),
            (std::vector<long long>{2, -1}));
  GroupModel z3 = GroupModel::free_abelian(3);
  EXPECT_EQ(abelianization(z3, fe(z3, "b1^2*b3^-1")),
            (std::vector<long long>{2, 0, -1}));
}

}  // namespace
}  // namespace hskein
