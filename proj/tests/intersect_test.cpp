#include "hskein/intersect.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hskein/groups.hpp"
#include "hskein/paths.hpp"
#include "hskein/wrap.hpp"

namespace hskein {
namespace {

constexpr int kPropertyIterations = 500;

ManifoldData torus3() {
  ManifoldData m;
  m.name = "t3";
  m.pi1 = GroupModel::free_abelian(3);
  m.b1 = 3;
  m.b1_boundary = 0;
  m.h2_rank = 3;
  m.pairing = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  // tau(e_i, e_j) = e_i wedge e_j in the dual basis.
  m.torus_class = {
      {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
      {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
      {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
  };
  m.flags.pi2_zero = true;
  return m;
}

ManifoldData sphere_circle() {
  ManifoldData m;
  m.name = "s2xs1";
  m.pi1 = GroupModel::free_abelian(1, {}, {"a"});
  m.b1 = 1;
  m.b1_boundary = 0;
  m.h2_rank = 1;
  m.pairing = {{1}};
  m.torus_class = {{{0}}};
  m.sphere_subgroup = {{1}};
  m.flags.cyclic_pi1 = true;
  return m;
}

ManifoldData lens(long long p) {
  ManifoldData m;
  m.name = "lens";
  m.pi1 = GroupModel::finite_cyclic(p);
  m.b1 = 0;
  m.b1_boundary = 0;
  m.h2_rank = 0;
  m.flags.pi2_zero = true;
  m.flags.atoroidal = true;
  m.flags.cyclic_pi1 = true;
  return m;
}

ManifoldData solid_torus() {
  ManifoldData m;
  m.name = "s1xd2";
  m.pi1 = GroupModel::free_abelian(1);
  m.b1 = 1;
  m.b1_boundary = 2;
  m.h2_rank = 0;
  m.torus_class = {{{}}};
  m.flags.pi2_zero = true;
  m.flags.atoroidal = true;
  m.flags.surface_product = true;
  m.flags.cyclic_pi1 = true;
  m.boundary_tori = {{parse_elem(m.pi1, "b1"), parse_elem(m.pi1, "1")}};
  return m;
}

ManifoldData free_two() {
  ManifoldData m;
  m.name = "f1xi";
  m.pi1 = GroupModel::free_group(2);
  m.b1 = 2;
  m.b1_boundary = 4;
  m.h2_rank = 0;
  m.flags.pi2_zero = true;
  m.flags.atoroidal = true;
  m.flags.surface_product = true;
  return m;
}

long long det3(const std::vector<long long>& a, const std::vector<long long>& b,
               const std::vector<long long>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

TEST(ManifoldValidation, AcceptsCatalogShapes) {
  EXPECT_NO_THROW(validate_manifold(torus3()));
  EXPECT_NO_THROW(validate_manifold(sphere_circle()));
  EXPECT_NO_THROW(validate_manifold(lens(5)));
  EXPECT_NO_THROW(validate_manifold(solid_torus()));
  EXPECT_NO_THROW(validate_manifold(free_two()));
}

TEST(ManifoldValidation, RejectsInconsistentData) {
  auto m = torus3();
  m.torus_class[0][1] = {0, 0, 2};
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);

  m = torus3();
  m.torus_class[1][1] = {1, 0, 0};
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);

  m = torus3();
  m.pairing.pop_back();
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);

  m = sphere_circle();
  m.flags.pi2_zero = true;
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);

  m = torus3();
  m.flags.cyclic_pi1 = true;
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);

  m = torus3();
  m.b1 = 2;
  EXPECT_THROW(validate_manifold(m), std::invalid_argument);
}

TEST(Tau, BilinearAndAntisymmetric) {
  const auto m = torus3();
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  for (int it = 0; it < kPropertyIterations; ++it) {
    std::vector<long long> a(3), b(3), h(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = coeff(rng);
      b[i] = coeff(rng);
      h[i] = coeff(rng);
    }
    const auto th = tau(m, a, h);
    const auto ha = tau(m, h, a);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(th[k], -ha[k]);
    std::vector<long long> ab(3);
    for (int i = 0; i < 3; ++i) ab[i] = a[i] + b[i];
    const auto tb = tau(m, b, h);
    const auto tab = tau(m, ab, h);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(tab[k], th[k] + tb[k]);
  }
  EXPECT_TRUE(tau(m, {1, 0, 0}, {1, 0, 0}) == (std::vector<long long>{0, 0, 0}));
}

TEST(IotaF, MatchesDeterminantOracle) {
  const auto m = torus3();
  const GroupElem b1 = parse_elem(m.pi1, "b1");
  const GroupElem b2 = parse_elem(m.pi1, "b2");
  const WrapClass beta = parse_class(m.pi1, "<b3>");
  EXPECT_EQ(iota_f(m, b1, b2, {}, beta), 1);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  for (int it = 0; it < kPropertyIterations; ++it) {
    GroupElem a{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    GroupElem h{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    GroupElem c{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    WrapClass cls{{c}};
    EXPECT_EQ(iota_f(m, a, h, {}, cls), det3(a.vec, h.vec, c.vec));
  }
}

TEST(IotaF, BilinearInHAndZeroOnNullHomologousClasses) {
  const auto m = torus3();
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> coeff(-3, 3);
  for (int it = 0; it < kPropertyIterations; ++it) {
    GroupElem a{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    GroupElem h1{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    GroupElem h2{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    GroupElem c{{coeff(rng), coeff(rng), coeff(rng)}, {}, {}};
    WrapClass cls{{c}};
    EXPECT_EQ(iota_f(m, a, mul(m.pi1, h1, h2), {}, cls),
              iota_f(m, a, h1, {}, cls) + iota_f(m, a, h2, {}, cls));
  }
  const GroupElem b3 = parse_elem(m.pi1, "b3");
  const WrapClass null_hom = parse_class(m.pi1, "<b3, b3^-1>");
  const GroupElem b1 = parse_elem(m.pi1, "b1");
  EXPECT_EQ(iota_f(m, b1, b3, {}, null_hom), 0);
}

TEST(IotaF, RejectsNonAbelianModels) {
  const auto m = free_two();
  const GroupElem x = parse_elem(m.pi1, "x");
  EXPECT_THROW(iota_f(m, x, x, {}, WrapClass{{x}}), unsupported_model);
  EXPECT_THROW(lambda_alpha(m, parse_class(m.pi1, "<x>")), unsupported_model);
}

TEST(IotaAlpha, PerOccurrenceValues) {
  const auto t3 = torus3();
  const WrapClass full = parse_class(t3.pi1, "<b1, b2, b3>");
  EXPECT_EQ(iota_alpha_a(t3, full, 0), 1);
  EXPECT_EQ(iota_alpha_a(t3, full, 1), 1);
  EXPECT_EQ(iota_alpha_a(t3, full, 2), 1);
  EXPECT_EQ(lambda_alpha(t3, full), 1);

  const WrapClass split = parse_class(t3.pi1, "<1, b2>");
  EXPECT_EQ(iota_alpha_a(t3, split, 0), 0);
  EXPECT_EQ(iota_alpha_a(t3, split, 1), 0);
  EXPECT_EQ(lambda_alpha(t3, split), 0);

  const auto sc = sphere_circle();
  const WrapClass triple = parse_class(sc.pi1, "<a, a, a^-1>");
  EXPECT_EQ(iota_alpha_a(sc, triple, 0), 0);
  EXPECT_EQ(iota_alpha_a(sc, triple, 1), 0);
  EXPECT_EQ(iota_alpha_a(sc, triple, 2), 2);
  EXPECT_EQ(lambda_alpha(sc, triple), 2);
}

TEST(IotaAlpha, TrivialComponentContributions) {
  const auto t3 = torus3();
  const WrapClass full = parse_class(t3.pi1, "<b1, b2, b3>");
  const WrapClass with_unknot = u_act(t3.pi1, full);
  EXPECT_EQ(iota_alpha_a(t3, with_unknot, 0), 0);
  EXPECT_EQ(lambda_alpha(t3, with_unknot), 1);

  // A sphere generator can pair nontrivially against the enlarged rest, so
  // the trivial component only ever refines lambda.
  const auto sc = sphere_circle();
  const WrapClass triple = parse_class(sc.pi1, "<a, a, a^-1>");
  const WrapClass augmented = u_act(sc.pi1, triple);
  EXPECT_EQ(iota_alpha_a(sc, augmented, 0), 1);
  EXPECT_EQ(lambda_alpha(sc, augmented), 1);
  EXPECT_EQ(lambda_alpha(sc, triple) % lambda_alpha(sc, augmented), 0);
}

TEST(LinkingModule, SummandsAndAnnihilators) {
  const auto t3 = torus3();
  auto s = linking_module(t3, parse_class(t3.pi1, "<b1, b2, b3>"));
  EXPECT_EQ(s.lambda, 1);
  EXPECT_EQ(s.annihilator.str(), "q^2 - 1");
  EXPECT_FALSE(s.free());

  s = linking_module(t3, parse_class(t3.pi1, "<1, b2>"));
  EXPECT_EQ(s.lambda, 0);
  EXPECT_TRUE(s.free());

  const auto sc = sphere_circle();
  s = linking_module(sc, parse_class(sc.pi1, "<a, a, a^-1>"));
  EXPECT_EQ(s.lambda, 2);
  EXPECT_EQ(s.annihilator.str(), "q^4 - 1");

  const auto l5 = lens(5);
  for (const char* lit : {"<t>", "<t^2, t>", "<t, t, t^3>"}) {
    s = linking_module(l5, parse_class(l5.pi1, lit));
    EXPECT_EQ(s.lambda, 0) << lit;
    EXPECT_TRUE(s.free()) << lit;
  }
}

TEST(LinkingNumber, ReducesPathIndexModLambda) {
  const auto t3 = torus3();
  const WrapClass full = parse_class(t3.pi1, "<b1, b2, b3>");
  SymbolPath empty;
  empty.start = empty.end = render_class(t3.pi1, full);
  auto v = linking_number(t3, full, empty);
  EXPECT_EQ(v.residue, 0);
  EXPECT_EQ(v.modulus, 1);

  SymbolPath three;
  three.end = render_class(t3.pi1, full);
  three.events = {{1, "<A>"}, {1, "<B>"}, {1, "<C>"}};
  EXPECT_EQ(linking_number(t3, full, three).residue, 0);

  const auto sc = sphere_circle();
  const WrapClass triple = parse_class(sc.pi1, "<a, a, a^-1>");
  SymbolPath gamma;
  gamma.end = render_class(sc.pi1, triple);
  gamma.events = {{1, "<A>"}, {1, "<B>"}, {1, "<C>"}};
  v = linking_number(sc, triple, gamma);
  EXPECT_EQ(v.residue, 1);
  EXPECT_EQ(v.modulus, 2);

  gamma.end = "<a>";
  EXPECT_THROW(linking_number(sc, triple, gamma), std::invalid_argument);
}

TEST(LinkingNumber, FreeSummandKeepsIntegers) {
  const auto t3 = torus3();
  const WrapClass split = parse_class(t3.pi1, "<1, b2>");
  SymbolPath gamma;
  gamma.end = render_class(t3.pi1, split);
  gamma.events = {{1, "<A>"}, {-1, "<B>"}, {1, "<C>"}, {1, "<D>"}};
  const auto v = linking_number(t3, split, gamma);
  EXPECT_EQ(v.residue, 2);
  EXPECT_EQ(v.modulus, 0);
}

TEST(Verdicts, MatchTheCatalogTable) {
  struct Row {
    ManifoldData m;
    Freeness h;
    Freeness c;
  };
  ManifoldData s3;
  s3.name = "s3";
  s3.pi1 = GroupModel::free_abelian(0);
  s3.flags.pi2_zero = true;
  s3.flags.atoroidal = true;
  s3.flags.cyclic_pi1 = true;

  const std::vector<Row> rows = {
      {s3, Freeness::Free, Freeness::Free},
      {solid_torus(), Freeness::Free, Freeness::Free},
      {lens(7), Freeness::Free, Freeness::Free},
      {torus3(), Freeness::Torsion, Freeness::Undecided},
      {sphere_circle(), Freeness::Torsion, Freeness::Undecided},
      {free_two(), Freeness::Torsion, Freeness::Free},
  };
  for (const auto& row : rows) {
    validate_manifold(row.m);
    const auto v = freeness_verdict(row.m);
    EXPECT_EQ(v.h_verdict, row.h) << row.m.name;
    EXPECT_EQ(v.c_verdict, row.c) << row.m.name;
    EXPECT_FALSE(v.h_clause.empty());
    EXPECT_EQ(v.assertions_used.size(), 2u);
  }

  EXPECT_EQ(freeness_verdict(free_two()).h_clause, "non-abelian fundamental group");
  EXPECT_EQ(freeness_verdict(torus3()).h_clause, "abelian but 2b1 != b1(boundary)");
  EXPECT_EQ(freeness_verdict(solid_torus()).h_clause, "abelian, 2b1=b1(boundary)");
}

}  // namespace
}  // namespace hskein
