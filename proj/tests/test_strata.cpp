#include <gtest/gtest.h>

#include "koszul/field.hpp"
#include "koszul/strata.hpp"

using namespace koszul;

TEST(Strata, EvenCaseExample) {
  auto s = stratum_invariants(2, 2, StratumCase::even);
  EXPECT_EQ(s.g, 10);
  EXPECT_EQ(s.v_type, (std::array<int, 3>{1, 3, 3}));
  EXPECT_EQ(s.e_type, std::make_pair(2, 3));
  EXPECT_EQ(s.a + s.b, 5);
}

TEST(Strata, OddCaseExample) {
  auto s = stratum_invariants(3, 2, StratumCase::odd);
  EXPECT_EQ(s.g, 12);
  EXPECT_EQ(s.v_type, (std::array<int, 3>{2, 3, 4}));
  EXPECT_EQ(s.e_type, std::make_pair(4, 3));
  EXPECT_EQ(s.a + s.b, 7);
}

TEST(Strata, GenusExclusionOnlyAtTheSmallestStratum) {
  int exclusions = 0;
  for (int g_h = 2; g_h <= 6; ++g_h)
    for (int i = 0; i <= 8; ++i)
      for (auto kind : {StratumCase::even, StratumCase::odd}) {
        const auto adm = stratum_admissibility(g_h, i, kind);
        if (adm.genus_exclusion) {
          ++exclusions;
          EXPECT_EQ(g_h, 2);
          EXPECT_EQ(i, 1);
          EXPECT_EQ(kind, StratumCase::even);
        }
      }
  EXPECT_EQ(exclusions, 1);
  try {
    stratum_invariants(2, 1, StratumCase::even);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("g ≥ 9"), std::string::npos);
  }
}

TEST(Strata, BoundViolationsNameTheInequality) {
  EXPECT_NE(stratum_admissibility(4, 1, StratumCase::even).failing.find("i ≥ g_h/2"), std::string::npos);
  EXPECT_NE(stratum_admissibility(3, 1, StratumCase::odd).failing.find("i ≥ (g_h+1)/2"), std::string::npos);
  EXPECT_NE(stratum_admissibility(1, 3, StratumCase::even).failing.find("g_h ≥ 2"), std::string::npos);
  EXPECT_TRUE(stratum_admissibility(3, 2, StratumCase::odd).admissible);
  EXPECT_FALSE(stratum_admissibility(3, 1, StratumCase::even).admissible);
}

TEST(Strata, IdentitiesOnEveryAdmissibleRow) {
  for (int g_h = 2; g_h <= 8; ++g_h)
    for (int i = 0; i <= 10; ++i)
      for (auto kind : {StratumCase::even, StratumCase::odd}) {
        if (!stratum_admissibility(g_h, i, kind).admissible) continue;
        auto s = stratum_invariants(g_h, i, kind);
        EXPECT_EQ(s.a + s.b, s.g - 5);
        EXPECT_EQ(s.v_type[0] + s.v_type[1] + s.v_type[2], s.g - 3);
        EXPECT_GE(std::min(s.a, s.b), 1);
        EXPECT_EQ(projective_normality_verdict(s.a, s.b, true), Verdict::pass);
      }
}

TEST(Quadraticity, Criterion) {
  EXPECT_EQ(quadraticity_verdict(2, 3), Verdict::pass);
  EXPECT_EQ(quadraticity_verdict(1, 4), Verdict::fail);
  EXPECT_EQ(quadraticity_verdict(2, 2), Verdict::pass);
  EXPECT_THROW(quadraticity_verdict(-2, 5), InputError);
  for (int a = -1; a <= 6; ++a)
    for (int b = -1; b <= 6; ++b) EXPECT_EQ(quadraticity_verdict(a, b), quadraticity_verdict(b, a));
}

TEST(ProjectiveNormality, Criterion) {
  EXPECT_EQ(projective_normality_verdict(1, 1, true), Verdict::pass);
  EXPECT_EQ(projective_normality_verdict(0, 2, true), Verdict::fail);
  EXPECT_EQ(projective_normality_verdict(3, 3, false), Verdict::not_applicable);
}

TEST(Tetragonal, Examples) {
  auto ok = tetragonal_constraints({12, 1, 4});
  EXPECT_TRUE(ok.all_hold());
  EXPECT_EQ(ok.classification, "tetragonal");
  auto high = tetragonal_constraints({12, 1, 5});
  EXPECT_FALSE(high.all_hold());
  EXPECT_EQ(high.items[1].verdict, Verdict::fail);
  auto two = tetragonal_constraints({9, 2, 6});
  EXPECT_TRUE(two.all_hold());
  EXPECT_FALSE(two.classification.has_value());
  auto trig = tetragonal_constraints({12, 1, 3});
  EXPECT_NE(trig.classification->find("excluded"), std::string::npos);
  EXPECT_EQ(tetragonal_constraints({9, 3, 9}).items[2].verdict, Verdict::fail);
  EXPECT_THROW(tetragonal_constraints({-1, 1, 4}), InputError);
}

TEST(DoubleCover, Examples) {
  auto a = double_cover_bookkeeping(2, 7);
  EXPECT_EQ(a.g, 10);
  EXPECT_EQ(a.degD, 7);
  EXPECT_EQ(a.e_type, std::make_pair(2, 3));
  EXPECT_EQ(a.stratum_case, StratumCase::even);
  EXPECT_EQ(a.stratum_i, 2);
  EXPECT_EQ(a.cross_check, Verdict::pass);

  auto b = double_cover_bookkeeping(2, 5);
  EXPECT_EQ(b.g, 8);
  EXPECT_TRUE(b.below_genus_range);
  EXPECT_EQ(b.cross_check, Verdict::not_applicable);

  auto c = double_cover_bookkeeping(3, 7);
  EXPECT_EQ(c.g, 12);
  EXPECT_EQ(c.stratum_case, StratumCase::odd);
  EXPECT_EQ(c.cross_check, Verdict::pass);

  auto low = double_cover_bookkeeping(3, 6);
  EXPECT_FALSE(low.splitting_asserted);
  EXPECT_FALSE(low.e_type.has_value());
  EXPECT_THROW(double_cover_bookkeeping(1, 7), InputError);
}

TEST(DoubleCover, AgreesWithStratumRows) {
  for (int g_h = 2; g_h <= 4; ++g_h)
    for (int degM = 2 * g_h + 1; degM <= 2 * g_h + 12; ++degM) {
      auto r = double_cover_bookkeeping(g_h, degM);
      if (r.below_genus_range) continue;
      EXPECT_EQ(r.cross_check, Verdict::pass) << g_h << ' ' << degM << ' ' << r.detail;
      EXPECT_EQ(r.pushforward_type.second - r.pushforward_type.first,
                r.stratum_case == StratumCase::even ? 0 : 1);
    }
  // Every admissible stratum row is reached by some deg M.
  for (int g_h = 2; g_h <= 4; ++g_h)
    for (int i = 1; i <= 6; ++i)
      for (auto kind : {StratumCase::even, StratumCase::odd}) {
        if (!stratum_admissibility(g_h, i, kind).admissible) continue;
        const int degM = g_h + 2 * i + (kind == StratumCase::even ? 1 : 0);
        auto r = double_cover_bookkeeping(g_h, degM);
        EXPECT_EQ(r.stratum_i, i);
        EXPECT_EQ(r.stratum_case, kind);
      }
}
