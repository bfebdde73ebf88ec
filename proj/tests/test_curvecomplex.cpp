#include <gtest/gtest.h>

#include "koszul/curvecomplex.hpp"
#include "koszul/points.hpp"

using namespace koszul;

namespace {

const PrimeField kP(32003);
const RationalField kQ;

BinaryForm<PrimeField> bf(std::initializer_list<long> c) {
  BinaryForm<PrimeField> out;
  out.degree = static_cast<int>(c.size()) - 1;
  for (long x : c) out.coeffs.push_back(kP.from_int(x));
  return out;
}

std::vector<std::pair<int, int>> all_degree_pairs(int d_max) {
  std::vector<std::pair<int, int>> out;
  for (int d = 2; d <= d_max; ++d)
    for (int e = 1; e <= d - 1; ++e) out.emplace_back(d, e);
  return out;
}

// Forms of degree dn vanishing at the points (root : 1), by evaluation.
template <class F>
std::size_t vanishing_dim(const F& f, const std::vector<long>& roots, int degree) {
  Matrix<F> ev(f, roots.size(), static_cast<std::size_t>(degree) + 1);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto x = f.one();
    for (int a = degree; a >= 0; --a) {
      ev(k, static_cast<std::size_t>(a)) = x;  // s^{degree−a} t^a at (root, 1)
      x = f.mul(x, f.from_int(roots[k]));
    }
  }
  return static_cast<std::size_t>(degree) + 1 - rank(ev);
}

std::vector<long long> h0_row(const HomologyTable& h) {
  std::vector<long long> out;
  for (int n = 0; n <= h.n_max; ++n) out.push_back(h.at(0, n).value_or(-1));
  return out;
}

}  // namespace

TEST(TwistedModel, DimensionCounts) {
  auto m = build_twisted_model(kP, 3, 2, kDefaultSeed, 6);
  EXPECT_EQ(m.ring.table->dim(1), 4u);
  EXPECT_EQ(m.dim_u(), 2u);
  EXPECT_EQ(m.dim_v(), 2u);
  EXPECT_EQ(m.f0.degree, 2);
  EXPECT_EQ(m.f1.degree, 2);
  EXPECT_FALSE(kP.is_zero(binary_resultant(kP, m.f0, m.f1)));
  EXPECT_EQ(m.u_basis().size(), 2u);

  auto line = build_twisted_model(kP, 2, 1, kDefaultSeed, 4);
  EXPECT_EQ(line.dim_u(), 2u);
  EXPECT_EQ(line.f1.degree, 1);
  EXPECT_EQ(line.p0.coeffs, line.f0.coeffs);
  EXPECT_EQ(line.p1.coeffs, line.f1.coeffs);
}

TEST(TwistedModel, PencilIsBasePointFreeForEveryDegreePair) {
  for (auto [d, e] : all_degree_pairs(6)) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto m = build_twisted_model(kP, d, e, seed, 4);
      EXPECT_EQ(m.p0.degree, d - 1);
      EXPECT_EQ(binary_gcd_degree(kP, {m.p0, m.p1}), 0) << d << ' ' << e;
      EXPECT_EQ(m.roots.size(), static_cast<std::size_t>(e));
    }
  }
}

TEST(TwistedModel, DeterministicInSeed) {
  auto a = build_twisted_model(kQ, 4, 2, 77, 4);
  auto b = build_twisted_model(kQ, 4, 2, 77, 4);
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_EQ(a.f1.coeffs, b.f1.coeffs);
  auto p = build_twisted_model(kP, 4, 2, 77, 4);
  EXPECT_EQ(a.roots, p.roots);
}

TEST(TwistedModel, AdversarialSourceAbortsWithDiagnostic) {
  auto m = build_twisted_model(kP, 3, 2, kDefaultSeed, 4);
  const auto f0 = m.f0;
  const FormSource<PrimeField> copy_f0 = [f0](CounterRng&, int) { return f0; };
  try {
    build_twisted_model(kP, 3, 2, kDefaultSeed, 4, copy_f0, 8);
    FAIL() << "expected an abort";
  } catch (const InputError& err) {
    EXPECT_NE(std::string(err.what()).find("resultant"), std::string::npos);
  }
}

TEST(TwistedModel, RetriesPastDegenerateDraws) {
  auto m = build_twisted_model(kP, 3, 2, kDefaultSeed, 4);
  const auto f0 = m.f0;
  int calls = 0;
  const FormSource<PrimeField> flaky = [&](CounterRng& rng, int degree) {
    if (++calls <= 3) return f0;
    BinaryForm<PrimeField> out{degree, {}};
    for (int a = 0; a <= degree; ++a) out.coeffs.push_back(kP.from_int(rng.uniform(-9, 9)));
    return out;
  };
  auto good = build_twisted_model(kP, 3, 2, kDefaultSeed, 4, flaky, 16);
  EXPECT_GT(calls, 3);
  EXPECT_FALSE(kP.is_zero(binary_resultant(kP, good.p0, good.p1)));
}

TEST(TwistedModel, NeverEmitsZeroResultantOverSmallField) {
  const PrimeField small(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    try {
      auto m = build_twisted_model(small, 3, 2, seed, 4);
      EXPECT_FALSE(small.is_zero(binary_resultant(small, m.p0, m.p1)));
    } catch (const InputError&) {
      // aborting is acceptable; emitting a degenerate pencil is not
    }
  }
}

TEST(TwistedModel, RejectsBadInput) {
  EXPECT_THROW(build_twisted_model(kP, 3, 3, 1, 4), InputError);
  EXPECT_THROW(build_twisted_model(kP, 3, 0, 1, 4), InputError);
  EXPECT_THROW(build_twisted_model(kP, 3, 2, 1, 3), InputError);
  EXPECT_THROW(twisted_model_from_forms(kP, 3, {2, 2}, bf({1, 0, 1}), 4), InputError);
  EXPECT_THROW(twisted_model_from_forms(kP, 3, {1, 2}, bf({1, 0}), 4), InputError);
  auto m = build_twisted_model(kP, 3, 2, 1, 4);
  EXPECT_THROW(rebase_u(m, Matrix<PrimeField>(kP, 2, 2)), InputError);
}

TEST(TwistedModel, ExactTriplesHoldDegreewise) {
  for (auto [d, e] : all_degree_pairs(5)) {
    auto m = build_twisted_model(kQ, d, e, 3, 4);
    for (const auto& item : check_exact_triples(m, 6)) EXPECT_EQ(item.verdict, Verdict::pass) << item.name << ' ' << d << e;
  }
}

TEST(KComplex, DifferentialSquaresToZero) {
  for (auto [d, e] : all_degree_pairs(5)) {
    auto m = build_twisted_model(kP, d, e, 11, 8);
    auto k = build_k_complex(m, 5, 8);
    EXPECT_TRUE(differential_squares_to_zero(k)) << d << ' ' << e;
    EXPECT_EQ(k.coef_dims[0], 1u);
    EXPECT_EQ(k.coef_dims[1], m.dim_u());
  }
  auto q = build_k_complex(build_twisted_model(kQ, 3, 2, 11, 6), 4, 6);
  EXPECT_TRUE(differential_squares_to_zero(q));
  EXPECT_EQ(q.coef_dims, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
}

TEST(KComplex, FirstDifferentialImageIsTheDivisorIdeal) {
  for (auto [d, e] : all_degree_pairs(4)) {
    auto m = build_twisted_model(kP, d, e, 5, 6);
    auto k = build_k_complex(m, 1, 6);
    for (int n = 1; n <= 6; ++n) {
      EXPECT_EQ(rank(k.diff(1, n)), vanishing_dim(kP, m.roots, d * n)) << d << e << n;
    }
    const auto j = divisor_ideal(m, 6);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(rref(k.diff(1, n)), j[static_cast<std::size_t>(n)]);
  }
}

TEST(KHomology, ZerothHomologyIsTheRingOfPoints) {
  auto k32 = build_k_complex(build_twisted_model(kP, 3, 2, kDefaultSeed, 6), 4, 6);
  EXPECT_EQ(h0_row(homology_bigraded(k32, 0, 6)), (std::vector<long long>{1, 2, 2, 2, 2, 2, 2}));
  auto k21 = build_k_complex(build_twisted_model(kP, 2, 1, kDefaultSeed, 6), 4, 6);
  EXPECT_EQ(h0_row(homology_bigraded(k21, 0, 6)), (std::vector<long long>{1, 1, 1, 1, 1, 1, 1}));

  // Oracle: the point ring of the images of the roots on the rational normal curve.
  for (auto [d, e] : all_degree_pairs(4)) {
    auto m = build_twisted_model(kQ, d, e, 9, 5);
    std::vector<std::vector<long>> pts;
    for (long r : m.roots) {
      std::vector<long> p;
      long x = 1;
      std::vector<long> powers;
      for (int a = 0; a <= d; ++a) powers.push_back(a == 0 ? 1 : (x *= r));
      for (int a = 0; a <= d; ++a) p.push_back(powers[static_cast<std::size_t>(d - a)]);
      pts.push_back(p);
    }
    auto ring = model_point_ring(configuration_from_integers(kQ, d, pts), 5);
    auto h = homology_bigraded(build_k_complex(m, 2, 5), 0, 5);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(*h.at(0, n), static_cast<long long>(ring.table->dim(n))) << d << e << n;
  }
}

TEST(KHomology, ClosedFormAgreesCellForCell) {
  for (auto [d, e] : all_degree_pairs(5)) {
    auto m = build_twisted_model(kP, d, e, 21, 8);
    auto k = build_k_complex(m, 5, 8);
    auto direct = homology_bigraded(k, 5, 8);
    auto closed = homology_closed_form(m, 5, 8);
    int compared = 0;
    for (int p = 0; p <= 5; ++p)
      for (int n = 0; n <= 8; ++n) {
        if (!direct.at(p, n)) continue;
        EXPECT_EQ(*direct.at(p, n), *closed.at(p, n)) << "d=" << d << " e=" << e << " p=" << p << " n=" << n;
        ++compared;
      }
    EXPECT_EQ(compared, 5 * 9);
  }
}

TEST(KHomology, OddHomologySitsOnePastTheDiagonal) {
  // H_{2k+1}(K) lives only in degree 2k+2, of dimension (d−e)(d−2); even homology vanishes.
  for (auto [d, e] : all_degree_pairs(5)) {
    auto k = build_k_complex(build_twisted_model(kP, d, e, 4, 8), 5, 8);
    auto h = homology_bigraded(k, 4, 8);
    for (int p = 1; p <= 4; ++p)
      for (int n = 0; n <= 8; ++n) {
        const long long expected = (p % 2 == 1 && n == p + 1) ? (d - e) * (d - 2) : 0;
        EXPECT_EQ(*h.at(p, n), expected) << d << e << ' ' << p << ' ' << n;
      }
  }
  auto k32 = build_k_complex(build_twisted_model(kP, 3, 2, kDefaultSeed, 6), 4, 6);
  EXPECT_EQ(*homology_bigraded(k32, 1, 6).at(1, 2), 1);
}

TEST(KHomology, TopTermAndWindowAreUnknown) {
  auto k = build_k_complex(build_twisted_model(kP, 3, 2, 1, 6), 3, 5);
  auto h = homology_bigraded(k, 4, 6);
  EXPECT_FALSE(h.at(3, 4).has_value());
  EXPECT_FALSE(h.at(4, 5).has_value());
  EXPECT_FALSE(h.at(1, 6).has_value());
  EXPECT_TRUE(h.at(2, 5).has_value());
}

TEST(KHomology, InvariantUnderChangeOfUBasis) {
  for (auto [d, e] : all_degree_pairs(4)) {
    auto m = build_twisted_model(kQ, d, e, 13, 6);
    Matrix<RationalField> g(kQ, m.dim_u(), m.dim_u());
    for (std::size_t i = 0; i < m.dim_u(); ++i)
      for (std::size_t j = 0; j < m.dim_u(); ++j) g(i, j) = mpq_class(i == j ? 2 : (i < j ? 1 : 0), 1);
    auto r = rebase_u(m, g);
    auto a = build_k_complex(m, 4, 6), b = build_k_complex(r, 4, 6);
    EXPECT_TRUE(differential_squares_to_zero(b));
    auto ha = homology_bigraded(a, 4, 6), hb = homology_bigraded(b, 4, 6);
    EXPECT_EQ(ha.cells, hb.cells) << d << e;
  }
}

TEST(KHomology, FieldIndependent) {
  for (auto [d, e] : all_degree_pairs(4)) {
    auto hp = homology_bigraded(build_k_complex(build_twisted_model(kP, d, e, 8, 6), 4, 6), 4, 6);
    auto hq = homology_bigraded(build_k_complex(build_twisted_model(kQ, d, e, 8, 6), 4, 6), 4, 6);
    EXPECT_EQ(hp.cells, hq.cells) << d << e;
  }
}

TEST(Theorem4, HypothesesHoldForEveryDegreePair) {
  for (auto [d, e] : all_degree_pairs(4)) {
    auto m = build_twisted_model(kP, d, e, kDefaultSeed, 8);
    auto k = build_k_complex(m, 4, 8);
    auto h = check_theorem4_hypotheses(k, divisor_ideal(m, 8));
    EXPECT_EQ(h.h0_matches.verdict, Verdict::pass) << h.h0_matches.detail;
    EXPECT_EQ(h.vanishing.verdict, Verdict::pass) << h.vanishing.detail;
    EXPECT_EQ(h.shape.verdict, Verdict::pass) << h.shape.detail;
    EXPECT_TRUE(h.established());
    EXPECT_FALSE(h.uncovered_cells.empty());
  }
}

TEST(Theorem4, DegenerateDepthsAreHandled) {
  auto m = build_twisted_model(kP, 3, 2, 1, 4);
  std::vector<SubspaceBasis<PrimeField>> zero;
  for (int n = 0; n <= 4; ++n) zero.emplace_back(kP, static_cast<std::size_t>(3 * n + 1));
  auto trivial = check_theorem4_hypotheses(build_k_complex(m, 0, 4), zero);
  EXPECT_TRUE(trivial.established());

  auto one = check_theorem4_hypotheses(build_k_complex(m, 1, 4), divisor_ideal(m, 4));
  EXPECT_EQ(one.h0_matches.verdict, Verdict::pass);
  EXPECT_EQ(one.vanishing.verdict, Verdict::abstain);
  EXPECT_FALSE(one.established());
}

TEST(Theorem4, PencilWithBasePointFailsTheVanishingHypothesis) {
  // f0 = s(s − t), f1 = (s − t)(s + t) share the point (1 : 1).
  auto m = twisted_model_from_forms(kP, 3, {0, 1}, bf({1, 0, -1}), 6);
  EXPECT_TRUE(kP.is_zero(binary_resultant(kP, m.p0, m.p1)));
  auto k = build_k_complex(m, 4, 6);
  EXPECT_TRUE(differential_squares_to_zero(k));
  auto h = check_theorem4_hypotheses(k, divisor_ideal(m, 6));
  EXPECT_EQ(h.vanishing.verdict, Verdict::fail);
  EXPECT_FALSE(h.established());
  auto c = cross_validate_theorem4(k, h, 3);
  EXPECT_EQ(c.label, "hypotheses not established; conclusions computed for information only");
}

TEST(Theorem4, WrongExpectedQuotientFailsFirstHypothesis) {
  auto m = build_twisted_model(kP, 3, 2, 1, 4);
  auto other = build_twisted_model(kP, 3, 2, 2, 4);
  ASSERT_NE(m.roots, other.roots);
  auto h = check_theorem4_hypotheses(build_k_complex(m, 3, 4), divisor_ideal(other, 4));
  EXPECT_EQ(h.h0_matches.verdict, Verdict::fail);
}

TEST(Theorem4, ConclusionsHoldOnSmallInstances) {
  for (auto [d, e] : std::vector<std::pair<int, int>>{{3, 2}, {2, 1}}) {
    auto m = build_twisted_model(kP, d, e, kDefaultSeed, 8);
    auto k = build_k_complex(m, 4, 8);
    auto c = cross_validate_theorem4(k, check_theorem4_hypotheses(k, divisor_ideal(m, 8)), 4);
    EXPECT_TRUE(c.hypotheses_established);
    EXPECT_TRUE(c.ring_koszul.holds());
    EXPECT_TRUE(c.module_linear.holds());
    EXPECT_EQ(c.module_dims[1], static_cast<std::size_t>(e));
    // R/J_D for e points: β_{1,1} = dim J_1 = d + 1 − e.
    EXPECT_EQ(c.module_betti.at(1, 1).value(), static_cast<std::size_t>(d + 1 - e));
  }
}

TEST(Theorem6, TwistedCubicNumerology) {
  auto r = check_theorem6<PrimeField>({0, 3, 0}, nullptr);
  EXPECT_EQ(r.divisor_degree, 2);
  EXPECT_EQ(r.divisor_series_dim, 2);
  for (const auto& item : r.items) EXPECT_NE(item.verdict, Verdict::fail) << item.name << ": " << item.detail;
  EXPECT_TRUE(r.all_pass());

  auto m = build_twisted_model(kP, 3, 2, 1, 4);
  auto with_model = check_theorem6<PrimeField>({0, 3, 0}, &m);
  EXPECT_TRUE(with_model.all_pass());
  auto wrong = build_twisted_model(kP, 3, 1, 1, 4);
  EXPECT_FALSE(check_theorem6<PrimeField>({0, 3, 0}, &wrong).all_pass());
}

TEST(Theorem6, ConicFailsOnlyTheDegreeBounds) {
  auto r = check_theorem6<PrimeField>({0, 2, 0}, nullptr);
  EXPECT_EQ(r.divisor_degree, 1);
  EXPECT_EQ(r.divisor_series_dim, 1);
  std::vector<std::string> failed;
  for (const auto& item : r.items)
    if (item.verdict == Verdict::fail) failed.push_back(item.name);
  EXPECT_EQ(failed, (std::vector<std::string>{"deg L ≥ g + 3", "number of points p = h^1(L) + 1 ≤ d/2"}));
  auto m = build_twisted_model(kP, 2, 1, 1, 4);
  auto with_model = check_theorem6<PrimeField>({0, 2, 0}, &m);
  EXPECT_EQ(with_model.items.back().verdict, Verdict::pass);
}

TEST(Theorem6, NumerologyIsRecomputed) {
  for (int g = 0; g <= 6; ++g)
    for (int degL = g + 3; degL <= 3 * g + 6; ++degL) {
      auto r = check_theorem6<PrimeField>({g, degL, 0}, nullptr);
      EXPECT_EQ(r.divisor_degree, degL - g - 1);
      EXPECT_EQ(r.divisor_series_dim, degL - 2 * g - 1);
    }
  auto special = check_theorem6<PrimeField>({4, 6, 1}, nullptr);
  EXPECT_EQ(special.divisor_degree, 3);
  EXPECT_EQ(special.divisor_series_dim, 1);
}

TEST(Theorem6, GenusZeroConditionsFromClosedForms) {
  for (int degL = 3; degL <= 12; ++degL) {
    auto r = check_theorem6<PrimeField>({0, degL, 0}, nullptr);
    EXPECT_TRUE(r.all_pass()) << degL;
  }
  auto inconsistent = check_theorem6<PrimeField>({0, 5, 1}, nullptr);
  EXPECT_FALSE(inconsistent.all_pass());
}

TEST(Theorem6, PositiveGenusAbstainsOnCohomology) {
  auto r = check_theorem6<PrimeField>({2, 8, 0}, nullptr);
  int abstained = 0;
  for (const auto& item : r.items) abstained += item.verdict == Verdict::abstain;
  EXPECT_EQ(abstained, 10);
  auto m = build_twisted_model(kP, 3, 2, 1, 4);
  EXPECT_THROW(check_theorem6<PrimeField>({1, 3, 0}, &m), InputError);
}
