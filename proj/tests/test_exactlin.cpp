#include <gtest/gtest.h>

#include "koszul/rng.hpp"
#include "koszul/subspace.hpp"

using namespace koszul;

namespace {

template <class F>
Matrix<F> from_ints(const F& f, std::size_t rows, std::size_t cols,
                    std::initializer_list<long> values) {
  std::vector<typename F::Elem> e;
  for (long v : values) e.push_back(f.from_int(v));
  return Matrix<F>(f, rows, cols, std::move(e));
}

template <class F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, CounterRng& rng,
                        int lo = -3, int hi = 3) {
  Matrix<F> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(rng.uniform(lo, hi));
  return m;
}

template <class F>
SubspaceBasis<F> span_of(const F& f, std::size_t n, std::vector<std::vector<long>> rows) {
  Matrix<F> m(f, 0, n);
  for (auto& r : rows) {
    Vec<F> v;
    for (long x : r) v.push_back(f.from_int(x));
    m.append_row(v);
  }
  return rref(m);
}

// Independent intersection oracle: solve a·X = b·Y and map the solutions to a·X.
template <class F>
std::size_t intersection_dim_oracle(const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
  const F& f = a.field();
  const std::size_t n = a.ambient_dim();
  Matrix<F> sys(f, n, a.dim() + b.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t c = 0; c < n; ++c) sys(c, k) = a.basis()(k, c);
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t c = 0; c < n; ++c) sys(c, a.dim() + k) = f.neg(b.basis()(k, c));
  const auto sol = kernel(sys);
  // The map (X, Y) -> a·X is injective on solutions because a has full rank.
  return sol.dim();
}

}  // namespace

TEST(Field, PrimeArithmetic) {
  PrimeField f(32003);
  EXPECT_EQ(f.mul(f.inv(7), 7), 1u);
  EXPECT_EQ(f.from_int(-1), 32002u);
  EXPECT_EQ(f.from_rational(mpq_class(1, 2)), f.inv(2));
  EXPECT_THROW(PrimeField(32004), InputError);
  EXPECT_THROW(f.from_rational(mpq_class(1, 32003)), InputError);
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(FieldSpec::parse("rationals").kind, FieldSpec::Kind::rationals);
  EXPECT_EQ(FieldSpec::parse("prime:65537").p, 65537u);
  EXPECT_EQ(FieldSpec::parse("101").p, 101u);
  EXPECT_THROW(FieldSpec::parse("prime:2"), InputError);
  EXPECT_THROW(FieldSpec::parse("prime:100"), InputError);
  EXPECT_THROW(FieldSpec::parse("reals"), InputError);
  EXPECT_THROW(FieldSpec::prime(5).validate(6), InputError);
  EXPECT_NO_THROW(FieldSpec::prime(7).validate(6));
}

TEST(Field, ParseRational) {
  EXPECT_EQ(parse_rational("-3/6"), mpq_class(-1, 2));
  EXPECT_EQ(parse_rational("+4"), mpq_class(4));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

template <class F>
class ExactLin : public ::testing::Test {
 protected:
  F field() const {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return PrimeField(32003);
    } else {
      return RationalField{};
    }
  }
};

using Fields = ::testing::Types<PrimeField, RationalField>;
TYPED_TEST_SUITE(ExactLin, Fields);

TYPED_TEST(ExactLin, RrefExamples) {
  const auto f = this->field();
  auto a = rref(from_ints(f, 2, 2, {1, 1, 2, 2}));
  EXPECT_EQ(a.dim(), 1u);
  EXPECT_EQ(a.basis(), from_ints(f, 1, 2, {1, 1}));

  auto id = Matrix<TypeParam>::identity(f, 3);
  EXPECT_EQ(rref(id).basis(), id);

  EXPECT_EQ(rref(from_ints(f, 2, 2, {0, 1, 1, 0})).basis(), from_ints(f, 2, 2, {1, 0, 0, 1}));
}

TYPED_TEST(ExactLin, SumExamples) {
  const auto f = this->field();
  auto e1 = span_of(f, 3, {{1, 0, 0}});
  auto e2 = span_of(f, 3, {{0, 1, 0}});
  EXPECT_EQ(subspace_sum(e1, e2), span_of(f, 3, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(subspace_sum(e1, e1), e1);
  auto p = span_of(f, 2, {{1, 1}});
  auto m = span_of(f, 2, {{1, -1}});
  EXPECT_EQ(subspace_sum(p, m), SubspaceBasis<TypeParam>::whole(f, 2));
  EXPECT_THROW(subspace_sum(e1, p), std::invalid_argument);
}

TYPED_TEST(ExactLin, IntersectExamples) {
  const auto f = this->field();
  auto a = span_of(f, 3, {{1, 0, 0}, {0, 1, 0}});
  auto b = span_of(f, 3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(subspace_intersect(a, b), span_of(f, 3, {{0, 1, 0}}));
  SubspaceBasis<TypeParam> zero(f, 3);
  EXPECT_EQ(subspace_intersect(a, zero).dim(), 0u);
}

TYPED_TEST(ExactLin, RandomIntersectionAgainstOracle) {
  const auto f = this->field();
  CounterRng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = rref(random_matrix(f, 3, 6, rng));
    auto b = rref(random_matrix(f, 4, 6, rng));
    auto cap = subspace_intersect(a, b);
    auto cup = subspace_sum(a, b);
    EXPECT_EQ(cap.dim(), intersection_dim_oracle(a, b));
    EXPECT_EQ(a.dim() + b.dim(), cup.dim() + cap.dim());
    EXPECT_TRUE(a.contains(cap));
    EXPECT_TRUE(b.contains(cap));
    if (a.dim() == 3 && b.dim() == 4) EXPECT_GE(cap.dim(), 1u);
  }
}

TYPED_TEST(ExactLin, KernelExamples) {
  const auto f = this->field();
  EXPECT_EQ(kernel(from_ints(f, 1, 2, {1, 1})), span_of(f, 2, {{1, -1}}));
  EXPECT_EQ(kernel(Matrix<TypeParam>::identity(f, 3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix<TypeParam>(f, 2, 3)), SubspaceBasis<TypeParam>::whole(f, 3));
}

TYPED_TEST(ExactLin, KernelProperties) {
  const auto f = this->field();
  CounterRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 2 + trial % 7;
    auto m = random_matrix(f, r, c, rng, -1, 1);
    auto k = kernel(m);
    EXPECT_EQ(k.dim(), c - rank(m));
    for (std::size_t i = 0; i < k.dim(); ++i) {
      auto prod = multiply(m, Matrix<TypeParam>(f, 1, c, Vec<TypeParam>(k.vector(i).begin(),
                                                                         k.vector(i).end()))
                                  .transpose());
      EXPECT_TRUE(prod.is_zero());
    }
    auto lk = left_kernel_rows(m);
    EXPECT_EQ(lk.rows(), r - rank(m));
    EXPECT_TRUE(multiply(lk, m).is_zero());
  }
}

TYPED_TEST(ExactLin, RrefIdempotentAndCanonical) {
  const auto f = this->field();
  CounterRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(f, 4, 7, rng);
    auto s = rref(m);
    EXPECT_EQ(rref(s.basis()), s);
    // A different generating set of the same space: random combinations plus redundancy.
    auto mix = random_matrix(f, 6, 4, rng);
    auto other = multiply(mix, m);
    auto t = rref(other);
    if (t.dim() == s.dim()) EXPECT_EQ(t, s);
    EXPECT_TRUE(s.contains(t));
  }
}

TYPED_TEST(ExactLin, AnnihilatorAndQuotient) {
  const auto f = this->field();
  auto s = span_of(f, 4, {{1, 1, 0, 0}, {0, 0, 1, 2}});
  auto ann = annihilator(s);
  EXPECT_EQ(ann.dim(), 2u);
  EXPECT_EQ(annihilator(ann), s);
  EXPECT_EQ(quotient_dim(SubspaceBasis<TypeParam>::whole(f, 4), s), 2u);
  EXPECT_THROW(quotient_dim(s, SubspaceBasis<TypeParam>::whole(f, 4)), std::invalid_argument);
}

TYPED_TEST(ExactLin, Determinant) {
  const auto f = this->field();
  EXPECT_TRUE(f.equal(determinant(from_ints(f, 2, 2, {1, 2, 3, 4})), f.from_int(-2)));
  EXPECT_TRUE(f.is_zero(determinant(from_ints(f, 2, 2, {1, 2, 2, 4}))));
}

TEST(ExactLinFields, RankAgreesAcrossFields) {
  CounterRng rng(3);
  PrimeField p1(32003), p2(65537);
  RationalField q;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 3 + trial % 4, c = 4 + trial % 5;
    std::vector<long> entries;
    for (std::size_t k = 0; k < r * c; ++k) entries.push_back(rng.uniform(-4, 4));
    // Force a dependency half the time.
    if (trial % 2 == 0)
      for (std::size_t col = 0; col < c; ++col) entries[col] = entries[c + col] + entries[2 * c + col];
    auto build = [&](const auto& f) {
      using Fd = std::decay_t<decltype(f)>;
      Matrix<Fd> m(f, r, c);
      for (std::size_t k = 0; k < r * c; ++k) m(k / c, k % c) = f.from_int(entries[k]);
      return rank(m);
    };
    const auto rq = build(q);
    EXPECT_EQ(build(p1), rq);
    EXPECT_EQ(build(p2), rq);
  }
}
