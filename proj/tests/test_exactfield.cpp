#include "support.hpp"

#include <gtest/gtest.h>

using namespace hftest;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 7).str(), "0/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
}

// Phi_r(x) * prod_{d | r, d < r} Phi_d(x) = x^r - 1, multiplied out independently.
TEST(Cyclotomic, ProductOverDivisorsIsXrMinusOne) {
  for (int r = 1; r <= 30; ++r) {
    IntPoly prod{1};
    for (int d = 1; d <= r; ++d) {
      if (r % d) continue;
      auto p = cyclotomic_polynomial(d);
      IntPoly next(prod.size() + p.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += prod[i] * p[j];
      prod = next;
    }
    IntPoly want(static_cast<std::size_t>(r) + 1, 0);
    want[0] = -1;
    want.back() = 1;
    EXPECT_EQ(prod, want) << "r = " << r;
  }
}

TEST(Cyclotomic, Arithmetic) {
  CyclotomicField k3(3);
  auto z = k3.zeta();
  EXPECT_TRUE((z * z * z).is_one());
  EXPECT_TRUE((z * z + z + k3.one()).is_zero());
  EXPECT_FALSE((z - k3.one()).is_zero());
  EXPECT_EQ(z.str(), "[0/1,1/1]");

  CyclotomicField k4(4);
  auto w = k4.zeta();
  EXPECT_EQ(k4.one() / w, -w);
  EXPECT_TRUE((w * -w).is_one());
  EXPECT_THROW(k4.zero().inverse(), std::domain_error);
  EXPECT_THROW((void)(z + w), std::invalid_argument);
}

TEST(Cyclotomic, Primitivity) {
  for (int r = 1; r <= 24; ++r) {
    CyclotomicField k(r);
    for (int e = 1; e < r; ++e) EXPECT_FALSE(k.zeta_power(e).is_one()) << r << " " << e;
    EXPECT_TRUE(k.zeta_power(r).is_one());
    EXPECT_EQ(k.zeta_power(-1) * k.zeta(), k.one());
  }
}

namespace {

template <class F, class Gen>
void field_axioms(const F& field, Gen gen, int cases) {
  for (int c = 0; c < cases; ++c) {
    auto a = gen(), b = gen(), d = gen();
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a + field.zero(), a);
    ASSERT_EQ(a * field.one(), a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(-(-a), a);
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
      ASSERT_EQ((b / a) * a, b);
    }
    // equal values have identical representations
    auto a2 = (a * d + b * d) - b * d;
    ASSERT_EQ(a2.str(), (a * d).str());
  }
}

}  // namespace

TEST(FieldProperties, RationalAxioms) {
  std::mt19937_64 rng(11);
  field_axioms(RationalField{}, [&] { return rand_rational(rng, 50); }, 2000);
}

TEST(FieldProperties, CyclotomicAxioms) {
  std::mt19937_64 rng(12);
  for (int r : {3, 4, 5, 7, 8, 9, 12}) {
    CyclotomicField k(r);
    field_axioms(k, [&] { return rand_cyclotomic(rng, k); }, 1000);
  }
}
