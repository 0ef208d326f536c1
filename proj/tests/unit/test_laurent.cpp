#include <gtest/gtest.h>

#include <random>

#include "lorenz/error.hpp"
#include "lorenz/laurent_poly.hpp"

using namespace lorenz;

namespace {

LaurentPoly random_poly(std::mt19937& rng)
{
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::power(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 7) - 3);
  return p;
}

}  // namespace

TEST(Laurent, NoZeroTermsStored)
{
  const auto p = LaurentPoly::power(2) - LaurentPoly::power(2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(LaurentPoly(0).is_zero());
  EXPECT_TRUE(LaurentPoly::monomial(3, 0).is_zero());
}

TEST(Laurent, RingLaws)
{
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly{});
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Laurent, DivisionRecoversProducts)
{
  std::mt19937 rng(11);
  const LaurentPoly d = LaurentPoly(1) - LaurentPoly::power(2);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_poly(rng);
    EXPECT_EQ(divide_exact(a * d, d), a);
    const auto [q, r] = divide(a + LaurentPoly(1), d);
    EXPECT_EQ(q * d + r, a + LaurentPoly(1));
  }
  EXPECT_THROW(divide_exact(LaurentPoly(1) + LaurentPoly::power(1), d), Error);
  EXPECT_THROW(divide(LaurentPoly(1), LaurentPoly{}), Error);
}

TEST(Laurent, OverflowIsReported)
{
  const auto big = LaurentPoly(INT64_MAX);
  EXPECT_THROW(big + LaurentPoly(1), Error);
  EXPECT_THROW(big * LaurentPoly(2), Error);
}

TEST(Laurent, SerializationAndRescale)
{
  const auto p = LaurentPoly::power(1) + LaurentPoly::power(3) - LaurentPoly::power(4);
  EXPECT_EQ(p.pairs(), (std::vector<std::pair<int, LaurentPoly::Coeff>>{{4, 1}, {12, 1}, {16, -1}}));
  EXPECT_EQ(LaurentPoly::from_pairs(p.pairs()), p);
  EXPECT_EQ(p.to_string(), "t + t^3 - t^4");
  EXPECT_EQ(p.rescale_exponents(-1, 1), LaurentPoly::power(-1) + LaurentPoly::power(-3) - LaurentPoly::power(-4));
  EXPECT_EQ(LaurentPoly::monomial(2).to_string(), "t^(1/2)");
  EXPECT_EQ(LaurentPoly{}.to_string(), "0");
  EXPECT_THROW(LaurentPoly::monomial(1).rescale_exponents(1, 2), Error);
}
