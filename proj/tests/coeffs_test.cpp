// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sl2tl/coeffs.hpp>
#include <sl2tl/expr.hpp>

#include "support.hpp"

namespace sl2tl {
namespace {

LaurentInt random_laurent(std::mt19937_64& gen) {
  LaurentInt r;
  const int terms = testing::uniform(gen, 0, 5);
  for (int t = 0; t < terms; ++t) r.add_term(testing::uniform(gen, -6, 6), testing::uniform(gen, -9, 9));
  return r;
}

TEST(Laurent, LoopSquared) {
  EXPECT_EQ(LaurentInt::loop() * LaurentInt::loop(), (LaurentInt{{2, 1}, {0, 2}, {-2, 1}}));
}

TEST(Laurent, AdditiveIdentity) {
  const LaurentInt x{{3, 2}, {-1, -5}};
  EXPECT_EQ(x + LaurentInt{}, x);
}

TEST(Laurent, DifferenceOfSquares) {
  const LaurentInt qm1{{1, 1}, {0, -1}};
  const LaurentInt qp1{{1, 1}, {0, 1}};
  EXPECT_EQ(qm1 * qp1, (LaurentInt{{2, 1}, {0, -1}}));
}

TEST(Laurent, ZeroTermsAreDropped) {
  LaurentInt x{{1, 1}};
  x -= LaurentInt{{1, 1}};
  EXPECT_TRUE(x.is_zero());
  EXPECT_TRUE(x.terms().empty());
  EXPECT_EQ(x, LaurentInt{});
}

TEST(Laurent, NegationIsAdditiveInverse) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentInt a = random_laurent(gen);
    EXPECT_TRUE((a + -a).is_zero());
  }
}

TEST(Laurent, CoefficientsGrowPastMachineWords) {
  LaurentInt x{{0, 1}, {1, 1}};
  LaurentInt p = 1;
  for (int t = 0; t < 100; ++t) p *= x;
  EXPECT_EQ(p.coeff(50), binomial(100, 50));
  EXPECT_EQ(p.coeff(50).str(), "100891344545564193334812497256");
}

TEST(Specialize, LoopValues) {
  EXPECT_EQ(specialize(LaurentInt::loop(), 1), -2);
  EXPECT_EQ(specialize(LaurentInt::loop(), -1), 2);
  EXPECT_EQ(specialize(LaurentInt{}, 1), 0);
}

TEST(Specialize, RejectsOtherValues) { EXPECT_THROW(specialize(LaurentInt::loop(), 2), std::invalid_argument); }

TEST(Specialize, IsRingHomomorphism) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentInt a = random_laurent(gen);
    const LaurentInt b = random_laurent(gen);
    for (int q0 : {1, -1}) {
      EXPECT_EQ(specialize(a * b, q0), specialize(a, q0) * specialize(b, q0));
      EXPECT_EQ(specialize(a + b, q0), specialize(a, q0) + specialize(b, q0));
    }
  }
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(4, 2), 6);
  EXPECT_EQ(gen_binomial(-1, 1), -1);
  EXPECT_EQ(gen_binomial(-7, 0), 1);
  EXPECT_EQ(gen_binomial(3, 5), 0);
}

// Pascal's triangle built by addition only.
TEST(GenBinomial, MatchesPascalTriangle) {
  std::vector<std::vector<Integer>> row{{1}};
  for (int m = 1; m <= 40; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m + 1), 0);
    for (int j = 0; j <= m; ++j) {
      if (j > 0) next[j] += row[m - 1][j - 1];
      if (j < m) next[j] += row[m - 1][j];
    }
    row.push_back(next);
  }
  for (int m = 0; m <= 40; ++m)
    for (int j = 0; j <= m; ++j) EXPECT_EQ(gen_binomial(m, j), row[m][j]) << m << " " << j;
}

TEST(GenBinomial, UpperNegation) {
  for (int m = -20; m < 0; ++m) {
    for (int j = 0; j <= 10; ++j) {
      const Integer sign = j % 2 == 0 ? 1 : -1;
      EXPECT_EQ(gen_binomial(m, j), sign * gen_binomial(j - m - 1, j)) << m << " " << j;
    }
  }
}

TEST(GenBinomial, PascalRuleForAllIntegerTops) {
  for (int m = -20; m <= 20; ++m)
    for (int j = 1; j <= 10; ++j) EXPECT_EQ(gen_binomial(m, j), gen_binomial(m - 1, j) + gen_binomial(m - 1, j - 1));
}

TEST(LaurentText, Printing) {
  EXPECT_EQ(to_string(LaurentInt::loop()), "-q-q^-1");
  EXPECT_EQ(to_string(LaurentInt{{2, 1}, {0, 2}, {-2, 1}}), "q^2+2+q^-2");
  EXPECT_EQ(to_string(LaurentInt{{-1, 3}}), "3q^-1");
  EXPECT_EQ(to_string(LaurentInt{}), "0");
}

TEST(LaurentText, RoundTripsThroughParser) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentInt a = random_laurent(gen);
    EXPECT_EQ(parse_laurent(to_string(a)), a) << to_string(a);
  }
}

TEST(LaurentJson, SortedPairsWithDecimalStrings) {
  EXPECT_EQ(to_json(LaurentInt::loop()).dump(), R"([[-1,"-1"],[1,"-1"]])");
}

TEST(LaurentJson, RoundTrip) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentInt a = random_laurent(gen);
    EXPECT_EQ(laurent_from_json(to_json(a)), a);
  }
  EXPECT_THROW(laurent_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST(RationalValues, Reduced) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_FALSE(is_integral(r));
  EXPECT_THROW(to_integer(r), std::domain_error);
  EXPECT_EQ(to_integer(make_rational(8, 4)), 2);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

}  // namespace
}  // namespace sl2tl
