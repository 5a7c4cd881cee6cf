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

#include <sl2tl/bases.hpp>

#include "oracles.hpp"
#include "support.hpp"

namespace sl2tl {
namespace {

using namespace oracle;

IntVector v(std::string_view bits) { return IntVector::basis(bits); }
BitString s(std::string_view bits) { return BitString(bits); }

std::vector<BitString> strings_of(int n) {
  std::vector<BitString> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) out.push_back(BitString::from_word(n, w));
  return out;
}

// J is dominated by I: every prefix of J has at most as many ones as the same prefix of I.
bool dominated(const BitString& j, const BitString& i) {
  int sj = 0;
  int si = 0;
  for (int p = 0; p < i.size(); ++p) {
    sj += j[p];
    si += i[p];
    if (sj > si) return false;
  }
  return true;
}

TEST(Simple, Examples) {
  EXPECT_EQ(simple_l(s("10")), v("10") - v("01"));
  EXPECT_EQ(simple_l(s("01")), v("01"));
  EXPECT_EQ(simple_l(s("0011")), v("0011"));
  EXPECT_EQ(simple_l(s("1100")), delta_insert(1, simple_l(s("10"))));
}

TEST(Simple, SplitPositionDoesNotMatter) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& str : strings_of(n)) {
      if (!str[0] || str[n - 1]) continue;
      const IntVector leftmost = simple_l(str);
      for (int p = 0; p + 1 < n; ++p)
        if (str[p] && !str[p + 1]) EXPECT_EQ(simple_l_split(str, p), leftmost) << str.str() << " at " << p;
    }
  }
  EXPECT_THROW(simple_l_split(s("1010"), 1), std::invalid_argument);
}

TEST(Projective, Examples) {
  EXPECT_EQ(projective_p(s("10")), v("10"));
  EXPECT_EQ(projective_p(s("01")), v("01") + v("10"));
  EXPECT_EQ(projective_p(s("0101")), v("0101") + v("0110") + v("1001") + v("1010") + Integer(2) * v("1100"));
}

TEST(Form, Examples) {
  EXPECT_EQ(form(v("10"), v("10")), 1);
  EXPECT_EQ(form(v("10"), v("01")), 0);
  EXPECT_EQ(form(projective_p(s("01")), simple_l(s("10"))), 0);
  EXPECT_THROW(form(v("10"), v("100")), std::invalid_argument);
}

TEST(Form, Duality) {
  for (int n = 0; n <= 9; ++n) {
    auto table = basis_table(n);
    for (const auto& blk : table->blocks())
      for (std::size_t r = 0; r < blk.labels.size(); ++r)
        for (std::size_t c = 0; c < blk.labels.size(); ++c)
          EXPECT_EQ(form(blk.projective[r], blk.simple[c]), r == c ? 1 : 0) << blk.labels[r].str() << " " << blk.labels[c].str();
  }
}

TEST(Projective, RulesOneAndTwo) {
  for (int n = 0; n + 1 <= 10; ++n) {
    for (const auto& str : strings_of(n)) {
      const IntVector p = projective_p(str);
      EXPECT_EQ(projective_p(s("1") + str), tensor(v("1"), p)) << str.str();
      EXPECT_EQ(projective_p(str + s("0")), tensor(p, v("0"))) << str.str();
    }
  }
}

TEST(Projective, RuleThree) {
  long instances = 0;
  for (int n = 2; n <= 10; ++n)
    for_each_swap_instance(n, [&](const BitString& lhs, const BitString& swapped, int a, int j, int k) {
      EXPECT_EQ(to_rational(projective_p(lhs)), swap_rule(a, j, k, to_rational(projective_p(swapped)))) << lhs.str();
      ++instances;
    });
  EXPECT_EQ(instances, 2431);
}

// With I_2 = "1" following 0^1 1^1 the swap rule would give a different p(011)
// than the context-free application with k = 2; such contexts are excluded.
TEST(Projective, SwapRuleNeedsZerosAfterBlock) {
  const TensorVector via_k2 = swap_rule(0, 1, 2, to_rational(projective_p(s("110"))));
  const TensorVector via_k1 = swap_rule(0, 1, 1, to_rational(projective_p(s("101"))));
  EXPECT_EQ(via_k2, to_rational(v("011") + v("101") + v("110")));
  EXPECT_EQ(to_rational(projective_p(s("011"))), via_k2);
  EXPECT_NE(via_k1, via_k2);
  EXPECT_FALSE(swap_context(BitString(""), s("1"), 1, 1));
}

TEST(Projective, RulesDetermineBasis) {
  RuleOracle rules;
  for (int n = 0; n <= 10; ++n)
    for (const auto& str : strings_of(n)) {
      const auto r = rules.p(str);
      ASSERT_TRUE(r.has_value()) << "no rule applies to " << str.str();
      EXPECT_EQ(*r, to_rational(projective_p(str))) << str.str();
    }
}

TEST(Projective, BlockFormula) {
  EXPECT_EQ(eval_0101_formula(1, 1, 1, 1), to_rational(projective_p(s("0101"))));
  EXPECT_EQ(eval_0101_formula(0, 0, 0, 3), to_rational(v("111")));
  EXPECT_EQ(eval_0101_formula(4, 0, 0, 0), to_rational(v("0000")));
  for (int j = 0; j <= 10; ++j)
    for (int k = 0; j + k <= 10; ++k)
      for (int l = 0; j + k + l <= 10; ++l)
        for (int m = 0; j + k + l + m <= 10; ++m) {
          const BitString str = block_string(j, k, l, m);
          EXPECT_EQ(eval_0101_formula(j, k, l, m), to_rational(projective_p(str))) << str.str();
        }
}

TEST(Projective, NonnegativeCoordinates) {
  for (int n = 0; n <= 12; ++n) {
    auto table = basis_table(n);
    for (const auto& blk : table->blocks())
      for (const auto& p : blk.projective)
        for (const auto& [b, c] : p.terms()) ASSERT_GT(c, 0) << b.str();
  }
}

TEST(Transition, DominanceTriangular) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& str : strings_of(n)) {
      const IntVector l = simple_l(str);
      EXPECT_EQ(l.coeff(str), 1);
      for (const auto& [b, c] : l.terms()) EXPECT_TRUE(dominated(b, str)) << str.str() << " has " << b.str();
      const IntVector p = projective_p(str);
      EXPECT_EQ(p.coeff(str), 1);
      for (const auto& [b, c] : p.terms()) EXPECT_TRUE(dominated(str, b)) << str.str() << " has " << b.str();
    }
  }
}

TEST(Transition, TwoStrandExample) {
  const auto blocks = transition(2, BasisKind::Projective, BasisKind::Product);
  ASSERT_EQ(blocks.size(), 3U);
  const auto& t = blocks[1];
  EXPECT_EQ(t.labels, (std::vector<BitString>{s("10"), s("01")}));
  EXPECT_EQ(t.entries, (std::vector<std::vector<Integer>>{{1, 0}, {1, 1}}));
}

TEST(Transition, OneStrandIsIdentity) {
  for (auto from : {BasisKind::Product, BasisKind::Simple, BasisKind::Projective})
    for (auto to : {BasisKind::Product, BasisKind::Simple, BasisKind::Projective})
      for (const auto& t : transition(1, from, to)) EXPECT_EQ(t.entries, (std::vector<std::vector<Integer>>{{1}}));
}

std::vector<std::vector<Integer>> product(const std::vector<std::vector<Integer>>& x,
                                          const std::vector<std::vector<Integer>>& y) {
  std::vector<std::vector<Integer>> out(x.size(), std::vector<Integer>(x.size()));
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t k = 0; k < x.size(); ++k)
      for (std::size_t c = 0; c < x.size(); ++c) out[r][c] += x[r][k] * y[k][c];
  return out;
}

TEST(Transition, InversePairsAndComposition) {
  const std::vector<BasisKind> kinds{BasisKind::Product, BasisKind::Simple, BasisKind::Projective};
  for (int n = 0; n <= 7; ++n) {
    for (auto a : kinds) {
      for (auto b : kinds) {
        const auto ab = transition(n, a, b);
        for (auto c : kinds) {
          const auto bc = transition(n, b, c);
          const auto ac = transition(n, a, c);
          for (std::size_t k = 0; k < ab.size(); ++k) EXPECT_EQ(product(ab[k].entries, bc[k].entries), ac[k].entries);
        }
        for (const auto& t : ab) {
          if (a == BasisKind::Product || b == BasisKind::Product) EXPECT_TRUE(t.is_unitriangular());
          if (a == b) {
            for (std::size_t r = 0; r < t.labels.size(); ++r)
              for (std::size_t c = 0; c < t.labels.size(); ++c) EXPECT_EQ(t.entries[r][c], r == c ? 1 : 0);
          }
        }
      }
    }
  }
}

TEST(Transition, RowsMatchVectors) {
  for (const auto& t : transition(5, BasisKind::Simple, BasisKind::Product))
    for (std::size_t r = 0; r < t.labels.size(); ++r) {
      IntVector row(5);
      for (std::size_t c = 0; c < t.labels.size(); ++c) row.add(t.labels[c], t.entries[r][c]);
      EXPECT_EQ(row, simple_l(t.labels[r]));
    }
}

TEST(Coordinates, RecoverCombinations) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::uniform(gen, 1, 9);
    for (auto kind : {BasisKind::Simple, BasisKind::Projective}) {
      IntVector combo(n);
      IntVector expanded(n);
      for (int t = 0; t < 4; ++t) {
        const BitString b = BitString::from_word(n, static_cast<std::uint64_t>(testing::uniform(gen, 0, (1 << n) - 1)));
        const Integer c = testing::uniform(gen, -4, 4);
        combo.add(b, c);
        expanded += c * basis_vector(kind, b);
      }
      EXPECT_EQ(coordinates(expanded, kind), combo);
    }
  }
}

TEST(Text, Table) {
  const auto t = transition(2, BasisKind::Projective, BasisKind::Product)[1];
  EXPECT_EQ(to_text(t), "block n=2 k=1  p -> v\n       10 01\np(10)   1  0\np(01)   1  1\n");
  EXPECT_EQ(to_json(t).dump(),
            R"({"entries":[["1","0"],["1","1"]],"from":"p","labels":["10","01"],"n":2,"ones":1,"to":"v"})");
}

TEST(Table, SizeLimit) { EXPECT_THROW(basis_table(21), std::out_of_range); }

}  // namespace
}  // namespace sl2tl
