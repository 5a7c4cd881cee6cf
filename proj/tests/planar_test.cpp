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

#include <set>

#include <sl2tl/cli.hpp>
#include <sl2tl/planar.hpp>

#include "oracles.hpp"
#include "support.hpp"

namespace sl2tl {
namespace {

using namespace oracle;

PlanarDiagram random_diagram(std::mt19937_64& gen, int n, int m) {
  const auto all = enumerate_diagrams(n, m);
  return all[static_cast<std::size_t>(testing::uniform(gen, 0, static_cast<int>(all.size()) - 1))];
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_diagrams(2, 2).size(), 2U);
  EXPECT_EQ(enumerate_diagrams(3, 3).size(), 5U);
  EXPECT_TRUE(enumerate_diagrams(1, 2).empty());
}

TEST(Enumerate, TwoTwoContainsIdentityAndCupOverCap) {
  const auto all = enumerate_diagrams(2, 2);
  const std::set<PlanarDiagram> got(all.begin(), all.end());
  const PlanarDiagram u1 = u_generator(1, 2).terms().begin()->first;
  EXPECT_EQ(got, (std::set<PlanarDiagram>{PlanarDiagram::identity(2), u1}));
}

TEST(Enumerate, AgreesWithBruteForceOverInvolutions) {
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; n + m <= 12; ++m) {
      std::set<std::vector<int>> got;
      for (const auto& d : enumerate_diagrams(n, m)) EXPECT_TRUE(got.insert(d.partners()).second);
      EXPECT_EQ(got, brute_force_matchings(n, m)) << n << "," << m;
    }
  }
}

TEST(Enumerate, CatalanCounts) {
  for (int total = 0; total <= 16; total += 2)
    for (int n = 0; n <= total; ++n)
      EXPECT_EQ(Integer(enumerate_diagrams(n, total - n).size()), catalan(total / 2)) << n << "," << total - n;
}

TEST(Diagram, RejectsCrossingAndMalformed) {
  EXPECT_THROW(PlanarDiagram::from_pairs(2, 2, {{0, 3}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(PlanarDiagram(1, 0, {0}), std::invalid_argument);
  EXPECT_THROW(PlanarDiagram(2, 0, {1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(PlanarDiagram::from_pairs(2, 2, {{0, 2}, {1, 3}}));
}

TEST(Generators, IdentityIsVerticalStrands) {
  const auto id = PlanarDiagram::identity(3);
  EXPECT_EQ(id.pairs(), (std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_EQ(id.through_strands(), 3);
}

TEST(Generators, CapTwoOfFour) {
  const TLMorphism c = cap(2, 4);
  ASSERT_EQ(c.terms().size(), 1U);
  const PlanarDiagram d = c.terms().begin()->first;
  EXPECT_EQ(d.bottom(), 4);
  EXPECT_EQ(d.top(), 2);
  EXPECT_EQ(d.partner(1), 2);
  EXPECT_EQ(d.partner(0), d.top_point(0));
  EXPECT_EQ(d.partner(3), d.top_point(1));
}

TEST(Generators, CupInsertsTopArc) {
  const PlanarDiagram d = cup(2, 2).terms().begin()->first;
  EXPECT_EQ(d.partner(d.top_point(1)), d.top_point(2));
  EXPECT_EQ(d.partner(0), d.top_point(0));
  EXPECT_EQ(d.partner(1), d.top_point(3));
}

TEST(Generators, UOneIsCapThenCup) {
  EXPECT_EQ(u_generator(1, 2), compose(cap(1, 2), cup(1, 0)));
  EXPECT_EQ(to_word(u_generator(1, 2)), "cup1*cap1 @ n=2");
}

TEST(Generators, IndexBounds) {
  EXPECT_THROW(cap(0, 3), std::out_of_range);
  EXPECT_THROW(cap(3, 3), std::out_of_range);
  EXPECT_THROW(cap(1, 1), std::out_of_range);
  EXPECT_THROW(cup(4, 2), std::out_of_range);
  EXPECT_THROW(u_generator(2, 2), std::out_of_range);
  EXPECT_NO_THROW(cup(3, 2));
  EXPECT_NO_THROW(cup(1, 0));
}

TEST(Compose, USquared) {
  const TLMorphism u = u_generator(1, 2);
  EXPECT_EQ(compose(u, u), LaurentInt::loop() * u);
  EXPECT_EQ(to_word(compose(u, u)), "(-q-q^-1) cup1*cap1 @ n=2");
}

TEST(Compose, ZigzagIsIdentity) {
  for (int n = 0; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(compose(cup(i, n), cap(i + 1, n + 2)), TLMorphism::identity(n));
}

TEST(Compose, BoundaryMismatch) { EXPECT_THROW(compose(cap(1, 4), cap(1, 4)), std::invalid_argument); }

TEST(Compose, IdentityLaw) {
  for (int n = 0; n <= 5; ++n)
    for (int m = n % 2; m <= 5; m += 2)
      for (const auto& d : enumerate_diagrams(n, m)) {
        const TLMorphism f(d, LaurentInt{{1, 2}, {0, -1}});
        EXPECT_EQ(compose(TLMorphism::identity(n), f), f);
        EXPECT_EQ(compose(f, TLMorphism::identity(m)), f);
      }
}

TEST(Compose, Associative) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 300; ++trial) {
    const int a = testing::uniform(gen, 0, 8);
    const int b = testing::uniform(gen, 0, 4) * 2 + a % 2;
    const int c = testing::uniform(gen, 0, 4) * 2 + a % 2;
    const int d = testing::uniform(gen, 0, 4) * 2 + a % 2;
    if (b > 8 || c > 8 || d > 8) continue;
    const TLMorphism f(random_diagram(gen, a, b));
    const TLMorphism g(random_diagram(gen, b, c));
    const TLMorphism h(random_diagram(gen, c, d));
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
  }
}

TEST(Compose, CommutesWithSpecialization) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 200; ++trial) {
    const int a = testing::uniform(gen, 0, 6);
    const int b = testing::uniform(gen, 0, 3) * 2 + a % 2;
    const int c = testing::uniform(gen, 0, 3) * 2 + a % 2;
    const TLMorphism f = TLMorphism(random_diagram(gen, a, b), LaurentInt{{1, 1}, {-2, 3}}) +
                         TLMorphism(random_diagram(gen, a, b), LaurentInt{{0, -2}});
    const TLMorphism g(random_diagram(gen, b, c), LaurentInt{{3, 1}});
    for (int q0 : {1, -1}) {
      const LaurentInt loop(specialize(LaurentInt::loop(), q0));
      EXPECT_EQ(specialize(compose(f, g), q0), compose(specialize(f, q0), specialize(g, q0), loop));
    }
  }
}

// The tensor-space action at q = 1 is a functor: an independent check of loop counting.
TEST(Compose, MatchesComposedTensorAction) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 150; ++trial) {
    const int a = testing::uniform(gen, 0, 6);
    const int b = testing::uniform(gen, 0, 3) * 2 + a % 2;
    const int c = testing::uniform(gen, 0, 3) * 2 + a % 2;
    const TLMorphism f(random_diagram(gen, a, b));
    const TLMorphism g(random_diagram(gen, b, c));
    for (int q0 : {1, -1}) {
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << a); ++w) {
        const IntVector v = IntVector::basis(BitString::from_word(a, w));
        EXPECT_EQ(act_diagram(compose(f, g), q0, v), act_diagram(g, q0, act_diagram(f, q0, v)));
      }
    }
  }
}

TEST(Relations, HoldUpToEight) {
  for (int n_max : {2, 4, 8}) {
    const auto r = verify_tl_relations(n_max);
    EXPECT_TRUE(r.passed) << r.relation << " " << r.instance << " " << r.witness;
    EXPECT_GT(r.checked, 0);
  }
}

TEST(Relations, WrongLoopValueIsCaughtAtUSquared) {
  const auto r = verify_tl_relations(4, -LaurentInt::loop());
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.relation, "U_i^2 = -(q+q^-1) U_i");
  EXPECT_EQ(r.instance, "n=2 i=1");
  EXPECT_EQ(r.witness, "(2q+2q^-1) cup1*cap1 @ n=2");
}

TEST(Relations, EndomorphismAlgebraRank) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(Integer(enumerate_diagrams(n, n).size()), catalan(n));
}

TEST(Words, RebuildEveryDiagram) {
  // Multiplying out the printed word gives back the diagram.
  for (int n = 0; n <= 5; ++n) {
    for (int m = n % 2; m <= 5; m += 2) {
      for (const auto& d : enumerate_diagrams(n, m)) {
        const auto word = diagram_word(d);
        TLMorphism acc = TLMorphism::identity(n);
        std::vector<int> objects{n};
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          const bool is_cap = it->rfind("cap", 0) == 0;
          const int i = std::stoi(it->substr(3));
          const TLMorphism g = is_cap ? cap(i, acc.target()) : cup(i, acc.target());
          acc = compose(acc, g);
        }
        EXPECT_EQ(acc, TLMorphism(d));
      }
    }
  }
}

TEST(Json, DiagramAndMorphismRoundTrip) {
  const TLMorphism f = LaurentInt::loop() * u_generator(2, 4) + TLMorphism::identity(4);
  EXPECT_EQ(morphism_from_json(to_json(f), 4, 4), f);
  EXPECT_EQ(to_json(PlanarDiagram::from_pairs(2, 0, {{0, 1}})).dump(), R"({"m":0,"n":2,"pairs":[[0,1]]})");
}

TEST(Render, IdentityIsTwoBars) {
  const std::string art = render_ascii(TLMorphism::identity(2));
  EXPECT_EQ(art, " o   o\n |   |\n |   |\n o   o\n");
}

TEST(Render, CoefficientLabelPrecedesDiagram) {
  const std::string art = render_ascii(LaurentInt::loop() * u_generator(1, 2));
  EXPECT_EQ(art.rfind("(-q-q^-1) *\n", 0), 0U) << art;
}

TEST(Render, SvgHasOneCupAndOneCap) {
  const std::string svg = render_svg(u_generator(1, 2));
  auto count = [&](const std::string& needle) {
    std::size_t k = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++k;
    return k;
  };
  EXPECT_EQ(count("class=\"cup\""), 1U);
  EXPECT_EQ(count("class=\"cap\""), 1U);
  EXPECT_EQ(count("class=\"strand\""), 0U);
  EXPECT_EQ(svg.rfind("<svg", 0), 0U);
}

}  // namespace
}  // namespace sl2tl
