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

#include <sl2tl/expr.hpp>

#include "support.hpp"

namespace sl2tl {
namespace {

std::size_t error_position(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "expected a parse error";
  return std::string::npos;
}

LaurentInt random_laurent(std::mt19937_64& gen) {
  LaurentInt r;
  const int terms = testing::uniform(gen, 1, 3);
  for (int t = 0; t < terms; ++t) r.add_term(testing::uniform(gen, -3, 3), testing::uniform(gen, -4, 4));
  return r;
}

TEST(Laurent, Forms) {
  EXPECT_EQ(parse_laurent("-q-q^-1"), LaurentInt::loop());
  EXPECT_EQ(parse_laurent(" q^2 + 2 + q^-2 "), LaurentInt::loop() * LaurentInt::loop());
  EXPECT_EQ(parse_laurent("3q^-1"), LaurentInt::monomial(-1, 3));
  EXPECT_EQ(parse_laurent("0"), LaurentInt{});
}

TEST(Laurent, ErrorPositions) {
  EXPECT_EQ(error_position([] { parse_laurent("q^"); }), 2U);
  EXPECT_EQ(error_position([] { parse_laurent("2q+"); }), 3U);
  EXPECT_EQ(error_position([] { parse_laurent("3x"); }), 1U);
}

TEST(TL, Words) {
  EXPECT_EQ(parse_tl("u1*u1 @ n=2"), LaurentInt::loop() * u_generator(1, 2));
  EXPECT_EQ(parse_tl("u1*u2*u1 @ n=3"), u_generator(1, 3));
  EXPECT_EQ(parse_tl("cap2 @ n=4"), cap(2, 4));
  EXPECT_EQ(parse_tl("cup1*cap1 @ n=2"), u_generator(1, 2));
  EXPECT_EQ(parse_tl("(-q-q^-1) cup1*cap1 - 2 id @ n=2"),
            LaurentInt::loop() * u_generator(1, 2) - LaurentInt(2) * TLMorphism::identity(2));
  EXPECT_EQ(parse_tl("0 @ n=2, m=0"), TLMorphism(2, 0));
}

TEST(TL, RightmostGeneratorActsFirst) {
  // cup3 needs three or more points, so it can only come before cap1 here.
  EXPECT_NO_THROW(parse_tl("cap1*cup3 @ n=2"));
  EXPECT_THROW(parse_tl("cup3*cap1 @ n=2"), ParseError);
  EXPECT_EQ(parse_tl("cap1*cup2 @ n=1"), compose(cup(2, 1), cap(1, 3)));
}

TEST(TL, LoopValueIsConfigurable) {
  EXPECT_EQ(parse_tl("u1*u1 @ n=2", LaurentInt(2)), LaurentInt(2) * u_generator(1, 2));
}

TEST(TL, Errors) {
  EXPECT_EQ(error_position([] { parse_tl("u1*u1"); }), 5U);
  EXPECT_EQ(error_position([] { parse_tl("w1 @ n=2"); }), 0U);
  EXPECT_EQ(error_position([] { parse_tl("u3 @ n=2"); }), 0U);
  EXPECT_EQ(error_position([] { parse_tl("u1 + cap1 @ n=2"); }), 5U);
}

TEST(TL, PrintParseRoundTrip) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform(gen, 0, 6);
    const int m = testing::uniform(gen, 0, 3) * 2 + n % 2;
    const auto all = enumerate_diagrams(n, m);
    TLMorphism f(n, m);
    const int terms = testing::uniform(gen, 0, 3);
    for (int t = 0; t < terms; ++t)
      f.add(all[static_cast<std::size_t>(testing::uniform(gen, 0, static_cast<int>(all.size()) - 1))],
            random_laurent(gen));
    const std::string text = to_word(f);
    TLMorphism back = parse_tl(text);
    EXPECT_EQ(back, f) << text;
  }
}

TEST(Udot, Forms) {
  EXPECT_EQ(parse_udot("E(1) 1(-1) F(1)"), UdotElement(UdotMonomial{1, -1, 1}));
  EXPECT_EQ(parse_udot("F(1) 1(3) E(1)"), UdotElement(UdotMonomial{1, -1, 1}) - UdotElement(UdotMonomial{0, 1, 0}));
  EXPECT_EQ(parse_udot("E(1) E(1) 1(0)"), UdotElement(UdotMonomial{2, 0, 0}, 2));
  EXPECT_EQ(parse_udot("2 E(2) 1(0)"), UdotElement(UdotMonomial{2, 0, 0}, 2));
  EXPECT_EQ(parse_udot("E(1)1(-1)F(1)"), parse_udot("  E( 1 ) 1( -1 ) F( 1 ) "));
}

TEST(Udot, Errors) {
  EXPECT_EQ(error_position([] { parse_udot("E(1) F(1)"); }), 0U);
  EXPECT_EQ(error_position([] { parse_udot("E(1) 1(0) 1(3)"); }), 10U);
  EXPECT_EQ(error_position([] { parse_udot("E(1 1(0)"); }), 4U);
}

TEST(Canonical, Forms) {
  using Shape = CanonicalLabel::Shape;
  EXPECT_EQ(parse_canonical("F(1) 1(3) E(1) + 1(1)"),
            (CanonicalCoords{{CanonicalLabel{Shape::FE, 1, 1, 3}, 1}, {CanonicalLabel{Shape::FE, 0, 0, 1}, 1}}));
  EXPECT_EQ(parse_canonical("E(2) 1(-4) F(1)"), (CanonicalCoords{{CanonicalLabel{Shape::EF, 2, 1, 4}, 1}}));
  EXPECT_EQ(parse_canonical("F(1) 1(2) E(1)"), (CanonicalCoords{{CanonicalLabel{Shape::EF, 1, 1, 2}, 1}}));
  EXPECT_EQ(error_position([] { parse_canonical("E(1) 1(-1) F(1)"); }), 0U);
}

TEST(Vector, Forms) {
  const Rational half = make_rational(1, 2);
  EXPECT_EQ(parse_vector("v(01)+v(10)"), TensorVector::basis("01") + TensorVector::basis("10"));
  EXPECT_EQ(parse_vector("-1/2 l(10)"), -half * to_rational(simple_l(BitString("10"))));
  EXPECT_EQ(parse_vector("p(0101) - v(0011)"),
            to_rational(projective_p(BitString("0101"))) - TensorVector::basis("0011"));
  EXPECT_EQ(parse_vector("0", 3), TensorVector(3));
}

TEST(Vector, Errors) {
  EXPECT_EQ(error_position([] { parse_vector("v(01)+v(1)"); }), 6U);
  EXPECT_EQ(error_position([] { parse_vector("v(012)"); }), 4U);
  EXPECT_EQ(error_position([] { parse_vector("1/0 v(1)"); }), 2U);
}

TEST(Vector, ErrorMessageNamesColumn) {
  try {
    parse_vector("v(01)+v(1)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "at column 7: bit strings of different lengths");
  }
}

TEST(Vector, PrintParseRoundTrip) {
  auto gen = testing::rng();
  for (int trial = 0; trial < 300; ++trial) {
    const int n = testing::uniform(gen, 1, 8);
    TensorVector x(n);
    for (int t = 0; t < 4; ++t)
      x.add(BitString::from_word(n, static_cast<std::uint64_t>(testing::uniform(gen, 0, (1 << n) - 1))),
            make_rational(testing::uniform(gen, -6, 6), testing::uniform(gen, 1, 4)));
    EXPECT_EQ(parse_vector(to_string(x), n), x) << to_string(x);
    // Coordinates printed with the l or p symbol parse back to the same vector.
    for (auto kind : {BasisKind::Simple, BasisKind::Projective}) {
      const std::string text = to_string(coordinates(x, kind), std::string(1, basis_symbol(kind)));
      EXPECT_EQ(parse_vector(text, n), x) << text;
    }
  }
}

}  // namespace
}  // namespace sl2tl
