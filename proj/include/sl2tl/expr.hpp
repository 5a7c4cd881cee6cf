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

/**
 * @file expr.hpp
 * @brief Text syntax for the three element kinds. Whitespace is ignored
 * everywhere; every parser accepts what the matching printer emits.
 *
 *   Laurent   -q-q^-1   q^2+2+q^-2   3q^-1   0
 *   TL        u1*u2*u1 @ n=3     (-q-q^-1) cup1*cap1 - 2 id @ n=2
 *             cap2 @ n=4         0 @ n=2, m=0
 *   Udot      E(1) 1(-1) F(1)    F(1) 1(3) E(1) + 1(1)    2 E(2) 1(0)
 *   vector    v(0101) + 2 v(1100)    -1/2 l(10)    p(0101) - v(0011)
 *
 * TL words act right to left starting from the object after '@', so the
 * rightmost generator is applied first. In a Udot monomial the weight is
 * carried from the idempotent 1(i) through neighbouring factors; every term
 * needs at least one idempotent and all of them must agree.
 */

#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bases.hpp"
#include "coeffs.hpp"
#include "planar.hpp"
#include "tensor.hpp"
#include "udot.hpp"

namespace sl2tl {

/// Malformed input. position is a 0-based offset into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("at column " + std::to_string(position + 1) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() {
    skip();
    return pos_;
  }
  bool done() { return pos() == text_.size(); }
  char peek() { return done() ? '\0' : text_[pos_]; }
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool eat(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!done()) error(std::string("unexpected '") + text_[pos_] + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Integer natural() {
    if (!at_digit()) error("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int small_int(bool allow_sign = true) {
    const std::size_t start = pos();
    bool negative = false;
    if (allow_sign) {
      if (eat('-')) negative = true;
      else eat('+');
    }
    Integer v = natural();
    if (negative) v = -v;
    if (v > 1000000 || v < -1000000) throw ParseError(start, "integer out of range");
    return static_cast<int>(v);
  }

  /// Bits up to the next non-0/1 character, without skipping spaces inside.
  std::string bits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1' || text_[pos_] == ' ')) ++pos_;
    std::string out;
    for (char c : text_.substr(start, pos_ - start))
      if (c != ' ') out += c;
    return out;
  }

  [[noreturn]] void error(const std::string& what) { throw ParseError(pos(), what); }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Laurent terms: [sign] [digits] [q [^ [sign] digits]].
inline LaurentInt laurent_sum(Cursor& cur) {
  LaurentInt out;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else if (!cur.eat('+') && !first) break;
    first = false;
    Integer c = 1;
    bool any = false;
    if (cur.at_digit()) {
      c = cur.natural();
      any = true;
    }
    int e = 0;
    if (cur.eat('q')) {
      any = true;
      e = 1;
      if (cur.eat('^')) e = cur.small_int();
    }
    if (!any) cur.error("expected a Laurent term");
    out.add_term(e, negative ? Integer(-c) : c);
    const char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  return out;
}

}  // namespace detail

inline LaurentInt parse_laurent(std::string_view text) {
  detail::Cursor cur(text);
  LaurentInt out = detail::laurent_sum(cur);
  cur.expect_end();
  return out;
}

// ---------------------------------------------------------------------------
// TL expressions.

namespace detail {

struct TLGenerator {
  enum class Kind { U, Cap, Cup, Id } kind;
  int index = 0;
  std::size_t position = 0;
};

struct TLTerm {
  LaurentInt coeff;
  std::vector<TLGenerator> word;  ///< left to right as written
  std::size_t position = 0;
};

inline bool tl_word_start(Cursor& cur) {
  const char c = cur.peek();
  return c == 'u' || c == 'c' || c == 'i';
}

inline std::vector<TLGenerator> tl_word(Cursor& cur) {
  std::vector<TLGenerator> word;
  do {
    TLGenerator g{TLGenerator::Kind::Id, 0, cur.pos()};
    if (cur.eat("cap")) g.kind = TLGenerator::Kind::Cap;
    else if (cur.eat("cup")) g.kind = TLGenerator::Kind::Cup;
    else if (cur.eat("id")) g.kind = TLGenerator::Kind::Id;
    else if (cur.eat('u')) g.kind = TLGenerator::Kind::U;
    else cur.error("expected u<i>, cap<i>, cup<i> or id");
    if (g.kind != TLGenerator::Kind::Id) {
      g.index = cur.small_int(false);
    }
    word.push_back(g);
  } while (cur.eat('*'));
  return word;
}

}  // namespace detail

/**
 * Parses a TL expression. Generators compose with the generic loop value
 * -q-q^-1; pass another loop value to evaluate closed loops differently.
 */
inline TLMorphism parse_tl(std::string_view text, const LaurentInt& loop_value = LaurentInt::loop()) {
  detail::Cursor cur(text);
  std::vector<detail::TLTerm> terms;
  bool first = true;
  bool zero = false;
  while (true) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else if (!cur.eat('+') && !first) break;
    first = false;
    detail::TLTerm term{LaurentInt(1), {}, cur.pos()};
    if (cur.eat('(')) {
      term.coeff = detail::laurent_sum(cur);
      cur.expect(')');
      cur.eat('*');
    } else if (cur.at_digit()) {
      term.coeff = LaurentInt(cur.natural());
      cur.eat('*');
    }
    if (detail::tl_word_start(cur)) {
      term.word = detail::tl_word(cur);
    } else if (term.coeff == LaurentInt(0) && terms.empty()) {
      zero = true;
    } else {
      cur.error("expected a generator word");
    }
    if (negative) term.coeff = -term.coeff;
    if (!zero) terms.push_back(std::move(term));
    const char next = cur.peek();
    if (zero || (next != '+' && next != '-')) break;
  }
  if (!cur.eat('@')) cur.error("expected '@ n=<count>'");
  if (!cur.eat('n')) cur.error("expected 'n='");
  cur.expect('=');
  const std::size_t n_pos = cur.pos();
  const int n = cur.small_int(false);
  std::optional<int> m;
  if (cur.eat(',')) {
    if (!cur.eat('m')) cur.error("expected 'm='");
    cur.expect('=');
    m = cur.small_int(false);
  }
  cur.expect_end();
  if (n > 32) throw ParseError(n_pos, "object too large");

  std::optional<int> target = m;
  TLMorphism out(n, m.value_or(n));
  bool have_out = false;
  for (const auto& term : terms) {
    int obj = n;
    std::vector<TLMorphism> factors;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
      try {
        switch (it->kind) {
          case detail::TLGenerator::Kind::U: factors.push_back(u_generator(it->index, obj)); break;
          case detail::TLGenerator::Kind::Cap: factors.push_back(cap(it->index, obj)); obj -= 2; break;
          case detail::TLGenerator::Kind::Cup: factors.push_back(cup(it->index, obj)); obj += 2; break;
          case detail::TLGenerator::Kind::Id: factors.push_back(TLMorphism::identity(obj)); break;
        }
      } catch (const std::out_of_range& e) {
        throw ParseError(it->position, e.what());
      }
    }
    if (target && *target != obj)
      throw ParseError(term.position, "term ends at object " + std::to_string(obj) + ", expected " +
                                          std::to_string(*target));
    target = obj;
    std::reverse(factors.begin(), factors.end());
    TLMorphism value = term.coeff * word_product(factors, loop_value);
    if (!have_out) {
      out = TLMorphism(n, obj);
      have_out = true;
    }
    out += value;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Udot expressions.

namespace detail {

struct UdotFactor {
  enum class Kind { E, F, One } kind;
  int value = 0;
  std::size_t position = 0;
};

inline UdotElement udot_term(const std::vector<UdotFactor>& factors, std::size_t term_pos) {
  // Weight to the right of each factor, seeded from the first idempotent.
  const std::size_t count = factors.size();
  std::size_t anchor = count;
  for (std::size_t k = 0; k < count; ++k) {
    if (factors[k].kind == UdotFactor::Kind::One) {
      anchor = k;
      break;
    }
  }
  if (anchor == count) throw ParseError(term_pos, "term needs an idempotent 1(i) to fix the weight");
  std::vector<int> right(count);
  right[anchor] = factors[anchor].value;
  auto shift = [](const UdotFactor& f) { return f.kind == UdotFactor::Kind::E ? 2 * f.value
                                                : f.kind == UdotFactor::Kind::F ? -2 * f.value
                                                                                : 0; };
  for (std::size_t k = anchor; k-- > 0;) right[k] = right[k + 1] + shift(factors[k + 1]);
  for (std::size_t k = anchor + 1; k < count; ++k) right[k] = right[k - 1] - shift(factors[k]);
  UdotElement acc;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& f = factors[k];
    if (f.kind == UdotFactor::Kind::One && f.value != right[k])
      throw ParseError(f.position, "idempotent 1(" + std::to_string(f.value) + ") where the weight is " +
                                       std::to_string(right[k]));
    UdotMonomial m = f.kind == UdotFactor::Kind::E   ? UdotMonomial::E(f.value, right[k])
                     : f.kind == UdotFactor::Kind::F ? UdotMonomial::F(f.value, right[k])
                                                     : UdotMonomial::idempotent(right[k]);
    acc = k == 0 ? UdotElement(m) : multiply(acc, UdotElement(m));
  }
  return acc;
}

}  // namespace detail

inline UdotElement parse_udot(std::string_view text) {
  detail::Cursor cur(text);
  UdotElement out;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else if (!cur.eat('+') && !first) break;
    const std::size_t term_pos = cur.pos();
    Integer c = 1;
    bool has_coeff = false;
    if (cur.at_digit() && cur.peek() != '1') {
      c = cur.natural();
      has_coeff = true;
    } else if (cur.peek() == '1') {
      // "1(" starts an idempotent, any other digits a coefficient.
      detail::Cursor probe = cur;
      probe.natural();
      if (probe.peek() != '(' || probe.pos() != cur.pos() + 1) {
        c = cur.natural();
        has_coeff = true;
      }
    }
    if (has_coeff) cur.eat('*');
    std::vector<detail::UdotFactor> factors;
    while (true) {
      const std::size_t fpos = cur.pos();
      detail::UdotFactor f{detail::UdotFactor::Kind::One, 0, fpos};
      if (cur.eat('E')) f.kind = detail::UdotFactor::Kind::E;
      else if (cur.eat('F')) f.kind = detail::UdotFactor::Kind::F;
      else if (cur.peek() == '1') {
        detail::Cursor probe = cur;
        probe.natural();
        if (probe.peek() != '(' || probe.pos() != fpos + 1) break;
        cur.natural();
      } else {
        break;
      }
      cur.expect('(');
      f.value = cur.small_int(f.kind == detail::UdotFactor::Kind::One);
      if (f.kind != detail::UdotFactor::Kind::One && f.value < 0) throw ParseError(fpos, "negative divided power");
      cur.expect(')');
      factors.push_back(f);
      cur.eat('*');
    }
    if (factors.empty()) {
      if (first && has_coeff && c == 0) {
        first = false;
        break;
      }
      cur.error("expected E(a), F(b) or 1(i)");
    }
    first = false;
    UdotElement term = detail::udot_term(factors, term_pos);
    out += (negative ? Integer(-c) : c) * term;
    const char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  cur.expect_end();
  return out;
}

/**
 * Parses a sum of canonical basis labels written "E(a) 1(-i) F(b)" (EF) or
 * "F(b) 1(i) E(a)" (FE), as printed for canonical coordinates.
 */
inline CanonicalCoords parse_canonical(std::string_view text) {
  detail::Cursor cur(text);
  CanonicalCoords out;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else if (!cur.eat('+') && !first) break;
    const std::size_t term_pos = cur.pos();
    Integer c = 1;
    if (cur.at_digit()) {
      detail::Cursor probe = cur;
      probe.natural();
      if (probe.peek() != '(' || cur.peek() != '1' || probe.pos() != term_pos + 1) {
        c = cur.natural();
        cur.eat('*');
      }
    }
    if (first && c == 0 && cur.done()) break;
    first = false;
    // Optional factor, the idempotent, optional factor.
    int e = -1;
    int f = -1;
    int order = 0;  // +1 for E...F, -1 for F...E
    auto factor = [&](bool leading) {
      const std::size_t fpos = cur.pos();
      const bool is_e = cur.eat('E');
      if (!is_e && !cur.eat('F')) return;
      cur.expect('(');
      int& slot = is_e ? e : f;
      if (slot >= 0) throw ParseError(fpos, "repeated generator");
      slot = cur.small_int(false);
      const int o = (is_e == leading) ? 1 : -1;
      if (order != 0 && order != o) throw ParseError(fpos, "not a canonical basis element");
      order = o;
      cur.expect(')');
    };
    factor(true);
    if (!cur.eat('1')) cur.error("expected the idempotent 1(i)");
    cur.expect('(');
    const int w = cur.small_int();
    cur.expect(')');
    factor(false);
    const int a = std::max(e, 0);
    const int b = std::max(f, 0);
    if (order == 0) order = w > 0 ? -1 : 1;
    CanonicalLabel label = order > 0 ? CanonicalLabel{CanonicalLabel::Shape::EF, a, b, -w}
                                     : CanonicalLabel{CanonicalLabel::Shape::FE, a, b, w};
    // F(b) 1(a+b) E(a) is the EF element E(a) 1(-a-b) F(b).
    if (order < 0 && w == a + b) label = CanonicalLabel{CanonicalLabel::Shape::EF, a, b, w};
    if (!label.valid()) throw ParseError(term_pos, "not a canonical basis element");
    out[label] += negative ? Integer(-c) : c;
    const char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  cur.expect_end();
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Vectors.

/**
 * Parses a rational combination of v(I), l(I) and p(I); all strings must
 * have the same length. A bare "0" is the zero vector of length `n_hint`.
 */
inline TensorVector parse_vector(std::string_view text, int n_hint = 0) {
  detail::Cursor cur(text);
  std::optional<TensorVector> out;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else if (!cur.eat('+') && !first) break;
    Rational c = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      Integer num = cur.natural();
      Integer den = 1;
      if (cur.eat('/')) {
        const std::size_t dpos = cur.pos();
        den = cur.natural();
        if (den == 0) throw ParseError(dpos, "zero denominator");
      }
      c = make_rational(num, den);
      has_coeff = true;
      cur.eat('*');
    }
    if (first && has_coeff && c == 0 && cur.done()) {
      out = TensorVector(n_hint);
      break;
    }
    first = false;
    const std::size_t sym_pos = cur.pos();
    const char sym = cur.peek();
    const auto kind = basis_from_symbol(std::string(1, sym));
    if (!kind) cur.error("expected v(...), l(...) or p(...)");
    cur.eat(sym);
    cur.expect('(');
    const std::size_t bits_pos = cur.pos();
    const std::string bits = cur.bits();
    if (static_cast<int>(bits.size()) > BitString::kMaxLength) throw ParseError(bits_pos, "bit string too long");
    cur.expect(')');
    const BitString b(bits);
    if (out && out->size() != b.size()) throw ParseError(sym_pos, "bit strings of different lengths");
    if (!out) out = TensorVector(b.size());
    if (*kind != BasisKind::Product && b.size() > 20) throw ParseError(sym_pos, "l and p are limited to length 20");
    const Rational s = negative ? Rational(-c) : c;
    if (*kind == BasisKind::Product) {
      out->add(b, s);
    } else {
      *out += s * to_rational(basis_vector(*kind, b));
    }
    const char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  cur.expect_end();
  if (!out) cur.error("empty vector");
  return *out;
}

}  // namespace sl2tl
