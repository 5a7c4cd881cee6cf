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
 * @file coeffs.hpp
 * @brief Exact coefficient rings: big integers, rationals, Laurent
 * polynomials in q over Z, and binomials with arbitrary integer top.
 *
 * Integer and Rational are Boost.Multiprecision types; cpp_int keeps small
 * values inline and promotes to heap limbs on overflow, so there is no
 * separate machine-word path to keep in sync.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace sl2tl {

// Expression templates are off so that `auto` never captures a lazy product.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  const Integer& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

/// num/den in lowest terms. Throws std::domain_error on a zero denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  // Boost 1.74 rejects a negative denominator in the two-argument constructor.
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

/// Throws std::domain_error if x is not an integer.
inline Integer to_integer(const Rational& x) {
  if (!is_integral(x)) {
    throw std::domain_error("expected an integral value, got " + to_string(x));
  }
  return boost::multiprecision::numerator(x);
}

/// m(m-1)...(m-j+1)/j! for any integer m and j >= 0; zero for j < 0.
inline Integer gen_binomial(const Integer& m, std::int64_t j) {
  if (j < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t t = 0; t < j; ++t) {
    num *= m - t;
    den *= t + 1;
  }
  return num / den;
}

inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return gen_binomial(Integer(n), k);
}

inline Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t t = 2; t <= n; ++t) r *= t;
  return r;
}

/**
 * Element of Z[q, q^-1]. Terms are kept sorted by exponent with zero
 * coefficients removed, so structural equality is ring equality.
 */
class LaurentInt {
 public:
  using Terms = std::map<int, Integer>;

  LaurentInt() = default;
  LaurentInt(const Integer& c) { add_term(0, c); }  // NOLINT: implicit constant
  LaurentInt(int c) { add_term(0, Integer(c)); }    // NOLINT
  LaurentInt(std::initializer_list<std::pair<int, int>> terms) {
    for (auto [e, c] : terms) add_term(e, Integer(c));
  }

  /// The monomial c*q^e.
  static LaurentInt monomial(int e, const Integer& c = 1) {
    LaurentInt r;
    r.add_term(e, c);
    return r;
  }

  /// The closed-loop value -q - q^-1.
  static LaurentInt loop() { return {{1, -1}, {-1, -1}}; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentInt& operator+=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentInt& operator-=(const LaurentInt& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator-(const LaurentInt& a) {
    LaurentInt r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentInt&, const LaurentInt&) = default;
  friend std::strong_ordering operator<=>(const LaurentInt& a, const LaurentInt& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first <=> ib->first;
      if (ia->second != ib->second)
        return ia->second < ib->second ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

 private:
  Terms terms_;
};

/// Evaluation at q = q0 for q0 in {+1, -1}.
inline Integer specialize(const LaurentInt& a, int q0) {
  if (q0 != 1 && q0 != -1) throw std::invalid_argument("specialize: q0 must be +1 or -1");
  Integer r = 0;
  for (const auto& [e, c] : a.terms()) r += (q0 == -1 && (e % 2 != 0)) ? Integer(-c) : c;
  return r;
}

/**
 * Human-readable form, highest exponent first: "-q-q^-1", "q^2+2+q^-2",
 * "3q^-1", "0". Parsed back by parse_laurent in expr.hpp.
 */
inline std::string to_string(const LaurentInt& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const int e = it->first;
    Integer c = it->second;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// JSON: list of [exponent, "coefficient"] pairs sorted by exponent.

inline nlohmann::json to_json(const LaurentInt& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : a.terms()) j.push_back({e, c.str()});
  return j;
}

inline LaurentInt laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array");
  LaurentInt r;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("Laurent term must be a pair");
    r.add_term(t[0].get<int>(), Integer(t[1].get<std::string>()));
  }
  return r;
}

}  // namespace sl2tl
