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
 * @file udot.hpp
 * @brief The integral idempotented algebra U̇(sl2) in the normal-form
 * spanning set E^(a)1_i F^(b), Lusztig's canonical basis, and the action
 * on tensor powers of the fundamental representation.
 *
 * Products are written left to right as algebra products: in x·y, y acts
 * first. The Cartan element never appears on its own; binomials in H are
 * evaluated against the neighbouring idempotent's weight.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coeffs.hpp"
#include "json.hpp"
#include "tensor.hpp"

namespace sl2tl {

/// E^(a) 1_i F^(b). Source weight i+2b, target weight i+2a.
struct UdotMonomial {
  int a = 0;
  int i = 0;
  int b = 0;

  int source() const { return i + 2 * b; }
  int target() const { return i + 2 * a; }

  static UdotMonomial idempotent(int weight) { return {0, weight, 0}; }
  /// E^(a)1_w: E^(a) applied to weight w.
  static UdotMonomial E(int a, int w) { return {a, w, 0}; }
  /// F^(b)1_w: F^(b) applied to weight w; the middle weight is w - 2b.
  static UdotMonomial F(int b, int w) { return {0, w - 2 * b, b}; }

  friend bool operator==(const UdotMonomial&, const UdotMonomial&) = default;
  friend auto operator<=>(const UdotMonomial&, const UdotMonomial&) = default;
};

class UdotElement {
 public:
  using Terms = std::map<UdotMonomial, Integer>;

  UdotElement() = default;
  UdotElement(const UdotMonomial& m, const Integer& c = 1) { add(m, c); }  // NOLINT

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(const UdotMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const UdotMonomial& m, const Integer& c) {
    if (m.a < 0 || m.b < 0) throw std::invalid_argument("divided powers must be nonnegative");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  UdotElement& operator+=(const UdotElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  UdotElement& operator-=(const UdotElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend UdotElement operator+(UdotElement x, const UdotElement& y) { return x += y; }
  friend UdotElement operator-(UdotElement x, const UdotElement& y) { return x -= y; }
  friend UdotElement operator*(const Integer& s, const UdotElement& x) {
    UdotElement r;
    for (const auto& [m, c] : x.terms_) r.add(m, s * c);
    return r;
  }
  friend bool operator==(const UdotElement&, const UdotElement&) = default;

 private:
  Terms terms_;
};

/**
 * F^(f) E^(e) 1_w in normal form:
 *   sum_{j=0}^{min(e,f)} C(f - e - w, j) E^(e-j) 1_{w-2f+2j} F^(f-j).
 * C is the binomial with arbitrary integer top (gen_binomial).
 */
inline UdotElement reorder_FE(int f, int e, int w) {
  UdotElement out;
  for (int j = 0; j <= std::min(e, f); ++j)
    out.add({e - j, w - 2 * f + 2 * j, f - j}, gen_binomial(Integer(f - e - w), j));
  return out;
}

inline UdotElement multiply(const UdotMonomial& x, const UdotMonomial& y) {
  UdotElement out;
  if (x.source() != y.target()) return out;
  // x·y = E^(x.a) [F^(x.b) E^(y.a) 1_{y.i}] F^(y.b)
  const UdotElement middle = reorder_FE(x.b, y.a, y.i);
  for (const auto& [m, c] : middle.terms()) {
    const Integer left = binomial(x.a + m.a, x.a);
    const Integer right = binomial(m.b + y.b, y.b);
    out.add({x.a + m.a, m.i, m.b + y.b}, c * left * right);
  }
  return out;
}

inline UdotElement multiply(const UdotElement& x, const UdotElement& y) {
  UdotElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms())
      if (mx.source() == my.target()) out += (cx * cy) * multiply(mx, my);
  return out;
}

/**
 * Element of the canonical basis. EF is E^(a)1_{-i}F^(b) with i >= a+b; FE is
 * F^(b)1_i E^(a) with i > a+b. The element E^(a)1_{-a-b}F^(b) = F^(b)1_{a+b}E^(a)
 * is always stored with shape EF.
 */
struct CanonicalLabel {
  enum class Shape { EF, FE };
  Shape shape = Shape::EF;
  int a = 0;
  int b = 0;
  int i = 0;

  bool valid() const {
    if (a < 0 || b < 0 || i < 0) return false;
    return shape == Shape::EF ? i >= a + b : i > a + b;
  }
  int source() const { return shape == Shape::EF ? -i + 2 * b : i - 2 * a; }
  int target() const { return shape == Shape::EF ? -i + 2 * a : i - 2 * b; }

  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;
  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

using CanonicalCoords = std::map<CanonicalLabel, Integer>;

/// Normal-form expansion of a canonical basis element.
inline UdotElement from_canonical(const CanonicalLabel& x) {
  if (!x.valid()) throw std::invalid_argument("not a canonical basis label");
  if (x.shape == CanonicalLabel::Shape::EF) return UdotMonomial{x.a, -x.i, x.b};
  return reorder_FE(x.b, x.a, x.i - 2 * x.a);
}

inline UdotElement from_canonical(const CanonicalCoords& coords) {
  UdotElement out;
  for (const auto& [label, c] : coords) out += c * from_canonical(label);
  return out;
}

/**
 * Canonical-basis coordinates. A monomial E^(a)1_m F^(b) with m <= -(a+b) is
 * already canonical; otherwise it is the leading term of F^(b)1_{m+2a+2b}E^(a),
 * whose remaining terms have strictly smaller divided powers in the same
 * weight space. Peeling off the largest such monomial first is back
 * substitution over Z.
 */
inline CanonicalCoords to_canonical(const UdotElement& x) {
  CanonicalCoords out;
  UdotElement rest = x;
  while (true) {
    const UdotMonomial* pick = nullptr;
    for (const auto& [m, c] : rest.terms()) {
      if (m.i <= -(m.a + m.b)) continue;
      if (!pick || std::min(m.a, m.b) > std::min(pick->a, pick->b)) pick = &m;
    }
    if (!pick) break;
    const UdotMonomial m = *pick;
    const Integer c = rest.coeff(m);
    const CanonicalLabel label{CanonicalLabel::Shape::FE, m.a, m.b, m.i + 2 * m.a + 2 * m.b};
    out[label] += c;
    rest -= c * from_canonical(label);
  }
  for (const auto& [m, c] : rest.terms())
    out[CanonicalLabel{CanonicalLabel::Shape::EF, m.a, m.b, -m.i}] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

struct PositivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const CanonicalLabel& x);

/// Coordinates of x·y in the canonical basis; throws PositivityError on a negative coefficient.
inline CanonicalCoords structure_constants(const CanonicalLabel& x, const CanonicalLabel& y) {
  CanonicalCoords z = to_canonical(multiply(from_canonical(x), from_canonical(y)));
  for (const auto& [label, c] : z) {
    if (c < 0) {
      throw PositivityError("negative structure constant " + c.str() + " at " + to_string(label) +
                            " in " + to_string(x) + " * " + to_string(y));
    }
  }
  return z;
}

enum class Generator { E, F };

/// Terms of ΔE^(a) (or ΔF^(a)): pairs (b, a-b) for b = 0..a.
inline std::vector<std::pair<int, int>> coproduct_terms(Generator, int a) {
  if (a < 0) throw std::invalid_argument("divided power must be nonnegative");
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b <= a; ++b) out.emplace_back(b, a - b);
  return out;
}

/// Action of E^(a)1_i F^(b) on V1^{⊗n}: F^(b) first, then E^(a).
template <class Coeff>
BasicTensorVector<Coeff> act(const UdotMonomial& m, const BasicTensorVector<Coeff>& v) {
  return act_E(m.a, m.i, act_F(m.b, m.source(), v));
}

template <class Coeff>
BasicTensorVector<Coeff> act(const UdotElement& x, const BasicTensorVector<Coeff>& v) {
  BasicTensorVector<Coeff> out(v.size());
  for (const auto& [m, c] : x.terms()) out += Coeff(c) * act(m, v);
  return out;
}

// Printing. Monomials read "E(a) 1(i) F(b)" with zero powers omitted.

inline std::string to_string(const UdotMonomial& m) {
  std::string s;
  if (m.a != 0) s += "E(" + std::to_string(m.a) + ") ";
  s += "1(" + std::to_string(m.i) + ")";
  if (m.b != 0) s += " F(" + std::to_string(m.b) + ")";
  return s;
}

inline std::string to_string(const CanonicalLabel& x) {
  if (x.shape == CanonicalLabel::Shape::EF) return to_string(UdotMonomial{x.a, -x.i, x.b});
  std::string s;
  if (x.b != 0) s += "F(" + std::to_string(x.b) + ") ";
  s += "1(" + std::to_string(x.i) + ")";
  if (x.a != 0) s += " E(" + std::to_string(x.a) + ")";
  return s;
}

namespace detail {
template <class Key>
std::string signed_sum(const std::vector<std::pair<Key, Integer>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) out += first ? "- " : " - ";
    else if (!first) out += " + ";
    if (mag != 1) out += mag.str() + " ";
    out += to_string(k);
    first = false;
  }
  return out;
}
}  // namespace detail

/// Terms ordered by total divided power (largest first), then by weight.
inline std::string to_string(const UdotElement& x) {
  std::vector<std::pair<UdotMonomial, Integer>> terms(x.terms().begin(), x.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const auto& p = l.first;
    const auto& q = r.first;
    if (p.a + p.b != q.a + q.b) return p.a + p.b > q.a + q.b;
    return std::tie(p.a, p.i, p.b) < std::tie(q.a, q.i, q.b);
  });
  return detail::signed_sum(terms);
}

inline std::string to_string(const CanonicalCoords& x) {
  std::vector<std::pair<CanonicalLabel, Integer>> terms(x.begin(), x.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const auto& p = l.first;
    const auto& q = r.first;
    if (p.a + p.b != q.a + q.b) return p.a + p.b > q.a + q.b;
    return p < q;
  });
  return detail::signed_sum(terms);
}

// JSON: monomial {"a","i","b"}; canonical label {"shape","a","b","i"}.

inline nlohmann::json to_json(const UdotMonomial& m) { return {{"a", m.a}, {"i", m.i}, {"b", m.b}}; }

inline nlohmann::json to_json(const CanonicalLabel& x) {
  return {{"shape", x.shape == CanonicalLabel::Shape::EF ? "EF" : "FE"}, {"a", x.a}, {"b", x.b}, {"i", x.i}};
}

inline nlohmann::json to_json(const UdotElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms()) out.push_back({{"monomial", to_json(m)}, {"coeff", c.str()}});
  return out;
}

inline nlohmann::json to_json(const CanonicalCoords& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [l, c] : x) out.push_back({{"label", to_json(l)}, {"coeff", c.str()}});
  return out;
}

inline UdotMonomial monomial_from_json(const nlohmann::json& j) {
  UdotMonomial m{j.at("a").get<int>(), j.at("i").get<int>(), j.at("b").get<int>()};
  if (m.a < 0 || m.b < 0) throw std::invalid_argument("divided powers must be nonnegative");
  return m;
}

inline CanonicalLabel label_from_json(const nlohmann::json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  if (shape != "EF" && shape != "FE") throw std::invalid_argument("shape must be EF or FE");
  CanonicalLabel x{shape == "EF" ? CanonicalLabel::Shape::EF : CanonicalLabel::Shape::FE,
                   j.at("a").get<int>(), j.at("b").get<int>(), j.at("i").get<int>()};
  if (!x.valid()) throw std::invalid_argument("not a canonical basis label");
  return x;
}

}  // namespace sl2tl
