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
 * @file tensor.hpp
 * @brief The sl2 module V1^{⊗n} in the product basis v(I), I a 0/1 string:
 * divided-power actions, the symmetrizers p_k, the intertwiner δ, and the
 * two Temperley-Lieb actions (loop value -2 and +2).
 *
 * v_1 spans weight +1 and v_0 weight -1; E sends v_0 to v_1, F sends v_1 to
 * v_0. A basis vector v(I) has weight 2·(number of ones) - n.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coeffs.hpp"
#include "json.hpp"

namespace sl2tl {

/**
 * A 0/1 string of length at most 63. Position 0 is the leftmost tensor
 * factor; it is stored in the most significant used bit so that numeric
 * order on the packed word is lexicographic order on the string.
 */
class BitString {
 public:
  static constexpr int kMaxLength = 63;

  BitString() = default;
  explicit BitString(std::string_view s) : length_(static_cast<int>(s.size())) {
    if (length_ > kMaxLength) throw std::invalid_argument("bit string too long");
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bit string must contain only 0 and 1");
      word_ = (word_ << 1) | static_cast<std::uint64_t>(c == '1');
    }
  }
  static BitString from_word(int length, std::uint64_t word) {
    BitString b;
    b.length_ = length;
    b.word_ = word;
    return b;
  }
  /// ones copies of 1 followed by zeros copies of 0.
  static BitString ones_then_zeros(int ones, int zeros) {
    return from_word(ones + zeros, ((std::uint64_t{1} << ones) - 1) << zeros);
  }

  int size() const { return length_; }
  std::uint64_t word() const { return word_; }
  int ones() const { return std::popcount(word_); }
  int weight() const { return 2 * ones() - length_; }

  bool operator[](int pos) const { return (word_ >> (length_ - 1 - pos)) & 1U; }

  BitString with(int pos, bool bit) const {
    const std::uint64_t mask = std::uint64_t{1} << (length_ - 1 - pos);
    return from_word(length_, bit ? (word_ | mask) : (word_ & ~mask));
  }
  BitString flipped(int pos) const { return with(pos, !(*this)[pos]); }
  BitString swapped(int pos) const {  // exchange positions pos and pos+1
    return with(pos, (*this)[pos + 1]).with(pos + 1, (*this)[pos]);
  }

  BitString substr(int pos, int count) const {
    const int shift = length_ - pos - count;
    const std::uint64_t mask = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    return from_word(count, (word_ >> shift) & mask);
  }
  /// Replaces positions [pos, pos+piece.size()) with piece.
  BitString replaced(int pos, const BitString& piece) const {
    const int shift = length_ - pos - piece.length_;
    const std::uint64_t mask = ((std::uint64_t{1} << piece.length_) - 1) << shift;
    return from_word(length_, (word_ & ~mask) | (piece.word_ << shift));
  }
  /// Inserts piece before position pos.
  BitString inserted(int pos, const BitString& piece) const {
    const int tail = length_ - pos;
    const std::uint64_t low = word_ & ((std::uint64_t{1} << tail) - 1);
    const std::uint64_t high = word_ >> tail;
    return from_word(length_ + piece.length_,
                     (((high << piece.length_) | piece.word_) << tail) | low);
  }
  BitString erased(int pos, int count) const {
    const int tail = length_ - pos - count;
    const std::uint64_t low = word_ & ((std::uint64_t{1} << tail) - 1);
    const std::uint64_t high = word_ >> (tail + count);
    return from_word(length_ - count, (high << tail) | low);
  }
  friend BitString operator+(const BitString& a, const BitString& b) {
    return from_word(a.length_ + b.length_, (a.word_ << b.length_) | b.word_);
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int p = 0; p < length_; ++p) s[p] = (*this)[p] ? '1' : '0';
    return s;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.word_ <=> b.word_;
  }

 private:
  int length_ = 0;
  std::uint64_t word_ = 0;
};

/// All strings of length n with k ones, in lexicographic order.
inline std::vector<BitString> weight_block(int n, int k) {
  std::vector<BitString> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {BitString::from_word(n, 0)};
  std::uint64_t w = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (w < limit) {
    out.push_back(BitString::from_word(n, w));
    const std::uint64_t c = w & (~w + 1);  // Gosper's hack
    const std::uint64_t r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
  return out;
}

/// Sparse vector of V1^{⊗n} with coefficients in Coeff (Integer or Rational).
template <class Coeff>
class BasicTensorVector {
 public:
  using Terms = std::map<BitString, Coeff>;

  explicit BasicTensorVector(int n = 0) : n_(n) {
    if (n < 0 || n > BitString::kMaxLength) throw std::invalid_argument("bad tensor length");
  }
  static BasicTensorVector basis(const BitString& b, const Coeff& c = Coeff(1)) {
    BasicTensorVector v(b.size());
    v.add(b, c);
    return v;
  }
  static BasicTensorVector basis(std::string_view bits) { return basis(BitString(bits)); }

  int size() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const BitString& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const BitString& b, const Coeff& c) {
    if (b.size() != n_) throw std::invalid_argument("basis string length differs from vector length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicTensorVector& operator+=(const BasicTensorVector& o) {
    check_length(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  BasicTensorVector& operator-=(const BasicTensorVector& o) {
    check_length(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend BasicTensorVector operator+(BasicTensorVector a, const BasicTensorVector& b) { return a += b; }
  friend BasicTensorVector operator-(BasicTensorVector a, const BasicTensorVector& b) { return a -= b; }
  friend BasicTensorVector operator-(const BasicTensorVector& a) { return Coeff(-1) * a; }
  friend BasicTensorVector operator*(const Coeff& s, const BasicTensorVector& v) {
    BasicTensorVector r(v.n_);
    if (s == 0) return r;
    for (const auto& [b, c] : v.terms_) r.terms_.emplace(b, s * c);
    return r;
  }
  friend bool operator==(const BasicTensorVector&, const BasicTensorVector&) = default;

  /// Applies a map defined on basis vectors, extended linearly.
  template <class F>
  BasicTensorVector map_basis(int out_length, F&& on_basis) const {
    BasicTensorVector out(out_length);
    for (const auto& [b, c] : terms_) {
      on_basis(b, [&](const BitString& image, const Coeff& k) { out.add(image, c * k); });
    }
    return out;
  }

 private:
  void check_length(const BasicTensorVector& o) const {
    if (o.n_ != n_) throw std::invalid_argument("tensor vectors of different lengths");
  }

  int n_;
  Terms terms_;
};

using TensorVector = BasicTensorVector<Rational>;
using IntVector = BasicTensorVector<Integer>;

inline TensorVector to_rational(const IntVector& v) {
  TensorVector r(v.size());
  for (const auto& [b, c] : v.terms()) r.add(b, Rational(c));
  return r;
}

/// Throws std::domain_error when a coefficient is not an integer.
inline IntVector to_integral(const TensorVector& v) {
  IntVector r(v.size());
  for (const auto& [b, c] : v.terms()) r.add(b, to_integer(c));
  return r;
}

inline bool is_integral(const TensorVector& v) {
  for (const auto& [b, c] : v.terms())
    if (!is_integral(c)) return false;
  return true;
}

namespace detail {

// Calls visit(J) for every J obtained from b by changing exactly `count` of
// the positions holding `from` into the other bit.
template <class Visit>
void for_each_flip(const BitString& b, bool from, int count, Visit&& visit) {
  std::vector<int> candidates;
  for (int p = 0; p < b.size(); ++p)
    if (b[p] == from) candidates.push_back(p);
  const int m = static_cast<int>(candidates.size());
  if (count < 0 || count > m) return;
  std::vector<int> pick(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pick[t] = t;
  while (true) {
    BitString j = b;
    for (int t : pick) j = j.flipped(candidates[t]);
    visit(j);
    int t = count - 1;
    while (t >= 0 && pick[t] == m - count + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < count; ++u) pick[u] = pick[u - 1] + 1;
  }
}

}  // namespace detail

/**
 * E^(a)1_weight: on v(I) of weight `weight`, the sum of all v(J) obtained by
 * turning exactly a zeros of I into ones; other weights map to zero.
 */
template <class Coeff>
BasicTensorVector<Coeff> act_E(int a, int weight, const BasicTensorVector<Coeff>& v) {
  if (a < 0) throw std::invalid_argument("divided power must be nonnegative");
  return v.map_basis(v.size(), [&](const BitString& b, auto emit) {
    if (b.weight() != weight) return;
    detail::for_each_flip(b, false, a, [&](const BitString& j) { emit(j, Coeff(1)); });
  });
}

/// F^(a)1_weight: turns exactly a ones into zeros.
template <class Coeff>
BasicTensorVector<Coeff> act_F(int a, int weight, const BasicTensorVector<Coeff>& v) {
  if (a < 0) throw std::invalid_argument("divided power must be nonnegative");
  return v.map_basis(v.size(), [&](const BitString& b, auto emit) {
    if (b.weight() != weight) return;
    detail::for_each_flip(b, true, a, [&](const BitString& j) { emit(j, Coeff(1)); });
  });
}

/// Id^{⊗pos} ⊗ p_k ⊗ Id^{⊗(n-pos-k)} where p_k averages over strings with the same number of ones.
inline TensorVector symmetrize(int k, int pos, const TensorVector& v) {
  if (k < 0 || pos < 0 || pos + k > v.size()) throw std::out_of_range("symmetrizer does not fit");
  return v.map_basis(v.size(), [&](const BitString& b, auto emit) {
    const int ones = b.substr(pos, k).ones();
    const auto block = weight_block(k, ones);
    const Rational share(Integer(1), binomial(k, ones));
    for (const auto& piece : block) emit(b.replaced(pos, piece), share);
  });
}

/// Inserts δ(1) = v(10) - v(01) before position pos; the length grows by two.
template <class Coeff>
BasicTensorVector<Coeff> delta_insert(int pos, const BasicTensorVector<Coeff>& v) {
  if (pos < 0 || pos > v.size()) throw std::out_of_range("delta insertion position out of range");
  static const BitString kOneZero("10");
  static const BitString kZeroOne("01");
  return v.map_basis(v.size() + 2, [&](const BitString& b, auto emit) {
    emit(b.inserted(pos, kOneZero), Coeff(1));
    emit(b.inserted(pos, kZeroOne), Coeff(-1));
  });
}

namespace detail {
inline void check_tl_index(int i, int n) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("TL generator index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}
}  // namespace detail

/// U_i acting by u on factors i, i+1: u(v10) = v01 - v10, u(v01) = v10 - v01, u(v00) = u(v11) = 0.
template <class Coeff>
BasicTensorVector<Coeff> tl_action_q1(int i, const BasicTensorVector<Coeff>& v) {
  detail::check_tl_index(i, v.size());
  return v.map_basis(v.size(), [&](const BitString& b, auto emit) {
    if (b[i - 1] == b[i]) return;
    emit(b.swapped(i - 1), Coeff(1));
    emit(b, Coeff(-1));
  });
}

/// The loop-value +2 model: v(I) -> v(I) + v(s_i I) when bits i, i+1 differ, else 0.
template <class Coeff>
BasicTensorVector<Coeff> tl_action_qm1(int i, const BasicTensorVector<Coeff>& v) {
  detail::check_tl_index(i, v.size());
  return v.map_basis(v.size(), [&](const BitString& b, auto emit) {
    if (b[i - 1] == b[i]) return;
    emit(b, Coeff(1));
    emit(b.swapped(i - 1), Coeff(1));
  });
}

/// v(I) ⊗ w(J) -> v(IJ), bilinear.
template <class Coeff>
BasicTensorVector<Coeff> tensor(const BasicTensorVector<Coeff>& x, const BasicTensorVector<Coeff>& y) {
  BasicTensorVector<Coeff> out(x.size() + y.size());
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) out.add(bx + by, cx * cy);
  return out;
}

/// Readable form "v(0101) + 2 v(1100) - 1/2 v(10)"; "0" for the zero vector.
template <class Coeff>
std::string to_string(const BasicTensorVector<Coeff>& v, std::string_view symbol = "v") {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v.terms()) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (c < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    if (mag != 1) out += to_string(mag) + " ";
    out += std::string(symbol) + "(" + b.str() + ")";
    first = false;
  }
  return out;
}

// JSON: {"n": int, "terms": [{"bits": "0110", "coeff": {"num": str, "den": str}}]}

inline nlohmann::json to_json(const TensorVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : v.terms()) {
    terms.push_back({{"bits", b.str()},
                     {"coeff",
                      {{"num", boost::multiprecision::numerator(c).str()},
                       {"den", boost::multiprecision::denominator(c).str()}}}});
  }
  return {{"n", v.size()}, {"terms", terms}};
}

inline TensorVector vector_from_json(const nlohmann::json& j) {
  TensorVector v(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    const Integer num(t.at("coeff").at("num").get<std::string>());
    const Integer den(t.at("coeff").at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator");
    v.add(BitString(t.at("bits").get<std::string>()), make_rational(num, den));
  }
  return v;
}

}  // namespace sl2tl
