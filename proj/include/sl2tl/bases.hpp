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
 * @file bases.hpp
 * @brief The simple basis l(I) and projective basis p(I) of V1^{⊗n}, the
 * bilinear form <v(I), v(J)> = δ_{IJ}, and per-weight-block transition
 * matrices between the product, simple and projective bases.
 *
 * l(I) is built from the stripping rules and δ insertions. p(I) is defined
 * as the basis dual to l under the form. Within a weight block, l(I) is
 * v(I) plus lexicographically smaller terms, so the dual system is
 * unitriangular and is solved over Z without division.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coeffs.hpp"
#include "json.hpp"
#include "tensor.hpp"

namespace sl2tl {

/// Bilinear extension of <v(I), v(J)> = δ_{IJ}.
template <class Coeff>
Coeff form(const BasicTensorVector<Coeff>& v, const BasicTensorVector<Coeff>& w) {
  if (v.size() != w.size()) throw std::invalid_argument("form: vectors of different lengths");
  const auto& small = v.terms().size() <= w.terms().size() ? v : w;
  const auto& large = &small == &v ? w : v;
  Coeff sum = 0;
  for (const auto& [b, c] : small.terms()) {
    auto it = large.terms().find(b);
    if (it != large.terms().end()) sum += c * it->second;
  }
  return sum;
}

namespace detail {

inline IntVector prefix_bit(bool bit, const IntVector& v) {
  const BitString head = BitString(bit ? "1" : "0");
  return v.map_basis(v.size() + 1, [&](const BitString& b, auto emit) { emit(head + b, Integer(1)); });
}
inline IntVector suffix_bit(const IntVector& v, bool bit) {
  const BitString tail = BitString(bit ? "1" : "0");
  return v.map_basis(v.size() + 1, [&](const BitString& b, auto emit) { emit(b + tail, Integer(1)); });
}

}  // namespace detail

/**
 * l(I) with rule (iv) applied at position `split` (the index of a "10"
 * occurrence) when neither stripping rule applies at the top level; deeper
 * levels always use the leftmost occurrence.
 */
inline IntVector simple_l_split(const BitString& s, std::optional<int> split = std::nullopt) {
  const int n = s.size();
  if (n == 0) return IntVector::basis(s);
  if (n == 1) return IntVector::basis(s);
  if (!s[0]) return detail::prefix_bit(false, simple_l_split(s.substr(1, n - 1)));
  if (s[n - 1]) return detail::suffix_bit(simple_l_split(s.substr(0, n - 1)), true);
  int pos = -1;
  if (split) {
    if (*split < 0 || *split + 1 >= n || !s[*split] || s[*split + 1])
      throw std::invalid_argument("no \"10\" at the requested split position");
    pos = *split;
  } else {
    for (int p = 0; p + 1 < n; ++p) {
      if (s[p] && !s[p + 1]) {
        pos = p;
        break;
      }
    }
  }
  // A string starting with 1 and ending with 0 always contains "10".
  return delta_insert(pos, simple_l_split(s.erased(pos, 2)));
}

inline IntVector simple_l(const BitString& s) { return simple_l_split(s); }

/// l and p for every string of length n, grouped by weight block.
class BasisTable {
 public:
  struct Block {
    int ones = 0;
    std::vector<BitString> labels;  ///< lexicographically descending (dominance order)
    std::vector<IntVector> simple;
    std::vector<IntVector> projective;
    std::unordered_map<std::uint64_t, std::size_t> index;
  };

  explicit BasisTable(int n) : n_(n) {
    if (n < 0 || n > 20) throw std::out_of_range("basis tables are limited to n <= 20");
    for (int k = 0; k <= n; ++k) blocks_.push_back(build_block(n, k));
  }

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int ones) const { return blocks_.at(static_cast<std::size_t>(ones)); }

  const IntVector& simple(const BitString& s) const { return lookup(s, &Block::simple); }
  const IntVector& projective(const BitString& s) const { return lookup(s, &Block::projective); }

 private:
  const IntVector& lookup(const BitString& s, std::vector<IntVector> Block::*member) const {
    if (s.size() != n_) throw std::invalid_argument("string length does not match basis table");
    const Block& blk = block(s.ones());
    return (blk.*member)[blk.index.at(s.word())];
  }

  static Block build_block(int n, int k) {
    Block blk;
    blk.ones = k;
    blk.labels = weight_block(n, k);
    std::reverse(blk.labels.begin(), blk.labels.end());
    const std::size_t size = blk.labels.size();
    for (std::size_t r = 0; r < size; ++r) blk.index.emplace(blk.labels[r].word(), r);
    for (const auto& s : blk.labels) blk.simple.push_back(simple_l(s));

    // Row r of L lists (column, entry) with column >= r in descending order.
    std::vector<std::vector<std::pair<std::size_t, Integer>>> lrows(size);
    for (std::size_t r = 0; r < size; ++r) {
      for (const auto& [b, c] : blk.simple[r].terms()) {
        const std::size_t col = blk.index.at(b.word());
        if (col < r || (col == r && c != 1))
          throw std::logic_error("simple basis is not unitriangular at " + blk.labels[r].str());
        if (col != r) lrows[r].emplace_back(col, c);
      }
    }
    // Solve sum_K P[I][K] L[J][K] = δ_{IJ}. P[I][K] vanishes for K after I in
    // descending order, so process J from I backwards to the front.
    std::vector<Integer> row(size);
    for (std::size_t i = 0; i < size; ++i) {
      std::fill(row.begin(), row.end(), Integer(0));
      for (std::size_t jj = i + 1; jj-- > 0;) {
        Integer value = jj == i ? Integer(1) : Integer(0);
        for (const auto& [col, c] : lrows[jj]) {
          if (col > i) continue;
          if (row[col] != 0) value -= row[col] * c;
        }
        row[jj] = value;
      }
      IntVector p(n);
      for (std::size_t col = 0; col <= i; ++col)
        if (row[col] != 0) p.add(blk.labels[col], row[col]);
      blk.projective.push_back(std::move(p));
    }
    return blk;
  }

  int n_;
  std::vector<Block> blocks_;
};

/// Shared, lazily built tables; safe to call from several threads.
inline std::shared_ptr<const BasisTable> basis_table(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const BasisTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const BasisTable>(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(n, std::move(table)).first->second;
}

inline IntVector projective_p(const BitString& s) { return basis_table(s.size())->projective(s); }

enum class BasisKind { Product, Simple, Projective };

inline char basis_symbol(BasisKind k) {
  switch (k) {
    case BasisKind::Product: return 'v';
    case BasisKind::Simple: return 'l';
    case BasisKind::Projective: return 'p';
  }
  return '?';
}

inline std::optional<BasisKind> basis_from_symbol(std::string_view s) {
  if (s == "v") return BasisKind::Product;
  if (s == "l") return BasisKind::Simple;
  if (s == "p") return BasisKind::Projective;
  return std::nullopt;
}

inline IntVector basis_vector(BasisKind kind, const BitString& s) {
  switch (kind) {
    case BasisKind::Product: return IntVector::basis(s);
    case BasisKind::Simple: return basis_table(s.size())->simple(s);
    case BasisKind::Projective: return projective_p(s);
  }
  throw std::logic_error("unknown basis");
}

/**
 * Coordinates of v in the chosen basis. By duality the p-coordinate at J is
 * <v, l(J)> and the l-coordinate at J is <v, p(J)>.
 */
template <class Coeff>
BasicTensorVector<Coeff> coordinates(const BasicTensorVector<Coeff>& v, BasisKind kind) {
  if (kind == BasisKind::Product) return v;
  auto table = basis_table(v.size());
  BasicTensorVector<Coeff> out(v.size());
  std::map<int, bool> seen;
  for (const auto& [b, c] : v.terms()) seen[b.ones()] = true;
  for (const auto& [ones, unused] : seen) {
    const auto& blk = table->block(ones);
    const auto& dual = kind == BasisKind::Projective ? blk.simple : blk.projective;
    for (std::size_t r = 0; r < blk.labels.size(); ++r) {
      Coeff sum = 0;
      for (const auto& [b, c] : dual[r].terms()) {
        auto it = v.terms().find(b);
        if (it != v.terms().end()) sum += it->second * Coeff(c);
      }
      out.add(blk.labels[r], sum);
    }
  }
  return out;
}

/// Square matrix for one weight block: row I lists the source basis element I in the target basis.
struct TransitionMatrix {
  int n = 0;
  int ones = 0;
  BasisKind from = BasisKind::Product;
  BasisKind to = BasisKind::Product;
  std::vector<BitString> labels;  ///< rows and columns, dominance order
  std::vector<std::vector<Integer>> entries;

  bool is_unitriangular() const {
    bool lower = true;
    bool upper = true;
    for (std::size_t r = 0; r < labels.size(); ++r) {
      if (entries[r][r] != 1) return false;
      for (std::size_t c = 0; c < labels.size(); ++c) {
        if (c > r && entries[r][c] != 0) lower = false;
        if (c < r && entries[r][c] != 0) upper = false;
      }
    }
    return lower || upper;
  }
};

namespace detail {

using Dense = std::vector<std::vector<Integer>>;

inline Dense matrix_to_product(const BasisTable::Block& blk, BasisKind kind) {
  const std::size_t size = blk.labels.size();
  Dense m(size, std::vector<Integer>(size));
  for (std::size_t r = 0; r < size; ++r) {
    if (kind == BasisKind::Product) {
      m[r][r] = 1;
      continue;
    }
    const IntVector& row = kind == BasisKind::Simple ? blk.simple[r] : blk.projective[r];
    for (const auto& [b, c] : row.terms()) m[r][blk.index.at(b.word())] = c;
  }
  return m;
}

inline Dense transpose(const Dense& m) {
  Dense t(m.size(), std::vector<Integer>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) t[c][r] = m[r][c];
  return t;
}

inline Dense multiply(const Dense& x, const Dense& y) {
  const std::size_t size = x.size();
  Dense out(size, std::vector<Integer>(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t k = 0; k < size; ++k) {
      if (x[r][k] == 0) continue;
      for (std::size_t c = 0; c < size; ++c)
        if (y[k][c] != 0) out[r][c] += x[r][k] * y[k][c];
    }
  return out;
}

}  // namespace detail

/**
 * Transition matrices from one basis to another, one per weight block
 * k = 0..n. The inverses come from duality: (l→v)^{-1} = (p→v)^T and
 * (p→v)^{-1} = (l→v)^T.
 */
inline std::vector<TransitionMatrix> transition(int n, BasisKind from, BasisKind to) {
  auto table = basis_table(n);
  std::vector<TransitionMatrix> out;
  for (const auto& blk : table->blocks()) {
    auto from_v = detail::matrix_to_product(blk, from);
    detail::Dense v_to;
    switch (to) {
      case BasisKind::Product: v_to = detail::matrix_to_product(blk, BasisKind::Product); break;
      case BasisKind::Simple: v_to = detail::transpose(detail::matrix_to_product(blk, BasisKind::Projective)); break;
      case BasisKind::Projective: v_to = detail::transpose(detail::matrix_to_product(blk, BasisKind::Simple)); break;
    }
    TransitionMatrix t;
    t.n = n;
    t.ones = blk.ones;
    t.from = from;
    t.to = to;
    t.labels = blk.labels;
    t.entries = from == BasisKind::Product ? std::move(v_to)
                : to == BasisKind::Product ? std::move(from_v)
                                           : detail::multiply(from_v, v_to);
    out.push_back(std::move(t));
  }
  return out;
}

/**
 * Closed formula for p(0^j 1^k 0^l 1^m), evaluated with symmetrizers on
 * v(1^{k+m} 0^{j+l}); two cases according to k <= l or k >= l.
 */
inline TensorVector eval_0101_formula(int j, int k, int l, int m) {
  if (j < 0 || k < 0 || l < 0 || m < 0) throw std::invalid_argument("exponents must be nonnegative");
  TensorVector v = TensorVector::basis(BitString::ones_then_zeros(k + m, j + l));
  Integer scale;
  if (k <= l) {
    v = symmetrize(j + l + m, k, v);
    v = symmetrize(j + k, 0, v);
    scale = binomial(j + k, k) * binomial(j + l + m, m);
  } else {
    v = symmetrize(j + k + m, 0, v);
    v = symmetrize(l + m, j + k, v);
    scale = binomial(l + m, m) * binomial(j + k + m, j);
  }
  return Rational(scale) * v;
}

inline BitString block_string(int j, int k, int l, int m) {
  return BitString(std::string(static_cast<std::size_t>(j), '0') + std::string(static_cast<std::size_t>(k), '1') +
                   std::string(static_cast<std::size_t>(l), '0') + std::string(static_cast<std::size_t>(m), '1'));
}

inline nlohmann::json to_json(const TransitionMatrix& t) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& s : t.labels) labels.push_back(s.str());
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.entries) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : r) row.push_back(c.str());
    rows.push_back(row);
  }
  return {{"n", t.n},
          {"ones", t.ones},
          {"from", std::string(1, basis_symbol(t.from))},
          {"to", std::string(1, basis_symbol(t.to))},
          {"labels", labels},
          {"entries", rows}};
}

/// Aligned text table for one block.
inline std::string to_text(const TransitionMatrix& t) {
  std::size_t width = 1;
  for (const auto& r : t.entries)
    for (const auto& c : r) width = std::max(width, c.str().size());
  width = std::max(width, static_cast<std::size_t>(t.n));
  std::string out = "block n=" + std::to_string(t.n) + " k=" + std::to_string(t.ones) + "  " +
                    basis_symbol(t.from) + " -> " + basis_symbol(t.to) + "\n";
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  out += std::string(static_cast<std::size_t>(t.n) + 4, ' ');
  for (const auto& s : t.labels) out += " " + pad(s.str());
  out += "\n";
  for (std::size_t r = 0; r < t.labels.size(); ++r) {
    out += std::string(1, basis_symbol(t.from)) + "(" + t.labels[r].str() + ")" + " ";
    for (const auto& c : t.entries[r]) out += " " + pad(c.str());
    out += "\n";
  }
  return out;
}

}  // namespace sl2tl
