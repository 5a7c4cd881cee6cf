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
 * @file planar.hpp
 * @brief The Temperley-Lieb category: crossingless matchings between n
 * bottom and m top points, composition with loop removal, the cap/cup
 * generators and a checker for the defining relations.
 *
 * Boundary points are numbered 0..n-1 along the bottom (left to right) and
 * n..n+m-1 along the top (left to right). Morphisms compose bottom to top:
 * compose(f, g) stacks g on top of f, i.e. "g after f". In the usual
 * right-to-left notation this is g∘f.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coeffs.hpp"
#include "json.hpp"

namespace sl2tl {

class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Validates the involution and planarity; throws std::invalid_argument.
  PlanarDiagram(int bottom, int top, std::vector<int> partner)
      : bottom_(bottom), top_(top), partner_(std::move(partner)) {
    validate();
  }

  static PlanarDiagram from_pairs(int bottom, int top,
                                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> partner(static_cast<std::size_t>(bottom + top), -1);
    for (auto [p, q] : pairs) {
      if (p < 0 || q < 0 || p >= bottom + top || q >= bottom + top)
        throw std::invalid_argument("diagram point out of range");
      if (partner[p] != -1 || partner[q] != -1 || p == q)
        throw std::invalid_argument("diagram point used twice");
      partner[p] = q;
      partner[q] = p;
    }
    return PlanarDiagram(bottom, top, std::move(partner));
  }

  static PlanarDiagram identity(int n) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n));
    for (int p = 0; p < n; ++p) {
      partner[p] = n + p;
      partner[n + p] = p;
    }
    return PlanarDiagram(n, n, std::move(partner));
  }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int partner(int p) const { return partner_[p]; }
  const std::vector<int>& partners() const { return partner_; }

  bool is_bottom(int p) const { return p < bottom_; }
  int top_point(int j) const { return bottom_ + j; }

  /// Pairs (p, q) with p < q, sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < static_cast<int>(partner_.size()); ++p)
      if (p < partner_[p]) out.emplace_back(p, partner_[p]);
    return out;
  }

  int through_strands() const {
    int t = 0;
    for (int p = 0; p < bottom_; ++p) t += partner_[p] >= bottom_;
    return t;
  }

  /// Position of a point when walking bottom-left→bottom-right→top-right→top-left.
  int cyclic_position(int p) const { return p < bottom_ ? p : bottom_ + (top_ - 1 - (p - bottom_)); }

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
  friend auto operator<=>(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (auto c = a.bottom_ <=> b.bottom_; c != 0) return c;
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    return a.partner_ <=> b.partner_;
  }

 private:
  void validate() const {
    if (bottom_ < 0 || top_ < 0) throw std::invalid_argument("negative boundary count");
    const int total = bottom_ + top_;
    if (static_cast<int>(partner_.size()) != total)
      throw std::invalid_argument("partner array has wrong length");
    if (total % 2 != 0) throw std::invalid_argument("odd number of boundary points");
    for (int p = 0; p < total; ++p) {
      const int q = partner_[p];
      if (q < 0 || q >= total || q == p || partner_[q] != p)
        throw std::invalid_argument("partner array is not a fixed-point-free involution");
    }
    // Balanced-parenthesis test in cyclic order.
    std::vector<int> at(static_cast<std::size_t>(total));
    for (int p = 0; p < total; ++p) at[cyclic_position(p)] = p;
    std::vector<int> stack;
    for (int pos = 0; pos < total; ++pos) {
      const int p = at[pos];
      const int other = cyclic_position(partner_[p]);
      if (other > pos) {
        stack.push_back(other);
      } else {
        if (stack.empty() || stack.back() != pos)
          throw std::invalid_argument("diagram has crossing arcs");
        stack.pop_back();
      }
    }
  }

  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> partner_;
};

namespace detail {

// Non-crossing perfect matchings of points 0..total-1 on a line, written into
// `cyclic` as partner positions.
inline void enumerate_matchings(int lo, int hi, std::vector<int>& cyclic,
                                const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (int j = lo + 1; j < hi; j += 2) {
    cyclic[lo] = j;
    cyclic[j] = lo;
    enumerate_matchings(lo + 1, j, cyclic, [&] { enumerate_matchings(j + 1, hi, cyclic, emit); });
  }
}

}  // namespace detail

/// All crossingless matchings from n bottom to m top points; empty when n+m is odd.
inline std::vector<PlanarDiagram> enumerate_diagrams(int n, int m) {
  std::vector<PlanarDiagram> out;
  if (n < 0 || m < 0 || (n + m) % 2 != 0) return out;
  const int total = n + m;
  auto point_at = [&](int pos) { return pos < n ? pos : n + (m - 1 - (pos - n)); };
  std::vector<int> cyclic(static_cast<std::size_t>(total), -1);
  detail::enumerate_matchings(0, total, cyclic, [&] {
    std::vector<int> partner(static_cast<std::size_t>(total));
    for (int pos = 0; pos < total; ++pos) partner[point_at(pos)] = point_at(cyclic[pos]);
    out.emplace_back(n, m, std::move(partner));
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Formal Z[q,q^-1]-combination of diagrams with a common source and target.
class TLMorphism {
 public:
  using Terms = std::map<PlanarDiagram, LaurentInt>;

  TLMorphism(int source, int target) : source_(source), target_(target) {
    if (source < 0 || target < 0) throw std::invalid_argument("negative object in TL category");
  }
  explicit TLMorphism(const PlanarDiagram& d, const LaurentInt& c = 1)
      : source_(d.bottom()), target_(d.top()) {
    add(d, c);
  }

  static TLMorphism identity(int n) { return TLMorphism(PlanarDiagram::identity(n)); }

  int source() const { return source_; }
  int target() const { return target_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentInt coeff(const PlanarDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? LaurentInt{} : it->second;
  }

  void add(const PlanarDiagram& d, const LaurentInt& c) {
    if (d.bottom() != source_ || d.top() != target_)
      throw std::invalid_argument("diagram boundary does not match morphism");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TLMorphism& operator+=(const TLMorphism& o) {
    check_same_hom(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  TLMorphism& operator-=(const TLMorphism& o) {
    check_same_hom(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
  friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a -= b; }
  friend TLMorphism operator*(const LaurentInt& s, const TLMorphism& f) {
    TLMorphism r(f.source_, f.target_);
    for (const auto& [d, c] : f.terms_) r.add(d, s * c);
    return r;
  }

  friend bool operator==(const TLMorphism&, const TLMorphism&) = default;

 private:
  void check_same_hom(const TLMorphism& o) const {
    if (o.source_ != source_ || o.target_ != target_)
      throw std::invalid_argument("adding morphisms with different boundaries");
  }

  int source_;
  int target_;
  Terms terms_;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Result of stacking two diagrams: the reduced diagram and the number of closed loops removed.
struct Concatenation {
  PlanarDiagram diagram;
  int loops = 0;
};

/**
 * Stacks `upper` on top of `lower`. Node layout for the union-find: lower
 * bottom points, then the glued middle points, then upper top points.
 */
inline Concatenation concatenate(const PlanarDiagram& lower, const PlanarDiagram& upper) {
  if (lower.top() != upper.bottom())
    throw std::invalid_argument("cannot compose: target " + std::to_string(lower.top()) +
                                " != source " + std::to_string(upper.bottom()));
  const int n = lower.bottom();
  const int mid = lower.top();
  const int k = upper.top();
  auto lower_node = [&](int p) { return p; };  // lower top point n+j is middle node n+j
  auto upper_node = [&](int p) { return p < mid ? n + p : n + mid + (p - mid); };
  detail::UnionFind uf(n + mid + k);
  for (auto [p, q] : lower.pairs()) uf.unite(lower_node(p), lower_node(q));
  for (auto [p, q] : upper.pairs()) uf.unite(upper_node(p), upper_node(q));

  std::map<int, int> outer_seen;  // root -> first outer node
  std::vector<int> partner(static_cast<std::size_t>(n + k), -1);
  auto outer_index = [&](int node) { return node < n ? node : node - mid; };
  for (int node = 0; node < n + mid + k; ++node) {
    if (node >= n && node < n + mid) continue;
    const int root = uf.find(node);
    auto [it, inserted] = outer_seen.try_emplace(root, node);
    if (!inserted) {
      partner[outer_index(it->second)] = outer_index(node);
      partner[outer_index(node)] = outer_index(it->second);
    }
  }
  int loops = 0;
  std::vector<bool> counted(static_cast<std::size_t>(n + mid + k), false);
  for (int node = n; node < n + mid; ++node) {
    const int root = uf.find(node);
    if (!outer_seen.contains(root) && !counted[root]) {
      counted[root] = true;
      ++loops;
    }
  }
  return {PlanarDiagram(n, k, std::move(partner)), loops};
}

/// g after f, each closed loop contributing a factor `loop_value`.
inline TLMorphism compose(const TLMorphism& f, const TLMorphism& g,
                          const LaurentInt& loop_value = LaurentInt::loop()) {
  if (f.target() != g.source())
    throw std::invalid_argument("cannot compose: target " + std::to_string(f.target()) +
                                " != source " + std::to_string(g.source()));
  TLMorphism out(f.source(), g.target());
  for (const auto& [df, cf] : f.terms()) {
    for (const auto& [dg, cg] : g.terms()) {
      auto [d, loops] = concatenate(df, dg);
      LaurentInt c = cf * cg;
      for (int t = 0; t < loops; ++t) c *= loop_value;
      out.add(d, c);
    }
  }
  return out;
}

/// Coefficient-wise evaluation at q0 = ±1; the result has constant coefficients.
inline TLMorphism specialize(const TLMorphism& f, int q0) {
  TLMorphism out(f.source(), f.target());
  for (const auto& [d, c] : f.terms()) out.add(d, LaurentInt(specialize(c, q0)));
  return out;
}

// Generators. Indices are 1-based as in the usual notation.

/// Cap joining bottom points i and i+1 of n; a morphism n -> n-2.
inline TLMorphism cap(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::out_of_range("cap(" + std::to_string(i) + "," + std::to_string(n) + ") out of range");
  std::vector<std::pair<int, int>> pairs{{i - 1, i}};
  for (int k = 1; k <= n; ++k) {
    if (k < i) pairs.emplace_back(k - 1, n + k - 1);
    if (k >= i + 2) pairs.emplace_back(k - 1, n + k - 3);
  }
  return TLMorphism(PlanarDiagram::from_pairs(n, n - 2, pairs));
}

/// Cup joining top points i and i+1 of n+2; a morphism n -> n+2.
inline TLMorphism cup(int i, int n) {
  if (n < 0 || i < 1 || i > n + 1)
    throw std::out_of_range("cup(" + std::to_string(i) + "," + std::to_string(n) + ") out of range");
  const int m = n + 2;
  std::vector<std::pair<int, int>> pairs{{n + i - 1, n + i}};
  for (int k = 1; k <= n; ++k) {
    if (k < i) pairs.emplace_back(k - 1, n + k - 1);
    else pairs.emplace_back(k - 1, n + k + 1);
  }
  return TLMorphism(PlanarDiagram::from_pairs(n, m, pairs));
}

/// The algebra generator U_i of TL_n: cap at i followed by cup at i.
inline TLMorphism u_generator(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1)
    throw std::out_of_range("u" + std::to_string(i) + " needs 1 <= i <= n-1 (n=" + std::to_string(n) + ")");
  return compose(cap(i, n), cup(i, n - 2));
}

/**
 * Factors a diagram as a word in caps and cups: caps remove the bottom arcs
 * innermost first, cups then rebuild the top arcs outermost first. Returned
 * in right-to-left order (the last element acts first), e.g. u1 in TL_2 is
 * {"cup1", "cap1"}; a diagram without arcs gives an empty word.
 */
inline std::vector<std::string> diagram_word(const PlanarDiagram& d) {
  std::vector<std::string> caps;  // in application order
  std::vector<int> alive;
  for (int p = 0; p < d.bottom(); ++p) alive.push_back(p);
  for (bool found = true; found;) {
    found = false;
    for (std::size_t k = 0; k + 1 < alive.size(); ++k) {
      if (d.partner(alive[k]) == alive[k + 1]) {
        caps.push_back("cap" + std::to_string(k + 1));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(k), alive.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        found = true;
        break;
      }
    }
  }
  std::vector<std::string> cups;  // in removal order, i.e. reverse application order
  alive.clear();
  for (int j = 0; j < d.top(); ++j) alive.push_back(d.top_point(j));
  for (bool found = true; found;) {
    found = false;
    for (std::size_t k = 0; k + 1 < alive.size(); ++k) {
      if (d.partner(alive[k]) == alive[k + 1]) {
        cups.push_back("cup" + std::to_string(k + 1));
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(k), alive.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        found = true;
        break;
      }
    }
  }
  std::vector<std::string> word = cups;
  word.insert(word.end(), caps.rbegin(), caps.rend());
  return word;
}

/**
 * Prints a morphism as a sum of generator words, e.g.
 * "(-q-q^-1) cup1*cap1 @ n=2". The target is added to the suffix only when
 * the morphism is zero, since otherwise the words determine it.
 */
inline std::string to_word(const TLMorphism& f) {
  std::string out;
  bool first = true;
  for (const auto& [d, c] : f.terms()) {
    auto w = diagram_word(d);
    std::string word;
    for (const auto& g : w) word += (word.empty() ? "" : "*") + g;
    if (word.empty()) word = "id";
    const bool constant = c.terms().size() == 1 && c.terms().begin()->first == 0;
    if (constant) {
      Integer v = c.terms().begin()->second;
      if (v < 0) {
        out += first ? "-" : " - ";
        v = -v;
      } else if (!first) {
        out += " + ";
      }
      if (v != 1) out += v.str() + " ";
    } else {
      if (!first) out += " + ";
      out += "(" + to_string(c) + ") ";
    }
    out += word;
    first = false;
  }
  if (first) return "0 @ n=" + std::to_string(f.source()) + ", m=" + std::to_string(f.target());
  return out + " @ n=" + std::to_string(f.source());
}

struct RelationReport {
  bool passed = true;
  long checked = 0;
  std::string relation;  ///< name of the first failing relation
  std::string instance;  ///< the indices of the failing instance
  std::string witness;   ///< lhs - rhs, printed
};

/// Product of a word of generators, applied right to left (last factor first).
inline TLMorphism word_product(const std::vector<TLMorphism>& factors, const LaurentInt& loop_value) {
  TLMorphism acc = factors.back();
  for (auto it = std::next(factors.rbegin()); it != factors.rend(); ++it) acc = compose(acc, *it, loop_value);
  return acc;
}

/**
 * Checks the TL_n algebra relations for 2 <= n <= n_max and the seven
 * category relations for every instance whose objects are all <= n_max.
 * Composition uses `loop_value`; the expected values are always those of
 * the generic loop -q-q^-1, so a wrong loop value is detected.
 */
inline RelationReport verify_tl_relations(int n_max, const LaurentInt& loop_value = LaurentInt::loop()) {
  RelationReport rep;
  const LaurentInt expected_loop = LaurentInt::loop();
  auto P = [&](const std::vector<TLMorphism>& w) { return word_product(w, loop_value); };
  auto check = [&](const char* name, const std::string& inst, const TLMorphism& lhs, const TLMorphism& rhs) {
    ++rep.checked;
    if (!rep.passed || lhs == rhs) return;
    rep.passed = false;
    rep.relation = name;
    rep.instance = inst;
    TLMorphism diff = lhs - rhs;
    rep.witness = to_word(diff);
  };
  auto idx = [](std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s;
    for (auto [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
  };

  for (int n = 2; n <= n_max; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      const TLMorphism ui = u_generator(i, n);
      check("U_i^2 = -(q+q^-1) U_i", idx({{"n", n}, {"i", i}}), P({ui, ui}), expected_loop * ui);
      for (int j = i + 2; j <= n - 1; ++j) {
        const TLMorphism uj = u_generator(j, n);
        check("U_i U_j = U_j U_i", idx({{"n", n}, {"i", i}, {"j", j}}), P({ui, uj}), P({uj, ui}));
      }
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        const TLMorphism uj = u_generator(j, n);
        check("U_i U_j U_i = U_i", idx({{"n", n}, {"i", i}, {"j", j}}), P({ui, uj, ui}), ui);
      }
    }
  }

  for (int n = 0; n + 2 <= n_max; ++n) {
    const TLMorphism id = TLMorphism::identity(n);
    for (int i = 1; i <= n + 1; ++i) {
      if (i <= n) {
        check("cap(i+1,n+2) cup(i,n) = Id", idx({{"n", n}, {"i", i}}), P({cap(i + 1, n + 2), cup(i, n)}), id);
        check("cap(i,n+2) cup(i+1,n) = Id", idx({{"n", n}, {"i", i}}), P({cap(i, n + 2), cup(i + 1, n)}), id);
      }
      check("cap(i,n+2) cup(i,n) = -(q+q^-1) Id", idx({{"n", n}, {"i", i}}), P({cap(i, n + 2), cup(i, n)}),
            expected_loop * id);
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i; j <= n - 1; ++j) {
        check("cap(j,n) cap(i,n+2) = cap(i,n) cap(j+2,n+2)", idx({{"n", n}, {"i", i}, {"j", j}}),
              P({cap(j, n), cap(i, n + 2)}), P({cap(i, n), cap(j + 2, n + 2)}));
        check("cup(j,n-2) cap(i,n) = cap(i,n+2) cup(j+2,n)", idx({{"n", n}, {"i", i}, {"j", j}}),
              P({cup(j, n - 2), cap(i, n)}), P({cap(i, n + 2), cup(j + 2, n)}));
        check("cup(i,n-2) cap(j,n) = cap(j+2,n+2) cup(i,n)", idx({{"n", n}, {"i", i}, {"j", j}}),
              P({cup(i, n - 2), cap(j, n)}), P({cap(j + 2, n + 2), cup(i, n)}));
      }
    }
    if (n + 4 <= n_max) {
      for (int i = 1; i <= n + 1; ++i)
        for (int j = i; j <= n + 1; ++j)
          check("cup(i,n+2) cup(j,n) = cup(j+2,n+2) cup(i,n)", idx({{"n", n}, {"i", i}, {"j", j}}),
                P({cup(i, n + 2), cup(j, n)}), P({cup(j + 2, n + 2), cup(i, n)}));
    }
  }
  return rep;
}

// JSON: diagram {"n","m","pairs"}; morphism [{"diagram", "coeff"}].

inline nlohmann::json to_json(const PlanarDiagram& d) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [p, q] : d.pairs()) pairs.push_back({p, q});
  return {{"n", d.bottom()}, {"m", d.top()}, {"pairs", pairs}};
}

inline PlanarDiagram diagram_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return PlanarDiagram::from_pairs(j.at("n").get<int>(), j.at("m").get<int>(), pairs);
}

inline nlohmann::json to_json(const TLMorphism& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, c] : f.terms()) out.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return out;
}

inline TLMorphism morphism_from_json(const nlohmann::json& j, int source, int target) {
  TLMorphism f(source, target);
  for (const auto& t : j) f.add(diagram_from_json(t.at("diagram")), laurent_from_json(t.at("coeff")));
  return f;
}

}  // namespace sl2tl
