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
 * @file kmodel.hpp
 * @brief Integer matrices of the functor actions on Grothendieck groups:
 * projective functors E^(a), F^(a) on K(O_n), the Zuckerman composites V_i,
 * the parabolic wall-crossing U_i, concatenation, and the identity suites
 * that check every K-level relation exhaustively up to a bound.
 *
 * K(O_n) is identified with V1^{⊗n}: the class of the Verma module M(I) is
 * v(I). Homological shifts become signs, [M[s]] = (-1)^s [M].
 */

#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bases.hpp"
#include "coeffs.hpp"
#include "json.hpp"
#include "tensor.hpp"
#include "udot.hpp"

namespace sl2tl {

/// Which Grothendieck group a KMap acts on, optionally restricted to one block.
struct KSpace {
  enum class Kind { Verma, GenVerma, Parabolic };

  Kind kind = Kind::Verma;
  int n = 0;                 ///< number of tensor factors of the ambient category
  std::optional<int> block;  ///< number of ones in the ambient labels; nullopt = all blocks
  int wall = 0;              ///< GenVerma only

  static KSpace verma(int n, std::optional<int> block = std::nullopt) { return {Kind::Verma, n, block, 0}; }
  static KSpace gen_verma(int wall, int n, std::optional<int> block = std::nullopt) {
    return {Kind::GenVerma, n, block, wall};
  }
  static KSpace parabolic(int n, std::optional<int> block = std::nullopt) { return {Kind::Parabolic, n, block, 0}; }

  int key_length() const { return kind == Kind::GenVerma ? n - 2 : n; }

  /// Basis labels; empty for blocks outside 0..n (the zero category).
  std::vector<BitString> basis() const {
    const int len = key_length();
    if (len < 0) return {};
    const int shift = kind == Kind::GenVerma ? 1 : 0;
    std::vector<BitString> out;
    for (int k = 0; k <= len; ++k) {
      if (block && *block - shift != k) continue;
      for (const auto& b : weight_block(len, k)) out.push_back(b);
    }
    return out;
  }

  bool contains(const BitString& b) const {
    if (b.size() != key_length()) return false;
    const int shift = kind == Kind::GenVerma ? 1 : 0;
    return !block || b.ones() + shift == *block;
  }

  std::string str() const {
    std::string s;
    switch (kind) {
      case Kind::Verma: s = "K(O_" + std::to_string(n) + ")"; break;
      case Kind::GenVerma: s = "K(M_" + std::to_string(wall) + ", n=" + std::to_string(n) + ")"; break;
      case Kind::Parabolic: s = "K(O^p_" + std::to_string(n) + ")"; break;
    }
    if (block) s += "[k=" + std::to_string(*block) + "]";
    return s;
  }

  friend bool operator==(const KSpace&, const KSpace&) = default;
};

/// Sparse integer matrix between two labelled spaces, stored by columns.
class KMap {
 public:
  KMap(KSpace source, KSpace target) : source_(std::move(source)), target_(std::move(target)) {}

  static KMap identity(const KSpace& space) {
    KMap m(space, space);
    for (const auto& b : space.basis()) m.set(b, IntVector::basis(b));
    return m;
  }

  const KSpace& source() const { return source_; }
  const KSpace& target() const { return target_; }

  void set(const BitString& from, IntVector image) {
    if (!source_.contains(from)) throw std::invalid_argument(from.str() + " is not in " + source_.str());
    for (const auto& [b, c] : image.terms())
      if (!target_.contains(b)) throw std::invalid_argument(b.str() + " is not in " + target_.str());
    if (image.is_zero()) {
      columns_.erase(from);
    } else {
      columns_.insert_or_assign(from, std::move(image));
    }
  }

  IntVector column(const BitString& from) const {
    auto it = columns_.find(from);
    return it == columns_.end() ? IntVector(target_.key_length()) : it->second;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != source_.key_length())
      throw std::invalid_argument("vector length does not match " + source_.str());
    IntVector out(target_.key_length());
    for (const auto& [b, c] : v.terms()) {
      if (!source_.contains(b)) throw std::invalid_argument(b.str() + " is not in " + source_.str());
      auto it = columns_.find(b);
      if (it != columns_.end()) out += c * it->second;
    }
    return out;
  }

  /// Matrix product: (x * y)(v) = x(y(v)).
  friend KMap operator*(const KMap& x, const KMap& y) {
    if (!(x.source_ == y.target_))
      throw std::invalid_argument("cannot compose " + x.source_.str() + " with " + y.target_.str());
    KMap out(y.source_, x.target_);
    for (const auto& [b, col] : y.columns_) out.set(b, x.apply(col));
    return out;
  }

  KMap& operator+=(const KMap& o) {
    check_same(o);
    for (const auto& [b, col] : o.columns_) set(b, column(b) + col);
    return *this;
  }
  KMap& operator-=(const KMap& o) {
    check_same(o);
    for (const auto& [b, col] : o.columns_) set(b, column(b) - col);
    return *this;
  }
  friend KMap operator+(KMap a, const KMap& b) { return a += b; }
  friend KMap operator-(KMap a, const KMap& b) { return a -= b; }
  friend KMap operator*(const Integer& s, const KMap& m) {
    KMap out(m.source_, m.target_);
    if (s == 0) return out;
    for (const auto& [b, col] : m.columns_) out.set(b, s * col);
    return out;
  }

  friend bool operator==(const KMap& a, const KMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.columns_ == b.columns_;
  }

  const std::map<BitString, IntVector>& columns() const { return columns_; }

 private:
  void check_same(const KMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_))
      throw std::invalid_argument("cannot add maps between different spaces");
  }

  KSpace source_;
  KSpace target_;
  std::map<BitString, IntVector> columns_;
};

/// Deliberate single-sign or single-coefficient defects used as negative controls.
enum class Mutation {
  None,
  ELeftmostCoefficient,  ///< E^(a) terms flipping the leftmost zero get coefficient 2
  FSign,                 ///< F^(a) terms flipping the leftmost one get sign -1
  DerivedSign,           ///< [V_i] = +embed∘zuckerman
  ZuckermanSign,         ///< zuckerman sends the 01 pattern to +M_i
  ParabolicDiagonal,     ///< [U_i] has diagonal coefficient 2
};

inline const std::vector<std::pair<std::string_view, Mutation>>& mutation_names() {
  static const std::vector<std::pair<std::string_view, Mutation>> names = {
      {"none", Mutation::None},
      {"e-leftmost-coefficient", Mutation::ELeftmostCoefficient},
      {"f-sign", Mutation::FSign},
      {"derived-sign", Mutation::DerivedSign},
      {"zuckerman-sign", Mutation::ZuckermanSign},
      {"parabolic-diagonal", Mutation::ParabolicDiagonal},
  };
  return names;
}

inline std::string_view to_string(Mutation m) {
  for (const auto& [name, value] : mutation_names())
    if (value == m) return name;
  return "none";
}

inline std::optional<Mutation> mutation_from_string(std::string_view s) {
  for (const auto& [name, value] : mutation_names())
    if (name == s) return value;
  return std::nullopt;
}

namespace detail {

inline int leftmost(const BitString& b, bool bit) {
  for (int p = 0; p < b.size(); ++p)
    if (b[p] == bit) return p;
  return -1;
}

inline std::vector<int> blocks_of(const KSpace& space) {
  if (space.block) return {*space.block};
  std::vector<int> out;
  for (int k = 0; k <= space.n; ++k) out.push_back(k);
  return out;
}

// Bits of `flips` at odd positions counted from the left.
inline std::uint64_t signed_positions(std::uint64_t flips, int n) {
  std::uint64_t odd = 0;
  for (int p = 1; p < n; p += 2) odd |= std::uint64_t{1} << (n - 1 - p);
  return flips & odd;
}

inline KMap flip_map(bool raise, int a, int n, std::optional<int> block, Mutation mutation, KSpace::Kind kind) {
  if (a < 0) throw std::invalid_argument("divided power must be nonnegative");
  const int delta = raise ? a : -a;
  KSpace src{kind, n, block, 0};
  KSpace dst{kind, n, block ? std::optional<int>(*block + delta) : std::nullopt, 0};
  KMap m(src, dst);
  for (const auto& b : src.basis()) {
    IntVector col(n);
    const int mark = leftmost(b, !raise);
    detail::for_each_flip(b, !raise, a, [&](const BitString& j) {
      Integer c = 1;
      if (kind == KSpace::Kind::Parabolic && std::popcount(signed_positions(b.word() ^ j.word(), n)) % 2 != 0) c = -1;
      if (mark >= 0 && j[mark] != b[mark]) {
        if (raise && mutation == Mutation::ELeftmostCoefficient) c *= 2;
        if (!raise && mutation == Mutation::FSign) c = -c;
      }
      col.add(j, c);
    });
    m.set(b, std::move(col));
  }
  return m;
}

inline void check_wall(int i, int n) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("wall " + std::to_string(i) + " out of range for n=" + std::to_string(n));
}

}  // namespace detail

/**
 * [E^(a)] from block `block` (all blocks if nullopt) of K(O_n): the matrix
 * of act_E at weight 2·block − n. On the parabolic K-group a flip at
 * position p carries the sign (-1)^p, the conjugate of the Verma matrix by
 * D = diag((-1)^{sum of positions of ones}); the same D carries -[V_i] to
 * [U_i], so both models commute with their own E and F.
 */
inline KMap k_E(int a, std::optional<int> block, int n, Mutation mutation = Mutation::None,
                KSpace::Kind kind = KSpace::Kind::Verma) {
  return detail::flip_map(true, a, n, block, mutation, kind);
}

inline KMap k_F(int a, std::optional<int> block, int n, Mutation mutation = Mutation::None,
                KSpace::Kind kind = KSpace::Kind::Verma) {
  return detail::flip_map(false, a, n, block, mutation, kind);
}

/// [RΓ_i]: 10 -> +M_i(rest), 01 -> -M_i(rest), 00 and 11 -> 0 at positions i, i+1.
inline KMap zuckerman_K(int i, int n, std::optional<int> block = std::nullopt, Mutation mutation = Mutation::None) {
  detail::check_wall(i, n);
  KMap m(KSpace::verma(n, block), KSpace::gen_verma(i, n, block));
  for (const auto& b : m.source().basis()) {
    if (b[i - 1] == b[i]) continue;
    const Integer sign = b[i - 1] ? 1 : (mutation == Mutation::ZuckermanSign ? 1 : -1);
    m.set(b, IntVector::basis(b.erased(i - 1, 2), sign));
  }
  return m;
}

/// [ε_i]: M_i(rest) -> v(..10..) - v(..01..).
inline KMap embed_K(int i, int n, std::optional<int> block = std::nullopt) {
  detail::check_wall(i, n);
  KMap m(KSpace::gen_verma(i, n, block), KSpace::verma(n, block));
  for (const auto& b : m.source().basis()) m.set(b, delta_insert(i - 1, IntVector::basis(b)));
  return m;
}

/// [V_i] = [ε_i RΓ_i [1]] = -(embed_K ∘ zuckerman_K) on all of K(O_n).
inline KMap derived_V(int i, int n, Mutation mutation = Mutation::None) {
  KMap composite = embed_K(i, n) * zuckerman_K(i, n, std::nullopt, mutation);
  return mutation == Mutation::DerivedSign ? composite : Integer(-1) * composite;
}

/// [U_i] on the parabolic K-group: v(I) -> v(I) + v(s_i I) when bits i, i+1 differ.
inline KMap parabolic_U(int i, int n, Mutation mutation = Mutation::None) {
  detail::check_wall(i, n);
  const KSpace space = KSpace::parabolic(n);
  KMap m(space, space);
  for (const auto& b : space.basis()) {
    if (b[i - 1] == b[i]) continue;
    IntVector col = tl_action_qm1(i, IntVector::basis(b));
    if (mutation == Mutation::ParabolicDiagonal) col.add(b, Integer(1));
    m.set(b, std::move(col));
  }
  return m;
}

/// [C]: v(I) × v(J) -> v(IJ), bilinear.
inline IntVector concat_C(const IntVector& x, const IntVector& y) { return tensor(x, y); }

// ---------------------------------------------------------------------------
// Identity suites.

struct SuiteReport {
  std::string suite;
  int n_max = 0;
  int bound = 0;
  Mutation mutation = Mutation::None;
  bool passed = true;
  std::int64_t checked = 0;
  std::string identity;  ///< first failing identity
  std::string instance;  ///< its indices
  std::string witness;   ///< nonzero difference with the offending basis vector
};

struct SuiteInfo {
  std::string_view name;
  int default_n;
  int default_bound;  ///< 0 when the suite has no bound
  Mutation control;   ///< mutation documented to make the suite fail
  std::string_view summary;
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"ef", 12, 0, Mutation::FSign, "[E][F] + (n-k) Id = [F][E] + k Id on block k"},
      {"divided", 10, 5, Mutation::ELeftmostCoefficient,
       "products of divided powers and the double-sum commutation, a+b <= bound"},
      {"canonical-action", 10, 0, Mutation::ELeftmostCoefficient,
       "each canonical basis element sends v(1^c 0^d) to 0 or one p-basis vector"},
      {"zuckerman-tl", 10, 0, Mutation::DerivedSign, "[V_i] satisfy TL relations with loop value -2"},
      {"schur-weyl", 8, 0, Mutation::ParabolicDiagonal, "[V_i] and [U_i] commute with [E^(a)], [F^(a)]"},
      {"parabolic-tl", 10, 0, Mutation::ParabolicDiagonal, "[U_i] satisfy TL relations with loop value +2"},
      {"comult", 10, 4, Mutation::ELeftmostCoefficient, "[E^(a)], [F^(a)] on concatenations, a <= bound"},
      {"upsilon", 10, 0, Mutation::ELeftmostCoefficient, "K-maps agree with the tensor power of V1"},
  };
  return all;
}

inline const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

/// n_max used when none is given: SL2TL_VERIFY_N if set, else the suite default.
inline int default_n_max(const SuiteInfo& info) {
  if (const char* env = std::getenv("SL2TL_VERIFY_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 20) return static_cast<int>(v);
  }
  return info.default_n;
}

namespace detail {

class SuiteRun {
 public:
  explicit SuiteRun(SuiteReport& rep) : rep_(rep) {}

  bool ok() const { return rep_.passed; }
  void count() { ++rep_.checked; }

  /// Compares two maps column by column; zero_form names lhs - rhs.
  bool same(const std::string& identity, const std::string& zero_form, const std::string& instance, const KMap& lhs,
            const KMap& rhs) {
    ++rep_.checked;
    if (lhs == rhs) return true;
    for (const auto& b : lhs.source().basis()) {
      IntVector d = lhs.column(b) - rhs.column(b);
      if (!d.is_zero()) return fail(identity, instance, zero_form + " != 0 on v(" + b.str() + "): " + to_string(d));
    }
    return fail(identity, instance, zero_form + " != 0");
  }

  bool same_vector(const std::string& identity, const std::string& instance, const std::string& where,
                   const IntVector& lhs, const IntVector& rhs) {
    ++rep_.checked;
    if (lhs == rhs) return true;
    return fail(identity, instance, where + ": lhs " + to_string(lhs) + ", rhs " + to_string(rhs));
  }

  bool fail(const std::string& identity, const std::string& instance, const std::string& witness) {
    rep_.passed = false;
    rep_.identity = identity;
    rep_.instance = instance;
    rep_.witness = witness;
    return false;
  }

 private:
  SuiteReport& rep_;
};

inline std::string inst(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (auto [k, v] : kv) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

inline std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

inline void suite_ef(SuiteRun& run, int n_max, Mutation mu) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      const KSpace blk = KSpace::verma(n, k);
      const KMap ef = k_E(1, k - 1, n, mu) * k_F(1, k, n, mu);
      const KMap fe = k_F(1, k + 1, n, mu) * k_E(1, k, n, mu);
      const KMap id = KMap::identity(blk);
      if (!run.same("[E][F] + (n-k) Id = [F][E] + k Id", "[E][F] - [F][E] - (2k-n) Id", inst({{"n", n}, {"k", k}}),
                    ef + Integer(n - k) * id, fe + Integer(k) * id))
        return;
    }
  }
}

inline void suite_divided(SuiteRun& run, int n_max, int bound, Mutation mu) {
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int a = 0; a <= bound; ++a) {
        for (int b = 0; a + b <= bound; ++b) {
          const auto here = inst({{"n", n}, {"k", k}, {"a", a}, {"b", b}});
          const Integer c = binomial(a + b, a);
          if (!run.same("[E^(b)][E^(a)] = C(a+b,a) [E^(a+b)]", "[E^(b)][E^(a)] - C(a+b,a)[E^(a+b)]", here,
                        k_E(b, k + a, n, mu) * k_E(a, k, n, mu), c * k_E(a + b, k, n, mu)))
            return;
          if (!run.same("[F^(b)][F^(a)] = C(a+b,a) [F^(a+b)]", "[F^(b)][F^(a)] - C(a+b,a)[F^(a+b)]", here,
                        k_F(b, k - a, n, mu) * k_F(a, k, n, mu), c * k_F(a + b, k, n, mu)))
            return;
          // Σ_j C(n-k-a+b, j) E^(a-j) F^(b-j) = Σ_j C(k, j) F^(b-j) E^(a-j) on block k.
          KMap lhs(KSpace::verma(n, k), KSpace::verma(n, k + a - b));
          KMap rhs = lhs;
          for (int j = 0; j <= std::min(a, b); ++j) {
            lhs += gen_binomial(Integer(n - k - a + b), j) * (k_E(a - j, k - b + j, n, mu) * k_F(b - j, k, n, mu));
            rhs += binomial(k, j) * (k_F(b - j, k + a - j, n, mu) * k_E(a - j, k, n, mu));
          }
          if (!run.same("sum_j C(n-k-a+b,j) [E^(a-j)][F^(b-j)] = sum_j C(k,j) [F^(b-j)][E^(a-j)]",
                        "sum_j C(n-k-a+b,j)[E^(a-j)][F^(b-j)] - sum_j C(k,j)[F^(b-j)][E^(a-j)]", here, lhs, rhs))
            return;
        }
      }
    }
  }
}

inline void suite_canonical_action(SuiteRun& run, int n_max, int bound, Mutation mu) {
  for (int len = 0; len <= n_max; ++len) {
    for (int c = 0; c <= len; ++c) {
      const int d = len - c;
      const BitString start = BitString::ones_then_zeros(c, d);
      const int weight = c - d;
      const int top = bound > 0 ? bound : len;
      for (int a = 0; a <= top; ++a) {
        for (int b = 0; b <= top; ++b) {
          for (auto shape : {CanonicalLabel::Shape::EF, CanonicalLabel::Shape::FE}) {
            // Choose the idempotent so that the element's source weight is c - d.
            const int i = shape == CanonicalLabel::Shape::EF ? 2 * b - weight : weight + 2 * a;
            const CanonicalLabel label{shape, a, b, i};
            if (!label.valid()) continue;
            const auto here = to_string(label) + " on v(" + start.str() + ")";
            IntVector out = IntVector::basis(start);
            // Both shapes evaluate inner factor first: EF applies F then E, FE applies E then F.
            if (shape == CanonicalLabel::Shape::EF) {
              out = k_F(b, c, len, mu).apply(out);
              out = k_E(a, c - b, len, mu).apply(out);
            } else {
              out = k_E(a, c, len, mu).apply(out);
              out = k_F(b, c + a, len, mu).apply(out);
            }
            run.count();
            if (out.is_zero()) {
              if (b <= c && a <= d && !run.fail("x v(1^c 0^d) = p(0^b 1^(c-b) 0^(d-a) 1^a)", here, "got 0"))
                return;
              continue;
            }
            const IntVector coords = coordinates(out, BasisKind::Projective);
            if (coords.terms().size() != 1 || coords.terms().begin()->second != 1) {
              run.fail("x v(1^c 0^d) is 0 or a single p-basis vector", here,
                       to_string(out) + " = " + to_string(coords, "p"));
              return;
            }
            const BitString expected = block_string(b, c - b, d - a, a);
            if (b <= c && a <= d && coords.terms().begin()->first != expected) {
              run.fail("x v(1^c 0^d) = p(0^b 1^(c-b) 0^(d-a) 1^a)", here,
                       "got p(" + coords.terms().begin()->first.str() + "), expected p(" + expected.str() + ")");
              return;
            }
          }
        }
      }
    }
  }
}

inline void suite_zuckerman_tl(SuiteRun& run, int n_max, Mutation mu) {
  for (int n = 2; n <= n_max; ++n) {
    std::vector<KMap> v;
    for (int i = 1; i <= n - 1; ++i) v.push_back(derived_V(i, n, mu));
    for (int i = 1; i <= n - 1; ++i) {
      const KMap& vi = v[i - 1];
      const std::string Vi = "[" + idx("V", i) + "]";
      const KMap ze = zuckerman_K(i, n, std::nullopt, mu) * embed_K(i, n);
      if (!run.same("[RG_i][e_i] = 2 Id", "[RG_i][e_i] - 2 Id", inst({{"n", n}, {"i", i}}), ze,
                    Integer(2) * KMap::identity(KSpace::gen_verma(i, n))))
        return;
      if (!run.same("[V_i]^2 = -2 [V_i]", Vi + "^2+2" + Vi, inst({{"n", n}, {"i", i}}), vi * vi, Integer(-2) * vi))
        return;
      KMap model(vi.source(), vi.target());
      for (const auto& b : model.source().basis()) model.set(b, tl_action_q1(i, IntVector::basis(b)));
      if (!run.same("[V_i] = U_i at q=1", Vi + " - U_" + std::to_string(i), inst({{"n", n}, {"i", i}}), vi, model))
        return;
      for (int j = 1; j <= n - 1; ++j) {
        const KMap& vj = v[j - 1];
        const std::string Vj = "[" + idx("V", j) + "]";
        const auto here = inst({{"n", n}, {"i", i}, {"j", j}});
        if (std::abs(i - j) > 1 && !run.same("[V_i][V_j] = [V_j][V_i]", Vi + Vj + "-" + Vj + Vi, here, vi * vj, vj * vi))
          return;
        if (std::abs(i - j) == 1 && !run.same("[V_i][V_j][V_i] = [V_i]", Vi + Vj + Vi + "-" + Vi, here, vi * vj * vi, vi))
          return;
      }
    }
  }
}

inline void suite_parabolic_tl(SuiteRun& run, int n_max, Mutation mu) {
  for (int n = 2; n <= n_max; ++n) {
    std::vector<KMap> u;
    for (int i = 1; i <= n - 1; ++i) u.push_back(parabolic_U(i, n, mu));
    for (int i = 1; i <= n - 1; ++i) {
      const KMap& ui = u[i - 1];
      const std::string Ui = "[" + idx("U", i) + "]";
      if (!run.same("[U_i]^2 = 2 [U_i]", Ui + "^2-2" + Ui, inst({{"n", n}, {"i", i}}), ui * ui, Integer(2) * ui))
        return;
      for (int j = 1; j <= n - 1; ++j) {
        const KMap& uj = u[j - 1];
        const std::string Uj = "[" + idx("U", j) + "]";
        const auto here = inst({{"n", n}, {"i", i}, {"j", j}});
        if (std::abs(i - j) > 1 && !run.same("[U_i][U_j] = [U_j][U_i]", Ui + Uj + "-" + Uj + Ui, here, ui * uj, uj * ui))
          return;
        if (std::abs(i - j) == 1 && !run.same("[U_i][U_j][U_i] = [U_i]", Ui + Uj + Ui + "-" + Ui, here, ui * uj * ui, ui))
          return;
      }
    }
  }
}

inline void suite_schur_weyl(SuiteRun& run, int n_max, Mutation mu) {
  for (int n = 2; n <= n_max; ++n) {
    for (int a = 1; a <= 2; ++a) {
      const KMap e = k_E(a, std::nullopt, n, mu);
      const KMap f = k_F(a, std::nullopt, n, mu);
      const KMap ep = k_E(a, std::nullopt, n, mu, KSpace::Kind::Parabolic);
      const KMap fp = k_F(a, std::nullopt, n, mu, KSpace::Kind::Parabolic);
      for (int i = 1; i <= n - 1; ++i) {
        const auto here = inst({{"n", n}, {"i", i}, {"a", a}});
        const KMap v = derived_V(i, n, mu);
        const KMap u = parabolic_U(i, n, mu);
        const std::string Vi = "[" + idx("V", i) + "]";
        const std::string Ui = "[" + idx("U", i) + "]";
        if (!run.same("[V_i][E^(a)] = [E^(a)][V_i]", Vi + "[E^(a)]-[E^(a)]" + Vi, here, v * e, e * v)) return;
        if (!run.same("[V_i][F^(a)] = [F^(a)][V_i]", Vi + "[F^(a)]-[F^(a)]" + Vi, here, v * f, f * v)) return;
        if (!run.same("[U_i][E^(a)] = [E^(a)][U_i]", Ui + "[E^(a)]-[E^(a)]" + Ui, here, u * ep, ep * u)) return;
        if (!run.same("[U_i][F^(a)] = [F^(a)][U_i]", Ui + "[F^(a)]-[F^(a)]" + Ui, here, u * fp, fp * u)) return;
      }
    }
  }
}

inline void suite_comult(SuiteRun& run, int n_max, int bound, Mutation mu) {
  // Columns of [E^(a)] and [F^(a)] on all of K(O_len), by length and a.
  std::vector<std::vector<KMap>> e_maps;
  std::vector<std::vector<KMap>> f_maps;
  for (int len = 0; len <= n_max; ++len) {
    e_maps.emplace_back();
    f_maps.emplace_back();
    for (int a = 0; a <= bound; ++a) {
      e_maps.back().push_back(k_E(a, std::nullopt, len, mu));
      f_maps.back().push_back(k_F(a, std::nullopt, len, mu));
    }
  }
  for (int total = 0; total <= n_max; ++total) {
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      for (const auto& x : KSpace::verma(n).basis()) {
        for (const auto& y : KSpace::verma(m).basis()) {
          const IntVector vx = IntVector::basis(x);
          const IntVector vy = IntVector::basis(y);
          const IntVector xy = concat_C(vx, vy);
          for (int a = 1; a <= bound; ++a) {
            const auto here = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " a=" + std::to_string(a) +
                              " on v(" + x.str() + ") x v(" + y.str() + ")";
            for (int pass = 0; pass < 2; ++pass) {
              const auto& maps = pass == 0 ? e_maps : f_maps;
              const char* g = pass == 0 ? "E" : "F";
              IntVector rhs(total);
              for (int k = 0; k <= a; ++k)
                rhs += concat_C(maps[n][a - k].apply(vx), maps[m][k].apply(vy));
              const std::string name = std::string("[") + g + "^(a)][C] = sum_k [C]([" + g + "^(a-k)] x [" + g + "^(k)])";
              if (!run.same_vector(name, here, "images", maps[total][a].apply(xy), rhs)) return;
            }
          }
        }
      }
    }
  }
}

inline void suite_upsilon(SuiteRun& run, int n_max, Mutation mu) {
  for (int n = 0; n <= n_max; ++n) {
    const KSpace all = KSpace::verma(n);
    // Independent description of [E] and [F]: Σ_p Id ⊗ .. ⊗ e_p ⊗ .. ⊗ Id on v(I).
    KMap e1(all, all);
    KMap f1(all, all);
    KMap h(all, all);
    for (const auto& b : all.basis()) {
      IntVector up(n);
      IntVector down(n);
      for (int p = 0; p < n; ++p) (b[p] ? down : up).add(b.flipped(p), Integer(1));
      e1.set(b, up);
      f1.set(b, down);
      h.set(b, IntVector::basis(b, Integer(b.weight())));
    }
    const auto here_n = inst({{"n", n}});
    if (!run.same("[E] = sum_p e_p", "[E] - sum_p e_p", here_n, k_E(1, std::nullopt, n, mu), e1)) return;
    if (!run.same("[F] = sum_p f_p", "[F] - sum_p f_p", here_n, k_F(1, std::nullopt, n, mu), f1)) return;
    if (!run.same("[E][F] - [F][E] = H", "[E][F]-[F][E]-H", here_n,
                  k_E(1, std::nullopt, n, mu) * k_F(1, std::nullopt, n, mu) -
                      k_F(1, std::nullopt, n, mu) * k_E(1, std::nullopt, n, mu),
                  h))
      return;
    KMap e_pow = KMap::identity(all);
    KMap f_pow = KMap::identity(all);
    for (int a = 1; a <= n; ++a) {
      e_pow = e1 * e_pow;
      f_pow = f1 * f_pow;
      const auto here = inst({{"n", n}, {"a", a}});
      if (!run.same("a! [E^(a)] = [E]^a", "a![E^(a)] - [E]^a", here, factorial(a) * k_E(a, std::nullopt, n, mu), e_pow))
        return;
      if (!run.same("a! [F^(a)] = [F]^a", "a![F^(a)] - [F]^a", here, factorial(a) * k_F(a, std::nullopt, n, mu), f_pow))
        return;
    }
  }
}

}  // namespace detail

/**
 * Runs a named suite over every admissible index up to n_max and returns
 * the first counterexample, if any. bound <= 0 selects the suite default.
 * Throws std::invalid_argument for an unknown suite name.
 */
inline SuiteReport run_identity_suite(std::string_view name, int n_max, int bound = 0,
                                      Mutation mutation = Mutation::None) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw std::invalid_argument("unknown suite: " + std::string(name));
  if (n_max < 0 || n_max > 16) throw std::out_of_range("n_max must lie in 0..16");
  if (bound <= 0) bound = info->default_bound;
  SuiteReport rep;
  rep.suite = std::string(name);
  rep.n_max = n_max;
  rep.bound = bound;
  rep.mutation = mutation;
  detail::SuiteRun run(rep);
  if (name == "ef") detail::suite_ef(run, n_max, mutation);
  else if (name == "divided") detail::suite_divided(run, n_max, bound, mutation);
  else if (name == "canonical-action") detail::suite_canonical_action(run, n_max, bound, mutation);
  else if (name == "zuckerman-tl") detail::suite_zuckerman_tl(run, n_max, mutation);
  else if (name == "schur-weyl") detail::suite_schur_weyl(run, n_max, mutation);
  else if (name == "parabolic-tl") detail::suite_parabolic_tl(run, n_max, mutation);
  else if (name == "comult") detail::suite_comult(run, n_max, bound, mutation);
  else if (name == "upsilon") detail::suite_upsilon(run, n_max, mutation);
  return rep;
}

/// {suite, n_max, status, checked, counterexample?, witness?} in this key order.
inline nlohmann::ordered_json to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["n_max"] = r.n_max;
  if (r.bound > 0) j["bound"] = r.bound;
  if (r.mutation != Mutation::None) j["mutation"] = std::string(to_string(r.mutation));
  j["status"] = r.passed ? "pass" : "fail";
  j["checked"] = r.checked;
  if (!r.passed) {
    nlohmann::ordered_json ce;
    ce["identity"] = r.identity;
    ce["instance"] = r.instance;
    ce["witness"] = r.witness;
    j["counterexample"] = ce;
    j["witness"] = r.witness;
  }
  return j;
}

inline std::string to_text(const SuiteReport& r) {
  std::string out;
  auto row = [&](const std::string& key, const std::string& value) {
    out += key + std::string(key.size() < 10 ? 10 - key.size() : 1, ' ') + value + "\n";
  };
  row("suite", r.suite);
  row("n_max", std::to_string(r.n_max));
  if (r.bound > 0) row("bound", std::to_string(r.bound));
  if (r.mutation != Mutation::None) row("mutation", std::string(to_string(r.mutation)));
  row("status", r.passed ? "pass" : "fail");
  row("checked", std::to_string(r.checked));
  if (!r.passed) {
    row("identity", r.identity);
    row("instance", r.instance);
    row("witness", r.witness);
  }
  return out;
}

}  // namespace sl2tl
