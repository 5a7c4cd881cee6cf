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
 * @file cli.hpp
 * @brief The sl2tl command line: subcommands compose, mul, canonical,
 * basis, act, verify and render. dispatch() never exits the process; it
 * returns the exit code (0 success, 1 verification failure, 2 bad input)
 * together with the text for stdout and stderr.
 */

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bases.hpp"
#include "coeffs.hpp"
#include "expr.hpp"
#include "json.hpp"
#include "kmodel.hpp"
#include "planar.hpp"
#include "tensor.hpp"
#include "udot.hpp"

namespace sl2tl {

/**
 * Action of a TL morphism on tensor space after q -> q0 (q0 = 1 or -1).
 * A cap pairs v1 v0 to -1 and v0 v1 to 1 at q=1, both to 1 at q=-1; a cup
 * inserts v10 - v01, respectively v10 + v01. At q=1 this is the action of
 * u = cup∘cap from the tensor module, at q=-1 the parabolic model.
 */
template <class Coeff>
BasicTensorVector<Coeff> act_diagram(const TLMorphism& f, int q0, const BasicTensorVector<Coeff>& v) {
  if (q0 != 1 && q0 != -1) throw std::invalid_argument("diagram action needs q = 1 or q = -1");
  if (v.size() != f.source() && !v.is_zero())
    throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match source " +
                                std::to_string(f.source()));
  const Coeff odd = q0 == 1 ? Coeff(-1) : Coeff(1);
  BasicTensorVector<Coeff> out(f.target());
  for (const auto& [d, c] : f.terms()) {
    const Coeff scale(specialize(c, q0));
    std::vector<std::pair<int, int>> bottom_arcs;
    std::vector<std::pair<int, int>> top_arcs;
    std::vector<std::pair<int, int>> strands;  // bottom position, top index
    for (auto [p, q] : d.pairs()) {
      if (q < d.bottom()) bottom_arcs.emplace_back(p, q);
      else if (p >= d.bottom()) top_arcs.emplace_back(p - d.bottom(), q - d.bottom());
      else strands.emplace_back(p, q - d.bottom());
    }
    const std::size_t t = top_arcs.size();
    for (const auto& [b, cb] : v.terms()) {
      Coeff weight = scale * cb;
      for (auto [p, q] : bottom_arcs) {
        if (b[p] == b[q]) {
          weight = 0;
          break;
        }
        if (b[p]) weight *= odd;
      }
      if (weight == 0) continue;
      std::string bits(static_cast<std::size_t>(f.target()), '0');
      for (auto [p, j] : strands) bits[static_cast<std::size_t>(j)] = b[p] ? '1' : '0';
      // Each top arc is (1,0) with sign +1 or (0,1) with sign `odd`.
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        Coeff w = weight;
        for (std::size_t k = 0; k < t; ++k) {
          const bool swap = (mask >> k) & 1U;
          bits[static_cast<std::size_t>(top_arcs[k].first)] = swap ? '0' : '1';
          bits[static_cast<std::size_t>(top_arcs[k].second)] = swap ? '1' : '0';
          if (swap) w *= odd;
        }
        out.add(BitString(bits), w);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering.

namespace detail {

struct DiagramLayout {
  std::vector<std::pair<int, int>> top_arcs;     // top indices, l < r
  std::vector<std::pair<int, int>> bottom_arcs;  // bottom indices, l < r
  std::vector<std::pair<int, int>> strands;      // bottom index, top index
};

inline int arc_depths(const std::vector<std::pair<int, int>>& arcs, std::map<std::pair<int, int>, int>& depth) {
  int deepest = 0;
  // Inner arcs have smaller spans; process by span.
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
  for (auto arc : sorted) {
    int d = 1;
    for (auto inner : sorted) {
      if (inner.first > arc.first && inner.second < arc.second) d = std::max(d, depth[inner] + 1);
    }
    depth[arc] = d;
    deepest = std::max(deepest, d);
  }
  return deepest;
}

inline DiagramLayout layout(const PlanarDiagram& d) {
  DiagramLayout out;
  for (auto [p, q] : d.pairs()) {
    if (q < d.bottom()) out.bottom_arcs.emplace_back(p, q);
    else if (p >= d.bottom()) out.top_arcs.emplace_back(p - d.bottom(), q - d.bottom());
    else out.strands.emplace_back(p, q - d.bottom());
  }
  return out;
}

inline std::vector<std::string> ascii_diagram(const PlanarDiagram& d) {
  DiagramLayout lay = layout(d);
  std::map<std::pair<int, int>, int> top_depth;
  std::map<std::pair<int, int>, int> bottom_depth;
  const int dt = arc_depths(lay.top_arcs, top_depth);
  const int db = arc_depths(lay.bottom_arcs, bottom_depth);
  auto x = [](int j) { return 4 * j + 1; };
  const int width = 4 * std::max({d.bottom(), d.top(), 1}) - 1;
  int shift = 0;
  for (auto [b, t] : lay.strands) shift = std::max(shift, std::abs(x(t) - x(b)));
  const int middle = std::max(1, shift - 1);

  std::vector<std::string> rows;
  auto blank = [&] { return std::string(static_cast<std::size_t>(width + 1), ' '); };
  auto put = [](std::string& row, int col, char c) {
    if (col >= 0 && col < static_cast<int>(row.size())) row[static_cast<std::size_t>(col)] = c;
  };

  if (d.top() == 0 && d.bottom() == 0) return {"(empty)"};
  std::string top = blank();
  for (int j = 0; j < d.top(); ++j) put(top, x(j), 'o');
  if (d.top() > 0) rows.push_back(top);
  for (int r = 1; r <= dt; ++r) {
    std::string row = blank();
    for (auto [b, t] : lay.strands) put(row, x(t), '|');
    for (auto arc : lay.top_arcs) {
      const int dep = top_depth[arc];
      if (dep < r) continue;
      put(row, x(arc.first), '|');
      put(row, x(arc.second), '|');
      if (dep == r)
        for (int c = x(arc.first) + 1; c < x(arc.second); ++c) put(row, c, '_');
    }
    rows.push_back(row);
  }
  if (d.bottom() == 0) {
    for (auto& row : rows) row.erase(row.find_last_not_of(' ') + 1);
    return rows;
  }
  // Middle rows, listed top to bottom; row index from the bottom is middle-1-k.
  for (int k = 0; k < (d.top() > 0 ? middle : 0); ++k) {
    const int r = middle - 1 - k;
    std::string row = blank();
    for (auto [b, t] : lay.strands) {
      const int s = x(t) - x(b);
      const int steps = std::abs(s) - 1;
      if (s == 0) {
        put(row, x(b), '|');
      } else if (r < steps) {
        put(row, s > 0 ? x(b) + r + 1 : x(b) - r - 1, s > 0 ? '/' : '\\');
      } else {
        put(row, x(t), '|');
      }
    }
    rows.push_back(row);
  }
  for (int r = db + 1; r >= 1; --r) {
    std::string row = blank();
    for (auto [b, t] : lay.strands) put(row, x(b), '|');
    for (auto arc : lay.bottom_arcs) {
      const int dep = bottom_depth[arc];
      if (r <= dep) {
        put(row, x(arc.first), '|');
        put(row, x(arc.second), '|');
      } else if (r == dep + 1) {
        for (int c = x(arc.first) + 1; c < x(arc.second); ++c) put(row, c, '_');
      }
    }
    if (db > 0 || r == 1) rows.push_back(row);
  }
  std::string bottom = blank();
  for (int j = 0; j < d.bottom(); ++j) put(bottom, x(j), 'o');
  rows.push_back(bottom);
  for (auto& row : rows) row.erase(row.find_last_not_of(' ') + 1);
  return rows;
}

inline std::string coeff_label(const LaurentInt& c) {
  const std::string s = to_string(c);
  const bool constant = c.terms().size() == 1 && c.terms().begin()->first == 0;
  return constant ? s : "(" + s + ")";
}

}  // namespace detail

/// Text drawing: top boundary first, source (bottom) points last.
inline std::string render_ascii(const TLMorphism& f) {
  if (f.is_zero()) return "0 : " + std::to_string(f.source()) + " -> " + std::to_string(f.target()) + "\n";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : f.terms()) {
    if (!first) out += "+\n";
    first = false;
    if (c != LaurentInt(1)) out += detail::coeff_label(c) + " *\n";
    for (const auto& row : detail::ascii_diagram(d)) out += row + "\n";
  }
  return out;
}

/// SVG with one panel per term; arcs are semicircles, through-strands cubic curves.
inline std::string render_svg(const TLMorphism& f) {
  constexpr int kStep = 40;
  constexpr int kPad = 20;
  std::vector<std::string> panels;
  int total_height = kPad;
  int total_width = 2 * kPad;
  std::ostringstream body;
  for (const auto& [d, c] : f.terms()) {
    const auto lay = detail::layout(d);
    const std::string label = c == LaurentInt(1) ? "" : detail::coeff_label(c);
    const int left = kPad + (label.empty() ? 0 : 8 * static_cast<int>(label.size()) + 10);
    int span = 1;
    for (auto [l, r] : lay.top_arcs) span = std::max(span, r - l);
    for (auto [l, r] : lay.bottom_arcs) span = std::max(span, r - l);
    const int height = std::max(2 * kStep, span * kStep / 2 * 2 + kStep / 2);
    const int y_top = total_height;
    const int y_bot = y_top + height;
    auto x = [&](int j) { return left + kStep * j; };
    if (!label.empty())
      body << "  <text x=\"" << kPad << "\" y=\"" << (y_top + y_bot) / 2 + 5 << "\" font-family=\"monospace\">" << label
           << "</text>\n";
    for (auto [l, r] : lay.top_arcs) {
      const int rx = (x(r) - x(l)) / 2;
      body << "  <path class=\"cup\" d=\"M " << x(l) << " " << y_top << " A " << rx << " " << rx << " 0 0 0 " << x(r)
           << " " << y_top << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (auto [l, r] : lay.bottom_arcs) {
      const int rx = (x(r) - x(l)) / 2;
      body << "  <path class=\"cap\" d=\"M " << x(l) << " " << y_bot << " A " << rx << " " << rx << " 0 0 1 " << x(r)
           << " " << y_bot << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (auto [b, t] : lay.strands) {
      const int mid = (y_top + y_bot) / 2;
      body << "  <path class=\"strand\" d=\"M " << x(b) << " " << y_bot << " C " << x(b) << " " << mid << ", " << x(t)
           << " " << mid << ", " << x(t) << " " << y_top << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    for (int j = 0; j < d.top(); ++j) body << "  <circle cx=\"" << x(j) << "\" cy=\"" << y_top << "\" r=\"3\"/>\n";
    for (int j = 0; j < d.bottom(); ++j) body << "  <circle cx=\"" << x(j) << "\" cy=\"" << y_bot << "\" r=\"3\"/>\n";
    total_height = y_bot + kPad;
    total_width = std::max(total_width, left + kStep * std::max({d.top(), d.bottom(), 1}) + kPad);
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_width << "\" height=\"" << total_height + kPad
      << "\">\n"
      << body.str() << "</svg>\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Command dispatch.

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }
inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

inline int parse_q(const std::string& q) {
  if (q == "generic") return 0;
  if (q == "1" || q == "+1") return 1;
  if (q == "-1") return -1;
  throw std::invalid_argument("--q must be generic, 1 or -1");
}

inline BasisKind parse_basis(const std::string& s) {
  auto k = basis_from_symbol(s);
  if (!k) throw std::invalid_argument("basis must be v, l or p, got '" + s + "'");
  return *k;
}

inline TLMorphism maybe_specialize(const TLMorphism& f, int q0) { return q0 == 0 ? f : specialize(f, q0); }

inline nlohmann::ordered_json tl_json(const TLMorphism& f) {
  nlohmann::ordered_json j;
  j["source"] = f.source();
  j["target"] = f.target();
  j["text"] = to_word(f);
  j["terms"] = nlohmann::ordered_json::parse(to_json(f).dump());
  return j;
}

inline std::string single_basis_element(const TensorVector& coords, char symbol) {
  if (coords.terms().size() != 1 || coords.terms().begin()->second != 1) return "";
  return std::string(1, symbol) + "(" + coords.terms().begin()->first.str() + ")";
}

struct VerifyOutcome {
  nlohmann::ordered_json json;
  std::string text;
  bool passed;
};

inline VerifyOutcome verify_tl(int n_max, bool loop_sign_mutation) {
  const LaurentInt loop = loop_sign_mutation ? -LaurentInt::loop() : LaurentInt::loop();
  const RelationReport r = verify_tl_relations(n_max, loop);
  SuiteReport s;
  s.suite = "tl";
  s.n_max = n_max;
  s.passed = r.passed;
  s.checked = r.checked;
  s.identity = r.relation;
  s.instance = r.instance;
  s.witness = r.witness;
  auto j = to_json(s);
  if (loop_sign_mutation) {
    nlohmann::ordered_json k;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "status") k["mutation"] = "loop-sign";
      k[it.key()] = it.value();
    }
    j = k;
  }
  std::string text = to_text(s);
  if (loop_sign_mutation) text.insert(text.find("status"), "mutation  loop-sign\n");
  return {j, text, r.passed};
}

}  // namespace detail

/// Runs one command line (without the program name).
inline CliResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations for U(sl2), the Temperley-Lieb category and their K-group models", "sl2tl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string q_mode = "generic";
  bool json = false;

  auto* compose_cmd = app.add_subcommand("compose", "compose(f, g) = g after f for TL morphisms");
  std::string tl_f, tl_g;
  compose_cmd->add_option("f", tl_f, "first morphism, e.g. \"cup1 @ n=0\"")->required();
  compose_cmd->add_option("g", tl_g, "second morphism, applied after f")->required();
  compose_cmd->add_option("--q", q_mode, "generic, 1 or -1");
  compose_cmd->add_flag("--json", json, "JSON output");

  auto* mul_cmd = app.add_subcommand("mul", "product x*y in U(sl2)");
  std::string ux, uy;
  bool mul_canonical = false;
  mul_cmd->add_option("x", ux, "left factor, e.g. \"E(1) 1(0)\"")->required();
  mul_cmd->add_option("y", uy, "right factor")->required();
  mul_cmd->add_flag("--canonical", mul_canonical, "print the product in the canonical basis");
  mul_cmd->add_flag("--json", json, "JSON output");

  auto* can_cmd = app.add_subcommand("canonical", "canonical basis coordinates of an element");
  std::string can_x;
  bool expand = false;
  can_cmd->add_option("x", can_x, "element, e.g. \"E(1) 1(-1) F(1)\"")->required();
  can_cmd->add_flag("--expand", expand, "read x as canonical basis labels and print the normal form");
  can_cmd->add_flag("--json", json, "JSON output");

  auto* basis_cmd = app.add_subcommand("basis", "transition matrices between the v, l and p bases");
  int basis_n = -1;
  std::string from_s = "p", to_s = "v", identify_s, expand_s;
  std::vector<int> basis_blocks;
  basis_cmd->add_option("--n", basis_n, "tensor length")->check(CLI::Range(0, 16));
  basis_cmd->add_option("--from", from_s, "source basis: v, l or p");
  basis_cmd->add_option("--to", to_s, "target basis: v, l or p");
  basis_cmd->add_option("--block", basis_blocks, "only these weight blocks (number of ones)");
  basis_cmd->add_option("--identify", identify_s, "recognize a vector as a basis element");
  basis_cmd->add_option("--expand", expand_s, "write a vector in the --to basis");
  basis_cmd->add_flag("--json", json, "JSON output");

  auto* act_cmd = app.add_subcommand("act", "action of a U(sl2) element or TL morphism on a vector");
  std::string act_x, act_v, act_tl, act_basis = "v";
  std::string act_q = "1";
  act_cmd->add_option("x", act_x, "U(sl2) element, or the vector when --tl is given");
  act_cmd->add_option("v", act_v, "vector, e.g. \"v(00)\"");
  act_cmd->add_option("--tl", act_tl, "TL morphism to act with instead of a U(sl2) element");
  act_cmd->add_option("--q", act_q, "specialization for --tl: 1 or -1");
  act_cmd->add_option("--basis", act_basis, "print the result in this basis: v, l or p");
  act_cmd->add_flag("--json", json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  std::string suite_name, mutate_s = "none";
  int verify_n = -1, bound = 0;
  verify_cmd->add_option("suite", suite_name, "ef, divided, canonical-action, zuckerman-tl, schur-weyl, "
                                              "parabolic-tl, comult, upsilon, tl or all")
      ->required();
  verify_cmd->add_option("--n", verify_n, "largest tensor length (default: SL2TL_VERIFY_N or the suite default)")
      ->check(CLI::Range(0, 16));
  verify_cmd->add_option("--bound", bound, "divided power bound for divided, canonical-action and comult")
      ->check(CLI::Range(1, 16));
  verify_cmd->add_option("--mutate", mutate_s, "deliberate defect for a negative control");
  verify_cmd->add_flag("--json", json, "JSON output");

  auto* render_cmd = app.add_subcommand("render", "draw a TL morphism");
  std::string render_x, format = "ascii";
  render_cmd->add_option("f", render_x, "morphism, e.g. \"u1 @ n=2\"")->required();
  render_cmd->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  CliResult res;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = code == 0 ? 0 : 2;
    return res;
  }

  try {
    if (*compose_cmd) {
      const int q0 = detail::parse_q(q_mode);
      const TLMorphism f = parse_tl(tl_f);
      const TLMorphism g = parse_tl(tl_g);
      if (f.target() != g.source())
        throw std::invalid_argument("cannot compose: f ends at " + std::to_string(f.target()) + " but g starts at " +
                                    std::to_string(g.source()));
      const TLMorphism h = detail::maybe_specialize(compose(f, g), q0);
      if (json) {
        auto j = detail::tl_json(h);
        j["composite"] = "(" + to_word(g) + ") o (" + to_word(f) + ")";
        out << detail::dump(j);
      } else {
        out << to_word(h) << "\n";
        out << "  = (" << to_word(g) << ") o (" << to_word(f) << ")\n";
      }
    } else if (*mul_cmd) {
      const UdotElement p = multiply(parse_udot(ux), parse_udot(uy));
      if (json) {
        nlohmann::ordered_json j;
        j["text"] = to_string(p);
        j["terms"] = nlohmann::ordered_json::parse(to_json(p).dump());
        if (mul_canonical) j["canonical"] = nlohmann::ordered_json::parse(to_json(to_canonical(p)).dump());
        out << detail::dump(j);
      } else {
        out << (mul_canonical ? to_string(to_canonical(p)) : to_string(p)) << "\n";
      }
    } else if (*can_cmd) {
      if (expand) {
        const UdotElement x = from_canonical(parse_canonical(can_x));
        if (json) out << detail::dump(to_json(x));
        else out << to_string(x) << "\n";
      } else {
        const CanonicalCoords c = to_canonical(parse_udot(can_x));
        if (json) out << detail::dump(to_json(c));
        else out << to_string(c) << "\n";
      }
    } else if (*basis_cmd) {
      const BasisKind to = detail::parse_basis(to_s);
      if (!identify_s.empty()) {
        const TensorVector v = parse_vector(identify_s, std::max(basis_n, 0));
        const TensorVector pc = coordinates(v, BasisKind::Projective);
        const TensorVector lc = coordinates(v, BasisKind::Simple);
        std::string found = detail::single_basis_element(v, 'v');
        if (found.empty()) found = detail::single_basis_element(pc, 'p');
        if (found.empty()) found = detail::single_basis_element(lc, 'l');
        if (json) {
          nlohmann::ordered_json j;
          j["identified"] = found.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(found);
          j["v"] = to_string(v);
          j["p"] = to_string(pc, "p");
          j["l"] = to_string(lc, "l");
          out << detail::dump(j);
        } else {
          out << (found.empty() ? "not a single basis element" : found) << "\n";
          out << "  v: " << to_string(v) << "\n  p: " << to_string(pc, "p") << "\n  l: " << to_string(lc, "l")
              << "\n";
        }
      } else if (!expand_s.empty()) {
        const TensorVector v = parse_vector(expand_s, std::max(basis_n, 0));
        const TensorVector c = coordinates(v, to);
        const std::string sym(1, basis_symbol(to));
        if (json) {
          nlohmann::ordered_json j;
          j["basis"] = sym;
          j["text"] = to_string(c, sym);
          j["vector"] = nlohmann::ordered_json::parse(to_json(c).dump());
          out << detail::dump(j);
        } else {
          out << to_string(c, sym) << "\n";
        }
      } else {
        if (basis_n < 0) throw std::invalid_argument("basis needs --n, --identify or --expand");
        const BasisKind from = detail::parse_basis(from_s);
        auto blocks = transition(basis_n, from, to);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& t : blocks) {
          if (!basis_blocks.empty() &&
              std::find(basis_blocks.begin(), basis_blocks.end(), t.ones) == basis_blocks.end())
            continue;
          if (json) arr.push_back(nlohmann::ordered_json::parse(to_json(t).dump()));
          else out << to_text(t) << "\n";
        }
        if (json) out << detail::dump(arr);
      }
    } else if (*act_cmd) {
      const BasisKind shown = detail::parse_basis(act_basis);
      TensorVector result;
      if (!act_tl.empty()) {
        if (!act_v.empty()) throw std::invalid_argument("with --tl give only the vector");
        if (act_x.empty()) throw std::invalid_argument("act needs a vector");
        const int q0 = detail::parse_q(act_q);
        if (q0 == 0) throw std::invalid_argument("--q for a TL action must be 1 or -1");
        const TLMorphism f = parse_tl(act_tl);
        result = act_diagram(f, q0, parse_vector(act_x, f.source()));
      } else {
        if (act_x.empty() || act_v.empty()) throw std::invalid_argument("act needs an element and a vector");
        result = act(parse_udot(act_x), parse_vector(act_v));
      }
      const TensorVector c = coordinates(result, shown);
      const std::string sym(1, basis_symbol(shown));
      if (json) {
        nlohmann::ordered_json j;
        j["basis"] = sym;
        j["text"] = to_string(c, sym);
        j["vector"] = nlohmann::ordered_json::parse(to_json(c).dump());
        out << detail::dump(j);
      } else {
        out << to_string(c, sym) << "\n";
      }
    } else if (*verify_cmd) {
      std::vector<std::string> names;
      if (suite_name == "all") {
        for (const auto& s : suites()) names.emplace_back(s.name);
        names.emplace_back("tl");
      } else if (suite_name == "tl" || find_suite(suite_name)) {
        names.push_back(suite_name);
      } else {
        throw std::invalid_argument("unknown suite '" + suite_name + "'");
      }
      const bool loop_sign = mutate_s == "loop-sign";
      const auto mutation = loop_sign ? std::optional<Mutation>(Mutation::None) : mutation_from_string(mutate_s);
      if (!mutation) throw std::invalid_argument("unknown mutation '" + mutate_s + "'");
      if (loop_sign && suite_name != "tl") throw std::invalid_argument("loop-sign applies only to the tl suite");
      bool all_passed = true;
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      std::string text;
      for (const auto& name : names) {
        detail::VerifyOutcome o;
        if (name == "tl") {
          o = detail::verify_tl(verify_n >= 0 ? verify_n : 8, loop_sign);
        } else {
          const SuiteInfo& info = *find_suite(name);
          const SuiteReport r = run_identity_suite(name, verify_n >= 0 ? verify_n : default_n_max(info), bound,
                                                   *mutation);
          o = {to_json(r), to_text(r), r.passed};
        }
        all_passed = all_passed && o.passed;
        reports.push_back(o.json);
        text += (text.empty() ? "" : "\n") + o.text;
      }
      if (json) out << detail::dump(names.size() == 1 ? reports[0] : reports);
      else out << text;
      res.code = all_passed ? 0 : 1;
    } else if (*render_cmd) {
      const TLMorphism f = parse_tl(render_x);
      out << (format == "svg" ? render_svg(f) : render_ascii(f));
    }
  } catch (const std::exception& e) {
    res.code = 2;
    err << "error: " << e.what() << "\n";
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace sl2tl
