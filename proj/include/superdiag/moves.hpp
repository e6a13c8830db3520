// Copyright 2026 The superdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERDIAG_MOVES_HPP
#define SUPERDIAG_MOVES_HPP

#include <algorithm>
#include <functional>
#include <iterator>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "superdiag/diagrams.hpp"

namespace superdiag {

enum class MoveKind { single, double_from_zero };

inline const char* to_string(MoveKind k) { return k == MoveKind::single ? "single" : "double"; }

// For t=1 the coordinates a, b and the index p refer to the tau-preimage (t=2) diagrams.
struct Move {
  WeightDiagram source;
  WeightDiagram target;
  MoveKind kind = MoveKind::single;
  int a = 0;
  int b = 0;
  int p = 0;
  int degree = 0;
  Sign result_sign = Sign::none;
};

// What an admissibility predicate gets to see about a candidate move (t=0,2 coordinates).
struct MoveContext {
  const WeightDiagram& f;
  MoveKind kind;
  int a;
  int b;
  int degree;
  int tail_drop;
};

using AdmissibilityPredicate = std::function<bool(const MoveContext&)>;

inline bool nonnegative_degree(const MoveContext& c) { return c.degree >= 0; }

// #crosses minus #empty positions strictly between a and b.
inline int l_between(const WeightDiagram& f, int a, int b) {
  if (a >= b) throw error("l_between needs a < b");
  int l = 0;
  for (int pos = a + 1; pos < b; ++pos) {
    int c = f.count_at(pos);
    l += c > 0 ? c : -1;
  }
  return l;
}

namespace detail {

inline std::vector<int> formula_degrees(const WeightDiagram& f, const WeightDiagram& g, int a,
                                        int b) {
  int l = l_between(f, a, b);
  int drop = tail(f) - tail(g);
  if (drop != 1) return {l};
  if (f.t() == 0) {
    int alt = 2 * tail(g) + l;
    return alt == l ? std::vector<int>{l} : std::vector<int>{l, alt};
  }
  return {2 * tail(g) + l + 1};
}

inline int landing_index(const WeightDiagram& g, int b) {
  const auto& c = g.crosses();
  return static_cast<int>(std::lower_bound(c.begin(), c.end(), b) - c.begin()) + 1;
}

inline std::vector<Sign> target_signs(const WeightDiagram& f, const std::vector<int>& crosses) {
  if (f.t() != 0) return {Sign::none};
  if (f.sign() != Sign::none) return {f.sign()};
  bool z = !crosses.empty() && crosses.front() == 0;
  if (z || crosses.empty()) return {Sign::none};
  return {Sign::plus, Sign::minus};
}

inline std::vector<Move> moves_02(const WeightDiagram& f, int coord_bound,
                                  const AdmissibilityPredicate& pred) {
  std::vector<Move> out;
  const auto& c = f.crosses();
  auto emit = [&](MoveKind kind, int a, int b, std::vector<int> nc) {
    std::sort(nc.begin(), nc.end());
    for (Sign s : target_signs(f, nc)) {
      auto g = WeightDiagram::make(f.family(), nc, s);
      int drop = tail(f) - tail(g);
      for (int d : formula_degrees(f, g, a, b)) {
        if (!pred(MoveContext{f, kind, a, b, d, drop})) continue;
        Move m;
        m.source = f;
        m.target = g;
        m.kind = kind;
        m.a = a;
        m.b = b;
        m.p = landing_index(g, b);
        m.degree = d;
        m.result_sign = (f.sign() == Sign::none) ? s : Sign::none;
        out.push_back(m);
      }
    }
  };
  std::set<int> sources(c.begin(), c.end());
  for (int a : sources) {
    for (int b = a + 1; b <= coord_bound; ++b) {
      if (f.occupied(b)) continue;
      std::vector<int> nc = c;
      *std::find(nc.begin(), nc.end(), a) = b;
      emit(MoveKind::single, a, b, nc);
    }
  }
  if (f.zeros() >= 2) {
    for (int a = 1; a <= coord_bound; ++a) {
      if (f.occupied(a)) continue;
      for (int b = a + 1; b <= coord_bound; ++b) {
        if (f.occupied(b)) continue;
        std::vector<int> nc = c;
        nc[0] = a;
        nc[1] = b;
        emit(MoveKind::double_from_zero, a, b, nc);
      }
    }
  }
  return out;
}

inline bool move_less(const Move& x, const Move& y) {
  if (x.target != y.target) return canonical_less(x.target, y.target);
  return std::tie(x.kind, x.a, x.b, x.degree) < std::tie(y.kind, y.a, y.b, y.degree);
}

}  // namespace detail

// All admissible moves out of f landing at coordinates <= coord_bound.
inline std::vector<Move> enumerate_moves(const WeightDiagram& f, int coord_bound,
                                         const AdmissibilityPredicate& pred = nonnegative_degree) {
  std::vector<Move> out;
  if (f.t() == 1) {
    for (auto m : detail::moves_02(tau_inv(f), coord_bound + 1, pred)) {
      m.source = f;
      m.target = tau(m.target);
      m.result_sign = Sign::none;
      out.push_back(m);
    }
  } else {
    out = detail::moves_02(f, coord_bound, pred);
  }
  std::sort(out.begin(), out.end(), detail::move_less);
  return out;
}

// Degrees of the moves taking f to g (two values only for t=0 with tail drop 1).
inline std::vector<int> move_degrees(const WeightDiagram& f, const WeightDiagram& g, MoveKind kind,
                                     const AdmissibilityPredicate& pred = nonnegative_degree) {
  if (f.family() != g.family()) throw error("move_degrees: diagrams from different blocks");
  if (f.t() == 1) return move_degrees(tau_inv(f), tau_inv(g), kind, pred);
  std::multiset<int> fc(f.crosses().begin(), f.crosses().end());
  std::multiset<int> gc(g.crosses().begin(), g.crosses().end());
  std::vector<int> removed, added;
  std::set_difference(fc.begin(), fc.end(), gc.begin(), gc.end(), std::back_inserter(removed));
  std::set_difference(gc.begin(), gc.end(), fc.begin(), fc.end(), std::back_inserter(added));
  auto unreachable = [&] {
    return error("no " + std::string(to_string(kind)) + " move from \"" + render(f) + "\" to \"" +
                 render(g) + "\"");
  };
  if (f.sign() != Sign::none && g.sign() != f.sign()) throw unreachable();
  int a = 0, b = 0;
  if (kind == MoveKind::single) {
    if (removed.size() != 1 || added.size() != 1) throw unreachable();
    a = removed[0];
    b = added[0];
    if (b <= a || f.occupied(b)) throw unreachable();
  } else {
    if (removed != std::vector<int>{0, 0} || added.size() != 2) throw unreachable();
    a = added[0];
    b = added[1];
    if (a <= 0 || f.occupied(a) || f.occupied(b)) throw unreachable();
  }
  int drop = tail(f) - tail(g);
  std::vector<int> out;
  for (int d : detail::formula_degrees(f, g, a, b))
    if (pred(MoveContext{f, kind, a, b, d, drop})) out.push_back(d);
  if (out.empty()) throw unreachable();
  return out;
}

}  // namespace superdiag

#endif  // SUPERDIAG_MOVES_HPP
