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

#ifndef SUPERDIAG_VERIFY_HPP
#define SUPERDIAG_VERIFY_HPP

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "superdiag/bigraph.hpp"
#include "superdiag/charring.hpp"
#include "superdiag/dsblocks.hpp"
#include "superdiag/gamma.hpp"
#include "superdiag/json_io.hpp"
#include "superdiag/moves.hpp"

namespace superdiag {

enum class Status { pass, fail, skipped };

inline const char* to_string(Status s) {
  return s == Status::pass ? "PASS" : s == Status::fail ? "FAIL" : "SKIP";
}

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::fail;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int bound = 6;
  int depth = 20;
  AdmissibilityPredicate predicate = nonnegative_degree;
};

namespace check {

// Minimum truncation each criterion is stated for.
constexpr int kGraphBound = 6;
constexpr int kGoldenBound = 4;
constexpr int kDepth = 20;

struct Outcome {
  Status status = Status::pass;
  std::string detail;

  void fail(const std::string& why) {
    if (status != Status::fail) detail.clear();
    status = Status::fail;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  static Outcome skipped(const std::string& why) { return Outcome{Status::skipped, why}; }
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline Outcome golden_graphs(const VerifyOptions& o) {
  if (o.bound < kGoldenBound) return Outcome::skipped("insufficient bound (needs 4)");
  Outcome r;
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    Family fam;
    std::string golden;
    int n;
  };
  for (auto& c : {Case{Family::osp22(), "osp22", 4}, Case{Family::osp32(), "osp32", 5}}) {
    auto built = build_gamma(BlockSpec::make(c.fam, 4), o.predicate);
    auto gold = golden_graph(c.golden, c.n);
    std::set<std::string> bv, gv;
    for (auto& v : built.vertices()) bv.insert(v.diagram);
    for (auto& v : gold.vertices()) gv.insert(v.diagram);
    r.require(bv == gv, c.golden + ": vertex sets differ");
    r.require(labelled_edges(built) == labelled_edges(gold), c.golden + ": edges or labels differ");
  }
  double s = seconds_since(t0);
  r.require(s < 1.0, "took " + std::to_string(s) + " s");
  return r;
}

inline Outcome move_degree_table(const VerifyOptions& o) {
  Outcome r;
  auto row = [&](const std::string& from, const std::string& to, int t, MoveKind kind,
                 std::vector<int> want) {
    std::vector<int> got;
    try {
      got = move_degrees(parse_diagram(from, t), parse_diagram(to, t), kind, o.predicate);
    } catch (const error& e) {
      r.fail(from + " -> " + to + ": " + e.what());
      return;
    }
    std::sort(got.begin(), got.end());
    r.require(got == want, from + " -> " + to + ": wrong degrees");
  };
  row(">;x;o", ">;o;x", 2, MoveKind::single, {0});
  row(">;x;x;x;o;o", ">;o;x;x;o;x", 2, MoveKind::single, {1});
  row("x", "+o;x", 0, MoveKind::single, {0});
  row("x", "-o;x", 0, MoveKind::single, {0});
  row("x2;o", "x;x", 0, MoveKind::single, {0, 2});
  return r;
}

inline Outcome tau_checks(const VerifyOptions&) {
  Outcome r;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, std::string>> golden{
      {">x;o;x", "-x;x"}, {">x", "-x"}, {">;x", "+x"}, {">;o;x", "o;x"}};
  for (auto& [a, b] : golden) r.require(render(tau(parse_diagram(a, 2))) == b, "tau(" + a + ")");
  for (int k = 0; k <= 4; ++k) {
    auto src = enumerate_block(Family::osp(2, k), 8);
    auto dst = enumerate_block(Family::osp(1, k), 7);
    std::set<WeightDiagram> image;
    for (auto& f : src) {
      auto g = tau(f);
      image.insert(g);
      if (tail(g) != tail(f)) r.fail("tail not preserved at " + render(f));
      if (tau_inv(g) != f) r.fail("tau_inv(tau(f)) != f at " + render(f));
    }
    r.require(image.size() == src.size(), "tau not injective for k=" + std::to_string(k));
    r.require(image == std::set<WeightDiagram>(dst.begin(), dst.end()),
              "tau image is not the full truncation for k=" + std::to_string(k));
  }
  double s = seconds_since(t0);
  r.require(s < 5.0, "took " + std::to_string(s) + " s");
  return r;
}

inline std::vector<BlockSpec> graph_range(int bound) {
  std::vector<BlockSpec> v;
  for (int k = 0; k <= 3; ++k)
    for (int t = 0; t <= 2; ++t) v.push_back(BlockSpec::make(Family::osp(t, k), bound));
  return v;
}

inline std::string spec_name(const BlockSpec& s) {
  return "t=" + std::to_string(s.family.t) + ",k=" + std::to_string(s.family.k);
}

inline Outcome z2_grading(const VerifyOptions& o) {
  if (o.bound < kGraphBound) return Outcome::skipped("insufficient bound (needs 6)");
  Outcome r;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& spec : graph_range(o.bound))
    r.require(check_z2_grading(build_gamma(spec, o.predicate)), spec_name(spec));
  for (auto& name : golden_graph_names())
    r.require(check_z2_grading(golden_graph(name, 6)), name);
  double s = seconds_since(t0);
  r.require(s < 30.0, "took " + std::to_string(s) + " s");
  return r;
}

inline Outcome graph_properties(const VerifyOptions& o) {
  if (o.bound < kGraphBound) return Outcome::skipped("insufficient bound (needs 6)");
  Outcome r;
  int flat = 0;
  for (auto& spec : graph_range(o.bound)) {
    auto g = build_gamma(spec, o.predicate);
    auto gb = relabel_bprime(g);
    std::vector<long> iota;
    for (auto& v : g.vertices()) iota.push_back(v.norm);
    r.require(check_n_grading(g, iota, false), spec_name(spec) + ": N-grading");
    auto rd = root_datum(spec.family);
    bool dominance = true;
    for (auto& e : g.edges()) {
      if (iota[e.src] == iota[e.dst]) ++flat;
      auto ws = weight_from_diagram(parse_diagram(g.vertex(e.src).diagram, spec.family.t));
      auto wd = weight_from_diagram(parse_diagram(g.vertex(e.dst).diagram, spec.family.t));
      dominance = dominance && ws != wd && dominance_leq(ws, wd, rd);
    }
    r.require(dominance, spec_name(spec) + ": edge not increasing in dominance order");
    r.require(check_tail_condition(g), spec_name(spec) + ": Tail");
    r.require(check_bb(gb, Mark::bprime), spec_name(spec) + ": BB on b'");
    r.require(check_decreasing_equivalence(g, Mark::b, gb, Mark::bprime),
              spec_name(spec) + ": decreasing equivalence");
  }
  // Sign flips at 0 (t=2 moves 0 -> 1 with tail drop 1) keep the norm.
  if (r.status == Status::pass && flat > 0)
    r.detail = std::to_string(flat) + " edges keep the norm constant";
  return r;
}

inline Outcome matrix_identity(const VerifyOptions& o) {
  if (o.bound < kGraphBound) return Outcome::skipped("insufficient bound (needs 6)");
  Outcome r;
  auto t0 = std::chrono::steady_clock::now();
  int dec_failures = 0, truncations = 0;
  for (auto& spec : graph_range(o.bound)) {
    auto g = relabel_bprime(build_gamma(spec, o.predicate));
    for (int cut = spec.family.k; cut <= o.bound; ++cut) {
      std::vector<std::size_t> sub;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (parse_diagram(g.vertex(v).diagram, spec.family.t).max_coord() <= cut) sub.push_back(v);
      ++truncations;
      r.require(matrix_identity_check(g, sub, Mark::bprime, InverseReading::increasing_paths),
                spec_name(spec) + " cut " + std::to_string(cut));
      if (!matrix_identity_check(g, sub, Mark::bprime, InverseReading::decreasing_paths))
        ++dec_failures;
    }
  }
  if (r.status == Status::pass)
    r.detail = "decreasing-path reading fails on " + std::to_string(dec_failures) + "/" +
               std::to_string(truncations) + " truncations";
  double s = seconds_since(t0);
  r.require(s < 60.0, "took " + std::to_string(s) + " s");
  return r;
}

inline Outcome character_coefficients(const VerifyOptions& o) {
  Outcome r;
  for (int j = 0; j <= 4; ++j) {
    for (int sg : {1, -1}) {
      auto lam = osp22_lambda(sg * j);
      std::map<std::string, long> want;
      for (int s = 0; s <= j; ++s) want[render(osp22_lambda(sg * s))] = 1;
      auto got = coefficients_dless(BlockSpec::make(Family::osp22(), std::max(1, j)), lam, o.predicate);
      r.require(got == want, "osp(2|2) lambda_" + std::to_string(sg * j));
    }
  }
  for (int j = 0; j <= 5; ++j) {
    std::map<std::string, long> want;
    for (int s = 0; s <= j; ++s) want[render(osp32_lambda(s))] = (s == 0 && j >= 2) ? 2 : 1;
    auto lam = osp32_lambda(j);
    auto got = coefficients_dless(BlockSpec::make(Family::osp32(), std::max(1, lam.max_coord())), lam,
                                  o.predicate);
    r.require(got == want, "osp(3|2) lambda_" + std::to_string(j));
  }
  return r;
}

inline Outcome euler_characters(const VerifyOptions& o) {
  if (o.depth < kDepth) return Outcome::skipped("insufficient depth (needs 20)");
  Outcome r;
  for (Family fam : {Family::osp22(), Family::osp32()}) {
    auto lam0 = fam == Family::osp22() ? osp22_lambda(0) : osp32_lambda(0);
    auto one = LaurentSeries::one(default_phi(fam));
    auto e = euler_character(lam0, o.depth);
    auto e5 = euler_character(lam0, o.depth + 5);
    r.require(e.agrees_above(one, Rational(-o.depth)) && e5.agrees_above(one, Rational(-o.depth - 5)),
              fam.name() + ": E(lambda_0) != 1");
    for (int s = 1; s <= 4; ++s) {
      auto nu = fam == Family::osp22() ? osp22_lambda(s) : osp32_lambda(s);
      r.require(euler_character(nu, o.depth).agrees_above(euler_character(nu, o.depth + 5),
                                                          Rational(-o.depth)),
                fam.name() + ": E unstable at s=" + std::to_string(s));
    }
    for (int j = 0; j <= 4; ++j) {
      auto lam = fam == Family::osp22() ? osp22_lambda(j) : osp32_lambda(j);
      try {
        auto ch = simple_character(lam, o.depth, o.predicate).value;
        r.require(nonnegative(ch), fam.name() + ": negative coefficient at j=" + std::to_string(j));
        r.require(is_weyl_invariant(ch), fam.name() + ": not W-invariant at j=" + std::to_string(j));
      } catch (const error& ex) {
        r.fail(fam.name() + " j=" + std::to_string(j) + ": " + ex.what());
      }
    }
  }
  return r;
}

inline Outcome superdimensions(const VerifyOptions& o) {
  if (o.depth < kDepth) return Outcome::skipped("insufficient depth (needs 20)");
  Outcome r;
  for (Family fam : {Family::osp22(), Family::osp32()}) {
    for (int s = 1; s <= 4; ++s) {
      auto nu = fam == Family::osp22() ? osp22_lambda(s) : osp32_lambda(s);
      auto e = euler_character(nu, o.depth);
      LaurentSeries exact(e.phi());
      for (auto& [w, c] : e.terms()) exact += LaurentSeries::monomial(e.phi(), w, c);
      r.require(sdim(exact) == 0, fam.name() + ": sdim pi(E) != 0 at s=" + std::to_string(s));
    }
  }
  for (int j = 0; j <= 4; ++j) {
    try {
      auto rec32 = ds_multiplicity(Shape::Dinf, j);
      long want32 = rec32.copies * (rec32.parity_shift ? -1 : 1);
      auto ch32 = simple_character(osp32_lambda(j), o.depth, o.predicate).value;
      r.require(sdim(ch32) == want32, "osp(3|2) sdim at j=" + std::to_string(j));
      auto rec22 = ds_multiplicity(Shape::AinfInf, j);
      long want22 = rec22.copies * (rec22.parity_shift ? -1 : 1);
      auto ch22 = simple_character(osp22_lambda(j), o.depth, o.predicate).value;
      r.require(sdim(ch22) == want22, "osp(2|2) sdim at j=" + std::to_string(j));
    } catch (const error& ex) {
      r.fail("j=" + std::to_string(j) + ": " + ex.what());
    }
  }
  return r;
}

struct GoldenDsRow {
  std::string algebra, block;
  long index;
  std::string text;
};

inline std::vector<GoldenDsRow> golden_ds_rows() {
  return {
      {"D21a", "0", 0, "C"},
      {"D21a", "0", 1, "C"},
      {"D21a", "0", 2, "Pi(C)^2"},
      {"D21a", "0", 3, "(C)^2"},
      {"D21a", "1", 0, "L_C(1)+L_C(-1)"},
      {"D21a", "1", -1, "Pi(L_C(1)+L_C(-1))"},
      {"D21a", "2", 3, "Pi(L_C(2)+L_C(-2))"},
      {"G3", "0", 0, "L_sl2(0)"},
      {"G3", "1", 1, "L_sl2(2)"},
      {"G3", "1", 2, "Pi(L_sl2(2))^2"},
      {"G3", "1", 3, "(L_sl2(2))^2"},
      {"F4", "0,0", 0, "L_sl3(0w1+0w2)"},
      {"F4", "1,1", 0, "L_sl3(1w1+1w2)"},
      {"F4", "1,1", 1, "L_sl3(1w1+1w2)"},
      {"F4", "2,2", 3, "(L_sl3(2w1+2w2))^2"},
      {"F4", "2,1", 0, "L_sl3(2w1+1w2)+L_sl3(1w1+2w2)"},
      {"F4", "2,1", 1, "Pi(L_sl3(2w1+1w2)+L_sl3(1w1+2w2))"},
      {"F4", "3,0", -2, "L_sl3(3w1+0w2)+L_sl3(0w1+3w2)"},
      {"gl11", "principal", 3, "Pi(C)"},
      {"gl11", "principal", -2, "C"},
  };
}

inline Outcome ds_engine(const VerifyOptions&) {
  Outcome r;
  for (Shape s : {Shape::Ainf, Shape::AinfInf, Shape::Dinf}) {
    auto [lo, hi] = truncation_range(s, 50);
    r.require(verify_madj(s, assignment_from(s, lo, hi)), to_string(s) + ": madj fails");
  }
  for (auto& row : golden_ds_rows()) {
    try {
      r.require(golden_ds(row.algebra, row.block, row.index).text == row.text,
                row.algebra + " " + row.block + " i=" + std::to_string(row.index));
    } catch (const error& ex) {
      r.fail(ex.what());
    }
  }
  if (r.status == Status::pass) {
    auto [lo, hi] = truncation_range(Shape::Ainf, 50);
    bool two_copy = verify_madj(Shape::Ainf, assignment_from(Shape::Ainf, lo, hi, ClosedForm::two_copy));
    r.detail = std::string("two-copy Ainf form ") + (two_copy ? "satisfies" : "violates") +
               " the recurrence";
  }
  return r;
}

inline Outcome purity_bipartite(const VerifyOptions&) {
  Outcome r;
  for (Shape s : {Shape::Ainf, Shape::AinfInf, Shape::Dinf}) {
    auto [lo, hi] = truncation_range(s, 50);
    for (long i = lo; i < hi; ++i) {
      auto rec = ds_multiplicity(s, i);
      r.require(rec.copies > 0 && (rec.parity_shift == 0 || rec.parity_shift == 1),
                to_string(s) + ": impure record at " + std::to_string(i));
      for (long j : adjacency(s, i)) {
        if (j < lo || j >= hi) continue;
        r.require(ds_multiplicity(s, j).parity_shift != rec.parity_shift,
                  to_string(s) + ": pari equal across " + std::to_string(i) + "-" + std::to_string(j));
      }
    }
  }
  return r;
}

// Breadth-first extension of path prefixes; shares nothing with the memoized counter.
inline std::int64_t naive_path_sum(const BimarkedGraph& g, std::size_t v, std::size_t w,
                                   PathFlavor flavor) {
  struct Prefix {
    std::size_t at;
    int last;
    int deg;
    int len;
  };
  bool inc = flavor == PathFlavor::inc;
  std::vector<Prefix> frontier{{v, inc ? INT_MIN : INT_MAX, 0, 0}};
  std::int64_t total = 0;
  while (!frontier.empty()) {
    std::vector<Prefix> next;
    for (auto& p : frontier) {
      if (p.at == w) {
        int e = flavor == PathFlavor::dec_len ? p.deg + p.len : flavor == PathFlavor::count ? 0 : p.deg;
        total += e % 2 == 0 ? 1 : -1;
      }
      for (auto& ed : g.edges()) {
        if (ed.src != p.at) continue;
        if (inc ? ed.b <= p.last : ed.b >= p.last) continue;
        next.push_back({ed.dst, ed.b, p.deg + ed.deg, p.len + 1});
      }
    }
    frontier.swap(next);
  }
  return total;
}

inline BimarkedGraph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 12), grade(0, 4), mark(0, 4), deg(0, 3);
  BimarkedGraph g;
  int n = nv(rng);
  std::vector<long> iota;
  for (int i = 0; i < n; ++i) {
    iota.push_back(grade(rng));
    g.add_vertex(VertexInfo{"v" + std::to_string(i), "", 0, static_cast<int>(iota.back()), 1});
  }
  g.register_grading(iota);
  std::uniform_int_distribution<int> ne(0, 3 * n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int m = ne(rng);
  for (int i = 0; i < m; ++i) {
    int a = pick(rng), b = pick(rng);
    if (iota[static_cast<std::size_t>(a)] > iota[static_cast<std::size_t>(b)]) std::swap(a, b);
    g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), mark(rng), deg(rng));
  }
  return g;
}

inline Outcome oracle_equivalence(const VerifyOptions&) {
  Outcome r;
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng);
    for (std::size_t v = 0; v < g.size(); ++v)
      for (std::size_t w = 0; w < g.size(); ++w) {
        for (auto fl : {PathFlavor::dec_len, PathFlavor::dec, PathFlavor::inc})
          if (signed_path_sum(g, v, w, fl) != naive_path_sum(g, v, w, fl)) {
            r.fail("path sum mismatch in random graph " + std::to_string(trial));
            return r;
          }
        auto dn = static_cast<std::int64_t>(decreasing_paths(g, v, w).size());
        auto in = static_cast<std::int64_t>(increasing_paths(g, v, w).size());
        if (count_paths(g, v, w, Monotone::decreasing) != dn ||
            count_paths(g, v, w, Monotone::increasing) != in ||
            naive_path_sum(g, v, w, PathFlavor::count) != dn) {
          r.fail("path count mismatch in random graph " + std::to_string(trial));
          return r;
        }
      }
  }
  for (int t = 0; t <= 2; ++t)
    for (int k = 0; k <= 4; ++k)
      for (auto& f : enumerate_block(Family::osp(t, k), 8)) {
        bool ok = parse_diagram(render(f), t) == f &&
                  diagram_from_weight(weight_from_diagram(f)) == f &&
                  diagram_from_json(diagram_to_json(f)) == f;
        if (!ok) {
          r.fail("roundtrip fails at " + render(f));
          return r;
        }
      }
  return r;
}

}  // namespace check

struct Criterion {
  int id;
  std::string name;
  std::function<check::Outcome(const VerifyOptions&)> run;
};

inline std::vector<Criterion> criteria() {
  return {
      {1, "golden graph equality", check::golden_graphs},
      {2, "move degree table", check::move_degree_table},
      {3, "tau golden, bijectivity, tail", check::tau_checks},
      {4, "Z2-grading", check::z2_grading},
      {5, "N-grading, Tail, BB, decreasing equivalence", check::graph_properties},
      {6, "matrix identity", check::matrix_identity},
      {7, "character coefficients", check::character_coefficients},
      {8, "Euler characters", check::euler_characters},
      {9, "superdimension restriction", check::superdimensions},
      {10, "DS engine", check::ds_engine},
      {11, "purity and bipartiteness", check::purity_bipartite},
      {12, "oracle equivalence", check::oracle_equivalence},
  };
}

inline CriterionResult run_criterion(const Criterion& c, const VerifyOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult res{c.id, c.name, Status::fail, "", 0};
  try {
    auto out = c.run(o);
    res.status = out.status;
    res.detail = out.detail;
  } catch (const std::exception& ex) {
    res.status = Status::fail;
    res.detail = std::string("exception: ") + ex.what();
  }
  res.seconds = check::seconds_since(t0);
  return res;
}

// Runs every criterion; never stops early.
inline std::vector<CriterionResult> verify_all(const VerifyOptions& o = {}) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CriterionResult> out;
  for (auto& c : criteria()) out.push_back(run_criterion(c, o));
  double total = check::seconds_since(t0);
  CriterionResult last{13, "full suite under 3 minutes", total < 180.0 ? Status::pass : Status::fail,
                       total < 180.0 ? "" : "took " + std::to_string(total) + " s", total};
  out.push_back(last);
  return out;
}

inline bool all_passed(const std::vector<CriterionResult>& rs) {
  return std::none_of(rs.begin(), rs.end(), [](auto& r) { return r.status == Status::fail; });
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.id << ". " << r.name;
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  return os.str();
}

inline json report_to_json(const std::vector<CriterionResult>& rs) {
  json j = json::array();
  for (auto& r : rs)
    j.push_back({{"id", r.id}, {"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
  return j;
}

}  // namespace superdiag

#endif  // SUPERDIAG_VERIFY_HPP
