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

#ifndef SUPERDIAG_GAMMA_HPP
#define SUPERDIAG_GAMMA_HPP

#include <map>
#include <string>
#include <vector>

#include "superdiag/bigraph.hpp"
#include "superdiag/moves.hpp"

namespace superdiag {

struct BlockSpec {
  Family family;
  int coord_bound = 0;

  static BlockSpec make(Family f, int coord_bound) {
    if (f.kind != FamilyKind::osp) throw error("block specs are for osp principal blocks");
    if (coord_bound < f.k)
      throw error("coord_bound must be at least k = " + std::to_string(f.k));
    return BlockSpec{f, coord_bound};
  }
};

inline VertexInfo vertex_info(const WeightDiagram& f) {
  std::string text = render(f);
  return VertexInfo{text, text, tail(f), norm(f), pari(f)};
}

// Edges nu -> lambda for moves of degree d ending at the p-th cross of lambda, marked (p; d+1),
// kept when p > tail(lambda).
inline BimarkedGraph build_gamma(const BlockSpec& spec,
                                 const AdmissibilityPredicate& pred = nonnegative_degree) {
  BimarkedGraph g;
  g.set_family(spec.family);
  auto block = enumerate_block(spec.family, spec.coord_bound);
  for (auto& f : block) g.add_vertex(vertex_info(f));
  g.register_norm_grading();
  for (auto& f : block) {
    std::size_t src = g.index_of(render(f));
    for (auto& m : enumerate_moves(f, spec.coord_bound, pred)) {
      if (m.p <= tail(m.target)) continue;
      g.add_edge(src, g.index_of(render(m.target)), m.p, m.degree + 1);
    }
  }
  return g;
}

// Coordinate of the p-th cross (1-based from 0 upward); t=1 diagrams are read on their
// tau-preimage.
inline int pth_cross_coordinate(const WeightDiagram& f, int p) {
  const WeightDiagram& h = f.t() == 1 ? tau_inv(f) : f;
  if (p < 1 || p > h.k()) throw error("diagram has no cross number " + std::to_string(p));
  return h.crosses()[static_cast<std::size_t>(p - 1)];
}

inline BimarkedGraph relabel_bprime(const BimarkedGraph& g) {
  if (!g.family()) throw error("relabel_bprime needs a graph built from diagrams");
  int t = g.family()->t;
  BimarkedGraph out = g;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    auto lambda = parse_diagram(g.vertex(e.dst).diagram, t);
    out.set_bprime(i, pth_cross_coordinate(lambda, e.b));
  }
  return out;
}

inline UndirectedMultigraph gamma1(const BimarkedGraph& g) {
  UndirectedMultigraph u;
  for (auto& v : g.vertices()) u.vertices.push_back(v.id);
  for (auto& e : g.edges())
    if (e.deg == 1) u.edges.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  std::sort(u.edges.begin(), u.edges.end());
  return u;
}

// ---- golden fixtures ----

inline std::vector<std::string> golden_graph_names() {
  return {"gl11", "osp22", "osp32", "osp22_tilde", "osp32_tilde",
          "F4_principal", "G3_principal", "D21a_principal"};
}

inline std::string lambda_id(int s) { return "lambda_" + std::to_string(s); }

// lambda_s of osp(2|2): one cross at |s| with sign(s); lambda_0 = "x".
inline WeightDiagram osp22_lambda(int s) {
  if (s == 0) return parse_diagram("x", 0);
  return WeightDiagram::make(Family::osp22(), {s < 0 ? -s : s}, s < 0 ? Sign::minus : Sign::plus);
}

// lambda_j of osp(3|2): "-x", "+x", then one cross at j-1.
inline WeightDiagram osp32_lambda(int j) {
  if (j < 0) throw error("osp(3|2) weights are indexed by j >= 0");
  if (j == 0) return parse_diagram("-x", 1);
  if (j == 1) return parse_diagram("+x", 1);
  return WeightDiagram::make(Family::osp32(), {j - 1}, Sign::none);
}

namespace detail {

inline BimarkedGraph osp32_shape(int n, bool with_diagrams, bool tilde) {
  BimarkedGraph g;
  for (int j = 0; j <= n; ++j) {
    auto f = osp32_lambda(j);
    VertexInfo v = vertex_info(f);
    v.id = lambda_id(j);
    if (!with_diagrams) v.diagram.clear();
    g.add_vertex(v);
  }
  g.register_norm_grading();
  if (n >= 1) g.add_edge(lambda_id(0), lambda_id(1), 1, 2);
  if (n >= 2) g.add_edge(lambda_id(0), lambda_id(2), 1, 1);
  for (int j = 1; j < n; ++j) g.add_edge(lambda_id(j), lambda_id(j + 1), 1, 1);
  // lambda_1 -> lambda_0 must have even degree for the Z2-grading.
  if (tilde && n >= 1) g.add_edge(lambda_id(1), lambda_id(0), 1, 2);
  if (with_diagrams) g.set_family(Family::osp32());
  return g;
}

}  // namespace detail

inline BimarkedGraph golden_graph(const std::string& name, int n) {
  if (n < 0) throw error("truncation size must be nonnegative");
  BimarkedGraph g;
  if (name == "gl11") {
    for (int s = -n; s <= n; ++s) {
      VertexInfo v{lambda_id(s), "", 1, s + n, s % 2 == 0 ? 1 : -1};
      g.add_vertex(v);
    }
    g.register_norm_grading();
    for (int s = -n; s < n; ++s) g.add_edge(lambda_id(s), lambda_id(s + 1), 1, 1);
    return g;
  }
  if (name == "osp22" || name == "osp22_tilde") {
    for (int s = -n; s <= n; ++s) {
      VertexInfo v = vertex_info(osp22_lambda(s));
      v.id = lambda_id(s);
      g.add_vertex(v);
    }
    g.set_family(Family::osp22());
    g.register_norm_grading();
    for (int s = 0; s < n; ++s) {
      g.add_edge(lambda_id(s), lambda_id(s + 1), 1, 1);
      g.add_edge(lambda_id(-s), lambda_id(-s - 1), 1, 1);
    }
    if (name == "osp22_tilde") g.add_edge(lambda_id(0), lambda_id(0), 1, 2);
    return g;
  }
  if (name == "osp32") return detail::osp32_shape(n, true, false);
  if (name == "osp32_tilde") return detail::osp32_shape(n, true, true);
  if (name == "F4_principal" || name == "G3_principal" || name == "D21a_principal")
    return detail::osp32_shape(n, false, true);
  throw error("unknown golden graph \"" + name + "\"");
}

// Multiset of (src diagram, dst diagram, b, deg), for comparing graphs with different ids.
inline std::vector<std::tuple<std::string, std::string, int, int>> labelled_edges(
    const BimarkedGraph& g) {
  std::vector<std::tuple<std::string, std::string, int, int>> out;
  for (auto& e : g.edges())
    out.emplace_back(g.vertex(e.src).diagram, g.vertex(e.dst).diagram, e.b, e.deg);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline void require_margin(const BlockSpec& spec, const WeightDiagram& lambda) {
  if (lambda.family() != spec.family) throw error("weight is not in this block");
  if (lambda.max_coord() > spec.coord_bound)
    throw error("truncation too small: coord_bound " + std::to_string(spec.coord_bound) +
                " < max coordinate " + std::to_string(lambda.max_coord()));
}
}  // namespace detail

// d^{lambda,nu}: number of increasing b'-paths nu -> lambda; zero entries omitted.
inline std::map<std::string, long> coefficients_dless(
    const BlockSpec& spec, const WeightDiagram& lambda,
    const AdmissibilityPredicate& pred = nonnegative_degree) {
  detail::require_margin(spec, lambda);
  auto g = relabel_bprime(build_gamma(spec, pred));
  std::size_t target = g.index_of(render(lambda));
  PathSums ps(g, target, PathFlavor::count, Mark::bprime);
  ps.set_monotone(Monotone::increasing);
  std::map<std::string, long> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto c = ps.from(v);
    if (c != 0) out[g.vertex(v).id] = static_cast<long>(c);
  }
  return out;
}

inline std::int64_t k_at_minus_one(const BlockSpec& spec, const WeightDiagram& lambda,
                                   const WeightDiagram& nu,
                                   const AdmissibilityPredicate& pred = nonnegative_degree) {
  detail::require_margin(spec, lambda);
  detail::require_margin(spec, nu);
  auto g = build_gamma(spec, pred);
  return signed_path_sum(g, g.index_of(render(nu)), g.index_of(render(lambda)),
                         PathFlavor::dec_len, Mark::b);
}

}  // namespace superdiag

#endif  // SUPERDIAG_GAMMA_HPP
