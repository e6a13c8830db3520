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

#ifndef SUPERDIAG_BIGRAPH_HPP
#define SUPERDIAG_BIGRAPH_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superdiag/lattice.hpp"

namespace superdiag {

struct VertexInfo {
  std::string id;
  std::string diagram;
  int tail = 0;
  int norm = 0;
  int pari = 1;

  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  int b = 0;
  int deg = 0;
  std::optional<int> bprime;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Mark { b, bprime };
enum class Monotone { decreasing, increasing };
// dec_len: (-1)^(deg+length) over decreasing paths; dec, inc: (-1)^deg; count: 1.
enum class PathFlavor { dec_len, dec, inc, count };

class BimarkedGraph {
 public:
  std::size_t add_vertex(VertexInfo v) {
    if (index_.count(v.id)) throw error("duplicate vertex id \"" + v.id + "\"");
    index_[v.id] = vertices_.size();
    vertices_.push_back(std::move(v));
    out_.emplace_back();
    in_.emplace_back();
    return vertices_.size() - 1;
  }

  // Degree-1 loops are dropped.
  void add_edge(std::size_t src, std::size_t dst, int b, int deg,
                std::optional<int> bprime = std::nullopt) {
    if (src >= vertices_.size() || dst >= vertices_.size()) throw error("edge endpoint out of range");
    if (src == dst && deg == 1) return;
    if (grading_ && (*grading_)[src] > (*grading_)[dst])
      throw error("edge violates the registered grading");
    out_[src].push_back(edges_.size());
    in_[dst].push_back(edges_.size());
    edges_.push_back(Edge{src, dst, b, deg, bprime});
  }
  void add_edge(const std::string& src, const std::string& dst, int b, int deg,
                std::optional<int> bprime = std::nullopt) {
    add_edge(index_of(src), index_of(dst), b, deg, bprime);
  }

  void set_bprime(std::size_t e, int v) { edges_.at(e).bprime = v; }

  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexInfo& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }

  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
  std::size_t index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw error("unknown vertex \"" + id + "\"");
    return it->second;
  }

  // Certifies finiteness of monotone path sets; every edge must satisfy iota(src) <= iota(dst).
  void register_grading(std::vector<long> iota) {
    if (iota.size() != vertices_.size()) throw error("grading must be total on vertices");
    for (auto& e : edges_)
      if (iota[e.src] > iota[e.dst])
        throw error("not an N-grading: edge " + vertices_[e.src].id + " -> " + vertices_[e.dst].id);
    grading_ = std::move(iota);
  }
  void register_norm_grading() {
    std::vector<long> iota;
    for (auto& v : vertices_) iota.push_back(v.norm);
    register_grading(std::move(iota));
  }
  bool has_grading() const { return grading_.has_value(); }
  const std::vector<long>& grading() const {
    if (!grading_) throw error("no N-grading registered");
    return *grading_;
  }

  const std::optional<Family>& family() const { return family_; }
  void set_family(Family f) { family_ = f; }

  int mark(const Edge& e, Mark m) const {
    if (m == Mark::b) return e.b;
    if (!e.bprime) throw error("edge has no b' mark");
    return *e.bprime;
  }

  friend bool operator==(const BimarkedGraph& a, const BimarkedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexInfo> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::vector<long>> grading_;
  std::optional<Family> family_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in path arithmetic");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in path arithmetic");
  return r;
}

inline bool step_ok(Monotone mono, int last, int next) {
  return mono == Monotone::decreasing ? next < last : next > last;
}
inline int start_mark(Monotone mono) { return mono == Monotone::decreasing ? INT_MAX : INT_MIN; }

inline Monotone monotone_of(PathFlavor f) {
  return f == PathFlavor::inc ? Monotone::increasing : Monotone::decreasing;
}

inline int edge_sign(PathFlavor f, const Edge& e) {
  switch (f) {
    case PathFlavor::dec_len: return (e.deg + 1) % 2 == 0 ? 1 : -1;
    case PathFlavor::dec:
    case PathFlavor::inc: return e.deg % 2 == 0 ? 1 : -1;
    default: return 1;
  }
}

}  // namespace detail

struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> edges;
  int deg = 0;
  int length() const { return static_cast<int>(edges.size()); }
};

// Explicit listing of all strictly monotone paths v -> w (the empty path when v = w).
inline std::vector<Path> monotone_paths(const BimarkedGraph& g, std::size_t v, std::size_t w,
                                        Monotone mono, Mark mark = Mark::b) {
  if (!g.has_grading()) throw error("path enumeration needs a registered N-grading");
  std::vector<Path> out;
  Path cur;
  cur.start = v;
  auto rec = [&](auto&& self, std::size_t u, int last) -> void {
    if (u == w) out.push_back(cur);
    for (std::size_t ei : g.out_edges(u)) {
      const Edge& e = g.edges()[ei];
      int m = g.mark(e, mark);
      if (!detail::step_ok(mono, last, m)) continue;
      cur.edges.push_back(ei);
      cur.deg += e.deg;
      self(self, e.dst, m);
      cur.deg -= e.deg;
      cur.edges.pop_back();
    }
  };
  rec(rec, v, detail::start_mark(mono));
  return out;
}

inline std::vector<Path> decreasing_paths(const BimarkedGraph& g, std::size_t v, std::size_t w,
                                          Mark mark = Mark::b) {
  return monotone_paths(g, v, w, Monotone::decreasing, mark);
}
inline std::vector<Path> increasing_paths(const BimarkedGraph& g, std::size_t v, std::size_t w,
                                          Mark mark = Mark::b) {
  return monotone_paths(g, v, w, Monotone::increasing, mark);
}

// Memoized signed sums over monotone paths ending at a fixed target; keyed by (vertex, last mark).
class PathSums {
 public:
  PathSums(const BimarkedGraph& g, std::size_t target, PathFlavor flavor, Mark mark = Mark::b)
      : g_(g), target_(target), flavor_(flavor), mark_(mark), mono_(detail::monotone_of(flavor)) {
    if (!g.has_grading()) throw error("path sums need a registered N-grading");
  }
  // Signed sum over monotone paths v -> target; PathFlavor::count counts decreasing paths unless
  // set_monotone says otherwise.
  std::int64_t from(std::size_t v) { return eval(v, detail::start_mark(mono_)); }

  void set_monotone(Monotone m) {
    mono_ = m;
    memo_.clear();
  }

 private:
  std::int64_t eval(std::size_t u, int last) {
    auto key = std::make_pair(u, last);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t s = u == target_ ? 1 : 0;
    for (std::size_t ei : g_.out_edges(u)) {
      const Edge& e = g_.edges()[ei];
      int m = g_.mark(e, mark_);
      if (!detail::step_ok(mono_, last, m)) continue;
      s = detail::checked_add(s, detail::checked_mul(detail::edge_sign(flavor_, e), eval(e.dst, m)));
    }
    memo_[key] = s;
    return s;
  }

  const BimarkedGraph& g_;
  std::size_t target_;
  PathFlavor flavor_;
  Mark mark_;
  Monotone mono_;
  std::map<std::pair<std::size_t, int>, std::int64_t> memo_;
};

inline std::int64_t signed_path_sum(const BimarkedGraph& g, std::size_t v, std::size_t w,
                                    PathFlavor flavor, Mark mark = Mark::b) {
  return PathSums(g, w, flavor, mark).from(v);
}

inline std::int64_t count_paths(const BimarkedGraph& g, std::size_t v, std::size_t w, Monotone mono,
                                Mark mark = Mark::b) {
  PathSums ps(g, w, PathFlavor::count, mark);
  ps.set_monotone(mono);
  return ps.from(v);
}

inline bool check_z2_grading(const BimarkedGraph& g, const std::vector<int>& pari) {
  if (pari.size() != g.size()) throw error("pari map must be total on vertices");
  for (auto& e : g.edges()) {
    int lhs = e.deg % 2 == 0 ? 1 : -1;
    if (lhs != pari[e.src] * pari[e.dst]) return false;
  }
  return true;
}
inline bool check_z2_grading(const BimarkedGraph& g) {
  std::vector<int> p;
  for (auto& v : g.vertices()) p.push_back(v.pari);
  return check_z2_grading(g, p);
}

inline bool check_n_grading(const BimarkedGraph& g, const std::vector<long>& iota, bool strict) {
  for (auto& e : g.edges()) {
    if (strict ? iota[e.src] >= iota[e.dst] : iota[e.src] > iota[e.dst]) return false;
  }
  return true;
}

inline bool check_bb(const BimarkedGraph& g, Mark mark = Mark::bprime) {
  for (auto& e1 : g.edges())
    for (std::size_t ei : g.out_edges(e1.dst))
      if (g.mark(e1, mark) == g.mark(g.edges()[ei], mark)) return false;
  return true;
}

inline bool check_tail_condition(const BimarkedGraph& g) {
  for (auto& e : g.edges())
    if (g.vertex(e.src).tail > e.b) return false;
  return true;
}

// Same vertices and edges, and each composable pair e1 e2 is decreasing in g1 iff it is in g2.
inline bool check_decreasing_equivalence(const BimarkedGraph& g1, Mark m1, const BimarkedGraph& g2,
                                         Mark m2) {
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size())
    throw error("decreasing equivalence needs graphs with the same vertices and edges");
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (g1.vertex(i).id != g2.vertex(i).id) throw error("vertex sets differ");
  for (std::size_t i = 0; i < g1.edges().size(); ++i) {
    auto& a = g1.edges()[i];
    auto& b = g2.edges()[i];
    if (a.src != b.src || a.dst != b.dst || a.deg != b.deg) throw error("edge sets differ");
  }
  for (std::size_t i = 0; i < g1.edges().size(); ++i) {
    const Edge& e1 = g1.edges()[i];
    for (std::size_t j : g1.out_edges(e1.dst)) {
      const Edge& e2 = g1.edges()[j];
      bool x = g1.mark(e1, m1) > g1.mark(e2, m1);
      bool y = g2.mark(g2.edges()[i], m2) > g2.mark(g2.edges()[j], m2);
      if (x != y) return false;
    }
  }
  return true;
}
inline bool check_decreasing_equivalence(const BimarkedGraph& g1, const BimarkedGraph& g2) {
  return check_decreasing_equivalence(g1, Mark::b, g2, Mark::b);
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = detail::checked_add(c[i][j], detail::checked_mul(a[i][k], b[k][j]));
    }
  return c;
}

inline bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Predecessor-closed vertex subsets contain every intermediate vertex of paths between members.
inline bool is_down_closed(const BimarkedGraph& g, const std::vector<std::size_t>& subset) {
  std::set<std::size_t> s(subset.begin(), subset.end());
  for (auto& e : g.edges())
    if (s.count(e.dst) && !s.count(e.src)) return false;
  return true;
}

// Entry (row lambda, col nu) sums over paths nu -> lambda.
inline IntMatrix path_matrix(const BimarkedGraph& g, const std::vector<std::size_t>& subset,
                             PathFlavor flavor, Mark mark) {
  std::size_t n = subset.size();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    PathSums ps(g, subset[r], flavor, mark);
    for (std::size_t c = 0; c < n; ++c) m[r][c] = ps.from(subset[c]);
  }
  return m;
}

// How the second matrix of the inversion identity is read: over increasing paths, or over
// decreasing paths with sign (-1)^deg.
enum class InverseReading { increasing_paths, decreasing_paths };

inline IntMatrix a_greater(const BimarkedGraph& g, const std::vector<std::size_t>& subset,
                           Mark mark) {
  return path_matrix(g, subset, PathFlavor::dec_len, mark);
}
inline IntMatrix a_less(const BimarkedGraph& g, const std::vector<std::size_t>& subset, Mark mark,
                        InverseReading reading = InverseReading::increasing_paths) {
  return path_matrix(g, subset,
                     reading == InverseReading::increasing_paths ? PathFlavor::inc : PathFlavor::dec,
                     mark);
}

inline bool matrix_identity_check(const BimarkedGraph& g, const std::vector<std::size_t>& subset,
                                  Mark mark = Mark::bprime,
                                  InverseReading reading = InverseReading::increasing_paths) {
  if (!is_down_closed(g, subset)) throw error("truncation is not down-closed");
  auto gt = a_greater(g, subset, mark);
  auto lt = a_less(g, subset, mark, reading);
  return is_identity(multiply(lt, gt)) && is_identity(multiply(gt, lt));
}

inline std::vector<std::size_t> all_vertices(const BimarkedGraph& g) {
  std::vector<std::size_t> v(g.size());
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Vertex order used for output: (norm, diagram text, id).
inline std::vector<std::size_t> output_order(const BimarkedGraph& g) {
  auto v = all_vertices(g);
  std::stable_sort(v.begin(), v.end(), [&](std::size_t a, std::size_t b) {
    auto& x = g.vertex(a);
    auto& y = g.vertex(b);
    return std::tie(x.norm, x.diagram, x.id) < std::tie(y.norm, y.diagram, y.id);
  });
  return v;
}

inline std::vector<std::size_t> output_edge_order(const BimarkedGraph& g) {
  auto order = output_order(g);
  std::vector<std::size_t> rank(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::size_t> e(g.edges().size());
  std::iota(e.begin(), e.end(), std::size_t{0});
  std::stable_sort(e.begin(), e.end(), [&](std::size_t a, std::size_t b) {
    auto& x = g.edges()[a];
    auto& y = g.edges()[b];
    return std::make_tuple(rank[x.src], rank[x.dst], x.b, x.deg) <
           std::make_tuple(rank[y.src], rank[y.dst], y.b, y.deg);
  });
  return e;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

inline std::string to_dot(const BimarkedGraph& g, Mark label_mark = Mark::b) {
  std::string out = "digraph G {\n";
  for (std::size_t v : output_order(g)) {
    auto& x = g.vertex(v);
    std::string label = x.diagram.empty() ? x.id : x.diagram;
    out += "  " + detail::dot_quote(x.id) + " [label=" + detail::dot_quote(label) + "];\n";
  }
  for (std::size_t ei : output_edge_order(g)) {
    auto& e = g.edges()[ei];
    out += "  " + detail::dot_quote(g.vertex(e.src).id) + " -> " +
           detail::dot_quote(g.vertex(e.dst).id) + " [label=\"(" +
           std::to_string(g.mark(e, label_mark)) + ";" + std::to_string(e.deg) + ")\"];\n";
  }
  return out + "}\n";
}

struct UndirectedMultigraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first <= second
};

}  // namespace superdiag

#endif  // SUPERDIAG_BIGRAPH_HPP
