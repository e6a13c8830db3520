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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "superdiag/bigraph.hpp"
#include "superdiag/gamma.hpp"

namespace sd = superdiag;
using sd::BimarkedGraph;
using sd::Mark;
using sd::PathFlavor;
using sd::VertexInfo;

namespace {

BimarkedGraph two_vertices(int pari_a, int pari_b, int deg) {
  BimarkedGraph g;
  g.add_vertex(VertexInfo{"a", "", 0, 0, pari_a});
  g.add_vertex(VertexInfo{"b", "", 0, 1, pari_b});
  g.register_norm_grading();
  g.add_edge("a", "b", 1, deg);
  return g;
}

// Gauss-Jordan over the rationals; independent of the path machinery.
std::vector<std::vector<sd::Rational>> brute_inverse(const sd::IntMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<sd::Rational>> a(n, std::vector<sd::Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    auto piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      auto f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<sd::Rational>> inv(n, std::vector<sd::Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

void expect_inverse_matches(const BimarkedGraph& g) {
  auto all = sd::all_vertices(g);
  auto gt = sd::a_greater(g, all, Mark::bprime);
  auto lt = sd::a_less(g, all, Mark::bprime);
  auto inv = brute_inverse(gt);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) EXPECT_EQ(inv[i][j], sd::Rational(lt[i][j]));
  EXPECT_TRUE(sd::matrix_identity_check(g, all));
}

TEST(Bigraph, Z2Grading) {
  EXPECT_TRUE(sd::check_z2_grading(sd::golden_graph("osp32_tilde", 6)));
  EXPECT_FALSE(sd::check_z2_grading(two_vertices(1, 1, 1)));
  EXPECT_TRUE(sd::check_z2_grading(two_vertices(1, -1, 1)));
  EXPECT_TRUE(sd::check_z2_grading(sd::golden_graph("gl11", 5)));
}

TEST(Bigraph, GradingIsEnforced) {
  BimarkedGraph g;
  g.add_vertex(VertexInfo{"a", "", 0, 1, 1});
  g.add_vertex(VertexInfo{"b", "", 0, 0, 1});
  g.register_norm_grading();
  EXPECT_THROW(g.add_edge("a", "b", 1, 1), sd::error);
  BimarkedGraph h;
  h.add_vertex(VertexInfo{"a", "", 0, 0, 1});
  EXPECT_THROW(sd::decreasing_paths(h, 0, 0), sd::error);
  EXPECT_THROW(h.add_vertex(VertexInfo{"a", "", 0, 0, 1}), sd::error);
}

TEST(Bigraph, TrivialPaths) {
  auto g = two_vertices(1, -1, 1);
  auto ps = sd::decreasing_paths(g, 0, 0);
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].deg, 0);
  EXPECT_EQ(ps[0].length(), 0);
  for (auto fl : {PathFlavor::dec_len, PathFlavor::dec, PathFlavor::inc})
    EXPECT_EQ(sd::signed_path_sum(g, 1, 1, fl), 1);
}

TEST(Bigraph, GoldenPathCounts) {
  auto g32 = sd::relabel_bprime(sd::golden_graph("osp32", 5));
  EXPECT_EQ(sd::increasing_paths(g32, g32.index_of("lambda_0"), g32.index_of("lambda_3"), Mark::bprime)
                .size(),
            2u);
  auto g22 = sd::relabel_bprime(sd::golden_graph("osp22", 4));
  EXPECT_EQ(sd::increasing_paths(g22, g22.index_of("lambda_0"), g22.index_of("lambda_2"), Mark::bprime)
                .size(),
            1u);
}

TEST(Bigraph, CortailForm) {
  // With a Z2-grading the dec_len sum is pari(v) pari(w) times the sum of (-1)^length.
  auto g = sd::relabel_bprime(sd::golden_graph("osp32", 5));
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w = 0; w < g.size(); ++w) {
      std::int64_t s = 0;
      for (auto& p : sd::decreasing_paths(g, v, w)) s += p.length() % 2 == 0 ? 1 : -1;
      EXPECT_EQ(sd::signed_path_sum(g, v, w, PathFlavor::dec_len),
                g.vertex(v).pari * g.vertex(w).pari * s);
    }
}

TEST(Bigraph, DecreasingPathParity) {
  auto g = sd::build_gamma(sd::BlockSpec::make(sd::Family::osp(0, 2), 5));
  for (std::size_t v = 0; v < g.size(); ++v)
    for (std::size_t w = 0; w < g.size(); ++w)
      for (auto& p : sd::decreasing_paths(g, v, w))
        ASSERT_EQ(p.deg % 2 == 0 ? 1 : -1, g.vertex(v).pari * g.vertex(w).pari);
}

TEST(Bigraph, MatrixIdentity) {
  BimarkedGraph one;
  one.add_vertex(VertexInfo{"a", "", 0, 0, 1});
  one.register_norm_grading();
  EXPECT_TRUE(sd::matrix_identity_check(one, {0}, Mark::b));
  expect_inverse_matches(sd::relabel_bprime(sd::golden_graph("osp22", 4)));
  expect_inverse_matches(sd::relabel_bprime(sd::golden_graph("osp32", 5)));
}

TEST(Bigraph, MatrixNeedsDownClosedSubset) {
  auto g = sd::relabel_bprime(sd::golden_graph("osp32", 3));
  EXPECT_THROW(sd::matrix_identity_check(g, {g.index_of("lambda_2")}), sd::error);
}

TEST(Bigraph, BBAndEquivalence) {
  auto g = sd::build_gamma(sd::BlockSpec::make(sd::Family::osp32(), 5));
  auto gb = sd::relabel_bprime(g);
  EXPECT_TRUE(sd::check_decreasing_equivalence(g, Mark::b, gb, Mark::bprime));
  EXPECT_TRUE(sd::check_bb(gb, Mark::bprime));
  EXPECT_FALSE(sd::check_bb(g, Mark::b));
  EXPECT_TRUE(sd::check_tail_condition(g));
}

TEST(Bigraph, TailViolation) {
  auto g = sd::build_gamma(sd::BlockSpec::make(sd::Family::osp32(), 3));
  g.add_edge(g.index_of("-x"), g.index_of("o;o;x"), 0, 1);
  EXPECT_FALSE(sd::check_tail_condition(g));
}

TEST(Bigraph, Dot) {
  BimarkedGraph empty;
  EXPECT_EQ(sd::to_dot(empty), "digraph G {\n}\n");
  auto dot = sd::to_dot(sd::golden_graph("gl11", 2));
  EXPECT_NE(dot.find("\"lambda_-2\" -> \"lambda_-1\" [label=\"(1;1)\"];"), std::string::npos);
  EXPECT_EQ(dot.find("(1;2)"), std::string::npos);
}

TEST(Bigraph, Overflow) {
  EXPECT_THROW(sd::detail::checked_add(INT64_MAX, 1), sd::error);
  EXPECT_THROW(sd::detail::checked_mul(INT64_MAX, 2), sd::error);
}

TEST(Bigraph, DegreeOneLoopsDropped) {
  BimarkedGraph g;
  g.add_vertex(VertexInfo{"a", "", 0, 0, 1});
  g.add_edge("a", "a", 1, 1);
  g.add_edge("a", "a", 1, 2);
  EXPECT_EQ(g.edges().size(), 1u);
}

}  // namespace
