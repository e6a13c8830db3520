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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "superdiag/diagrams.hpp"
#include "superdiag/lattice.hpp"

namespace sd = superdiag;
using sd::Family;
using sd::Rational;
using sd::Weight;

namespace {

Weight eps(Family f, std::size_t i) { return Weight::eps_unit(f, i - 1); }
Weight del(Family f, std::size_t i) { return Weight::delta_unit(f, i - 1); }

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(sd::parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(sd::parse_rational("-2"), Rational(-2));
  EXPECT_EQ(sd::to_string(Rational(2)), "2/1");
  EXPECT_EQ(sd::to_string(Rational(-1, 2)), "-1/2");
  EXPECT_THROW(sd::parse_rational("1/0"), sd::error);
  EXPECT_THROW(sd::parse_rational("x"), sd::error);
}

TEST(Inner, Normalization) {
  auto f = Family::osp22();
  EXPECT_EQ(sd::inner(del(f, 1), del(f, 1)), -1);
  EXPECT_EQ(sd::inner(eps(f, 1), del(f, 1)), 0);
  EXPECT_EQ(sd::inner(eps(f, 1), eps(f, 1)), 1);
}

TEST(Inner, SymmetricAndBilinear) {
  auto f = Family::osp(1, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto rnd = [&] {
    Weight w(f);
    for (auto& x : w.eps) x = Rational(num(rng), den(rng));
    for (auto& x : w.delta) x = Rational(num(rng), den(rng));
    return w;
  };
  for (int i = 0; i < 10000; ++i) {
    Weight a = rnd(), b = rnd(), c = rnd();
    Rational s(num(rng), den(rng));
    ASSERT_EQ(sd::inner(a, b), sd::inner(b, a));
    ASSERT_EQ(sd::inner(s * a + c, b), s * sd::inner(a, b) + sd::inner(c, b));
  }
}

TEST(Parity, Examples) {
  auto f = Family::osp(0, 2);
  EXPECT_EQ(sd::parity(Weight(f)), 0);
  Weight w = eps(f, 2) + del(f, 2) + Rational(2) * eps(f, 1) + Rational(2) * del(f, 1);
  EXPECT_EQ(sd::parity(w), 1);
  auto g = Family::gl11();
  Weight alpha = eps(g, 1) - del(g, 1);
  for (int s = -3; s <= 3; ++s) EXPECT_EQ(sd::parity(Rational(s) * alpha), (s % 2 + 2) % 2);
}

TEST(Dominance, Examples) {
  auto f = Family::osp32();
  Weight z(f);
  EXPECT_TRUE(sd::dominance_leq(z, z));
  EXPECT_TRUE(sd::dominance_leq(z, eps(f, 1)));
  EXPECT_FALSE(sd::dominance_leq(eps(f, 1), z));
}

TEST(Dominance, PartialOrderOnBlocks) {
  for (int t = 0; t <= 2; ++t) {
    for (int k = 1; k <= 3; ++k) {
      auto fam = Family::osp(t, k);
      auto rd = sd::root_datum(fam);
      std::vector<Weight> ws;
      for (auto& d : sd::enumerate_block(fam, k == 3 ? 4 : 6)) ws.push_back(sd::weight_from_diagram(d));
      std::vector<std::vector<bool>> le(ws.size(), std::vector<bool>(ws.size()));
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) le[i][j] = sd::dominance_leq(ws[i], ws[j], rd);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        ASSERT_TRUE(le[i][i]);
        for (std::size_t j = 0; j < ws.size(); ++j) {
          if (i != j) {
            ASSERT_FALSE(le[i][j] && le[j][i]) << fam.name();
          }
          if (!le[i][j]) continue;
          for (std::size_t m = 0; m < ws.size(); ++m) {
            if (le[j][m]) {
              ASSERT_TRUE(le[i][m]) << fam.name();
            }
          }
        }
      }
    }
  }
}

TEST(RootData, RhoIsHalfSignedRootSum) {
  for (int t = 0; t <= 2; ++t)
    for (int k = 0; k <= 3; ++k) {
      auto rd = sd::root_datum(Family::osp(t, k));
      EXPECT_EQ(rd.rho, sd::rho_from_roots(rd)) << Family::osp(t, k).name();
    }
}

TEST(RootData, SimpleRootsArePositive) {
  auto rd = sd::root_datum(Family::osp(1, 2));
  for (auto& s : rd.simple_roots) {
    bool found = false;
    for (auto& r : rd.positive_roots) found = found || r.weight == s;
    EXPECT_TRUE(found);
  }
}

TEST(Weyl, Orbits) {
  auto f = Family::osp22();
  auto o = sd::weyl_orbit(del(f, 1));
  ASSERT_EQ(o.size(), 2u);
  std::set<std::pair<Weight, int>> got(o.begin(), o.end());
  std::set<std::pair<Weight, int>> want{{del(f, 1), 1}, {-del(f, 1), -1}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(sd::weyl_orbit(Weight(f)).size(), 1u);
  EXPECT_EQ(sd::weyl_orbit(Weight(f)).front().second, 1);
  auto g = Family::osp32();
  EXPECT_EQ(sd::weyl_orbit(eps(g, 1) + del(g, 1)).size(), 4u);
  EXPECT_EQ(sd::weyl_group(g).size(), 4u);
}

TEST(Weyl, UnsupportedFamily) { EXPECT_THROW(sd::weyl_group(Family::osp(0, 2)), sd::error); }

}  // namespace
