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

#include <set>
#include <string>

#include <gtest/gtest.h>

#include "superdiag/diagrams.hpp"

namespace sd = superdiag;
using sd::Family;
using sd::Rational;
using sd::Weight;

namespace {

std::string r(const std::string& text, int t) { return sd::render(sd::parse_diagram(text, t)); }

std::set<std::string> block(int t, int k, int bound) {
  std::set<std::string> out;
  for (auto& f : sd::enumerate_block(Family::osp(t, k), bound)) out.insert(sd::render(f));
  return out;
}

TEST(Diagram, ParseRender) {
  EXPECT_EQ(r("x3", 0), "x3");
  EXPECT_EQ(r("+o;x;x", 0), "+o;x;x");
  EXPECT_EQ(r(">x;o;x", 2), ">x;o;x");
  EXPECT_EQ(r(">", 2), ">");
  EXPECT_EQ(r("o;x;o;o", 1), "o;x");
  EXPECT_THROW(sd::parse_diagram("x;q", 0), sd::error);
  EXPECT_THROW(sd::parse_diagram("x;x2", 0), sd::error);
  EXPECT_THROW(sd::parse_diagram("+o;x", 2), sd::error);
}

TEST(Diagram, FromWeight) {
  auto f03 = Family::osp(0, 3);
  EXPECT_EQ(sd::render(sd::diagram_from_weight(Weight(f03))), "x3");
  auto f13 = Family::osp(1, 3);
  EXPECT_EQ(sd::render(sd::diagram_from_weight(Weight::eps_unit(f13, 0))), "+x3");
  auto f02 = Family::osp(0, 2);
  Weight w = Weight::eps_unit(f02, 1) + Weight::delta_unit(f02, 1) +
             Rational(2) * Weight::eps_unit(f02, 0) + Rational(2) * Weight::delta_unit(f02, 0);
  EXPECT_EQ(sd::render(sd::diagram_from_weight(w)), "+o;x;x");
}

TEST(Diagram, ToWeight) {
  auto f = Family::osp32();
  EXPECT_EQ(sd::weight_from_diagram(sd::parse_diagram("-x", 1)), Weight(f));
  EXPECT_EQ(sd::weight_from_diagram(sd::parse_diagram("+x", 1)), Weight::eps_unit(f, 0));
  EXPECT_EQ(sd::weight_from_diagram(sd::parse_diagram(">", 2)), Weight(Family::osp(2, 0)));
}

TEST(Diagram, Tail) {
  EXPECT_EQ(sd::tail(sd::parse_diagram("x3", 0)), 3);
  EXPECT_EQ(sd::tail(sd::parse_diagram("+x3", 1)), 2);
  EXPECT_EQ(sd::tail(sd::parse_diagram("+o;x;x", 0)), 0);
}

TEST(Diagram, Tau) {
  auto tau = [](const std::string& s) { return sd::render(sd::tau(sd::parse_diagram(s, 2))); };
  EXPECT_EQ(tau(">x;o;x"), "-x;x");
  EXPECT_EQ(tau(">x"), "-x");
  EXPECT_EQ(tau(">;x"), "+x");
  EXPECT_EQ(tau(">;o;x"), "o;x");
  EXPECT_THROW(sd::tau(sd::parse_diagram("x", 0)), sd::error);
}

TEST(Diagram, TauBijective) {
  for (int k = 0; k <= 4; ++k) {
    auto src = sd::enumerate_block(Family::osp(2, k), 8);
    std::set<std::string> img;
    for (auto& f : src) {
      auto g = sd::tau(f);
      EXPECT_EQ(sd::tail(g), sd::tail(f));
      EXPECT_EQ(sd::tau_inv(g), f);
      img.insert(sd::render(g));
    }
    EXPECT_EQ(img, block(1, k, 7));
  }
}

TEST(Diagram, NormAndPari) {
  EXPECT_EQ(sd::norm(sd::parse_diagram("x3", 0)), 0);
  EXPECT_EQ(sd::norm(sd::parse_diagram("+o;x;x", 0)), 3);
  EXPECT_EQ(sd::norm(sd::parse_diagram(">x;o;x", 2)), 1);
  EXPECT_EQ(sd::pari(sd::parse_diagram("x3", 0)), 1);
  EXPECT_EQ(sd::pari(sd::parse_diagram("+o;x;x", 0)), -1);
}

// For t=2, pari is transported through tau and may differ from the weight parity.
TEST(Diagram, PariMatchesWeightParity) {
  for (int k = 0; k <= 3; ++k) {
    for (int t = 0; t <= 1; ++t)
      for (auto& f : sd::enumerate_block(Family::osp(t, k), 6))
        EXPECT_EQ(sd::pari(f), sd::parity(sd::weight_from_diagram(f)) == 0 ? 1 : -1) << sd::render(f);
    for (auto& f : sd::enumerate_block(Family::osp(2, k), 6)) EXPECT_EQ(sd::pari(f), sd::pari(sd::tau(f)));
  }
  EXPECT_EQ(sd::pari(sd::parse_diagram(">;x", 2)), 1);
  EXPECT_EQ(sd::parity(sd::weight_from_diagram(sd::parse_diagram(">;x", 2))), 1);
}

TEST(Diagram, Enumerate) {
  EXPECT_EQ(block(0, 1, 1), (std::set<std::string>{"x", "+o;x", "-o;x"}));
  EXPECT_EQ(block(2, 0, 5), (std::set<std::string>{">"}));
  EXPECT_EQ(block(1, 1, 0), (std::set<std::string>{"-x", "+x"}));
}

TEST(Diagram, Roundtrips) {
  for (int t = 0; t <= 2; ++t)
    for (int k = 0; k <= 4; ++k)
      for (auto& f : sd::enumerate_block(Family::osp(t, k), 8)) {
        ASSERT_EQ(sd::parse_diagram(sd::render(f), t), f);
        ASSERT_EQ(sd::diagram_from_weight(sd::weight_from_diagram(f)), f);
      }
}

TEST(Diagram, WeightsAreDistinct) {
  for (int t = 0; t <= 2; ++t) {
    std::set<Weight> seen;
    auto b = sd::enumerate_block(Family::osp(t, 2), 6);
    for (auto& f : b) seen.insert(sd::weight_from_diagram(f));
    EXPECT_EQ(seen.size(), b.size());
  }
}

}  // namespace
