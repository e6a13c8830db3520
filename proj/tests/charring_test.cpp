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

#include <gtest/gtest.h>

#include "superdiag/charring.hpp"

namespace sd = superdiag;
using sd::Family;
using sd::LaurentSeries;
using sd::Rational;
using sd::Weight;

namespace {

TEST(Series, GeometricInverse) {
  auto phi = sd::default_phi(Family::osp32());
  Weight a = Weight::eps_unit(Family::osp32(), 0);
  auto one = LaurentSeries::one(phi);
  auto inv = sd::geom_inverse(phi, a, -1, 20);
  auto prod = (one - LaurentSeries::monomial(phi, -a)) * inv;
  EXPECT_TRUE(prod.agrees_above(one, -20));
  auto alt = sd::geom_inverse(phi, a, 1, 20);
  int n = 0;
  for (auto& [w, c] : alt.terms()) {
    (void)w;
    EXPECT_TRUE(c == 1 || c == -1);
    ++n;
  }
  EXPECT_EQ(n, 11);
  EXPECT_EQ(alt.coefficient(Rational(-1) * a), -1);
  EXPECT_EQ(alt.coefficient(Rational(-2) * a), 1);
  EXPECT_THROW(sd::geom_inverse(phi, Rational(-1) * a, 1, 20), sd::error);
}

TEST(Series, WeylDenominatorSelfInverse) {
  for (Family f : {Family::osp22(), Family::osp32()}) {
    auto phi = sd::default_phi(f);
    auto one = LaurentSeries::one(phi);
    auto acc = one;
    for (auto& r : sd::root_datum(f).positive_roots) {
      auto factor = r.odd ? one + LaurentSeries::monomial(phi, -r.weight)
                          : one - LaurentSeries::monomial(phi, -r.weight);
      acc = acc * factor * sd::geom_inverse(phi, r.weight, r.odd ? 1 : -1, 30);
    }
    EXPECT_TRUE(acc.agrees_above(one, -20)) << f.name();
  }
}

TEST(Series, DefaultPhi) {
  EXPECT_NO_THROW(sd::default_phi(Family::osp22()));
  EXPECT_NO_THROW(sd::default_phi(Family::gl11()));
  EXPECT_THROW(sd::default_phi(Family::osp(0, 2)), sd::error);
}

TEST(Series, SdimOfOne) {
  auto one = LaurentSeries::one(sd::default_phi(Family::osp22()));
  EXPECT_EQ(sd::sdim(one), 1);
  EXPECT_EQ(sd::dim(one), 1);
  auto cut = one;
  cut.truncate(-3);
  EXPECT_THROW(sd::sdim(cut), sd::error);
}

TEST(Euler, GroundStatesAreOne) {
  for (Family f : {Family::osp22(), Family::osp32()}) {
    auto lam0 = f == Family::osp22() ? sd::osp22_lambda(0) : sd::osp32_lambda(0);
    auto e = sd::euler_character(lam0, 20);
    EXPECT_TRUE(e.agrees_above(LaurentSeries::one(e.phi()), -20)) << f.name();
    EXPECT_TRUE(sd::euler_character(lam0, 25).agrees_above(LaurentSeries::one(e.phi()), -25));
  }
}

LaurentSeries exact(const LaurentSeries& s) {
  LaurentSeries out(s.phi());
  for (auto& [w, c] : s.terms()) out += LaurentSeries::monomial(s.phi(), w, c);
  return out;
}

TEST(Euler, NonGroundStatesHaveZeroSdim) {
  for (int s = 1; s <= 4; ++s) {
    EXPECT_EQ(sd::sdim(exact(sd::euler_character(sd::osp32_lambda(s), 20))), 0) << s;
    EXPECT_EQ(sd::sdim(exact(sd::euler_character(sd::osp22_lambda(s), 20))), 0) << s;
    EXPECT_EQ(sd::sdim(exact(sd::euler_character(sd::osp22_lambda(-s), 20))), 0) << s;
  }
}

TEST(Euler, UnsupportedFamily) {
  EXPECT_THROW(sd::euler_character(sd::parse_diagram("x2", 0), 20), sd::error);
}

TEST(Simple, Combinations) {
  auto c = sd::simple_combination(sd::osp32_lambda(1));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].diagram, "+x");
  EXPECT_EQ(c[0].coefficient, 1);
  EXPECT_EQ(c[1].diagram, "-x");
  EXPECT_EQ(c[1].coefficient, 1);
  auto c3 = sd::simple_combination(sd::osp32_lambda(3));
  long total = 0;
  for (auto& t : c3) total += t.paths;
  EXPECT_EQ(total, 5);
}

TEST(Simple, TrivialModule) {
  auto ch = sd::simple_character(sd::osp22_lambda(0), 20).value;
  EXPECT_EQ(ch, LaurentSeries::one(ch.phi()));
}

// Dimensions cross-checked with an independent brute-force evaluation of the Euler sums.
TEST(Simple, DimensionsAndSuperdimensions) {
  std::vector<long> dims22{1, 3, 5, 7, 9}, dims32{1, 5, 30, 70, 126}, sdims32{1, 1, -2, 2, -2};
  for (int j = 0; j <= 4; ++j) {
    auto a = sd::simple_character(sd::osp22_lambda(j), 20).value;
    auto b = sd::simple_character(sd::osp22_lambda(-j), 20).value;
    EXPECT_EQ(sd::dim(a), dims22[static_cast<std::size_t>(j)]);
    EXPECT_EQ(sd::dim(b), dims22[static_cast<std::size_t>(j)]);
    EXPECT_EQ(sd::sdim(a), j % 2 == 0 ? 1 : -1);
    auto c = sd::simple_character(sd::osp32_lambda(j), 20).value;
    EXPECT_EQ(sd::dim(c), dims32[static_cast<std::size_t>(j)]);
    EXPECT_EQ(sd::sdim(c), sdims32[static_cast<std::size_t>(j)]);
    EXPECT_TRUE(sd::nonnegative(c));
    EXPECT_TRUE(sd::is_weyl_invariant(c));
  }
}

TEST(Simple, HighestWeightAppearsOnce) {
  for (int j = 0; j <= 4; ++j) {
    auto lam = sd::osp32_lambda(j);
    auto ch = sd::simple_character(lam, 20).value;
    EXPECT_EQ(ch.coefficient(sd::weight_from_diagram(lam)), 1) << j;
  }
}

}  // namespace
