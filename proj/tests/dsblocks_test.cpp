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

#include "superdiag/dsblocks.hpp"

namespace sd = superdiag;
using sd::Shape;

namespace {

TEST(DS, ClosedForms) {
  EXPECT_EQ(sd::ds_multiplicity(Shape::Dinf, 1), (sd::DSRecord{1, 1, 0, "M0"}));
  EXPECT_EQ(sd::ds_multiplicity(Shape::Dinf, 4), (sd::DSRecord{4, 2, 1, "M0"}));
  EXPECT_EQ(sd::ds_multiplicity(Shape::AinfInf, -3), (sd::DSRecord{-3, 1, 1, "M0"}));
  EXPECT_EQ(sd::ds_multiplicity(Shape::Ainf, 3).copies, 4);
  EXPECT_THROW(sd::ds_multiplicity(Shape::Dinf, -1), sd::error);
}

TEST(DS, Adjacency) {
  EXPECT_EQ(sd::adjacency(Shape::Dinf, 0), std::vector<long>{2});
  EXPECT_EQ(sd::adjacency(Shape::Dinf, 2), (std::vector<long>{0, 1, 3}));
  EXPECT_EQ(sd::adjacency(Shape::Ainf, 0), std::vector<long>{1});
  EXPECT_EQ(sd::adjacency(Shape::AinfInf, -5), (std::vector<long>{-6, -4}));
}

TEST(DS, MadjHoldsForClosedForms) {
  for (Shape s : {Shape::Ainf, Shape::AinfInf, Shape::Dinf}) {
    auto [lo, hi] = sd::truncation_range(s, 50);
    EXPECT_TRUE(sd::verify_madj(s, sd::assignment_from(s, lo, hi))) << sd::to_string(s);
  }
}

TEST(DS, MadjRejects) {
  sd::MadjAssignment ones;
  for (long i = -10; i < 10; ++i) ones[i] = {1, 0};
  EXPECT_FALSE(sd::verify_madj(Shape::AinfInf, ones));
  auto d = sd::assignment_from(Shape::Dinf, 0, 50);
  d[7] = {0, 3};
  EXPECT_FALSE(sd::verify_madj(Shape::Dinf, d));
  auto mixed = sd::assignment_from(Shape::Dinf, 0, 50);
  mixed[3] = {1, 1};
  EXPECT_FALSE(sd::verify_madj(Shape::Dinf, mixed));
  auto [lo, hi] = sd::truncation_range(Shape::Ainf, 50);
  EXPECT_FALSE(sd::verify_madj(Shape::Ainf, sd::assignment_from(Shape::Ainf, lo, hi, sd::ClosedForm::two_copy)));
}

TEST(DS, GoldenTables) {
  auto d0 = sd::golden_ds("D21a", "0", 0);
  EXPECT_EQ(d0.text, "C");
  EXPECT_EQ(d0.copies, 1);
  EXPECT_EQ(sd::golden_ds("D21a", "0", 1).text, "C");
  EXPECT_EQ(sd::golden_ds("F4", "1,1", 0).text, "L_sl3(1w1+1w2)");
  EXPECT_EQ(sd::golden_ds("F4", "1,1", 1).text, "L_sl3(1w1+1w2)");
  for (long s = -3; s <= 3; ++s)
    EXPECT_EQ(sd::golden_ds("gl11", "principal", s).text, s % 2 == 0 ? "C" : "Pi(C)");
  EXPECT_THROW(sd::golden_ds("F4", "1,2", 0), sd::error);
  EXPECT_THROW(sd::golden_ds("E8", "0", 0), sd::error);
  EXPECT_THROW(sd::golden_ds("G3", "x", 0), sd::error);
}

TEST(DS, Pari) {
  EXPECT_EQ(sd::pari_defect1(sd::golden_ds("D21a", "0", 0)), 1);
  for (long s = -3; s <= 3; ++s)
    EXPECT_EQ(sd::pari_defect1(sd::golden_ds("gl11", "principal", s)), s % 2 == 0 ? 1 : -1);
  for (long i = 2; i <= 6; ++i)
    EXPECT_EQ(sd::pari_defect1(sd::golden_ds("osp32", "principal", i)), (i - 1) % 2 == 0 ? 1 : -1);
}

TEST(DS, ParseShape) {
  for (Shape s : {Shape::Ainf, Shape::AinfInf, Shape::Dinf}) EXPECT_EQ(sd::parse_shape(sd::to_string(s)), s);
  EXPECT_THROW(sd::parse_shape("E8"), sd::error);
}

}  // namespace
