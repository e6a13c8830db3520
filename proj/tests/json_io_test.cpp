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

#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "superdiag/verify.hpp"

namespace sd = superdiag;
using sd::json;

namespace {

json load(const std::string& name) {
  std::ifstream f(std::string(SUPERDIAG_DATA_DIR) + "/" + name);
  EXPECT_TRUE(f.good()) << name;
  return json::parse(f);
}

TEST(Json, WeightRoundtrip) {
  auto f = sd::Family::osp(1, 2);
  sd::Weight w(f, {sd::Rational(1, 2), sd::Rational(-3)}, {sd::Rational(2), sd::Rational(0)});
  auto j = sd::weight_to_json(w);
  EXPECT_EQ(j.dump(), R"({"t":1,"k":2,"eps":["1/2","-3/1"],"delta":["2/1","0/1"]})");
  EXPECT_EQ(sd::weight_from_json(j), w);
  auto g = sd::Weight::eps_unit(sd::Family::gl11(), 0);
  EXPECT_EQ(sd::weight_from_json(sd::weight_to_json(g)), g);
  EXPECT_THROW(sd::weight_from_json(json{{"t", 0}}), sd::error);
}

TEST(Json, DiagramRoundtrip) {
  for (int t = 0; t <= 2; ++t)
    for (auto& f : sd::enumerate_block(sd::Family::osp(t, 2), 4))
      EXPECT_EQ(sd::diagram_from_json(sd::diagram_to_json(f)), f);
  EXPECT_THROW(sd::diagram_from_json(json{{"t", 0}, {"k", 1}, {"sign", "?"}, {"crosses", {1}}}), sd::error);
}

TEST(Json, GraphRoundtrip) {
  auto g = sd::relabel_bprime(sd::build_gamma(sd::BlockSpec::make(sd::Family::osp(0, 2), 4)));
  auto j = sd::graph_to_json(g);
  auto h = sd::graph_from_json(j);
  EXPECT_EQ(sd::graph_to_json(h).dump(), j.dump());
  EXPECT_EQ(sd::labelled_edges(h), sd::labelled_edges(g));
}

TEST(Json, SeriesIsSortedByDepth) {
  auto e = sd::simple_character(sd::osp32_lambda(1), 20).value;
  auto j = sd::series_to_json(e, 20);
  ASSERT_EQ(j["terms"].size(), 5u);
  EXPECT_EQ(j["terms"][0]["coeff"], 1);
  EXPECT_EQ(j["depth"], 20);
  auto terms = sd::sorted_terms(e);
  for (std::size_t i = 1; i < terms.size(); ++i)
    EXPECT_GE(e.phi()(terms[i - 1].first), e.phi()(terms[i].first));
}

TEST(Fixtures, GoldenGraphs) {
  auto j = load("golden_graphs.json");
  ASSERT_EQ(j["schema_version"], 1);
  int n = j["size"].get<int>();
  for (auto& name : sd::golden_graph_names()) {
    ASSERT_TRUE(j["graphs"].contains(name)) << name;
    EXPECT_EQ(j["graphs"][name].dump(), sd::graph_to_json(sd::golden_graph(name, n)).dump()) << name;
    EXPECT_TRUE(sd::check_z2_grading(sd::graph_from_json(j["graphs"][name]))) << name;
  }
}

TEST(Fixtures, DsTables) {
  auto j = load("ds_tables.json");
  ASSERT_EQ(j["schema_version"], 1);
  ASSERT_EQ(j["rows"].size(), sd::check::golden_ds_rows().size());
  for (auto& row : j["rows"]) {
    auto d = sd::golden_ds(row["algebra"].get<std::string>(), row["block"].get<std::string>(),
                           row["index"].get<long>());
    EXPECT_EQ(sd::ds_descriptor_to_json(d).dump(), row.dump());
  }
}

}  // namespace
