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

#ifndef SUPERDIAG_JSON_IO_HPP
#define SUPERDIAG_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superdiag/bigraph.hpp"
#include "superdiag/charring.hpp"
#include "superdiag/diagrams.hpp"
#include "superdiag/dsblocks.hpp"
#include "superdiag/moves.hpp"

namespace superdiag {

using json = nlohmann::ordered_json;

inline json weight_to_json(const Weight& w) {
  json j;
  if (w.family.kind == FamilyKind::gl11) j["family"] = "gl11";
  j["t"] = w.family.t;
  j["k"] = w.family.k;
  j["eps"] = json::array();
  for (auto& c : w.eps) j["eps"].push_back(to_string(c));
  j["delta"] = json::array();
  for (auto& c : w.delta) j["delta"].push_back(to_string(c));
  return j;
}

inline Weight weight_from_json(const json& j) {
  try {
    Family f = j.contains("family") && j["family"] == "gl11"
                   ? Family::gl11()
                   : Family::osp(j.at("t").get<int>(), j.at("k").get<int>());
    std::vector<Rational> e, d;
    for (auto& x : j.at("eps")) e.push_back(parse_rational(x.get<std::string>()));
    for (auto& x : j.at("delta")) d.push_back(parse_rational(x.get<std::string>()));
    return Weight(f, e, d);
  } catch (const json::exception& ex) {
    throw error(std::string("bad weight JSON: ") + ex.what());
  }
}

inline json diagram_to_json(const WeightDiagram& f) {
  json j;
  j["t"] = f.t();
  j["k"] = f.k();
  if (f.sign() == Sign::none) j["sign"] = nullptr;
  else j["sign"] = f.sign() == Sign::plus ? "+" : "-";
  j["crosses"] = f.crosses();
  return j;
}

inline WeightDiagram diagram_from_json(const json& j) {
  try {
    Sign s = Sign::none;
    if (!j.at("sign").is_null()) {
      auto v = j["sign"].get<std::string>();
      if (v == "+") s = Sign::plus;
      else if (v == "-") s = Sign::minus;
      else throw error("sign must be \"+\", \"-\" or null");
    }
    return WeightDiagram::make(Family::osp(j.at("t").get<int>(), j.at("k").get<int>()),
                               j.at("crosses").get<std::vector<int>>(), s);
  } catch (const json::exception& ex) {
    throw error(std::string("bad diagram JSON: ") + ex.what());
  }
}

inline json move_to_json(const Move& m) {
  json j;
  j["from"] = render(m.source);
  j["to"] = render(m.target);
  j["kind"] = to_string(m.kind);
  j["a"] = m.a;
  j["b"] = m.b;
  j["p"] = m.p;
  j["d"] = m.degree;
  return j;
}

inline json graph_to_json(const BimarkedGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (std::size_t v : output_order(g)) {
    auto& x = g.vertex(v);
    j["vertices"].push_back(
        {{"id", x.id}, {"diagram", x.diagram}, {"tail", x.tail}, {"norm", x.norm}, {"pari", x.pari}});
  }
  j["edges"] = json::array();
  for (std::size_t ei : output_edge_order(g)) {
    auto& e = g.edges()[ei];
    json je = {{"src", g.vertex(e.src).id}, {"dst", g.vertex(e.dst).id}, {"b", e.b}, {"deg", e.deg}};
    je["bprime"] = e.bprime ? json(*e.bprime) : json(nullptr);
    j["edges"].push_back(je);
  }
  return j;
}

// Vertices keep file order; the norm payload is registered as the N-grading.
inline BimarkedGraph graph_from_json(const json& j) {
  try {
    BimarkedGraph g;
    for (auto& v : j.at("vertices"))
      g.add_vertex(VertexInfo{v.at("id").get<std::string>(), v.at("diagram").get<std::string>(),
                              v.at("tail").get<int>(), v.at("norm").get<int>(),
                              v.at("pari").get<int>()});
    for (auto& e : j.at("edges")) {
      std::optional<int> bp;
      if (e.contains("bprime") && !e["bprime"].is_null()) bp = e["bprime"].get<int>();
      g.add_edge(e.at("src").get<std::string>(), e.at("dst").get<std::string>(),
                 e.at("b").get<int>(), e.at("deg").get<int>(), bp);
    }
    g.register_norm_grading();
    return g;
  } catch (const json::exception& ex) {
    throw error(std::string("bad graph JSON: ") + ex.what());
  }
}

// Terms sorted by decreasing phi, then by weight.
inline std::vector<std::pair<Weight, std::int64_t>> sorted_terms(const LaurentSeries& s) {
  std::vector<std::pair<Weight, std::int64_t>> v(s.terms().begin(), s.terms().end());
  std::stable_sort(v.begin(), v.end(), [&](auto& a, auto& b) {
    auto pa = s.phi()(a.first), pb = s.phi()(b.first);
    if (pa != pb) return pa > pb;
    return a.first < b.first;
  });
  return v;
}

inline json series_to_json(const LaurentSeries& s, int depth) {
  json j;
  j["terms"] = json::array();
  for (auto& [w, c] : sorted_terms(s)) j["terms"].push_back({{"weight", weight_to_json(w)}, {"coeff", c}});
  j["depth"] = depth;
  return j;
}

inline json ds_descriptor_to_json(const DSDescriptor& d) {
  return json{{"algebra", d.algebra}, {"block", d.block}, {"shape", to_string(d.shape)},
              {"index", d.index},     {"module", d.module}, {"copies", d.copies},
              {"pi", d.pi},           {"text", d.text}};
}

}  // namespace superdiag

#endif  // SUPERDIAG_JSON_IO_HPP
