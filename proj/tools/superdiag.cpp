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

// superdiag: command-line access to weight diagrams, block graphs, characters and DS tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superdiag/verify.hpp"

namespace sd = superdiag;
using sd::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int t = 0;
  int k = 1;
  int bound = 6;
  int depth = 20;
  std::string format = "table";
  std::string out;
  std::string diagram;
  std::string crosses;
  std::string sign;
  std::string name;
  std::string in;
  std::string algebra;
  std::string block = "principal";
  long index = 0;
  std::string shape;
  long length = 50;
};

// Relative --out paths land in SUPERDIAG_OUT_DIR when it is set.
std::filesystem::path out_path(const std::string& p) {
  std::filesystem::path path(p);
  const char* dir = std::getenv("SUPERDIAG_OUT_DIR");
  if (dir && *dir && path.is_relative()) path = std::filesystem::path(dir) / path;
  return path;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  auto path = out_path(o.out);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw sd::error("cannot write " + path.string());
  f << text;
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (auto* a : allowed)
    if (o.format == a) return;
  std::string list;
  for (auto* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format " + o.format + " is not available here (use " + list + ")");
}

sd::WeightDiagram need_diagram(const Options& o) {
  if (o.diagram.empty()) throw UsageError("--diagram is required");
  auto f = sd::parse_diagram(o.diagram, o.t);
  return f;
}

sd::Sign parse_sign(const std::string& s) {
  if (s.empty()) return sd::Sign::none;
  if (s == "+") return sd::Sign::plus;
  if (s == "-") return sd::Sign::minus;
  throw UsageError("--sign must be + or -");
}

std::vector<int> parse_crosses(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --crosses entry \"" + item + "\"");
    }
  }
  return out;
}

std::string weight_text(const sd::Weight& w) { return w.is_zero() ? "0" : sd::to_string(w); }

// ---- diag ----

int diag_parse(const Options& o) {
  require_format(o, {"table", "json"});
  auto f = need_diagram(o);
  if (o.format == "json") emit_json(o, sd::diagram_to_json(f));
  else emit(o, sd::render(f) + "\n");
  return 0;
}

int diag_render(const Options& o) {
  require_format(o, {"table", "json"});
  auto f = sd::WeightDiagram::make(sd::Family::osp(o.t, o.k), parse_crosses(o.crosses), parse_sign(o.sign));
  if (o.format == "json") emit_json(o, json{{"diagram", sd::render(f)}});
  else emit(o, sd::render(f) + "\n");
  return 0;
}

int diag_weight(const Options& o) {
  require_format(o, {"table", "json"});
  auto w = sd::weight_from_diagram(need_diagram(o));
  if (o.format == "json") emit_json(o, sd::weight_to_json(w));
  else emit(o, weight_text(w) + "\n");
  return 0;
}

int diag_scalar(const Options& o, const std::string& key, const std::function<std::string(const sd::WeightDiagram&)>& fn) {
  require_format(o, {"table", "json"});
  auto f = need_diagram(o);
  auto v = fn(f);
  if (o.format == "json") emit_json(o, json{{"diagram", sd::render(f)}, {key, v}});
  else emit(o, v + "\n");
  return 0;
}

// ---- moves ----

int moves_list(const Options& o) {
  require_format(o, {"table", "json"});
  auto f = need_diagram(o);
  auto ms = sd::enumerate_moves(f, o.bound);
  if (o.format == "json") {
    json j = json::array();
    for (auto& m : ms) j.push_back(sd::move_to_json(m));
    emit_json(o, j);
    return 0;
  }
  std::ostringstream os;
  os << "kind    a  b  p  d  target\n";
  for (auto& m : ms) {
    os << (m.kind == sd::MoveKind::single ? "single " : "double ") << ' ' << m.a << "  " << m.b << "  "
       << m.p << "  " << m.degree << "  " << sd::render(m.target) << "\n";
  }
  emit(o, os.str());
  return 0;
}

// ---- graph ----

std::string graph_table(const sd::BimarkedGraph& g, sd::Mark mark) {
  std::ostringstream os;
  os << "vertices (diagram, tail, norm, pari):\n";
  for (auto v : sd::output_order(g)) {
    auto& x = g.vertex(v);
    os << "  " << (x.diagram.empty() ? x.id : x.diagram) << "  " << x.tail << "  " << x.norm << "  "
       << (x.pari > 0 ? "+" : "-") << "\n";
  }
  os << "edges (" << (mark == sd::Mark::b ? "b" : "b'") << ";deg):\n";
  for (auto ei : sd::output_edge_order(g)) {
    auto& e = g.edges()[ei];
    auto label = [&](std::size_t v) {
      auto& x = g.vertex(v);
      return x.diagram.empty() ? x.id : x.diagram;
    };
    os << "  " << label(e.src) << " -> " << label(e.dst) << "  (" << g.mark(e, mark) << ";" << e.deg
       << ")\n";
  }
  return os.str();
}

void emit_graph(const Options& o, const sd::BimarkedGraph& g, sd::Mark mark) {
  if (o.format == "json") emit_json(o, sd::graph_to_json(g));
  else if (o.format == "dot") emit(o, sd::to_dot(g, mark));
  else emit(o, graph_table(g, mark));
}

sd::BlockSpec spec_of(const Options& o) { return sd::BlockSpec::make(sd::Family::osp(o.t, o.k), o.bound); }

int graph_build(const Options& o) {
  emit_graph(o, sd::build_gamma(spec_of(o)), sd::Mark::b);
  return 0;
}

int graph_relabel(const Options& o) {
  emit_graph(o, sd::relabel_bprime(sd::build_gamma(spec_of(o))), sd::Mark::bprime);
  return 0;
}

int graph_gamma1(const Options& o) {
  require_format(o, {"table", "json", "dot"});
  auto u = sd::gamma1(sd::build_gamma(spec_of(o)));
  if (o.format == "json") {
    json j{{"vertices", u.vertices}, {"edges", json::array()}};
    for (auto& [a, b] : u.edges) j["edges"].push_back({u.vertices[a], u.vertices[b]});
    emit_json(o, j);
  } else if (o.format == "dot") {
    std::string s = "graph G {\n";
    for (auto& v : u.vertices) s += "  " + sd::detail::dot_quote(v) + ";\n";
    for (auto& [a, b] : u.edges)
      s += "  " + sd::detail::dot_quote(u.vertices[a]) + " -- " + sd::detail::dot_quote(u.vertices[b]) + ";\n";
    emit(o, s + "}\n");
  } else {
    std::string s;
    for (auto& [a, b] : u.edges) s += u.vertices[a] + " -- " + u.vertices[b] + "\n";
    emit(o, s);
  }
  return 0;
}

int graph_golden(const Options& o) {
  if (o.name.empty()) throw UsageError("--name is required (one of the golden graph names)");
  emit_graph(o, sd::golden_graph(o.name, o.bound), sd::Mark::b);
  return 0;
}

int graph_check(const Options& o) {
  require_format(o, {"table", "json"});
  sd::BimarkedGraph g;
  bool built = o.in.empty();
  if (built) {
    g = sd::build_gamma(spec_of(o));
  } else {
    std::ifstream f(o.in);
    if (!f) throw UsageError("cannot read " + o.in);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& ex) {
      throw UsageError(std::string("bad JSON in ") + o.in + ": " + ex.what());
    }
    g = sd::graph_from_json(j);
  }
  std::vector<std::pair<std::string, bool>> rows;
  rows.emplace_back("z2_grading", sd::check_z2_grading(g));
  rows.emplace_back("n_grading", sd::check_n_grading(g, g.grading(), false));
  rows.emplace_back("tail", sd::check_tail_condition(g));
  bool has_bprime = !g.edges().empty() && std::all_of(g.edges().begin(), g.edges().end(),
                                                      [](auto& e) { return e.bprime.has_value(); });
  if (built) {
    auto gb = sd::relabel_bprime(g);
    rows.emplace_back("bb_bprime", sd::check_bb(gb, sd::Mark::bprime));
    rows.emplace_back("decreasing_equivalence",
                      sd::check_decreasing_equivalence(g, sd::Mark::b, gb, sd::Mark::bprime));
  } else if (has_bprime) {
    rows.emplace_back("bb_bprime", sd::check_bb(g, sd::Mark::bprime));
    rows.emplace_back("decreasing_equivalence",
                      sd::check_decreasing_equivalence(g, sd::Mark::b, g, sd::Mark::bprime));
  }
  bool ok = true;
  for (auto& r : rows) ok = ok && r.second;
  if (o.format == "json") {
    json j;
    for (auto& [k, v] : rows) j[k] = v;
    emit_json(o, j);
  } else {
    std::string s;
    for (auto& [k, v] : rows) s += std::string(v ? "[PASS] " : "[FAIL] ") + k + "\n";
    emit(o, s);
  }
  return ok ? 0 : 1;
}

// ---- char ----

sd::WeightDiagram rank_one_diagram(const Options& o) {
  auto f = need_diagram(o);
  if (!sd::is_rank_one_family(f.family()))
    throw UsageError("characters need --t 0 --k 1 (osp(2|2)) or --t 1 --k 1 (osp(3|2))");
  return f;
}

std::string series_table(const sd::LaurentSeries& s) {
  std::ostringstream os;
  os << "phi  coeff  weight\n";
  for (auto& [w, c] : sd::sorted_terms(s))
    os << sd::to_string(s.phi()(w)) << "  " << c << "  " << weight_text(w) << "\n";
  return os.str();
}

int char_euler(const Options& o) {
  require_format(o, {"table", "json"});
  auto e = sd::euler_character(rank_one_diagram(o), o.depth);
  if (o.format == "json") emit_json(o, sd::series_to_json(e, o.depth));
  else emit(o, series_table(e));
  return 0;
}

int char_simple(const Options& o) {
  require_format(o, {"table", "json"});
  auto sc = sd::simple_character(rank_one_diagram(o), o.depth);
  if (o.format == "json") {
    json j = sd::series_to_json(sc.value, o.depth);
    j["combination"] = json::array();
    for (auto& t : sc.combination)
      j["combination"].push_back(
          {{"diagram", t.diagram}, {"paths", t.paths}, {"iota", t.iota}, {"coefficient", t.coefficient}});
    emit_json(o, j);
    return 0;
  }
  std::ostringstream os;
  os << "ch L(" << o.diagram << ") =";
  for (auto& t : sc.combination) os << " " << (t.coefficient < 0 ? "-" : "+") << std::abs(t.coefficient) << " E(" << t.diagram << ")";
  os << "\n" << series_table(sc.value);
  emit(o, os.str());
  return 0;
}

int char_coeffs(const Options& o) {
  require_format(o, {"table", "json"});
  auto lam = need_diagram(o);
  auto c = sd::coefficients_dless(spec_of(o), lam);
  std::vector<std::pair<sd::WeightDiagram, long>> rows;
  for (auto& [id, v] : c) rows.emplace_back(sd::parse_diagram(id, o.t), v);
  std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return sd::canonical_less(a.first, b.first); });
  if (o.format == "json") {
    json j = json::array();
    for (auto& [f, v] : rows) j.push_back({{"diagram", sd::render(f)}, {"paths", v}});
    emit_json(o, j);
  } else {
    std::string s;
    for (auto& [f, v] : rows) s += sd::render(f) + "  " + std::to_string(v) + "\n";
    emit(o, s);
  }
  return 0;
}

int char_sdim(const Options& o) {
  require_format(o, {"table", "json"});
  auto ch = sd::simple_character(rank_one_diagram(o), o.depth).value;
  if (o.format == "json") emit_json(o, json{{"diagram", o.diagram}, {"dim", sd::dim(ch)}, {"sdim", sd::sdim(ch)}});
  else emit(o, "dim " + std::to_string(sd::dim(ch)) + "\nsdim " + std::to_string(sd::sdim(ch)) + "\n");
  return 0;
}

// ---- ds ----

int ds_block(const Options& o) {
  require_format(o, {"table", "json"});
  if (o.algebra.empty()) throw UsageError("--algebra is required");
  auto d = sd::golden_ds(o.algebra, o.block, o.index);
  if (o.format == "json") emit_json(o, sd::ds_descriptor_to_json(d));
  else emit(o, d.text + "\n");
  return 0;
}

int ds_shape(const Options& o) {
  require_format(o, {"table", "json"});
  if (o.shape.empty()) throw UsageError("--shape is required");
  auto s = sd::parse_shape(o.shape);
  auto r = sd::ds_multiplicity(s, o.index);
  if (o.format == "json") {
    emit_json(o, json{{"shape", sd::to_string(s)}, {"index", r.index}, {"copies", r.copies},
                      {"parity_shift", r.parity_shift}, {"adjacent", sd::adjacency(s, o.index)}});
  } else {
    emit(o, sd::detail::descriptor_text("M0", r.copies, r.parity_shift) + "\n");
  }
  return 0;
}

int ds_verify(const Options& o) {
  require_format(o, {"table", "json"});
  if (o.length < 1) throw UsageError("--length must be positive");
  std::vector<sd::Shape> shapes{sd::Shape::Ainf, sd::Shape::AinfInf, sd::Shape::Dinf};
  if (!o.shape.empty()) shapes = {sd::parse_shape(o.shape)};
  json j = json::object();
  std::string s;
  bool ok = true;
  for (auto sh : shapes) {
    auto [lo, hi] = sd::truncation_range(sh, o.length);
    bool v = sd::verify_madj(sh, sd::assignment_from(sh, lo, hi));
    ok = ok && v;
    j[sd::to_string(sh)] = v;
    s += std::string(v ? "[PASS] " : "[FAIL] ") + sd::to_string(sh) + "\n";
  }
  if (o.format == "json") emit_json(o, j);
  else emit(o, s);
  return ok ? 0 : 1;
}

// ---- verify ----

int verify_all(const Options& o) {
  require_format(o, {"table", "json"});
  sd::VerifyOptions vo;
  vo.bound = o.bound;
  vo.depth = o.depth;
  auto rs = sd::verify_all(vo);
  if (o.format == "json") {
    emit_json(o, json{{"results", sd::report_to_json(rs)}, {"passed", sd::all_passed(rs)}});
  } else {
    std::string s;
    for (auto& r : rs) s += sd::format_line(r) + "\n";
    emit(o, s);
  }
  return sd::all_passed(rs) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight diagrams, block graphs, characters and DS multiplicities for osp principal blocks"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<int(const Options&)> fn) {
    auto* c = parent->add_subcommand(name, help);
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "dot"}));
    c->add_option("--out", o.out, "Write output to this file");
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto fam = [&](CLI::App* c) {
    c->add_option("--t", o.t, "Family parameter t (0, 1 or 2)");
    c->add_option("--k", o.k, "Rank parameter k");
  };
  auto diagram = [&](CLI::App* c) {
    c->add_option("--diagram", o.diagram, "Diagram text, e.g. \"+o;x;x\" (use --diagram=-x for a leading minus)");
  };

  auto* diag = app.add_subcommand("diag", "Weight diagrams");
  diag->require_subcommand(1);
  auto* c = leaf(diag, "parse", "Parse and normalize a diagram", diag_parse);
  fam(c), diagram(c);
  c = leaf(diag, "render", "Render a diagram from crosses and sign", diag_render);
  fam(c);
  c->add_option("--crosses", o.crosses, "Comma-separated cross coordinates")->required();
  c->add_option("--sign", o.sign, "+ or -");
  c = leaf(diag, "weight", "Weight of a diagram", diag_weight);
  fam(c), diagram(c);
  c = leaf(diag, "tau", "Image of a t=2 diagram under tau", [](const Options& x) {
    Options y = x;
    y.t = 2;
    return diag_scalar(y, "tau", [](auto& f) { return sd::render(sd::tau(f)); });
  });
  diagram(c);
  c = leaf(diag, "tail", "Tail of a diagram", [](const Options& x) {
    return diag_scalar(x, "tail", [](auto& f) { return std::to_string(sd::tail(f)); });
  });
  fam(c), diagram(c);
  c = leaf(diag, "norm", "Norm of a diagram", [](const Options& x) {
    return diag_scalar(x, "norm", [](auto& f) { return std::to_string(sd::norm(f)); });
  });
  fam(c), diagram(c);
  c = leaf(diag, "pari", "pari of a diagram", [](const Options& x) {
    return diag_scalar(x, "pari", [](auto& f) { return std::to_string(sd::pari(f)); });
  });
  fam(c), diagram(c);

  auto* moves = app.add_subcommand("moves", "Moves between diagrams");
  moves->require_subcommand(1);
  c = leaf(moves, "list", "All admissible moves out of a diagram", moves_list);
  fam(c), diagram(c);
  c->add_option("--bound", o.bound, "Largest landing coordinate");

  auto* graph = app.add_subcommand("graph", "Block graphs");
  graph->require_subcommand(1);
  for (auto& [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<int(const Options&)>>>{
           {"build", "Build the block graph from moves", graph_build},
           {"relabel", "Block graph with b' marks", graph_relabel},
           {"gamma1", "Degree-one undirected skeleton", graph_gamma1}}) {
    c = leaf(graph, name, help, fn);
    fam(c);
    c->add_option("--bound", o.bound, "Coordinate bound");
  }
  c = leaf(graph, "golden", "Hard-coded small-rank graphs", graph_golden);
  c->add_option("--name", o.name, "gl11, osp22, osp32, osp22_tilde, osp32_tilde, F4_principal, G3_principal, D21a_principal");
  c->add_option("--bound", o.bound, "Truncation size");
  c = leaf(graph, "check", "Check gradings, Tail, BB and decreasing equivalence", graph_check);
  fam(c);
  c->add_option("--bound", o.bound, "Coordinate bound");
  c->add_option("--in", o.in, "Check a graph JSON file instead of building one");

  auto* chr = app.add_subcommand("char", "Characters for osp(2|2) and osp(3|2)");
  chr->require_subcommand(1);
  for (auto& [name, help, fn] : std::vector<std::tuple<std::string, std::string, std::function<int(const Options&)>>>{
           {"euler", "Euler character of a weight", char_euler},
           {"simple", "Character of a simple module", char_simple},
           {"sdim", "Dimension and superdimension of a simple module", char_sdim}}) {
    c = leaf(chr, name, help, fn);
    fam(c), diagram(c);
    c->add_option("--depth", o.depth, "Truncation depth");
  }
  c = leaf(chr, "coeffs", "Increasing-path counts into a weight", char_coeffs);
  fam(c), diagram(c);
  c->add_option("--bound", o.bound, "Coordinate bound");

  auto* ds = app.add_subcommand("ds", "DS multiplicities at defect one");
  ds->require_subcommand(1);
  c = leaf(ds, "block", "Table entry for a block", ds_block);
  c->add_option("--algebra", o.algebra, "D21a, G3, F4, gl11, osp22 or osp32");
  c->add_option("--block", o.block, "Block label, e.g. 2 or 2,1 or principal");
  c->add_option("--index", o.index, "Module index");
  c = leaf(ds, "shape", "Closed form for one index of a shape", ds_shape);
  c->add_option("--shape", o.shape, "Ainf, AinfInf or Dinf");
  c->add_option("--index", o.index, "Index");
  c = leaf(ds, "verify", "Check the adjacency recurrence on a truncation", ds_verify);
  c->add_option("--shape", o.shape, "Only this shape");
  c->add_option("--length", o.length, "Truncation length");

  auto* ver = app.add_subcommand("verify", "Acceptance criteria");
  ver->require_subcommand(1);
  c = leaf(ver, "all", "Run every criterion", verify_all);
  c->add_option("--bound", o.bound, "Coordinate bound");
  c->add_option("--depth", o.depth, "Character depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sd::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
