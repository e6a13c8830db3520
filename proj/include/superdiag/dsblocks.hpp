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

#ifndef SUPERDIAG_DSBLOCKS_HPP
#define SUPERDIAG_DSBLOCKS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superdiag/lattice.hpp"

namespace superdiag {

// A_inf: L0-L1-L2-...; A_inf^inf: ...-L-1-L0-L1-...; D_inf: L0 and L1 both attached to L2.
enum class Shape { Ainf, AinfInf, Dinf };

inline std::string to_string(Shape s) {
  switch (s) {
    case Shape::Ainf: return "Ainf";
    case Shape::AinfInf: return "AinfInf";
    default: return "Dinf";
  }
}

inline Shape parse_shape(const std::string& s) {
  if (s == "Ainf") return Shape::Ainf;
  if (s == "AinfInf") return Shape::AinfInf;
  if (s == "Dinf") return Shape::Dinf;
  throw error("unknown shape \"" + s + "\" (expected Ainf, AinfInf or Dinf)");
}

inline bool in_index_set(Shape s, long i) { return s == Shape::AinfInf || i >= 0; }

inline std::vector<long> adjacency(Shape s, long i) {
  if (!in_index_set(s, i)) throw error("index " + std::to_string(i) + " outside " + to_string(s));
  switch (s) {
    case Shape::Ainf: return i == 0 ? std::vector<long>{1} : std::vector<long>{i - 1, i + 1};
    case Shape::AinfInf: return {i - 1, i + 1};
    default:
      if (i <= 1) return {2};
      if (i == 2) return {0, 1, 3};
      return {i - 1, i + 1};
  }
}

// M_i = Pi^{parity_shift}(M_0)^{copies}
struct DSRecord {
  long index = 0;
  long copies = 1;
  int parity_shift = 0;
  std::string ground = "M0";

  friend bool operator==(const DSRecord&, const DSRecord&) = default;
};

// For A_inf the solution of the adjacency recurrence is M_j = Pi^j(M_0)^{j+1}. The two-copy
// form M_j = Pi^j(M_0)^2 fails the recurrence at j = 1 and is kept only for comparison.
enum class ClosedForm { recurrence, two_copy };

inline int mod2(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

inline DSRecord ds_multiplicity(Shape s, long i, ClosedForm form = ClosedForm::recurrence) {
  if (!in_index_set(s, i)) throw error("index " + std::to_string(i) + " outside " + to_string(s));
  DSRecord r;
  r.index = i;
  switch (s) {
    case Shape::Ainf:
      r.copies = i == 0 ? 1 : (form == ClosedForm::two_copy ? 2 : i + 1);
      r.parity_shift = mod2(i);
      break;
    case Shape::AinfInf:
      r.parity_shift = mod2(i);
      break;
    default:
      if (i >= 2) {
        r.copies = 2;
        r.parity_shift = mod2(i - 1);
      }
  }
  return r;
}

// (p_i, q_i): multiplicities of M_0's simple constituent and of its parity shift.
using MadjAssignment = std::map<long, std::pair<long, long>>;

inline MadjAssignment assignment_from(Shape s, long lo, long hi,
                                      ClosedForm form = ClosedForm::recurrence) {
  MadjAssignment a;
  for (long i = lo; i < hi; ++i) {
    auto r = ds_multiplicity(s, i, form);
    a[i] = r.parity_shift == 0 ? std::make_pair(r.copies, 0L) : std::make_pair(0L, r.copies);
  }
  return a;
}

// Checks the three relations at every index whose neighbours all lie in the truncation.
inline bool verify_madj(Shape s, const MadjAssignment& a) {
  for (auto& [i, pq] : a) {
    auto [p, q] = pq;
    if (p < 0 || q < 0 || p * q != 0) return false;
    if (!in_index_set(s, i)) return false;
    auto adj = adjacency(s, i);
    bool interior = true;
    long sp = 0, sq = 0;
    for (long j : adj) {
      auto it = a.find(j);
      if (it == a.end()) {
        interior = false;
        break;
      }
      sp += it->second.first;
      sq += it->second.second;
    }
    if (!interior) continue;
    if (2 * q != sp || 2 * p != sq) return false;
  }
  return true;
}

inline std::pair<long, long> truncation_range(Shape s, long length) {
  if (s == Shape::AinfInf) return {-length / 2, length - length / 2};
  return {0, length};
}

// ---- golden tables ----

struct DSDescriptor {
  std::string algebra;
  std::string block;
  Shape shape = Shape::Dinf;
  long index = 0;
  std::string module;  // the g_x-module M_0
  long copies = 1;
  int pi = 0;          // power of Pi mod 2
  std::string text;
};

inline std::vector<std::string> ds_algebras() {
  return {"D21a", "G3", "F4", "gl11", "osp22", "osp32"};
}

namespace detail {

inline long parse_nonneg(const std::string& s) {
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw error("bad block id component \"" + s + "\"");
  return std::stol(s);
}

inline std::string sl3_weight(long a, long b) {
  return "L_sl3(" + std::to_string(a) + "w1+" + std::to_string(b) + "w2)";
}

inline std::string descriptor_text(const std::string& module, long copies, int pi) {
  std::string m = module;
  if (pi) m = "Pi(" + m + ")";
  else if (copies > 1) m = "(" + m + ")";
  if (copies > 1) m += "^" + std::to_string(copies);
  return m;
}

}  // namespace detail

// Shape and ground module M_0 of a block.
inline std::pair<Shape, std::string> ds_block(const std::string& algebra, const std::string& block) {
  auto unknown = [&] { return error("no DS table for " + algebra + " block \"" + block + "\""); };
  if (algebra == "D21a") {
    long k = detail::parse_nonneg(block);
    if (k == 0) return {Shape::Dinf, "C"};
    return {Shape::AinfInf, "L_C(" + std::to_string(k) + ")+L_C(-" + std::to_string(k) + ")"};
  }
  if (algebra == "G3") {
    long k = detail::parse_nonneg(block);
    return {Shape::Dinf, "L_sl2(" + std::to_string(2 * k) + ")"};
  }
  if (algebra == "F4") {
    auto comma = block.find(',');
    if (comma == std::string::npos) throw unknown();
    long m1 = detail::parse_nonneg(block.substr(0, comma));
    long m2 = detail::parse_nonneg(block.substr(comma + 1));
    if (m1 < m2) throw error("F4 blocks are labelled (m1,m2) with m1 >= m2");
    if (m1 == m2) return {Shape::Dinf, detail::sl3_weight(m1, m1)};
    return {Shape::AinfInf, detail::sl3_weight(m1, m2) + "+" + detail::sl3_weight(m2, m1)};
  }
  if (block != "principal" && block != "0") throw unknown();
  if (algebra == "gl11" || algebra == "osp22") return {Shape::AinfInf, "C"};
  if (algebra == "osp32") return {Shape::Dinf, "C"};
  throw unknown();
}

inline DSDescriptor golden_ds(const std::string& algebra, const std::string& block, long i) {
  auto [shape, module] = ds_block(algebra, block);
  auto r = ds_multiplicity(shape, i);
  DSDescriptor d;
  d.algebra = algebra;
  d.block = block;
  d.shape = shape;
  d.index = i;
  d.module = module;
  d.copies = r.copies;
  d.pi = r.parity_shift;
  d.text = detail::descriptor_text(module, r.copies, r.parity_shift);
  return d;
}

// +1 iff the DS image is even (every shipped block is atypical).
inline int pari_defect1(const DSDescriptor& d) {
  ds_block(d.algebra, d.block);
  return d.pi == 0 ? 1 : -1;
}

}  // namespace superdiag

#endif  // SUPERDIAG_DSBLOCKS_HPP
