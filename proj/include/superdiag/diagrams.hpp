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

#ifndef SUPERDIAG_DIAGRAMS_HPP
#define SUPERDIAG_DIAGRAMS_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "superdiag/lattice.hpp"

namespace superdiag {

enum class Sign { none, plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : s == Sign::minus ? -1 : 0; }

// Crosses are kept sorted ascending; repeats are allowed only at 0.
class WeightDiagram {
 public:
  WeightDiagram() = default;

  static WeightDiagram make(Family family, std::vector<int> crosses, Sign sign) {
    WeightDiagram d;
    d.family_ = family;
    d.crosses_ = std::move(crosses);
    d.sign_ = sign;
    std::sort(d.crosses_.begin(), d.crosses_.end());
    d.validate();
    return d;
  }

  const Family& family() const { return family_; }
  int t() const { return family_.t; }
  int k() const { return family_.k; }
  const std::vector<int>& crosses() const { return crosses_; }
  Sign sign() const { return sign_; }
  bool gt_at_zero() const { return family_.t == 2; }

  int count_at(int pos) const {
    return static_cast<int>(std::count(crosses_.begin(), crosses_.end(), pos));
  }
  bool occupied(int pos) const { return count_at(pos) > 0; }
  int zeros() const { return count_at(0); }
  int max_coord() const { return crosses_.empty() ? 0 : crosses_.back(); }

  auto operator<=>(const WeightDiagram&) const = default;

 private:
  void validate() const {
    if (family_.kind != FamilyKind::osp) throw error("weight diagrams exist only for osp families");
    if (static_cast<int>(crosses_.size()) != family_.k)
      throw error("diagram needs exactly k = " + std::to_string(family_.k) + " crosses");
    for (std::size_t i = 0; i < crosses_.size(); ++i) {
      if (crosses_[i] < 0) throw error("negative cross coordinate");
      if (i > 0 && crosses_[i] != 0 && crosses_[i] == crosses_[i - 1])
        throw error("two crosses at nonzero position " + std::to_string(crosses_[i]));
    }
    bool z = !crosses_.empty() && crosses_.front() == 0;
    bool signed_ = sign_ != Sign::none;
    switch (family_.t) {
      case 0:
        if (signed_ != (family_.k >= 1 && !z))
          throw error(signed_ ? "t=0 diagram with a cross at 0 cannot carry a sign"
                              : "t=0 diagram with an empty zero position needs a sign");
        break;
      case 1:
        if (signed_ != z)
          throw error(signed_ ? "t=1 diagram without a cross at 0 cannot carry a sign"
                              : "t=1 diagram with a cross at 0 needs a sign");
        break;
      default:
        if (signed_) throw error("t=2 diagrams carry no sign");
    }
  }

  Family family_;
  std::vector<int> crosses_;
  Sign sign_ = Sign::none;
};

inline std::string render(const WeightDiagram& f) {
  std::vector<std::string> tok;
  int top = f.max_coord();
  for (int pos = 0; pos <= top; ++pos) {
    int c = f.count_at(pos);
    std::string s = (pos == 0 && f.gt_at_zero()) ? ">" : "";
    if (c > 0) s += "x" + (c > 1 ? std::to_string(c) : std::string());
    else if (s.empty()) s = "o";
    tok.push_back(s);
  }
  while (!tok.empty() && tok.back() == "o") tok.pop_back();
  std::string out = f.sign() == Sign::plus ? "+" : f.sign() == Sign::minus ? "-" : "";
  for (std::size_t i = 0; i < tok.size(); ++i) out += (i ? ";" : "") + tok[i];
  return out;
}

inline WeightDiagram parse_diagram(std::string_view text, int t) {
  std::string s(text);
  auto bad = [&](const std::string& why) { return error("bad diagram \"" + s + "\": " + why); };
  if (t < 0 || t > 2) throw bad("t must be 0, 1 or 2");
  Sign sign = Sign::none;
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    sign = s[0] == '+' ? Sign::plus : Sign::minus;
    i = 1;
  }
  std::vector<int> crosses;
  std::string body = s.substr(i);
  if (body.empty()) {
    if (t == 2) throw bad("t=2 diagrams start with '>'");
    return WeightDiagram::make(Family::osp(t, 0), {}, sign);
  }
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    auto semi = body.find(';', start);
    tokens.push_back(body.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    std::string tk = tokens[pos];
    bool gt = !tk.empty() && tk[0] == '>';
    if (gt) {
      if (pos != 0 || t != 2) throw bad("'>' allowed only at position 0 of a t=2 diagram");
      tk.erase(0, 1);
    } else if (pos == 0 && t == 2) {
      throw bad("t=2 diagrams start with '>'");
    }
    if (tk == "o") {
      if (gt) throw bad("'>o' is not a token");
      continue;
    }
    if (tk.empty()) {
      if (gt) continue;
      throw bad("empty token");
    }
    if (tk[0] != 'x') throw bad("unknown token \"" + tk + "\"");
    int mult = 1;
    if (tk.size() > 1) {
      std::string digits = tk.substr(1);
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          digits.size() > 6)
        throw bad("bad multiplicity \"" + digits + "\"");
      mult = std::stoi(digits);
      if (mult < 1) throw bad("multiplicity must be positive");
    }
    if (mult > 1 && pos != 0) throw bad("multiplicity > 1 only at position 0");
    for (int m = 0; m < mult; ++m) crosses.push_back(static_cast<int>(pos));
  }
  int k = static_cast<int>(crosses.size());
  return WeightDiagram::make(Family::osp(t, k), crosses, sign);
}

// a_1 >= a_2 >= ... >= a_k, the coordinates read from the largest down.
inline std::vector<int> descending_coords(const WeightDiagram& f) {
  std::vector<int> a(f.crosses().rbegin(), f.crosses().rend());
  return a;
}

inline Weight weight_from_diagram(const WeightDiagram& f) {
  const Family fam = f.family();
  const int k = fam.k;
  Weight w(fam);
  auto a = descending_coords(f);
  const Rational half(1, 2);
  switch (fam.t) {
    case 0:
      for (int i = 0; i < k; ++i) {
        auto u = static_cast<std::size_t>(i);
        w.delta[u] = a[u];
        w.eps[u] = a[u];
      }
      if (k > 0) w.eps[static_cast<std::size_t>(k - 1)] *= (f.sign() == Sign::minus ? -1 : 1);
      break;
    case 2:
      for (int i = 0; i < k; ++i) {
        auto u = static_cast<std::size_t>(i);
        w.delta[u] = a[u];
        w.eps[u] = a[u];
      }
      break;
    default: {
      // Build lambda + rho, then subtract rho = 1/2 sum (delta_i - eps_i).
      int n = static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }));
      for (int i = 0; i < k; ++i) {
        auto u = static_cast<std::size_t>(i);
        Rational e, d;
        if (f.sign() == Sign::none || i < n) {
          e = d = Rational(a[u]) + half;
        } else if (i == n) {
          d = half;
          e = f.sign() == Sign::plus ? half : -half;
        } else {
          d = half;
          e = -half;
        }
        w.eps[u] = e + half;
        w.delta[u] = d - half;
      }
    }
  }
  return w;
}

inline WeightDiagram diagram_from_weight(const Weight& w) {
  const Family fam = w.family;
  if (fam.kind != FamilyKind::osp) throw error("weight diagrams exist only for osp families");
  std::vector<int> a;
  for (auto& d : w.delta) {
    if (!is_integer(d) || d < 0)
      throw error("not in the principal block: a_i = -(lambda|delta_i) must be nonnegative integers");
    a.push_back(static_cast<int>(to_long(d)));
  }
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (a[i] < a[i + 1] || (a[i] == a[i + 1] && a[i] != 0))
      throw error("not in the principal block: a_i must strictly decrease until they vanish");
  }
  std::vector<int> crosses(a.rbegin(), a.rend());
  std::vector<Sign> candidates{Sign::none, Sign::plus, Sign::minus};
  for (Sign s : candidates) {
    WeightDiagram f;
    try {
      f = WeightDiagram::make(fam, crosses, s);
    } catch (const error&) {
      continue;
    }
    if (weight_from_diagram(f) == w) return f;
  }
  throw error("not in the principal block: eps coefficients do not match the lambda+rho table");
}

inline int tail(const WeightDiagram& f) {
  int z = f.zeros();
  return (f.t() == 1 && f.sign() == Sign::plus) ? z - 1 : z;
}

inline WeightDiagram tau(const WeightDiagram& f) {
  if (f.t() != 2) throw error("tau is defined on t=2 diagrams only");
  Sign s = Sign::none;
  if (f.occupied(1)) s = Sign::plus;
  else if (f.occupied(0)) s = Sign::minus;
  std::vector<int> c;
  for (int x : f.crosses()) c.push_back(x == 0 ? 0 : x - 1);
  return WeightDiagram::make(Family::osp(1, f.k()), c, s);
}

inline WeightDiagram tau_inv(const WeightDiagram& f) {
  if (f.t() != 1) throw error("tau inverse is defined on t=1 diagrams only");
  std::vector<int> c;
  bool lift = f.sign() == Sign::plus;
  for (int x : f.crosses()) {
    if (x == 0 && lift) {
      c.push_back(1);
      lift = false;
    } else {
      c.push_back(x == 0 ? 0 : x + 1);
    }
  }
  return WeightDiagram::make(Family::osp(2, f.k()), c, Sign::none);
}

inline int norm(const WeightDiagram& f) {
  if (f.t() == 2) return norm(tau(f));
  int s = 0;
  for (int x : f.crosses()) s += x;
  return s;
}

inline int pari(const WeightDiagram& f) { return norm(f) % 2 == 0 ? 1 : -1; }

// Canonical order used everywhere output must be deterministic.
inline bool canonical_less(const WeightDiagram& a, const WeightDiagram& b) {
  int na = norm(a), nb = norm(b);
  if (na != nb) return na < nb;
  return render(a) < render(b);
}

inline std::vector<WeightDiagram> enumerate_block(Family fam, int coord_bound) {
  if (fam.kind != FamilyKind::osp) throw error("enumerate_block needs an osp family");
  if (coord_bound < 0) throw error("coord_bound must be nonnegative");
  std::vector<WeightDiagram> out;
  const int k = fam.k;
  for (int z = 0; z <= k; ++z) {
    int m = k - z;
    // choose m distinct positions in 1..coord_bound
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(pick.size()) == m) {
        std::vector<int> c(static_cast<std::size_t>(z), 0);
        c.insert(c.end(), pick.begin(), pick.end());
        std::vector<Sign> signs;
        if (fam.t == 0) signs = (k >= 1 && z == 0) ? std::vector<Sign>{Sign::plus, Sign::minus}
                                                   : std::vector<Sign>{Sign::none};
        else if (fam.t == 1) signs = z > 0 ? std::vector<Sign>{Sign::plus, Sign::minus}
                                           : std::vector<Sign>{Sign::none};
        else signs = {Sign::none};
        for (Sign s : signs) out.push_back(WeightDiagram::make(fam, c, s));
        return;
      }
      for (int p = from; p <= coord_bound; ++p) {
        pick.push_back(p);
        rec(p + 1);
        pick.pop_back();
      }
    };
    rec(1);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace superdiag

#endif  // SUPERDIAG_DIAGRAMS_HPP
