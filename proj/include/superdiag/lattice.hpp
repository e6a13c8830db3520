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

#ifndef SUPERDIAG_LATTICE_HPP
#define SUPERDIAG_LATTICE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace superdiag {

using Rational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational parse_rational(std::string_view s) {
  std::string str(s);
  auto bad = [&] { return error("malformed rational \"" + str + "\""); };
  if (str.empty()) throw bad();
  auto slash = str.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = str.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) throw bad();
  return Rational(n, d);
}

// Always "p/q" with q > 0, so integers render as "p/1".
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw error("expected an integer, got " + to_string(r));
  return boost::multiprecision::numerator(r).convert_to<long>();
}

enum class FamilyKind { osp, gl11 };

// osp(2k+t|2k) for t in {0,1,2}, or gl(1|1).
struct Family {
  FamilyKind kind = FamilyKind::osp;
  int t = 0;
  int k = 0;

  static Family osp(int t, int k) {
    if (t < 0 || t > 2) throw error("t must be 0, 1 or 2");
    if (k < 0) throw error("k must be nonnegative");
    return Family{FamilyKind::osp, t, k};
  }
  static Family gl11() { return Family{FamilyKind::gl11, 0, 1}; }
  static Family osp22() { return osp(0, 1); }
  static Family osp32() { return osp(1, 1); }

  int ell() const { return kind == FamilyKind::osp && t == 2 ? 1 : 0; }
  std::size_t eps_size() const {
    return kind == FamilyKind::gl11 ? 1 : static_cast<std::size_t>(k + ell());
  }
  std::size_t delta_size() const {
    return kind == FamilyKind::gl11 ? 1 : static_cast<std::size_t>(k);
  }
  std::string name() const {
    if (kind == FamilyKind::gl11) return "gl(1|1)";
    return "osp(" + std::to_string(2 * k + t) + "|" + std::to_string(2 * k) + ")";
  }

  auto operator<=>(const Family&) const = default;
};

struct Weight {
  Family family;
  std::vector<Rational> eps;
  std::vector<Rational> delta;

  Weight() = default;
  explicit Weight(Family f)
      : family(f), eps(f.eps_size(), 0), delta(f.delta_size(), 0) {}
  Weight(Family f, std::vector<Rational> e, std::vector<Rational> d)
      : family(f), eps(std::move(e)), delta(std::move(d)) {
    if (eps.size() != f.eps_size() || delta.size() != f.delta_size())
      throw error("coordinate count does not match " + f.name());
  }

  static Weight eps_unit(Family f, std::size_t i) {
    Weight w(f);
    w.eps.at(i) = 1;
    return w;
  }
  static Weight delta_unit(Family f, std::size_t i) {
    Weight w(f);
    w.delta.at(i) = 1;
    return w;
  }

  bool is_zero() const {
    return std::all_of(eps.begin(), eps.end(), [](const Rational& r) { return r == 0; }) &&
           std::all_of(delta.begin(), delta.end(), [](const Rational& r) { return r == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < eps.size(); ++i) eps[i] += o.eps[i];
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] += o.delta[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < eps.size(); ++i) eps[i] -= o.eps[i];
    for (std::size_t i = 0; i < delta.size(); ++i) delta[i] -= o.delta[i];
    return *this;
  }
  Weight& operator*=(const Rational& c) {
    for (auto& x : eps) x *= c;
    for (auto& x : delta) x *= c;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.family == b.family && a.eps == b.eps && a.delta == b.delta;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.delta < b.delta;
  }

  void check_same(const Weight& o) const {
    if (family != o.family)
      throw error("family mismatch: " + family.name() + " vs " + o.family.name());
  }
};

inline std::string to_string(const Weight& w) {
  std::string out;
  auto term = [&](const Rational& c, const std::string& basis) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) out += (is_integer(a) ? boost::multiprecision::numerator(a).str()
                                      : "(" + to_string(a) + ")");
    out += basis;
  };
  for (std::size_t i = 0; i < w.eps.size(); ++i) term(w.eps[i], "e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < w.delta.size(); ++i) term(w.delta[i], "d" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

inline Rational inner(const Weight& a, const Weight& b) {
  a.check_same(b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.eps.size(); ++i) s += a.eps[i] * b.eps[i];
  for (std::size_t i = 0; i < a.delta.size(); ++i) s -= a.delta[i] * b.delta[i];
  return s;
}

// p(w) = sum of -(w|delta_i) mod 2, i.e. the sum of delta coefficients.
inline int parity(const Weight& w) {
  Rational s = 0;
  for (const auto& d : w.delta) {
    if (!is_integer(d)) throw error("parity needs integral delta coefficients");
    s += d;
  }
  long v = to_long(s) % 2;
  return v < 0 ? -static_cast<int>(v) : static_cast<int>(v);
}

struct Root {
  Weight weight;
  bool odd = false;
};

// Signed permutation of the eps and delta coordinates.
struct SignedPerm {
  std::vector<int> eps_src, eps_sgn, delta_src, delta_sgn;
  int det = 1;

  static SignedPerm identity(Family f) {
    SignedPerm p;
    for (std::size_t i = 0; i < f.eps_size(); ++i) {
      p.eps_src.push_back(static_cast<int>(i));
      p.eps_sgn.push_back(1);
    }
    for (std::size_t i = 0; i < f.delta_size(); ++i) {
      p.delta_src.push_back(static_cast<int>(i));
      p.delta_sgn.push_back(1);
    }
    return p;
  }

  Weight apply(const Weight& w) const {
    Weight out(w.family);
    for (std::size_t i = 0; i < eps_src.size(); ++i)
      out.eps[i] = eps_sgn[i] * w.eps[static_cast<std::size_t>(eps_src[i])];
    for (std::size_t i = 0; i < delta_src.size(); ++i)
      out.delta[i] = delta_sgn[i] * w.delta[static_cast<std::size_t>(delta_src[i])];
    return out;
  }

  // (this * o)(w) = this(o(w))
  SignedPerm compose(const SignedPerm& o) const {
    SignedPerm r = *this;
    for (std::size_t i = 0; i < eps_src.size(); ++i) {
      auto j = static_cast<std::size_t>(eps_src[i]);
      r.eps_src[i] = o.eps_src[j];
      r.eps_sgn[i] = eps_sgn[i] * o.eps_sgn[j];
    }
    for (std::size_t i = 0; i < delta_src.size(); ++i) {
      auto j = static_cast<std::size_t>(delta_src[i]);
      r.delta_src[i] = o.delta_src[j];
      r.delta_sgn[i] = delta_sgn[i] * o.delta_sgn[j];
    }
    r.det = det * o.det;
    return r;
  }

  auto key() const { return std::tie(eps_src, eps_sgn, delta_src, delta_sgn); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.key() < b.key(); }
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.key() == b.key(); }
};

struct RootDatum {
  Family family;
  std::vector<Root> positive_roots;
  std::vector<Weight> simple_roots;
  Weight rho;
  std::vector<SignedPerm> weyl_generators;  // empty unless rank <= 1 or gl(1|1)
};

namespace detail {

// Regular functional defining the mixed positive system.
inline Rational mixed_height(const Weight& w) {
  const Family& f = w.family;
  Rational h = 0;
  int k = f.k;
  for (int i = 1; i <= k; ++i) {
    Rational e = w.eps[static_cast<std::size_t>(i - 1)];
    Rational d = w.delta[static_cast<std::size_t>(i - 1)];
    switch (f.t) {
      case 0: h += d * (2 * (k - i) + 2) + e * (2 * (k - i) + 1); break;
      case 1: h += e * (2 * (k - i) + 2) + d * (2 * (k - i) + 1); break;
      default: h += e * (2 * (k - i) + 3) + d * (2 * (k - i) + 2); break;
    }
  }
  if (f.t == 2) h += w.eps[static_cast<std::size_t>(k)];
  return h;
}

inline std::vector<Root> all_osp_roots(Family f) {
  std::vector<Root> roots;
  auto E = [&](std::size_t i) { return Weight::eps_unit(f, i); };
  auto D = [&](std::size_t i) { return Weight::delta_unit(f, i); };
  const std::size_t m = f.eps_size(), n = f.delta_size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) roots.push_back({Rational(s1) * E(i) + Rational(s2) * E(j), false});
  if (f.t == 1)
    for (std::size_t i = 0; i < m; ++i)
      for (int s : {1, -1}) roots.push_back({Rational(s) * E(i), false});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) roots.push_back({Rational(s1) * D(i) + Rational(s2) * D(j), false});
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {2, -2}) roots.push_back({Rational(s) * D(i), false});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) roots.push_back({Rational(s1) * E(i) + Rational(s2) * D(j), true});
  if (f.t == 1)
    for (std::size_t j = 0; j < n; ++j)
      for (int s : {1, -1}) roots.push_back({Rational(s) * D(j), true});
  return roots;
}

inline std::vector<SignedPerm> rank_one_generators(Family f) {
  std::vector<SignedPerm> gens;
  if (f.kind == FamilyKind::gl11) return gens;
  if (f.k > 1) return gens;
  if (f.k == 1) {
    auto r = SignedPerm::identity(f);
    r.delta_sgn[0] = -1;
    r.det = -1;
    gens.push_back(r);
  }
  if (f.t == 1 && f.k == 1) {
    auto r = SignedPerm::identity(f);
    r.eps_sgn[0] = -1;
    r.det = -1;
    gens.push_back(r);
  }
  if (f.t == 2 && f.k == 1) {
    auto sw = SignedPerm::identity(f);
    std::swap(sw.eps_src[0], sw.eps_src[1]);
    sw.det = -1;
    gens.push_back(sw);
    auto sw2 = sw;
    sw2.eps_sgn = {-1, -1};
    gens.push_back(sw2);
  }
  return gens;
}

}  // namespace detail

// Stored Weyl vector for the mixed base.
inline Weight stored_rho(Family f) {
  Weight rho(f);
  if (f.kind == FamilyKind::gl11) {
    rho.eps[0] = Rational(-1, 2);
    rho.delta[0] = Rational(1, 2);
  } else if (f.t == 1) {
    for (std::size_t i = 0; i < f.delta_size(); ++i) {
      rho.eps[i] = Rational(-1, 2);
      rho.delta[i] = Rational(1, 2);
    }
  }
  return rho;
}

inline RootDatum root_datum(Family f) {
  RootDatum rd;
  rd.family = f;
  if (f.kind == FamilyKind::gl11) {
    Weight a(f);
    a.eps[0] = 1;
    a.delta[0] = -1;
    rd.positive_roots.push_back({a, true});
  } else {
    for (auto& r : detail::all_osp_roots(f))
      if (detail::mixed_height(r.weight) > 0) rd.positive_roots.push_back(r);
  }
  // Simple roots: positive roots that are not a sum of two positive roots.
  std::set<Weight> pos;
  for (auto& r : rd.positive_roots) pos.insert(r.weight);
  for (auto& r : rd.positive_roots) {
    bool decomposable = false;
    for (auto& s : rd.positive_roots) {
      if (pos.count(r.weight - s.weight)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rd.simple_roots.push_back(r.weight);
  }
  std::sort(rd.simple_roots.begin(), rd.simple_roots.end());
  rd.rho = stored_rho(f);
  rd.weyl_generators = detail::rank_one_generators(f);
  return rd;
}

// 2 rho as the signed sum over positive roots.
inline Weight rho_from_roots(const RootDatum& rd) {
  Weight s(rd.family);
  for (auto& r : rd.positive_roots) {
    if (r.odd) s -= r.weight;
    else s += r.weight;
  }
  return Rational(1, 2) * s;
}

namespace detail {

// Solves sum_j x_j v_j = target exactly; returns nullopt-like empty flag when inconsistent.
inline bool solve_in_span(const std::vector<Weight>& basis, const Weight& target,
                          std::vector<Rational>& x) {
  const std::size_t rows = target.eps.size() + target.delta.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t r = 0;
    for (auto& c : basis[j].eps) m[r++][j] = c;
    for (auto& c : basis[j].delta) m[r++][j] = c;
  }
  {
    std::size_t r = 0;
    for (auto& c : target.eps) m[r++][cols] = c;
    for (auto& c : target.delta) m[r++][cols] = c;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t cc = 0; cc <= cols; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  if (pivot_col.size() != cols) throw error("simple roots are linearly dependent");
  x.assign(cols, 0);
  for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = m[r][cols];
  return true;
}

}  // namespace detail

// a <= b iff b - a lies in N * (positive roots), decided in simple-root coordinates.
inline bool dominance_leq(const Weight& a, const Weight& b, const RootDatum& rd) {
  a.check_same(b);
  Weight diff = b - a;
  if (diff.is_zero()) return true;
  std::vector<Rational> x;
  if (!detail::solve_in_span(rd.simple_roots, diff, x)) return false;
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c >= 0 && is_integer(c); });
}

inline bool dominance_leq(const Weight& a, const Weight& b) {
  return dominance_leq(a, b, root_datum(a.family));
}

// All elements of the stored Weyl group.
inline std::vector<SignedPerm> weyl_group(Family f) {
  bool stored = f.kind == FamilyKind::gl11 || f.k <= 1;
  if (!stored) throw error("no Weyl group data stored for " + f.name());
  auto gens = detail::rank_one_generators(f);
  std::set<SignedPerm> seen{SignedPerm::identity(f)};
  std::vector<SignedPerm> out{SignedPerm::identity(f)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto& g : gens) {
      auto h = g.compose(out[i]);
      if (seen.insert(h).second) out.push_back(h);
    }
  }
  return out;
}

// Orbit of w with the determinant of the first group element reaching each point.
inline std::vector<std::pair<Weight, int>> weyl_orbit(const Weight& w) {
  std::vector<std::pair<Weight, int>> out;
  std::set<Weight> seen;
  for (auto& g : weyl_group(w.family)) {
    Weight x = g.apply(w);
    if (seen.insert(x).second) out.emplace_back(x, g.det);
  }
  return out;
}

}  // namespace superdiag

#endif  // SUPERDIAG_LATTICE_HPP
