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

#ifndef SUPERDIAG_CHARRING_HPP
#define SUPERDIAG_CHARRING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superdiag/gamma.hpp"
#include "superdiag/lattice.hpp"

namespace superdiag {

// Linear functional on weights, strictly positive on the positive roots.
struct Functional {
  Family family;
  std::vector<Rational> eps;
  std::vector<Rational> delta;

  Rational operator()(const Weight& w) const {
    Rational s = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) s += eps[i] * w.eps[i];
    for (std::size_t i = 0; i < delta.size(); ++i) s += delta[i] * w.delta[i];
    return s;
  }
};

inline Functional default_phi(Family f) {
  Functional phi{f, {}, {}};
  if (f == Family::osp22()) {
    phi.eps = {1};
    phi.delta = {2};
  } else if (f == Family::osp32()) {
    phi.eps = {2};
    phi.delta = {1};
  } else if (f == Family::gl11()) {
    phi.eps = {1};
    phi.delta = {0};
  } else {
    throw error("no character data for " + f.name());
  }
  for (auto& r : root_datum(f).positive_roots)
    if (phi(r.weight) <= 0) throw error("phi is not positive on " + to_string(r.weight));
  return phi;
}

// Finite map weight -> integer; terms with phi below floor() are not known.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(Functional phi) : phi_(std::move(phi)) {}

  static LaurentSeries monomial(const Functional& phi, const Weight& w, std::int64_t c = 1) {
    LaurentSeries s(phi);
    if (c != 0) s.terms_[w] = c;
    return s;
  }
  static LaurentSeries one(const Functional& phi) {
    return monomial(phi, Weight(phi.family), 1);
  }

  const Functional& phi() const { return phi_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  const std::optional<Rational>& floor() const { return floor_; }
  bool is_exact() const { return !floor_.has_value(); }
  std::int64_t coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  // Highest phi value that may carry a nonzero term.
  std::optional<Rational> sup() const {
    std::optional<Rational> m = floor_;
    for (auto& [w, c] : terms_) {
      Rational v = phi_(w);
      if (!m || v > *m) m = v;
    }
    return m;
  }

  LaurentSeries& truncate(const Rational& fl) {
    if (!floor_ || *floor_ < fl) floor_ = fl;
    prune();
    return *this;
  }

  LaurentSeries& operator+=(const LaurentSeries& o) {
    if (o.floor_ && (!floor_ || *floor_ < *o.floor_)) floor_ = o.floor_;
    for (auto& [w, c] : o.terms_) terms_[w] = detail::checked_add(terms_[w], c);
    prune();
    return *this;
  }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this += o.scaled(-1); }

  LaurentSeries scaled(std::int64_t c) const {
    LaurentSeries s = *this;
    for (auto& [w, v] : s.terms_) v = detail::checked_mul(v, c);
    s.prune();
    return s;
  }

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries r(a.phi_);
    std::optional<Rational> fl;
    auto lower = [&](const Rational& v) {
      if (!fl || v < *fl) fl = v;
    };
    if (a.floor_ && b.sup()) lower(*a.floor_ + *b.sup());
    if (b.floor_ && a.sup()) lower(*b.floor_ + *a.sup());
    r.floor_ = fl;
    for (auto& [wa, ca] : a.terms_) {
      Rational pa = a.phi_(wa);
      for (auto& [wb, cb] : b.terms_) {
        if (fl && pa + b.phi_(wb) < *fl) continue;
        Weight w = wa + wb;
        r.terms_[w] = detail::checked_add(r.terms_[w], detail::checked_mul(ca, cb));
      }
    }
    r.prune();
    return r;
  }

  // Agreement on phi >= fl.
  bool agrees_above(const LaurentSeries& o, const Rational& fl) const {
    for (auto& [w, c] : terms_)
      if (phi_(w) >= fl && o.coefficient(w) != c) return false;
    for (auto& [w, c] : o.terms_)
      if (phi_(w) >= fl && coefficient(w) != c) return false;
    return true;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.terms_ == b.terms_ && a.floor_ == b.floor_;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0 || (floor_ && phi_(it->first) < *floor_)) it = terms_.erase(it);
      else ++it;
    }
  }

  Functional phi_;
  std::map<Weight, std::int64_t> terms_;
  std::optional<Rational> floor_;
};

// 1 / (1 + sign * e^{-alpha}) expanded in powers of e^{-alpha}, exact for phi >= -depth.
inline LaurentSeries geom_inverse(const Functional& phi, const Weight& alpha, int sign,
                                  const Rational& depth) {
  if (sign != 1 && sign != -1) throw error("geom_inverse: sign must be +1 or -1");
  Rational pa = phi(alpha);
  if (pa <= 0) throw error("geom_inverse: phi(alpha) must be positive");
  Weight w(phi.family);
  std::int64_t c = 1;
  LaurentSeries acc(phi);
  for (Rational h = 0; h <= depth; h += pa) {
    acc += LaurentSeries::monomial(phi, w, c);
    w -= alpha;
    c = -sign * c;
  }
  acc.truncate(-depth);
  return acc;
}

inline LaurentSeries supercharacter(const LaurentSeries& s) {
  LaurentSeries out(s.phi());
  for (auto& [w, c] : s.terms())
    out += LaurentSeries::monomial(s.phi(), w, parity(w) ? -c : c);
  if (s.floor()) out.truncate(*s.floor());
  return out;
}

inline std::int64_t sdim(const LaurentSeries& s) {
  if (!s.is_exact()) throw error("sdim needs an exact character");
  std::int64_t t = 0;
  for (auto& [w, c] : s.terms()) t = detail::checked_add(t, parity(w) ? -c : c);
  return t;
}

inline std::int64_t dim(const LaurentSeries& s) {
  if (!s.is_exact()) throw error("dim needs an exact character");
  std::int64_t t = 0;
  for (auto& [w, c] : s.terms()) t = detail::checked_add(t, c);
  return t;
}

inline bool is_weyl_invariant(const LaurentSeries& s) {
  auto group = weyl_group(s.phi().family);
  for (auto& [w, c] : s.terms())
    for (auto& g : group)
      if (s.coefficient(g.apply(w)) != c) return false;
  return true;
}

inline bool nonnegative(const LaurentSeries& s) {
  return std::all_of(s.terms().begin(), s.terms().end(), [](auto& kv) { return kv.second > 0; });
}

inline bool is_rank_one_family(Family f) { return f == Family::osp22() || f == Family::osp32(); }

// Odd positive roots of the Levi subalgebra attached to nu (rank one: all of them when the
// tail is positive, none otherwise).
inline std::vector<Weight> levi_odd_roots(const WeightDiagram& nu) {
  if (!is_rank_one_family(nu.family())) throw error("Levi data stored only for rank one");
  std::vector<Weight> out;
  if (tail(nu) == 0) return out;
  for (auto& r : root_datum(nu.family()).positive_roots)
    if (r.odd) out.push_back(r.weight);
  return out;
}

// Euler character R^{-1} e^{-rho} sum_w sgn(w) w(e^{nu+rho} / prod (1 + e^{-alpha})),
// returned truncated to phi >= -depth.
inline LaurentSeries euler_character(const WeightDiagram& nu, int depth) {
  const Family fam = nu.family();
  if (!is_rank_one_family(fam)) throw error("Euler characters are supported for osp(2|2) and osp(3|2)");
  if (depth < 1) throw error("depth must be positive");
  const Functional phi = default_phi(fam);
  const RootDatum rd = root_datum(fam);
  const Weight lam_rho = weight_from_diagram(nu) + rd.rho;
  auto group = weyl_group(fam);
  Rational margin = 1;
  for (auto& r : rd.positive_roots) margin += 2 * phi(r.weight);
  for (auto& g : group) {
    Rational v = phi(g.apply(lam_rho));
    margin += 2 * (v < 0 ? Rational(-v) : v);
  }
  margin += phi(rd.rho) < 0 ? Rational(-phi(rd.rho)) : phi(rd.rho);
  const Rational work = depth + margin;

  LaurentSeries num(phi);
  for (auto& g : group) {
    LaurentSeries term = LaurentSeries::monomial(phi, g.apply(lam_rho), g.det);
    for (auto& a : levi_odd_roots(nu)) {
      Weight wa = g.apply(a);
      if (phi(wa) > 0) {
        term = term * geom_inverse(phi, wa, 1, work);
      } else {
        Weight beta = -wa;
        term = term * LaurentSeries::monomial(phi, -beta) * geom_inverse(phi, beta, 1, work);
      }
    }
    num += term;
  }
  LaurentSeries r = num * LaurentSeries::monomial(phi, -rd.rho);
  for (auto& a : rd.positive_roots) {
    if (a.odd) r = r * (LaurentSeries::one(phi) + LaurentSeries::monomial(phi, -a.weight));
    else r = r * geom_inverse(phi, a.weight, -1, work);
  }
  if (r.floor() && *r.floor() > -depth) throw error("internal: working depth too small");
  r.truncate(-depth);
  return r;
}

struct CharacterTerm {
  std::string diagram;
  long paths = 0;      // number of increasing paths nu -> lambda
  int iota = 0;        // norm of nu
  int coefficient = 0; // coefficient on the Euler character of nu
};

struct SimpleCharacter {
  LaurentSeries value;
  std::vector<CharacterTerm> combination;
};

// ch L(lambda) = pari(lambda) sum_nu d^{lambda,nu} (-1)^{iota(nu)} E_nu with iota = norm.
inline std::vector<CharacterTerm> simple_combination(
    const WeightDiagram& lambda, const AdmissibilityPredicate& pred = nonnegative_degree) {
  const Family fam = lambda.family();
  auto spec = BlockSpec::make(fam, std::max(fam.k, lambda.max_coord()));
  std::vector<CharacterTerm> out;
  for (auto& [id, d] : coefficients_dless(spec, lambda, pred)) {
    auto nu = parse_diagram(id, fam.t);
    out.push_back(CharacterTerm{id, d, norm(nu), static_cast<int>(pari(lambda) * pari(nu) * d)});
  }
  std::sort(out.begin(), out.end(), [&](auto& x, auto& y) {
    return canonical_less(parse_diagram(x.diagram, fam.t), parse_diagram(y.diagram, fam.t));
  });
  return out;
}

inline SimpleCharacter simple_character(const WeightDiagram& lambda, int depth,
                                        const AdmissibilityPredicate& pred = nonnegative_degree) {
  const Family fam = lambda.family();
  if (!is_rank_one_family(fam)) throw error("simple characters are supported for osp(2|2) and osp(3|2)");
  SimpleCharacter sc;
  sc.combination = simple_combination(lambda, pred);
  const Functional phi = default_phi(fam);
  auto eval = [&](int d) {
    LaurentSeries s(phi);
    for (auto& t : sc.combination)
      s += euler_character(parse_diagram(t.diagram, fam.t), d).scaled(t.coefficient);
    return s;
  };
  LaurentSeries a = eval(depth), b = eval(depth + 5);
  bool stable = a.agrees_above(b, Rational(-depth));
  for (auto& [w, c] : b.terms())
    if (phi(w) < -depth + 1) stable = false;
  if (!stable)
    throw error("character not stable at depth " + std::to_string(depth) + "; increase the depth");
  LaurentSeries exact(phi);
  for (auto& [w, c] : a.terms()) exact += LaurentSeries::monomial(phi, w, c);
  sc.value = exact;
  return sc;
}

}  // namespace superdiag

#endif  // SUPERDIAG_CHARRING_HPP
