// Copyright 2026 The Authors.
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

#ifndef DIVRANK_AXIOMS_HPP
#define DIVRANK_AXIOMS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"

namespace divrank {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckOptions {
  int cap = 12;          // hard refusal above this many attributes
  int triple_cap = 8;    // full triple enumeration up to here
  bool exhaustive = false;
  std::uint64_t samples = 200000;  // triple samples between triple_cap and cap
  std::uint32_t seed = 1;
  double eps = 0.0;
};

struct Witness {
  Mask x = 0, y = 0, z = 0;
  std::string detail;
};

struct AxiomCheck {
  bool pass = true;
  bool sampled = false;  // triple axiom was only spot-checked
  std::optional<Witness> witness;
};

struct AxiomReport {
  AxiomCheck r1, r2_left, r2_right, r3, r4, subm;
  bool core_pass() const {
    return r1.pass && r2_left.pass && r2_right.pass && r3.pass && r4.pass;
  }
  bool all_pass() const { return core_pass() && subm.pass; }
};

namespace detail {

/// Precomputed rank-by-mask table plus the comparison epsilon.
struct RankTable {
  std::vector<RankValue> r;
  double eps;
  // a+b vs c+d on ranks of the given subsets
  int cmp(Mask a, Mask b, Mask c, Mask d) const {
    return cmp_sum(r[a], r[b], r[c], r[d], eps);
  }
  bool eq(Mask a, Mask b) const { return cmp_rank(r[a], r[b], eps) == 0; }
};

template <typename RankFn>
RankTable tabulate(const GroundSet& g, RankFn&& rank, double eps) {
  RankTable t;
  t.eps = eps;
  t.r.reserve(g.subset_count());
  for (std::size_t m = 0; m < g.subset_count(); ++m) t.r.push_back(rank((Mask)m));
  return t;
}

/// Checks one triple against R3, R4 and SUBM; fills the first failure of each
/// still-passing axiom.
inline void check_triple(const RankTable& t, const GroundSet& g, Mask x, Mask y,
                         Mask z, AxiomCheck& r3, AxiomCheck& r4, AxiomCheck& subm) {
  Mask xy = x | y, xz = x | z, yz = y | z, xyz = x | y | z;
  const Mask e = 0;
  if (r3.pass && t.eq(xy, x) && !t.eq(xyz, xz)) {
    r3.pass = false;
    r3.witness = Witness{x, y, z,
        "r(xy)=r(x)=" + t.r[x].to_string() + " but r(xyz)=" + t.r[xyz].to_string() +
        " != r(xz)=" + t.r[xz].to_string()};
  }
  if (r4.pass && t.cmp(xyz, e, x, yz) == 0 && t.cmp(xy, e, x, y) != 0) {
    r4.pass = false;
    r4.witness = Witness{x, y, z,
        "r(xyz)=r(x)+r(yz) but r(xy)=" + t.r[xy].to_string() +
        " != r(x)+r(y)=" + t.r[x].to_string() + "+" + t.r[y].to_string()};
  }
  if (subm.pass && t.cmp(xyz, z, xz, yz) > 0) {
    subm.pass = false;
    subm.witness = Witness{x, y, z,
        "r(xyz)+r(z) = " + t.r[xyz].to_string() + "+" + t.r[z].to_string() +
        " > r(xz)+r(yz) = " + t.r[xz].to_string() + "+" + t.r[yz].to_string()};
  }
  (void)g;
}

}  // namespace detail

/// Exhaustively verifies R1, both halves of R2, R3, R4 and SUBM against any
/// rank functor. Pair axioms are always exhaustive; triple axioms are
/// exhaustive up to `triple_cap` attributes and sampled above it unless
/// `exhaustive` is set. Witnesses are the first violations in canonical
/// lexicographic subset order.
template <typename RankFn>
AxiomReport check_axioms_fn(const GroundSet& g, RankFn&& rank,
                            const CheckOptions& opt = {}) {
  if (g.size() > opt.cap)
    throw CapExceeded("ground set of " + std::to_string(g.size()) +
                      " attributes exceeds cap " + std::to_string(opt.cap));
  auto t = detail::tabulate(g, rank, opt.eps);
  AxiomReport rep;

  if (!t.r[0].is_zero(opt.eps)) {
    rep.r1.pass = false;
    rep.r1.witness = Witness{0, 0, 0, "r(()) = " + t.r[0].to_string()};
  }

  std::vector<Mask> order = g.lex_order();
  const Mask e = 0;
  for (Mask x : order) {
    for (Mask y : order) {
      if (rep.r2_left.pass && t.cmp(x, e, x | y, e) > 0) {
        rep.r2_left.pass = false;
        rep.r2_left.witness = Witness{x, y, 0,
            "r(x)=" + t.r[x].to_string() + " > r(xy)=" + t.r[x | y].to_string()};
      }
      if (rep.r2_right.pass && t.cmp(x | y, e, x, y) > 0) {
        rep.r2_right.pass = false;
        rep.r2_right.witness = Witness{x, y, 0,
            "r(xy)=" + t.r[x | y].to_string() + " > r(x)+r(y)=" +
            t.r[x].to_string() + "+" + t.r[y].to_string()};
      }
    }
    if (!rep.r2_left.pass && !rep.r2_right.pass) break;
  }

  if (g.size() <= opt.triple_cap || opt.exhaustive) {
    for (Mask x : order) {
      for (Mask y : order) {
        for (Mask z : order)
          detail::check_triple(t, g, x, y, z, rep.r3, rep.r4, rep.subm);
        if (!rep.r3.pass && !rep.r4.pass && !rep.subm.pass) break;
      }
      if (!rep.r3.pass && !rep.r4.pass && !rep.subm.pass) break;
    }
  } else {
    rep.r3.sampled = rep.r4.sampled = rep.subm.sampled = true;
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<Mask> pick(0, g.full_mask());
    for (std::uint64_t i = 0; i < opt.samples; ++i)
      detail::check_triple(t, g, pick(rng), pick(rng), pick(rng), rep.r3, rep.r4,
                           rep.subm);
  }
  return rep;
}

struct InteractionReport {
  AxiomCheck constancy_equivalence;  // x ⊥ x  iff  =((),x)
  AxiomCheck propagation;            // x ⊥ y and =(y,z)  imply  x ⊥ yz
  bool all_pass() const { return constancy_equivalence.pass && propagation.pass; }
};

/// Verifies the two dependence/independence interaction laws over all
/// subsets (pairs exhaustive; triples subject to the same sampling policy as
/// check_axioms_fn).
template <typename RankFn>
InteractionReport check_interaction_fn(const GroundSet& g, RankFn&& rank,
                                       const CheckOptions& opt = {}) {
  if (g.size() > opt.cap)
    throw CapExceeded("ground set of " + std::to_string(g.size()) +
                      " attributes exceeds cap " + std::to_string(opt.cap));
  auto t = detail::tabulate(g, rank, opt.eps);
  InteractionReport rep;
  const Mask e = 0;

  std::vector<Mask> order = g.lex_order();
  for (Mask x : order) {
    bool self_indep = t.cmp(x, x, x, e) == 0;
    bool const_dep = t.eq(x, 0);
    if (self_indep != const_dep) {
      rep.constancy_equivalence.pass = false;
      rep.constancy_equivalence.witness =
          Witness{x, 0, 0, self_indep ? "x⊥x holds but =((),x) fails"
                                      : "=((),x) holds but x⊥x fails"};
      break;
    }
  }

  auto triple = [&](Mask x, Mask y, Mask z) {
    if (!rep.propagation.pass) return;
    bool indep_xy = t.cmp(x, y, x | y, e) == 0;
    bool dep_yz = t.eq(y | z, y);
    if (indep_xy && dep_yz && t.cmp(x, y | z, x | y | z, e) != 0) {
      rep.propagation.pass = false;
      rep.propagation.witness = Witness{x, y, z, "x⊥y and =(y,z) hold but x⊥yz fails"};
    }
  };
  if (g.size() <= opt.triple_cap || opt.exhaustive) {
    for (Mask x : order)
      for (Mask y : order)
        for (Mask z : order) triple(x, y, z);
  } else {
    rep.propagation.sampled = true;
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<Mask> pick(0, g.full_mask());
    for (std::uint64_t i = 0; i < opt.samples; ++i)
      triple(pick(rng), pick(rng), pick(rng));
  }
  return rep;
}

}  // namespace divrank

#endif  // DIVRANK_AXIOMS_HPP
