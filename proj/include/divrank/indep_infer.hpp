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

#ifndef DIVRANK_INDEP_INFER_HPP
#define DIVRANK_INDEP_INFER_HPP

#include <deque>
#include <string>
#include <vector>

#include "divrank/assertions.hpp"
#include "divrank/ground_set.hpp"
#include "divrank/team.hpp"

namespace divrank {

/// Least fixpoint of the independence rules (Empty Set, Symmetry,
/// Decomposition, Mixing, Constancy) with every instantiation restricted to
/// subsets of the declared universe. The restriction is sound for deciding
/// universe-bounded goals: Decomposition only shrinks sides, Mixing only
/// merges existing sides and Symmetry swaps them, so any derivation of a
/// goal over the universe projects into the universe; Empty Set and
/// Constancy introduce fresh right-hand sides but only ones the projection
/// keeps inside the universe.
class IndepSaturation {
 public:
  struct Justification {
    const char* rule = "Premise";
    int premise1 = -1;  // atom ids
    int premise2 = -1;
  };

  explicit IndepSaturation(const AssertionSet& sigma, int cap = 8)
      : universe_(sigma.universe), n_(universe_.size()) {
    if (n_ > cap)
      throw CapExceeded("independence saturation: universe of " +
                        std::to_string(n_) + " attributes exceeds cap " +
                        std::to_string(cap));
    derived_.assign(std::size_t(1) << (2 * n_), false);
    just_.resize(derived_.size());
    for (const auto& a : sigma.items) {
      if (a.tag != Assertion::Tag::Indep)
        throw UsageError("independence inference needs indep assertions only");
      add(a.lhs, a.rhs, Justification{});
    }
    for (Mask x = 0; x <= universe_.full_mask() && n_ > 0; ++x)
      add(x, 0, Justification{"EmptySet"});
    if (n_ == 0) add(0, 0, Justification{"EmptySet"});
    run();
  }

  const GroundSet& universe() const { return universe_; }

  bool derived(Mask x, Mask y) const { return derived_[id(x, y)]; }

  /// All derived atoms, lex-smaller side first, in canonical order.
  std::vector<Assertion> atoms() const {
    std::vector<Mask> order = universe_.lex_order();
    std::vector<Assertion> out;
    for (Mask x : order)
      for (Mask y : order)
        if (cmp_lex(x, y) <= 0 && derived_[id(x, y)])
          out.push_back(Assertion::indep(x, y));
    return out;
  }

  /// V: all attributes a with {a} ⊥ {a} derived.
  Mask constancy_set() const {
    Mask v = 0;
    for (int i = 0; i < n_; ++i) {
      Mask a = Mask(1) << i;
      if (derived_[id(a, a)]) v |= a;
    }
    return v;
  }

  /// One (rule, premises) proof tree for a derived atom, flattened to lines.
  std::vector<std::string> derivation(Mask x, Mask y) const {
    std::vector<std::string> out;
    std::vector<bool> seen(derived_.size(), false);
    emit((int)id(x, y), seen, out);
    return out;
  }

 private:
  std::size_t id(Mask x, Mask y) const { return (std::size_t(x) << n_) | y; }
  Mask id_lhs(int i) const { return Mask(i) >> n_; }
  Mask id_rhs(int i) const { return Mask(i) & ((Mask(1) << n_) - 1); }

  void add(Mask x, Mask y, Justification j) {
    std::size_t i = id(x, y);
    if (derived_[i]) return;
    derived_[i] = true;
    just_[i] = j;
    queue_.push_back((int)i);
  }

  void run() {
    Mask full = universe_.full_mask();
    while (!queue_.empty()) {
      int i = queue_.front();
      queue_.pop_front();
      Mask x = id_lhs(i), y = id_rhs(i);
      add(y, x, Justification{"Symmetry", i});
      // Decomposition: shrink the right side to any subset.
      for (Mask y2 = 0;; y2 = next_submask(y2, y)) {
        if (y2 != y) add(x, y2, Justification{"Decomposition", i});
        if (y2 == y) break;
      }
      // Constancy: x ⊥ x makes x constant; pair it with anything.
      if (x == y)
        for (Mask t = 0;; ++t) {
          add(x, t, Justification{"Constancy", i});
          if (t == full) break;
        }
      // Mixing, this atom as x ⊥ y: find xy ⊥ z.
      Mask xy = x | y;
      for (Mask z = 0;; ++z) {
        if (derived_[id(xy, z)])
          add(x, y | z, Justification{"Mixing", i, (int)id(xy, z)});
        if (z == full) break;
      }
      // Mixing, this atom as xy ⊥ z: find w ⊥ v with w|v equal to this lhs.
      for (Mask w = 0;; w = next_submask(w, x)) {
        Mask need = x & ~w;
        for (Mask t = 0;; t = next_submask(t, w)) {
          Mask v = need | t;
          if (derived_[id(w, v)])
            add(w, v | y, Justification{"Mixing", (int)id(w, v), i});
          if (t == w) break;
        }
        if (w == x) break;
      }
    }
  }

  void emit(int i, std::vector<bool>& seen, std::vector<std::string>& out) const {
    if (seen[i]) return;
    seen[i] = true;
    const Justification& j = just_[i];
    if (j.premise1 >= 0) emit(j.premise1, seen, out);
    if (j.premise2 >= 0) emit(j.premise2, seen, out);
    std::string line = "[";
    line += j.rule;
    line += "]";
    line.resize(line.size() < 16 ? 16 : line.size(), ' ');
    line += format_assertion(universe_, Assertion::indep(id_lhs(i), id_rhs(i)));
    out.push_back(std::move(line));
  }

  GroundSet universe_;
  int n_;
  std::vector<bool> derived_;
  std::vector<Justification> just_;
  std::deque<int> queue_;
};

inline bool indep_entails(const AssertionSet& sigma, const Assertion& goal, int cap = 8) {
  if (goal.tag != Assertion::Tag::Indep) throw UsageError("goal must be an indep assertion");
  return IndepSaturation(sigma, cap).derived(goal.lhs, goal.rhs);
}

/// Shrinks a non-entailed goal to a minimal non-entailed sub-pair,
/// deterministically (left side first, attributes in canonical order).
/// Entailment is downward-closed via Decomposition, so greedy single-attribute
/// removal yields a pair all of whose proper sub-pairs are entailed.
inline Assertion minimize_target(const IndepSaturation& sat, const Assertion& goal) {
  if (sat.derived(goal.lhs, goal.rhs))
    throw UsageError("goal is entailed; nothing to minimize");
  Mask x = goal.lhs, y = goal.rhs;
  for (int i = 0; i < sat.universe().size(); ++i) {
    Mask bit = Mask(1) << i;
    if ((x & bit) && !sat.derived(x & ~bit, y)) x &= ~bit;
  }
  for (int i = 0; i < sat.universe().size(); ++i) {
    Mask bit = Mask(1) << i;
    if ((y & bit) && !sat.derived(x, y & ~bit)) y &= ~bit;
  }
  return Assertion::indep(x, y);
}

/// A team refuting a non-entailed independence goal. For a minimized goal
/// {c} ⊥ {c}: all 0/1 assignments vanishing on the derivable-constancy set V.
/// Otherwise: the parity team over the minimized sides, zero outside them.
inline Team indep_countermodel(const IndepSaturation& sat, const Assertion& goal,
                               int team_cap = 16) {
  if (sat.derived(goal.lhs, goal.rhs))
    throw UsageError("goal is entailed; no countermodel exists");
  const GroundSet& u = sat.universe();
  if (u.size() > team_cap)
    throw CapExceeded("countermodel team over " + std::to_string(u.size()) +
                      " attributes exceeds cap " + std::to_string(team_cap));
  Assertion m = minimize_target(sat, goal);
  Mask x = m.lhs, y = m.rhs;

  std::vector<std::vector<std::string>> rows;
  auto push_row = [&](Mask bits) {
    std::vector<std::string> row(u.size(), "0");
    for (int i = 0; i < u.size(); ++i)
      if (bits & (Mask(1) << i)) row[i] = "1";
    rows.push_back(std::move(row));
  };

  if (x == y) {
    // Minimality forces a singleton here (any shared attribute of a larger
    // non-entailed pair would be derivably constant, contradicting
    // Constancy Augmentation).
    Mask v = sat.constancy_set();
    Mask free = u.full_mask() & ~v;
    for (Mask bits = 0;; bits = next_submask(bits, free)) {
      push_row(bits);
      if (bits == free) break;
    }
  } else {
    Mask xy = x | y;
    for (Mask bits = 0;; bits = next_submask(bits, xy)) {
      if (popcount(bits & x) % 2 == popcount(bits & y) % 2) push_row(bits);
      if (bits == xy) break;
    }
  }
  return Team(u, std::move(rows));
}

inline Team indep_countermodel(const AssertionSet& sigma, const Assertion& goal,
                               int cap = 8, int team_cap = 16) {
  return indep_countermodel(IndepSaturation(sigma, cap), goal, team_cap);
}

}  // namespace divrank

#endif  // DIVRANK_INDEP_INFER_HPP
