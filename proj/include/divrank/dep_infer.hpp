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

#ifndef DIVRANK_DEP_INFER_HPP
#define DIVRANK_DEP_INFER_HPP

#include <string>
#include <vector>

#include "divrank/assertions.hpp"
#include "divrank/ground_set.hpp"
#include "divrank/model.hpp"
#include "divrank/team.hpp"

namespace divrank {

namespace detail {
/// Dep assertions as (lhs, rhs) pairs; constancy normalizes to ((), x).
inline std::vector<Assertion> dep_items(const AssertionSet& sigma) {
  std::vector<Assertion> out;
  for (const auto& a : sigma.items) {
    Assertion n = a.normalized();
    if (n.tag != Assertion::Tag::Dep)
      throw UsageError("dependence inference needs dep/const assertions only");
    out.push_back(n);
  }
  return out;
}
}  // namespace detail

/// Least fixpoint of x under sigma: add w whenever =(z,w) in sigma with z
/// inside the current set. Decides entailment: sigma |- =(x,y) iff y is
/// inside the closure of x.
inline Mask attribute_closure(const AssertionSet& sigma, Mask x) {
  if ((x & ~sigma.universe.full_mask()) != 0) throw DomainError("subset outside universe");
  std::vector<Assertion> items = detail::dep_items(sigma);
  Mask cl = x;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : items)
      if ((a.lhs & ~cl) == 0 && (a.rhs & ~cl) != 0) {
        cl |= a.rhs;
        grew = true;
      }
  }
  return cl;
}

inline bool dep_entails(const AssertionSet& sigma, const Assertion& goal) {
  Assertion g = goal.normalized();
  if (g.tag != Assertion::Tag::Dep) throw UsageError("goal must be a dep/const assertion");
  return (g.rhs & ~attribute_closure(sigma, g.lhs)) == 0;
}

/// Replays the closure computation as Reflexivity/Augmentation/Transitivity
/// steps for display. Only meaningful for entailed goals.
inline std::vector<std::string> dep_derivation(const AssertionSet& sigma,
                                               const Assertion& goal) {
  Assertion g = goal.normalized();
  const GroundSet& u = sigma.universe;
  std::vector<Assertion> items = detail::dep_items(sigma);
  std::vector<std::string> steps;
  steps.push_back("[Reflexivity]    " + format_assertion(u, Assertion::dep(g.lhs, g.lhs)));
  Mask cl = g.lhs;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : items)
      if ((a.lhs & ~cl) == 0 && (a.rhs & ~cl) != 0) {
        steps.push_back("[Augmentation]   " + format_assertion(u, a) + "  gives  " +
                        format_assertion(u, Assertion::dep(cl, cl | a.rhs)));
        steps.push_back("[Transitivity]   " +
                        format_assertion(u, Assertion::dep(g.lhs, cl | a.rhs)));
        cl |= a.rhs;
        grew = true;
      }
  }
  steps.push_back("[Reflexivity]    " + format_assertion(u, Assertion::dep(cl, g.rhs)));
  steps.push_back("[Transitivity]   " + format_assertion(u, Assertion::dep(g.lhs, g.rhs)));
  return steps;
}

/// A refuting pair for a non-entailed dependence goal: the two-valued rank
/// with singleton rank 0 exactly on the closure of the goal's left side, and
/// the matching two-row 0/1 team. Both satisfy sigma and violate the goal,
/// and induce the same rank on every subset.
struct DepCountermodel {
  Mask closure;      // V
  RankModel model;   // two-valued, ones = universe \ V
  Team team;         // rows: all-zero and the indicator of universe \ V
};

inline DepCountermodel dep_countermodel(const AssertionSet& sigma, const Assertion& goal) {
  if (dep_entails(sigma, goal))
    throw UsageError("goal is entailed; no countermodel exists");
  Assertion g = goal.normalized();
  const GroundSet& u = sigma.universe;
  Mask v = attribute_closure(sigma, g.lhs);
  Mask w = u.full_mask() & ~v;
  std::vector<std::string> zero(u.size(), "0"), indicator(u.size(), "0");
  for (int i = 0; i < u.size(); ++i)
    if (w & (Mask(1) << i)) indicator[i] = "1";
  return DepCountermodel{
      v, RankModel(TwoValuedModel{u, w}),
      Team(u, {std::move(zero), std::move(indicator)})};
}

/// The full Armstrong closure {=(x,y) : y within closure(x)} over the
/// declared universe; input to the representation construction.
inline AssertionSet armstrong_close(const AssertionSet& sigma, int cap = 10) {
  const GroundSet& u = sigma.universe;
  if (u.size() > cap)
    throw CapExceeded("armstrong_close: universe exceeds cap " + std::to_string(cap));
  std::vector<Mask> closures(u.subset_count());
  for (std::size_t x = 0; x < u.subset_count(); ++x)
    closures[x] = attribute_closure(sigma, (Mask)x);
  std::vector<Assertion> items;
  for (std::size_t x = 0; x < u.subset_count(); ++x)
    for (std::size_t y = 0; y < u.subset_count(); ++y)
      if (((Mask)y & ~closures[x]) == 0) items.push_back(Assertion::dep((Mask)x, (Mask)y));
  return AssertionSet(u, std::move(items));
}

}  // namespace divrank

#endif  // DIVRANK_DEP_INFER_HPP
