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

#ifndef DIVRANK_REPRESENT_HPP
#define DIVRANK_REPRESENT_HPP

#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "divrank/assertions.hpp"
#include "divrank/dep_infer.hpp"
#include "divrank/explicit_table.hpp"
#include "divrank/ground_set.hpp"

namespace divrank {

struct NotClosedError : UsageError {
  Assertion missing;
  NotClosedError(std::string msg, Assertion a)
      : UsageError(std::move(msg)), missing(a) {}
};

/// The quotient of the subsets of the universe by mutual dependence, with the
/// partial order E_y <= E_x iff =(x,y) is in the (Armstrong-closed) input.
struct EquivClassPoset {
  GroundSet universe;
  std::vector<int> class_of;             // by mask
  std::vector<Mask> representative;      // lex-least member per class
  std::vector<std::vector<bool>> leq;    // leq[i][j]: class i <= class j

  int class_count() const { return (int)representative.size(); }
  int class_of_empty() const { return class_of[0]; }
};

inline EquivClassPoset build_poset(const AssertionSet& sigma, int cap = 10) {
  const GroundSet& u = sigma.universe;
  if (u.size() > cap)
    throw CapExceeded("build_poset: universe exceeds cap " + std::to_string(cap));
  if (!sigma.only(Assertion::Tag::Dep))
    throw UsageError("representation needs dep assertions only");

  // Closedness validation: every closure consequence must already be present.
  std::vector<Mask> closures(u.subset_count());
  for (std::size_t x = 0; x < u.subset_count(); ++x)
    closures[x] = attribute_closure(sigma, (Mask)x);
  for (Mask x : u.lex_order())
    for (Mask y : u.lex_order())
      if ((y & ~closures[x]) == 0 && !sigma.contains(Assertion::dep(x, y)))
        throw NotClosedError(
            "assertion set is not Armstrong-closed: missing " +
                format_assertion(u, Assertion::dep(x, y)),
            Assertion::dep(x, y));

  // x ≡ y iff each closure contains the other side; representative is the
  // lex-least member.
  EquivClassPoset p;
  p.universe = u;
  p.class_of.assign(u.subset_count(), -1);
  std::map<Mask, int> cls_by_closure;  // closure(x) determines the class
  std::vector<Mask> reps_unordered;
  for (Mask x : u.lex_order()) {
    auto [it, fresh] = cls_by_closure.emplace(closures[x], (int)reps_unordered.size());
    if (fresh) reps_unordered.push_back(x);
    p.class_of[x] = it->second;
  }
  p.representative = reps_unordered;
  int k = p.class_count();
  p.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      p.leq[i][j] = (p.representative[i] & ~closures[p.representative[j]]) == 0;
  return p;
}

/// An order-preserving injection of the classes into {0} u (1,2), f(E_()) = 0,
/// values exact dyadic rationals.
struct InterpolationAssignment {
  std::vector<Rational> value;  // by class index
};

/// First unused dyadic midpoint of (l,r): the midpoint itself, then the
/// midpoints of the halves, breadth-first.
inline Rational pick_dyadic(const Rational& l, const Rational& r,
                            const std::set<Rational>& used) {
  std::deque<std::pair<Rational, Rational>> intervals{{l, r}};
  while (!intervals.empty()) {
    auto [a, b] = intervals.front();
    intervals.pop_front();
    Rational m = (a + b) / 2;
    if (!used.count(m)) return m;
    intervals.emplace_back(a, m);
    intervals.emplace_back(m, b);
  }
  throw std::logic_error("unreachable");
}

/// Classes are processed E_() first, then by representative in lexicographic
/// order; each gets a value strictly between its assigned predecessors below
/// and above (floor 1, ceiling 2).
inline InterpolationAssignment assign_values(const EquivClassPoset& p) {
  int k = p.class_count();
  std::vector<int> order;
  order.push_back(p.class_of_empty());
  for (int i = 0; i < k; ++i)
    if (i != p.class_of_empty()) order.push_back(i);
  // representatives are discovered in lex order by build_poset, so class
  // indices are already lex-ordered apart from the empty class.

  InterpolationAssignment f;
  f.value.assign(k, Rational(0));
  std::set<Rational> used;
  std::vector<bool> assigned(k, false);
  for (int step = 0; step < (int)order.size(); ++step) {
    int c = order[step];
    if (step == 0) {
      f.value[c] = Rational(0);
      assigned[c] = true;
      continue;
    }
    Rational l(1), r(2);
    for (int other = 0; other < k; ++other) {
      if (!assigned[other] || other == p.class_of_empty()) continue;
      if (p.leq[other][c] && !p.leq[c][other] && f.value[other] > l) l = f.value[other];
      if (p.leq[c][other] && !p.leq[other][c] && f.value[other] < r) r = f.value[other];
    }
    if (!(l < r)) throw std::logic_error("empty interpolation interval on a valid poset");
    Rational v = pick_dyadic(l, r, used);
    f.value[c] = v;
    used.insert(v);
    assigned[c] = true;
  }
  return f;
}

/// Realizes an Armstrong-closed assertion set as a rank table r(x) = f(E_x).
inline ExplicitRankTable realize_rank(const AssertionSet& sigma, int cap = 10) {
  EquivClassPoset p = build_poset(sigma, cap);
  InterpolationAssignment f = assign_values(p);
  std::vector<RankValue> entries;
  entries.reserve(sigma.universe.subset_count());
  for (std::size_t m = 0; m < sigma.universe.subset_count(); ++m)
    entries.push_back(RankValue::exact(f.value[p.class_of[m]]));
  return ExplicitRankTable(sigma.universe, std::move(entries));
}

/// True iff the table's dependence atoms are exactly sigma.
inline bool roundtrip_verify(const AssertionSet& sigma, const ExplicitRankTable& table) {
  if (sigma.universe != table.ground()) throw DomainError("universe mismatch");
  const GroundSet& u = sigma.universe;
  for (std::size_t x = 0; x < u.subset_count(); ++x)
    for (std::size_t y = 0; y < u.subset_count(); ++y) {
      bool in_table =
          cmp_rank(table.rank(Mask(x) | Mask(y)), table.rank(Mask(x)), table.eps()) == 0;
      if (in_table != sigma.contains(Assertion::dep((Mask)x, (Mask)y))) return false;
    }
  return true;
}

/// DOT edge list of the class order (non-reflexive pairs).
inline void poset_to_dot(std::ostream& out, const EquivClassPoset& p) {
  auto label = [&](int c) {
    return "\"E_" + (p.representative[c] == 0
                         ? std::string("()")
                         : p.universe.subset_to_string(p.representative[c])) + "\"";
  };
  out << "digraph poset {\n";
  for (int i = 0; i < p.class_count(); ++i)
    for (int j = 0; j < p.class_count(); ++j)
      if (i != j && p.leq[i][j]) out << "  " << label(i) << " -> " << label(j) << ";\n";
  out << "}\n";
}

}  // namespace divrank

#endif  // DIVRANK_REPRESENT_HPP
