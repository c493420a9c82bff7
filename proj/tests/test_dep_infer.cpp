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

#include <catch2/catch_amalgamated.hpp>

#include "divrank/dep_infer.hpp"
#include "support.hpp"

using namespace divrank;
using divrank::testing::letters;

namespace {

AssertionSet sigma3(std::vector<Assertion> items) {
  return AssertionSet(letters(3), std::move(items));
}

}  // namespace

TEST_CASE("attribute closure examples") {
  // Sigma = {=(ab,c)}: closure of {a,b} picks up c
  AssertionSet s1 = sigma3({Assertion::dep(0b011u, 0b100u)});
  CHECK(attribute_closure(s1, 0b011u) == 0b111u);
  CHECK(attribute_closure(s1, 0b001u) == 0b001u);

  AssertionSet empty = sigma3({});
  for (Mask x = 0; x <= 0b111u; ++x) CHECK(attribute_closure(empty, x) == x);

  // chain =(a,b), =(b,c): two fixpoint steps
  AssertionSet chain = sigma3({Assertion::dep(0b001u, 0b010u), Assertion::dep(0b010u, 0b100u)});
  CHECK(attribute_closure(chain, 0b001u) == 0b111u);

  // cross-check against the bounded-depth rule-application oracle
  auto derivable = divrank::testing::dep_rule_oracle(chain, 4);
  for (Mask x = 0; x <= 0b111u; ++x) {
    Mask cl = attribute_closure(chain, x);
    for (Mask y = 0; y <= 0b111u; ++y) {
      bool by_closure = (y & ~cl) == 0;
      bool by_rules = derivable.count({x, y}) > 0;
      CHECK(by_closure == by_rules);
    }
  }

  CHECK_THROWS_AS(attribute_closure(sigma3({Assertion::indep(1, 2)}), 0), UsageError);
  CHECK_THROWS_AS(attribute_closure(empty, Mask(1) << 5), DomainError);
}

TEST_CASE("dependence entailment examples") {
  AssertionSet s = sigma3({Assertion::dep(0b011u, 0b100u)});
  CHECK(dep_entails(s, Assertion::dep(0b111u, 0b011u)));   // reflexive
  CHECK_FALSE(dep_entails(s, Assertion::dep(0b101u, 0b010u)));
  // augmentation: =(a,b) entails =(ac,bc)
  AssertionSet aug = sigma3({Assertion::dep(0b001u, 0b010u)});
  CHECK(dep_entails(aug, Assertion::dep(0b101u, 0b110u)));
  // constancy goals normalize
  CHECK(dep_entails(sigma3({Assertion::constancy(0b001u)}), Assertion::dep(0, 0b001u)));
}

TEST_CASE("closure is monotone increasing idempotent") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    GroundSet g = letters(n);
    std::vector<Assertion> items;
    int count = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int i = 0; i < count; ++i)
      items.push_back(Assertion::dep(
          std::uniform_int_distribution<Mask>(0, g.full_mask())(rng),
          std::uniform_int_distribution<Mask>(0, g.full_mask())(rng)));
    AssertionSet s(g, items);
    for (Mask x = 0; x <= g.full_mask(); ++x) {
      Mask cl = attribute_closure(s, x);
      CHECK((x & ~cl) == 0);                        // increasing
      CHECK(attribute_closure(s, cl) == cl);        // idempotent
      for (Mask y = x;; y = ((y | x) + 1) | x) {    // monotone over supersets
        if (y > g.full_mask()) break;
        CHECK((cl & ~attribute_closure(s, y)) == 0);
        if (y == g.full_mask()) break;
      }
    }
  }
}

TEST_CASE("entailment decomposes to singletons on the right") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    GroundSet g = letters(3);
    std::vector<Assertion> items;
    for (int i = 0; i < 2; ++i)
      items.push_back(Assertion::dep(
          std::uniform_int_distribution<Mask>(0, 7)(rng),
          std::uniform_int_distribution<Mask>(0, 7)(rng)));
    AssertionSet s(g, items);
    for (Mask x = 0; x <= 7u; ++x)
      for (Mask y = 0; y <= 7u; ++y) {
        bool whole = dep_entails(s, Assertion::dep(x, y));
        bool each = true;
        for (int i = 0; i < 3; ++i)
          if (y & (Mask(1) << i))
            each = each && dep_entails(s, Assertion::dep(x, Mask(1) << i));
        CHECK(whole == each);
      }
  }
}

TEST_CASE("dependence countermodel examples") {
  // Sigma = {=(ab,c)}, goal =(a,b): closure(a) = {a}
  AssertionSet s = sigma3({Assertion::dep(0b011u, 0b100u)});
  Assertion goal = Assertion::dep(0b001u, 0b010u);
  REQUIRE_FALSE(dep_entails(s, goal));
  DepCountermodel cm = dep_countermodel(s, goal);
  CHECK(cm.closure == 0b001u);
  CHECK(cm.team.rows().size() == 2);
  CHECK_FALSE(holds_in(RankModel{cm.team}, goal));
  CHECK_FALSE(holds_in(cm.model, goal));
  for (const auto& a : s.items) {
    CHECK(holds_in(RankModel{cm.team}, a));
    CHECK(holds_in(cm.model, a));
  }

  // Sigma empty, goal =((),a): rank(a) = 1 in the countermodel
  AssertionSet empty = sigma3({});
  DepCountermodel cm2 = dep_countermodel(empty, Assertion::dep(0, 0b001u));
  CHECK(cm2.closure == 0);
  CHECK(cm2.model.rank(0b001u).exact_value() == Rational(1));

  // Sigma = {=(a,b)}, goal =(b,a)
  AssertionSet s3 = sigma3({Assertion::dep(0b001u, 0b010u)});
  DepCountermodel cm3 = dep_countermodel(s3, Assertion::dep(0b010u, 0b001u));
  CHECK(holds_in(RankModel{cm3.team}, Assertion::dep(0b001u, 0b010u)));
  CHECK_FALSE(holds_in(RankModel{cm3.team}, Assertion::dep(0b010u, 0b001u)));

  CHECK_THROWS_AS(dep_countermodel(s, Assertion::dep(0b011u, 0b111u)), UsageError);
}

TEST_CASE("two-valued and team countermodels induce the same atoms") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    GroundSet g = letters(4);
    std::vector<Assertion> items;
    for (int i = 0; i < 2; ++i)
      items.push_back(Assertion::dep(
          std::uniform_int_distribution<Mask>(0, 15)(rng),
          std::uniform_int_distribution<Mask>(0, 15)(rng)));
    AssertionSet s(g, items);
    Mask gx = std::uniform_int_distribution<Mask>(0, 15)(rng);
    Mask gy = std::uniform_int_distribution<Mask>(0, 15)(rng);
    Assertion goal = Assertion::dep(gx, gy);
    if (dep_entails(s, goal)) continue;
    DepCountermodel cm = dep_countermodel(s, goal);
    RankModel team{cm.team};
    for (Mask x = 0; x <= 15u; ++x)
      for (Mask y = 0; y <= 15u; ++y) {
        CHECK(dep_holds(cm.model, x, y) == dep_holds(team, x, y));
        CHECK(indep_holds(cm.model, x, y) == indep_holds(team, x, y));
      }
  }
}

TEST_CASE("entailment is sound over random models") {
  std::mt19937 rng(61);
  int checked = 0;
  while (checked < 200) {
    RankModel m = divrank::testing::random_model(
        rng, divrank::testing::submodular_kinds()[checked % 7], 3);
    const GroundSet& g = m.ground();
    std::vector<Assertion> sat;
    for (Mask x = 0; x <= g.full_mask(); ++x)
      for (Mask y = 0; y <= g.full_mask(); ++y)
        if (dep_holds(m, x, y)) sat.push_back(Assertion::dep(x, y));
    if (sat.size() > 6) {
      std::shuffle(sat.begin(), sat.end(), rng);
      sat.resize(3);
    }
    AssertionSet s(g, sat);
    for (Mask x = 0; x <= g.full_mask(); ++x)
      for (Mask y = 0; y <= g.full_mask(); ++y)
        if (dep_entails(s, Assertion::dep(x, y))) CHECK(dep_holds(m, x, y));
    ++checked;
  }
}

TEST_CASE("armstrong closure examples") {
  AssertionSet s = sigma3({Assertion::dep(0b011u, 0b100u)});
  AssertionSet closed = armstrong_close(s);
  for (Mask x = 0; x <= 0b111u; ++x)
    for (Mask y = 0; y <= 0b111u; ++y) {
      bool expect = ((y & ~x) == 0) || ((0b011u & ~x) == 0);
      CHECK(closed.contains(Assertion::dep(x, y)) == expect);
    }

  AssertionSet refl = armstrong_close(AssertionSet(letters(1), {}));
  CHECK(refl.items.size() == 3);  // =((),()), =(a,()), =(a,a)
  CHECK(armstrong_close(closed) == closed);  // idempotent

  CHECK_THROWS_AS(armstrong_close(AssertionSet(letters(11), {})), CapExceeded);
}

TEST_CASE("derivation trace replays the closure") {
  AssertionSet s = sigma3({Assertion::dep(0b001u, 0b010u), Assertion::dep(0b010u, 0b100u)});
  std::vector<std::string> lines = dep_derivation(s, Assertion::dep(0b001u, 0b100u));
  CHECK_FALSE(lines.empty());
  bool mentions_transitivity = false;
  for (const auto& l : lines)
    if (l.find("Transitivity") != std::string::npos) mentions_transitivity = true;
  CHECK(mentions_transitivity);
}
