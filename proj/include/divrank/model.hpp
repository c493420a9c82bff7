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

#ifndef DIVRANK_MODEL_HPP
#define DIVRANK_MODEL_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "divrank/axioms.hpp"
#include "divrank/distribution.hpp"
#include "divrank/explicit_table.hpp"
#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"
#include "divrank/team.hpp"
#include "divrank/vector_family.hpp"

namespace divrank {

// --- simple models -----------------------------------------------------------

struct ConstantModel {
  GroundSet ground;
  Rational c;  // rank of every nonempty subset
};

struct SingularModel {
  GroundSet ground;
  int source;  // index of a0
};

struct TwoValuedModel {
  GroundSet ground;
  Mask ones;  // singletons with rank 1; rank of a set = max over members
};

struct UniformModel {
  GroundSet ground;  // rank = cardinality
};

struct CoverageModel {
  GroundSet ground;
  std::vector<std::vector<std::string>> sets;  // A_a per label, canonical order

  CoverageModel(GroundSet g, std::vector<std::vector<std::string>> s)
      : ground(std::move(g)), sets(std::move(s)) {
    if ((int)sets.size() != ground.size())
      throw std::invalid_argument("one data set per label required");
  }

  int union_size(Mask x) const {
    std::set<std::string> u;
    for (int i = 0; i < ground.size(); ++i)
      if (x & (Mask(1) << i)) u.insert(sets[i].begin(), sets[i].end());
    return (int)u.size();
  }
};

// --- the tagged union --------------------------------------------------------

/// A diversity rank function: one of the concrete model kinds, evaluable on
/// any subset of its ground set. Immutable; evaluation is pure.
class RankModel {
 public:
  using Payload = std::variant<ConstantModel, SingularModel, TwoValuedModel,
                               UniformModel, CoverageModel, Distribution, Team,
                               VectorFamily, ExplicitRankTable>;

  explicit RankModel(Payload payload, double eps = 1e-9)
      : payload_(std::move(payload)), eps_(eps) {
    if (std::holds_alternative<ConstantModel>(payload_) &&
        std::get<ConstantModel>(payload_).c < Rational(0))
      throw std::invalid_argument("constant rank must be non-negative");
  }

  const Payload& payload() const { return payload_; }

  const GroundSet& ground() const {
    return std::visit(
        [](const auto& m) -> const GroundSet& {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, Distribution> || std::is_same_v<T, Team>)
            return m.variables();
          else if constexpr (std::is_same_v<T, VectorFamily>)
            return m.labels();
          else if constexpr (std::is_same_v<T, ExplicitRankTable>)
            return m.ground();
          else
            return m.ground;
        },
        payload_);
  }

  /// Comparison tolerance: zero for exact kinds, epsilon for entropy and
  /// float tables.
  double eps() const {
    if (std::holds_alternative<Distribution>(payload_)) return eps_;
    if (auto* t = std::get_if<ExplicitRankTable>(&payload_))
      return t->exact() ? 0.0 : eps_;
    return 0.0;
  }

  bool exact() const { return eps() == 0.0; }

  std::string kind_name() const {
    struct V {
      std::string operator()(const ConstantModel&) const { return "constant"; }
      std::string operator()(const SingularModel&) const { return "singular"; }
      std::string operator()(const TwoValuedModel&) const { return "two_valued"; }
      std::string operator()(const UniformModel&) const { return "uniform"; }
      std::string operator()(const CoverageModel&) const { return "coverage"; }
      std::string operator()(const Distribution&) const { return "entropy"; }
      std::string operator()(const Team&) const { return "relational"; }
      std::string operator()(const VectorFamily&) const { return "linear"; }
      std::string operator()(const ExplicitRankTable&) const { return "explicit"; }
    };
    return std::visit(V{}, payload_);
  }

  RankValue rank(Mask x) const {
    if ((x & ~ground().full_mask()) != 0)
      throw DomainError("subset outside ground set");
    struct V {
      Mask x;
      RankValue operator()(const ConstantModel& m) const {
        return RankValue::exact(x == 0 ? Rational(0) : m.c);
      }
      RankValue operator()(const SingularModel& m) const {
        return RankValue::exact(Rational((x >> m.source) & 1));
      }
      RankValue operator()(const TwoValuedModel& m) const {
        return RankValue::exact(Rational((x & m.ones) != 0 ? 1 : 0));
      }
      RankValue operator()(const UniformModel&) const {
        return RankValue::exact(Rational(popcount(x)));
      }
      RankValue operator()(const CoverageModel& m) const {
        return RankValue::exact(Rational(m.union_size(x)));
      }
      RankValue operator()(const Distribution& m) const { return m.rank(x); }
      RankValue operator()(const Team& m) const { return m.rank(x); }
      RankValue operator()(const VectorFamily& m) const { return m.rank(x); }
      RankValue operator()(const ExplicitRankTable& m) const { return m.rank(x); }
    };
    return std::visit(V{x}, payload_);
  }

 private:
  Payload payload_;
  double eps_;
};

// --- derived atom semantics --------------------------------------------------

inline RankValue rank_eval(const RankModel& m, Mask x) { return m.rank(x); }

/// =(x,y): r(xy) = r(x).
inline bool dep_holds(const RankModel& m, Mask x, Mask y) {
  return rank_eq(m.rank(x | y), m.rank(x), m.eps());
}

/// =(x): r(x) = 0.
inline bool constancy_holds(const RankModel& m, Mask x) {
  return m.rank(x).is_zero(m.eps());
}

/// x ⊥ y: r(x) + r(y) = r(xy).
inline bool indep_holds(const RankModel& m, Mask x, Mask y) {
  RankValue rxy = m.rank(x | y);
  return cmp_sum(m.rank(x), m.rank(y), rxy, RankValue::zero_like(rxy.kind()),
                 m.eps()) == 0;
}

inline AxiomReport check_axioms(const RankModel& m, CheckOptions opt = {}) {
  opt.eps = m.eps();
  return check_axioms_fn(m.ground(), [&](Mask s) { return m.rank(s); }, opt);
}

inline InteractionReport check_interaction(const RankModel& m, CheckOptions opt = {}) {
  opt.eps = m.eps();
  return check_interaction_fn(m.ground(), [&](Mask s) { return m.rank(s); }, opt);
}

}  // namespace divrank

#endif  // DIVRANK_MODEL_HPP
