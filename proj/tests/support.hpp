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

// Test-only generators and independent oracles. The oracles deliberately
// avoid the library's production code paths.

#ifndef DIVRANK_TESTS_SUPPORT_HPP
#define DIVRANK_TESTS_SUPPORT_HPP

#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divrank/assertions.hpp"
#include "divrank/model.hpp"
#include "divrank/team.hpp"

namespace divrank::testing {

inline GroundSet letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return GroundSet(names);
}

// --- random instances --------------------------------------------------------

inline Team random_team(std::mt19937& rng, int max_vars = 5, int max_rows = 8) {
  int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  int rows = std::uniform_int_distribution<int>(1, max_rows)(rng);
  int alphabet = std::uniform_int_distribution<int>(1, 3)(rng);
  GroundSet vars = letters(n);
  std::vector<std::vector<std::string>> data;
  for (int r = 0; r < rows; ++r) {
    std::vector<std::string> row;
    for (int v = 0; v < n; ++v)
      row.push_back(std::to_string(std::uniform_int_distribution<int>(0, alphabet)(rng)));
    data.push_back(std::move(row));
  }
  return Team(std::move(vars), std::move(data));
}

/// Random joint distribution with small-denominator rational probabilities.
inline Distribution random_distribution(std::mt19937& rng, int max_vars = 3,
                                        int max_values = 3) {
  int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  int values = std::uniform_int_distribution<int>(2, max_values)(rng);
  GroundSet vars = letters(n);
  int cells = 1;
  for (int i = 0; i < n; ++i) cells *= values;
  std::vector<int> weights(cells);
  long long total = 0;
  while (total == 0) {
    for (auto& w : weights) {
      w = std::uniform_int_distribution<int>(0, 4)(rng);
      total += w;
    }
  }
  std::vector<std::pair<std::vector<std::string>, Rational>> outcomes;
  for (int c = 0; c < cells; ++c) {
    if (weights[c] == 0) continue;
    std::vector<std::string> a;
    int rest = c;
    for (int i = 0; i < n; ++i) {
      a.push_back(std::to_string(rest % values));
      rest /= values;
    }
    outcomes.emplace_back(std::move(a), Rational(weights[c], (long long)total));
  }
  return Distribution(std::move(vars), std::move(outcomes));
}

inline VectorFamily random_vector_family(std::mt19937& rng, int max_labels = 5,
                                         int max_dim = 4) {
  int n = std::uniform_int_distribution<int>(1, max_labels)(rng);
  int dim = std::uniform_int_distribution<int>(1, max_dim)(rng);
  GroundSet labels = letters(n);
  std::vector<std::vector<Rational>> vectors;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> v;
    for (int d = 0; d < dim; ++d)
      v.emplace_back(std::uniform_int_distribution<int>(-2, 2)(rng));
    vectors.push_back(std::move(v));
  }
  return VectorFamily(std::move(labels), std::move(vectors));
}

inline CoverageModel random_coverage(std::mt19937& rng, int max_labels = 5,
                                     int universe = 6) {
  int n = std::uniform_int_distribution<int>(1, max_labels)(rng);
  GroundSet labels = letters(n);
  std::vector<std::vector<std::string>> sets(n);
  for (auto& s : sets)
    for (int u = 0; u < universe; ++u)
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
        s.push_back(std::to_string(u));
  return CoverageModel(std::move(labels), std::move(sets));
}

/// A random model of the named kind over at most `max_attrs` attributes.
inline RankModel random_model(std::mt19937& rng, const std::string& kind,
                              int max_attrs = 6) {
  auto size = [&](int cap) { return std::uniform_int_distribution<int>(1, cap)(rng); };
  if (kind == "constant") {
    GroundSet g = letters(size(max_attrs));
    return RankModel(ConstantModel{g, Rational(std::uniform_int_distribution<int>(0, 6)(rng), 2)});
  }
  if (kind == "singular") {
    GroundSet g = letters(size(max_attrs));
    int a0 = std::uniform_int_distribution<int>(0, g.size() - 1)(rng);
    return RankModel(SingularModel{g, a0});
  }
  if (kind == "two_valued") {
    GroundSet g = letters(size(max_attrs));
    Mask ones = std::uniform_int_distribution<Mask>(0, g.full_mask())(rng);
    return RankModel(TwoValuedModel{g, ones});
  }
  if (kind == "uniform") return RankModel(UniformModel{letters(size(max_attrs))});
  if (kind == "coverage") return RankModel(random_coverage(rng, max_attrs));
  if (kind == "entropy") return RankModel(random_distribution(rng, std::min(max_attrs, 4)));
  if (kind == "linear") return RankModel(random_vector_family(rng, max_attrs));
  if (kind == "relational") return RankModel(random_team(rng, max_attrs));
  throw std::logic_error("unknown model kind " + kind);
}

inline const std::vector<std::string>& submodular_kinds() {
  static const std::vector<std::string> kinds{
      "constant", "singular", "two_valued", "uniform", "coverage", "entropy", "linear"};
  return kinds;
}

// --- independent oracles -----------------------------------------------------

/// Matrix rank by exhaustive nonzero-minor search (cofactor determinants);
/// independent of the elimination path in VectorFamily.
inline int minor_rank_oracle(const std::vector<std::vector<Rational>>& rows) {
  int m = (int)rows.size();
  int n = m == 0 ? 0 : (int)rows[0].size();
  std::function<Rational(const std::vector<int>&, const std::vector<int>&)> det =
      [&](const std::vector<int>& ri, const std::vector<int>& ci) -> Rational {
    if (ri.empty()) return Rational(1);
    Rational sum(0);
    int sign = 1;
    for (std::size_t k = 0; k < ci.size(); ++k) {
      Rational pivot = rows[ri[0]][ci[k]];
      if (pivot != Rational(0)) {
        std::vector<int> ri2(ri.begin() + 1, ri.end());
        std::vector<int> ci2;
        for (std::size_t j = 0; j < ci.size(); ++j)
          if (j != k) ci2.push_back(ci[j]);
        sum += Rational(sign) * pivot * det(ri2, ci2);
      }
      sign = -sign;
    }
    return sum;
  };
  for (int k = std::min(m, n); k >= 1; --k) {
    std::vector<std::vector<int>> row_subsets, col_subsets;
    std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)>
        gen = [&](int start, int total, int want, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
          if ((int)cur.size() == want) {
            out.push_back(cur);
            return;
          }
          for (int i = start; i < total; ++i) {
            cur.push_back(i);
            gen(i + 1, total, want, cur, out);
            cur.pop_back();
          }
        };
    std::vector<int> cur;
    gen(0, m, k, cur, row_subsets);
    gen(0, n, k, cur, col_subsets);
    for (const auto& rs : row_subsets)
      for (const auto& cs : col_subsets)
        if (det(rs, cs) != Rational(0)) return k;
  }
  return 0;
}

/// Naive saturation of the five independence rules by full-pass fixpoint over
/// a plain set of atom pairs; independent of the worklist engine.
inline std::set<std::pair<Mask, Mask>> naive_indep_saturate(const AssertionSet& sigma) {
  const Mask full = sigma.universe.full_mask();
  std::set<std::pair<Mask, Mask>> s;
  for (const auto& a : sigma.items) s.emplace(a.lhs, a.rhs);
  for (Mask x = 0;; ++x) {
    s.emplace(x, 0);
    if (x == full) break;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::pair<Mask, Mask>> fresh;
    auto want = [&](Mask a, Mask b) {
      if (!s.count({a, b}) && !fresh.count({a, b})) {
        fresh.emplace(a, b);
      }
    };
    for (const auto& [x, y] : s) {
      want(y, x);
      for (Mask y2 = 0;; y2 = next_submask(y2, y)) {
        want(x, y2);
        if (y2 == y) break;
      }
      if (x == y)
        for (Mask t = 0;; ++t) {
          want(x, t);
          if (t == full) break;
        }
      for (const auto& [u, z] : s)
        if (u == (x | y)) want(x, y | z);
    }
    if (!fresh.empty()) {
      s.insert(fresh.begin(), fresh.end());
      grew = true;
    }
  }
  return s;
}

/// Armstrong derivability by bounded-depth rule application: all atoms
/// reachable from sigma with Reflexivity instances plus `depth` rounds of
/// Augmentation and Transitivity, restricted to the universe.
inline std::set<std::pair<Mask, Mask>> dep_rule_oracle(const AssertionSet& sigma,
                                                       int depth) {
  const Mask full = sigma.universe.full_mask();
  std::set<std::pair<Mask, Mask>> s;
  for (const auto& a : sigma.items) s.emplace(a.normalized().lhs, a.normalized().rhs);
  for (Mask x = 0;; ++x) {  // Reflexivity: =(xy, x)
    for (Mask y = x;; y = ((y | x) + 1) | x) {
      if (y > full) break;
      s.emplace(y, x);
      if (y == full) break;
    }
    if (x == full) break;
  }
  for (int round = 0; round < depth; ++round) {
    std::set<std::pair<Mask, Mask>> fresh = s;
    for (const auto& [x, y] : s) {
      for (Mask z = 0;; ++z) {  // Augmentation
        fresh.emplace(x | z, y | z);
        if (z == full) break;
      }
      for (const auto& [y2, z] : s)  // Transitivity
        if (y2 == y) fresh.emplace(x, z);
    }
    s.swap(fresh);
  }
  return s;
}

}  // namespace divrank::testing

#endif  // DIVRANK_TESTS_SUPPORT_HPP
