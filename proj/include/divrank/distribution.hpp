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

#ifndef DIVRANK_DISTRIBUTION_HPP
#define DIVRANK_DISTRIBUTION_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"

namespace divrank {

/// A joint distribution of discrete random variables with exact rational
/// probabilities. Entropy values are floats; independence can additionally be
/// decided exactly via rational factorization.
class Distribution {
 public:
  /// Each outcome is (assignment aligned with vars.names(), probability).
  Distribution(GroundSet vars,
               std::vector<std::pair<std::vector<std::string>, Rational>> outcomes)
      : vars_(std::move(vars)), outcomes_(std::move(outcomes)) {
    Rational total(0);
    std::map<std::vector<std::string>, int> seen;
    for (const auto& [a, p] : outcomes_) {
      if ((int)a.size() != vars_.size())
        throw std::invalid_argument("outcome arity mismatch");
      if (p <= Rational(0)) throw std::invalid_argument("probabilities must be positive");
      if (seen[a]++) throw std::invalid_argument("duplicate outcome assignment");
      total += p;
    }
    if (total != Rational(1))
      throw std::invalid_argument("probabilities must sum to 1, got " + format_rational(total));
  }

  const GroundSet& variables() const { return vars_; }
  const std::vector<std::pair<std::vector<std::string>, Rational>>& outcomes() const {
    return outcomes_;
  }

  std::map<std::vector<std::string>, Rational> marginal(Mask x) const {
    if ((x & ~vars_.full_mask()) != 0) throw DomainError("subset outside variables");
    std::vector<int> idx;
    for (int i = 0; i < vars_.size(); ++i)
      if (x & (Mask(1) << i)) idx.push_back(i);
    std::map<std::vector<std::string>, Rational> out;
    for (const auto& [a, p] : outcomes_) {
      std::vector<std::string> proj;
      proj.reserve(idx.size());
      for (int i : idx) proj.push_back(a[i]);
      auto [it, fresh] = out.emplace(std::move(proj), p);
      if (!fresh) it->second += p;
    }
    return out;
  }

  /// Joint entropy -sum p log2 p of the marginal on x, as a float.
  double entropy(Mask x) const {
    double h = 0.0;
    for (const auto& [a, p] : marginal(x)) {
      double pd = to_double(p);
      h -= pd * std::log2(pd);
    }
    return h < 0 ? 0.0 : h;  // clamp -0.0 from the single-outcome case
  }

  RankValue rank(Mask x) const { return RankValue::approx(entropy(x)); }

  /// Exact factorization check: P(x=m, y=m') = P(x=m) P(y=m') for all value
  /// pairs. Pairs that disagree on x∩y have joint probability zero.
  bool indep_exact(Mask x, Mask y) const {
    auto mx = marginal(x), my = marginal(y), mxy = marginal(x | y);
    std::vector<int> ix, iy;
    for (int i = 0; i < vars_.size(); ++i) {
      if (x & (Mask(1) << i)) ix.push_back(i);
      if (y & (Mask(1) << i)) iy.push_back(i);
    }
    for (const auto& [u, pu] : mx)
      for (const auto& [v, pv] : my) {
        // merge u and v into a full assignment over x|y; detect overlap clash
        std::vector<std::string> joint;
        bool clash = false;
        std::size_t ui = 0, vi = 0;
        for (int i = 0; i < vars_.size() && !clash; ++i) {
          bool in_x = (x >> i) & 1, in_y = (y >> i) & 1;
          if (!in_x && !in_y) continue;
          if (in_x && in_y) {
            if (u[ui] != v[vi]) clash = true;
            else joint.push_back(u[ui]);
            ++ui; ++vi;
          } else if (in_x) {
            joint.push_back(u[ui++]);
          } else {
            joint.push_back(v[vi++]);
          }
        }
        Rational pj(0);
        if (!clash) {
          auto it = mxy.find(joint);
          if (it != mxy.end()) pj = it->second;
        }
        if (pj != pu * pv) return false;
      }
    return true;
  }

 private:
  GroundSet vars_;
  std::vector<std::pair<std::vector<std::string>, Rational>> outcomes_;
};

}  // namespace divrank

#endif  // DIVRANK_DISTRIBUTION_HPP
