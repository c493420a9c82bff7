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

#ifndef DIVRANK_EXPLICIT_TABLE_HPP
#define DIVRANK_EXPLICIT_TABLE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divrank/axioms.hpp"
#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"

namespace divrank {

struct TableValidationError : std::runtime_error {
  AxiomReport report;
  TableValidationError(std::string msg, AxiomReport rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
};

/// A rank function given by a total subset -> value map, accepted only if it
/// passes R1-R4. SUBM is deliberately not required. Tables with any float
/// entry compare with a tolerance; all-rational tables compare exactly.
class ExplicitRankTable {
 public:
  /// `entries` indexed by mask; must cover every subset of `ground`.
  ExplicitRankTable(GroundSet ground, std::vector<RankValue> entries,
                    double eps = 1e-9)
      : ground_(std::move(ground)), entries_(std::move(entries)) {
    if (entries_.size() != ground_.subset_count())
      throw std::invalid_argument("table must assign every subset a value");
    exact_ = true;
    for (const auto& v : entries_)
      if (v.kind() != RankValue::Kind::Exact) exact_ = false;
    eps_ = exact_ ? 0.0 : eps;
    CheckOptions opt;
    opt.eps = eps_;
    AxiomReport rep = check_axioms_fn(ground_, [&](Mask m) { return entries_[m]; }, opt);
    if (!rep.core_pass()) {
      std::string which = !rep.r1.pass ? "R1" : !rep.r2_left.pass ? "R2-left"
                          : !rep.r2_right.pass ? "R2-right" : !rep.r3.pass ? "R3" : "R4";
      const Witness& w = (!rep.r1.pass ? rep.r1 : !rep.r2_left.pass ? rep.r2_left
                          : !rep.r2_right.pass ? rep.r2_right
                          : !rep.r3.pass ? rep.r3 : rep.r4).witness.value();
      throw TableValidationError(
          "table violates " + which + " at x=" + ground_.subset_to_string(w.x) +
          " y=" + ground_.subset_to_string(w.y) + " z=" + ground_.subset_to_string(w.z) +
          ": " + w.detail, rep);
    }
  }

  const GroundSet& ground() const { return ground_; }
  bool exact() const { return exact_; }
  double eps() const { return eps_; }

  const RankValue& rank(Mask m) const {
    if ((m & ~ground_.full_mask()) != 0) throw DomainError("subset outside ground set");
    return entries_[m];
  }

 private:
  GroundSet ground_;
  std::vector<RankValue> entries_;
  bool exact_ = true;
  double eps_ = 0.0;
};

}  // namespace divrank

#endif  // DIVRANK_EXPLICIT_TABLE_HPP
