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

#ifndef DIVRANK_TEAM_HPP
#define DIVRANK_TEAM_HPP

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "divrank/ground_set.hpp"
#include "divrank/rank_value.hpp"

namespace divrank {

/// A team: a nonempty finite set of assignments from variables to opaque
/// value tokens. Rows are stored aligned with the ground set's canonical
/// variable order and deduplicated as full assignments.
class Team {
 public:
  /// `rows` entries are aligned with `vars.names()`.
  Team(GroundSet vars, std::vector<std::vector<std::string>> rows)
      : vars_(std::move(vars)) {
    if (rows.empty()) throw std::invalid_argument("team must be nonempty");
    std::set<std::vector<std::string>> dedup;
    for (auto& r : rows) {
      if ((int)r.size() != vars_.size())
        throw std::invalid_argument("team row arity mismatch");
      dedup.insert(std::move(r));
    }
    rows_.assign(dedup.begin(), dedup.end());
  }

  const GroundSet& variables() const { return vars_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  /// Number of distinct projections of the rows onto x. #rows(()) = 1.
  Int distinct_count(Mask x) const {
    if ((x & ~vars_.full_mask()) != 0) throw DomainError("subset outside team variables");
    if (x == 0) return 1;
    std::set<std::vector<std::string>> proj;
    std::vector<int> idx;
    for (int i = 0; i < vars_.size(); ++i)
      if (x & (Mask(1) << i)) idx.push_back(i);
    for (const auto& row : rows_) {
      std::vector<std::string> p;
      p.reserve(idx.size());
      for (int i : idx) p.push_back(row[i]);
      proj.insert(std::move(p));
    }
    return Int(proj.size());
  }

  RankValue rank(Mask x) const { return RankValue::log_count(distinct_count(x)); }

  /// Functional-dependence reading: every pair of rows agreeing on x agrees
  /// on y. Used as the independent oracle against the rank definition.
  bool functional_dependence(Mask x, Mask y) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = i + 1; j < rows_.size(); ++j)
        if (agree(rows_[i], rows_[j], x) && !agree(rows_[i], rows_[j], y))
          return false;
    return true;
  }

  /// Joint-value-totality reading of independence: for all rows s, s' there
  /// is a row agreeing with s on x and with s' on y.
  bool joint_totality(Mask x, Mask y) const {
    for (const auto& s : rows_)
      for (const auto& s2 : rows_) {
        bool found = false;
        for (const auto& w : rows_)
          if (agree(w, s, x) && agree(w, s2, y)) { found = true; break; }
        if (!found) return false;
      }
    return true;
  }

  /// CSV: first row = variable names, later rows = values; duplicate full
  /// rows collapse. Cell text is taken verbatim.
  static Team from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    std::vector<std::string> header = split_csv(line);
    GroundSet vars(header);
    // CSV column order may differ from canonical order; build the mapping.
    std::vector<int> col_to_var(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
      col_to_var[c] = vars.index_of(header[c]);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::vector<std::string> cells = split_csv(line);
      if (cells.size() != header.size())
        throw std::invalid_argument("CSV row arity mismatch: " + line);
      std::vector<std::string> row(header.size());
      for (std::size_t c = 0; c < cells.size(); ++c) row[col_to_var[c]] = cells[c];
      rows.push_back(std::move(row));
    }
    return Team(std::move(vars), std::move(rows));
  }

  void to_csv(std::ostream& out) const {
    for (int i = 0; i < vars_.size(); ++i)
      out << (i ? "," : "") << vars_.name(i);
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
  }

 private:
  static bool agree(const std::vector<std::string>& a,
                    const std::vector<std::string>& b, Mask m) {
    for (int i = 0; m >> i; ++i)
      if ((m & (Mask(1) << i)) && a[i] != b[i]) return false;
    return true;
  }

  static std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
  }

  GroundSet vars_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace divrank

#endif  // DIVRANK_TEAM_HPP
