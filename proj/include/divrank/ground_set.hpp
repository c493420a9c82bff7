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

#ifndef DIVRANK_GROUND_SET_HPP
#define DIVRANK_GROUND_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace divrank {

/// Subsets of a ground set are bitmasks; bit i is the i-th attribute in the
/// ground set's canonical (sorted) order.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Submask iteration helper: all subsets of `of`, ascending as masks.
/// Usage: for (Mask s = 0;; s = next_submask(s, of)) { ...; if (s == of) break; }
inline Mask next_submask(Mask s, Mask of) { return (s - of) & of; }

/// Lexicographic order on subsets viewed as sorted attribute sequences:
/// {} < {a} < {a,b} < {a,b,c} < {a,c} < {b} < ...
/// Returns <0, 0, >0.
inline int cmp_lex(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib ? -1 : 1;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b == 0) return 0;
  return a == 0 ? -1 : 1;
}

inline bool lex_less(Mask a, Mask b) { return cmp_lex(a, b) < 0; }

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite, ordered universe of attribute identifiers. Attribute names are
/// opaque tokens; the sorted order fixes bit positions for all subsets.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 1; i < names_.size(); ++i)
      if (names_[i] == names_[i - 1])
        throw DomainError("duplicate attribute '" + names_[i] + "'");
    if (names_.size() > 31) throw DomainError("ground set too large (max 31 attributes)");
  }

  int size() const { return (int)names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  Mask full_mask() const { return names_.empty() ? 0 : (Mask(1) << names_.size()) - 1; }
  std::size_t subset_count() const { return std::size_t(1) << names_.size(); }

  bool operator==(const GroundSet& o) const { return names_ == o.names_; }
  bool operator!=(const GroundSet& o) const { return names_ != o.names_; }

  int index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
      throw DomainError("attribute '" + name + "' not in ground set");
    return (int)(it - names_.begin());
  }

  bool contains(const std::string& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
  }

  Mask subset_of(const std::vector<std::string>& members) const {
    Mask m = 0;
    for (const auto& n : members) m |= Mask(1) << index_of(n);
    return m;
  }

  /// Parses "a,b,c" (or "" / "()" for the empty subset).
  Mask parse_subset(const std::string& text) const {
    if (text.empty() || text == "()") return 0;
    Mask m = 0;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
      while (!tok.empty() && tok.back() == ' ') tok.pop_back();
      if (!tok.empty()) m |= Mask(1) << index_of(tok);
    }
    return m;
  }

  std::vector<std::string> members_of(Mask m) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
      if (m & (Mask(1) << i)) out.push_back(names_[i]);
    return out;
  }

  std::string subset_to_string(Mask m, const char* sep = ",") const {
    if (m == 0) return "()";
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (m & (Mask(1) << i)) {
        if (!out.empty()) out += sep;
        out += names_[i];
      }
    }
    return out;
  }

  /// All subsets in canonical lexicographic order ({} first).
  std::vector<Mask> lex_order() const {
    std::vector<Mask> masks(subset_count());
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = (Mask)i;
    std::sort(masks.begin(), masks.end(), lex_less);
    return masks;
  }

 private:
  std::vector<std::string> names_;
};

}  // namespace divrank

#endif  // DIVRANK_GROUND_SET_HPP
