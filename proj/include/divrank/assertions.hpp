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

#ifndef DIVRANK_ASSERTIONS_HPP
#define DIVRANK_ASSERTIONS_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "divrank/ground_set.hpp"
#include "divrank/model.hpp"

namespace divrank {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A dependence atom =(lhs,rhs), an independence atom lhs ⊥ rhs, or a
/// constancy atom =(lhs). Sides are subsets of one declared universe.
struct Assertion {
  enum class Tag { Dep, Indep, Constancy };
  Tag tag = Tag::Dep;
  Mask lhs = 0;
  Mask rhs = 0;  // unused for constancy

  static Assertion dep(Mask x, Mask y) { return {Tag::Dep, x, y}; }
  static Assertion indep(Mask x, Mask y) { return {Tag::Indep, x, y}; }
  static Assertion constancy(Mask x) { return {Tag::Constancy, x, 0}; }

  /// Constancy =(x) normalizes to =((),x) for inference.
  Assertion normalized() const {
    return tag == Tag::Constancy ? dep(0, lhs) : *this;
  }

  bool operator==(const Assertion&) const = default;
  auto operator<=>(const Assertion&) const = default;
};

inline bool holds_in(const RankModel& m, const Assertion& a) {
  switch (a.tag) {
    case Assertion::Tag::Dep: return dep_holds(m, a.lhs, a.rhs);
    case Assertion::Tag::Indep: return indep_holds(m, a.lhs, a.rhs);
    case Assertion::Tag::Constancy: return constancy_holds(m, a.lhs);
  }
  throw std::logic_error("bad tag");
}

/// Text format, one assertion per line:
///   dep: a b -> c d
///   const: a
///   indep: a b _||_ c
/// Empty sides are written "()"; tokens are whitespace-separated.
inline std::string format_assertion(const GroundSet& g, const Assertion& a) {
  auto side = [&](Mask m) { return m == 0 ? std::string("()") : g.subset_to_string(m, " "); };
  switch (a.tag) {
    case Assertion::Tag::Dep: return "dep: " + side(a.lhs) + " -> " + side(a.rhs);
    case Assertion::Tag::Indep: return "indep: " + side(a.lhs) + " _||_ " + side(a.rhs);
    case Assertion::Tag::Constancy: return "const: " + side(a.lhs);
  }
  throw std::logic_error("bad tag");
}

inline Assertion parse_assertion(const GroundSet& g, const std::string& line) {
  auto colon = line.find(':');
  if (colon == std::string::npos) throw UsageError("bad assertion line: " + line);
  std::string head = line.substr(0, colon);
  std::string body = line.substr(colon + 1);
  auto parse_side = [&](const std::string& text) {
    Mask m = 0;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
      if (tok == "()") continue;
      m |= Mask(1) << g.index_of(tok);
    }
    return m;
  };
  if (head == "dep") {
    auto arrow = body.find("->");
    if (arrow == std::string::npos) throw UsageError("dep assertion needs '->': " + line);
    return Assertion::dep(parse_side(body.substr(0, arrow)),
                          parse_side(body.substr(arrow + 2)));
  }
  if (head == "indep") {
    auto sep = body.find("_||_");
    if (sep == std::string::npos) throw UsageError("indep assertion needs '_||_': " + line);
    return Assertion::indep(parse_side(body.substr(0, sep)),
                            parse_side(body.substr(sep + 4)));
  }
  if (head == "const") return Assertion::constancy(parse_side(body));
  throw UsageError("unknown assertion kind '" + head + "'");
}

/// A deduplicated set of assertions over a declared universe. The universe is
/// the inference domain, not merely the mentioned attributes.
struct AssertionSet {
  GroundSet universe;
  std::vector<Assertion> items;

  AssertionSet() = default;
  AssertionSet(GroundSet u, std::vector<Assertion> list)
      : universe(std::move(u)), items(std::move(list)) {
    for (const auto& a : items)
      if ((a.lhs & ~universe.full_mask()) || (a.rhs & ~universe.full_mask()))
        throw DomainError("assertion outside universe");
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
  }

  bool contains(const Assertion& a) const {
    return std::binary_search(items.begin(), items.end(), a);
  }

  bool only(Assertion::Tag tag) const {
    return std::all_of(items.begin(), items.end(),
                       [&](const Assertion& a) { return a.tag == tag; });
  }

  bool operator==(const AssertionSet&) const = default;
};

/// Reads an assertion file. An optional leading "universe: a b c" line
/// declares the universe; otherwise it is the set of mentioned attributes.
/// '#' starts a comment.
inline AssertionSet parse_assertion_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.erase(line.begin());
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<std::string> attrs;
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("universe:", 0) == 0) {
    std::stringstream ss(lines[0].substr(9));
    std::string tok;
    while (ss >> tok) attrs.push_back(tok);
    start = 1;
  } else {
    for (const auto& l : lines) {
      std::string body = l;
      auto colon = body.find(':');
      if (colon != std::string::npos) body = body.substr(colon + 1);
      std::stringstream ss(body);
      std::string tok;
      while (ss >> tok)
        if (tok != "->" && tok != "_||_" && tok != "()" &&
            std::find(attrs.begin(), attrs.end(), tok) == attrs.end())
          attrs.push_back(tok);
    }
  }
  GroundSet universe(attrs);
  std::vector<Assertion> items;
  for (std::size_t i = start; i < lines.size(); ++i)
    items.push_back(parse_assertion(universe, lines[i]));
  return AssertionSet(std::move(universe), std::move(items));
}

inline void write_assertion_file(std::ostream& out, const AssertionSet& s) {
  out << "universe:";
  for (const auto& n : s.universe.names()) out << " " << n;
  out << "\n";
  for (const auto& a : s.items) out << format_assertion(s.universe, a) << "\n";
}

/// All dependence atoms followed by all independence atoms holding in the
/// model, in canonical lexicographic order. Independence atoms are listed
/// once per unordered pair (lex-smaller side first).
inline std::vector<Assertion> atoms_of(const RankModel& m, const CheckOptions& opt = {}) {
  const GroundSet& g = m.ground();
  if (g.size() > opt.cap)
    throw CapExceeded("ground set exceeds cap " + std::to_string(opt.cap));
  std::vector<Mask> order = g.lex_order();
  std::vector<RankValue> r;
  r.reserve(g.subset_count());
  for (std::size_t s = 0; s < g.subset_count(); ++s) r.push_back(m.rank((Mask)s));
  double eps = m.eps();
  std::vector<Assertion> out;
  for (Mask x : order)
    for (Mask y : order)
      if (cmp_rank(r[x | y], r[x], eps) == 0) out.push_back(Assertion::dep(x, y));
  for (Mask x : order)
    for (Mask y : order) {
      if (cmp_lex(x, y) > 0) continue;
      RankValue zero = RankValue::zero_like(r[x | y].kind());
      if (cmp_sum(r[x], r[y], r[x | y], zero, eps) == 0)
        out.push_back(Assertion::indep(x, y));
    }
  return out;
}

}  // namespace divrank

#endif  // DIVRANK_ASSERTIONS_HPP
