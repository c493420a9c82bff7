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

#ifndef DIVRANK_FORMATS_HPP
#define DIVRANK_FORMATS_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "divrank/distribution.hpp"
#include "divrank/explicit_table.hpp"
#include "divrank/ground_set.hpp"
#include "divrank/model.hpp"
#include "divrank/vector_family.hpp"

namespace divrank {

// Structured-text (JSON) formats. Rational values may be written as JSON
// integers or as strings "num/den" / decimals; JSON floats stay floats (and
// put an explicit table into epsilon comparison mode).

namespace detail {

inline Rational json_rational(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
  throw std::invalid_argument(what + ": expected integer or rational string");
}

}  // namespace detail

/// {"variables": [...], "outcomes": [{"assignment": {"a":"0",...}, "p": "1/2"}, ...]}
inline Distribution load_distribution(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  GroundSet vars(j.at("variables").get<std::vector<std::string>>());
  std::vector<std::pair<std::vector<std::string>, Rational>> outcomes;
  for (const auto& o : j.at("outcomes")) {
    std::vector<std::string> a(vars.size());
    for (const auto& [name, val] : o.at("assignment").items())
      a[vars.index_of(name)] = val.is_string() ? val.get<std::string>() : val.dump();
    outcomes.emplace_back(std::move(a), detail::json_rational(o.at("p"), "probability"));
  }
  return Distribution(std::move(vars), std::move(outcomes));
}

/// {"labels": [...], "vectors": {"a": ["1","0"], "b": [0, 1], ...}}
inline VectorFamily load_vector_family(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  GroundSet labels(j.at("labels").get<std::vector<std::string>>());
  std::vector<std::vector<Rational>> vectors(labels.size());
  for (const auto& [name, arr] : j.at("vectors").items()) {
    std::vector<Rational> v;
    for (const auto& entry : arr) v.push_back(detail::json_rational(entry, "vector entry"));
    vectors[labels.index_of(name)] = std::move(v);
  }
  return VectorFamily(std::move(labels), std::move(vectors));
}

/// {"ground": [...], "entries": {"": 0, "a": "1.5", "a,b": "2.1", ...}}
/// Keys are canonical comma-joined subsets; "" or "()" is the empty set.
inline ExplicitRankTable load_explicit_table(std::istream& in, double eps = 1e-9) {
  nlohmann::json j = nlohmann::json::parse(in);
  GroundSet ground(j.at("ground").get<std::vector<std::string>>());
  std::vector<RankValue> entries(ground.subset_count(), RankValue::exact(Rational(0)));
  std::vector<bool> present(ground.subset_count(), false);
  for (const auto& [key, val] : j.at("entries").items()) {
    Mask m = ground.parse_subset(key);
    if (present[m]) throw std::invalid_argument("duplicate table entry for '" + key + "'");
    present[m] = true;
    if (val.is_number_float())
      entries[m] = RankValue::approx(val.get<double>());
    else
      entries[m] = RankValue::exact(detail::json_rational(val, "rank entry"));
  }
  for (std::size_t m = 0; m < present.size(); ++m)
    if (!present[m])
      throw std::invalid_argument("missing table entry for '" +
                                  ground.subset_to_string((Mask)m) + "'");
  return ExplicitRankTable(std::move(ground), std::move(entries), eps);
}

inline void write_explicit_table(std::ostream& out, const ExplicitRankTable& t) {
  nlohmann::ordered_json j;
  j["ground"] = t.ground().names();
  nlohmann::ordered_json entries;
  for (Mask m : t.ground().lex_order()) {
    std::string key = m == 0 ? "" : t.ground().subset_to_string(m);
    const RankValue& v = t.rank(m);
    if (v.kind() == RankValue::Kind::Exact)
      entries[key] = format_rational(v.exact_value());
    else
      entries[key] = v.to_double();
  }
  j["entries"] = entries;
  out << j.dump(2) << "\n";
}

/// {"labels": [...], "sets": {"a": ["1","2"], ...}}
inline CoverageModel load_coverage(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in);
  GroundSet labels(j.at("labels").get<std::vector<std::string>>());
  std::vector<std::vector<std::string>> sets(labels.size());
  for (const auto& [name, arr] : j.at("sets").items()) {
    std::vector<std::string> s;
    for (const auto& e : arr) s.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    sets[labels.index_of(name)] = std::move(s);
  }
  return CoverageModel(std::move(labels), std::move(sets));
}

}  // namespace divrank

#endif  // DIVRANK_FORMATS_HPP
