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

// divrank: evaluate diversity rank functions, check their axioms, run
// dependence/independence inference with countermodel synthesis, and realize
// Armstrong-closed assertion sets as rank tables.
//
// Exit codes: 0 success / derivable / valid; 1 semantic negative (axiom
// failure, not derivable, roundtrip failure); 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divrank/assertions.hpp"
#include "divrank/dep_infer.hpp"
#include "divrank/formats.hpp"
#include "divrank/indep_infer.hpp"
#include "divrank/model.hpp"
#include "divrank/represent.hpp"

namespace {

using namespace divrank;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct ModelArgs {
  std::string team, dist, vectors, explicit_table, cover;
  std::string kind;
  std::vector<std::string> attrs;
  std::string value = "1";  // constant c
  std::string a0;
  std::vector<std::string> ones;
  double tolerance = 1e-9;

  void attach(CLI::App* cmd) {
    cmd->add_option("--team", team, "team as CSV (header = variable names)");
    cmd->add_option("--dist", dist, "distribution as JSON");
    cmd->add_option("--vectors", vectors, "vector family as JSON");
    cmd->add_option("--explicit", explicit_table, "explicit rank table as JSON");
    cmd->add_option("--cover", cover, "coverage map as JSON");
    cmd->add_option("--kind", kind, "simple model: constant|singular|two_valued|uniform")
        ->check(CLI::IsMember({"constant", "singular", "two_valued", "uniform"}));
    cmd->add_option("--attrs", attrs, "ground set for --kind models (comma list)")
        ->delimiter(',');
    cmd->add_option("--value", value, "constant model rank c");
    cmd->add_option("--a0", a0, "singular model source attribute");
    cmd->add_option("--ones", ones, "two_valued model rank-1 attributes")->delimiter(',');
    cmd->add_option("--tolerance", tolerance, "epsilon for non-exact comparisons")
        ->check(CLI::PositiveNumber);
  }

  RankModel load() const {
    int given = !team.empty() + !dist.empty() + !vectors.empty() +
                !explicit_table.empty() + !cover.empty() + !kind.empty();
    if (given != 1)
      throw UsageError("give exactly one of --team/--dist/--vectors/--explicit/--cover/--kind");
    auto open = [](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot open '" + path + "'");
      return in;
    };
    if (!team.empty()) {
      auto in = open(team);
      return RankModel(Team::from_csv(in), tolerance);
    }
    if (!dist.empty()) {
      auto in = open(dist);
      return RankModel(load_distribution(in), tolerance);
    }
    if (!vectors.empty()) {
      auto in = open(vectors);
      return RankModel(load_vector_family(in), tolerance);
    }
    if (!explicit_table.empty()) {
      auto in = open(explicit_table);
      return RankModel(load_explicit_table(in, tolerance), tolerance);
    }
    if (!cover.empty()) {
      auto in = open(cover);
      return RankModel(load_coverage(in), tolerance);
    }
    GroundSet ground(attrs);
    if (kind == "uniform") return RankModel(UniformModel{ground});
    if (kind == "constant") return RankModel(ConstantModel{ground, parse_rational(value)});
    if (kind == "singular") {
      if (a0.empty()) throw UsageError("singular model needs --a0");
      return RankModel(SingularModel{ground, ground.index_of(a0)});
    }
    return RankModel(TwoValuedModel{ground, ground.subset_of(ones)});
  }
};

struct CommonArgs {
  int cap = 12;
  bool exhaustive = false;
  std::string format = "human";

  void attach(CLI::App* cmd) {
    cmd->add_option("--cap", cap, "enumeration cap (attributes)")->check(CLI::PositiveNumber);
    cmd->add_flag("--exhaustive", exhaustive, "force exhaustive triple checks");
    cmd->add_option("--format", format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
  }

  CheckOptions options() const {
    CheckOptions o;
    o.cap = cap;
    o.exhaustive = exhaustive;
    return o;
  }
  bool json() const { return format == "json"; }
};

AssertionSet load_assertions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return parse_assertion_file(in);
}

std::string axiom_line(const char* name, const AxiomCheck& c, const GroundSet& g) {
  std::string s = std::string(name) + ": " + (c.pass ? "PASS" : "FAIL");
  if (c.sampled) s += " (sampled)";
  if (c.witness) {
    const Witness& w = *c.witness;
    s += " witness x=" + g.subset_to_string(w.x) + " y=" + g.subset_to_string(w.y) +
         " z=" + g.subset_to_string(w.z) + " (" + w.detail + ")";
  }
  return s;
}

nlohmann::ordered_json axiom_json(const AxiomCheck& c, const GroundSet& g) {
  nlohmann::ordered_json j;
  j["pass"] = c.pass;
  j["sampled"] = c.sampled;
  if (c.witness) {
    j["witness"] = {{"x", g.subset_to_string(c.witness->x)},
                    {"y", g.subset_to_string(c.witness->y)},
                    {"z", g.subset_to_string(c.witness->z)},
                    {"detail", c.witness->detail}};
  }
  return j;
}

int cmd_rank(const ModelArgs& margs, const CommonArgs& cargs,
             const std::vector<std::string>& subsets) {
  RankModel model = margs.load();
  nlohmann::ordered_json out;
  for (const auto& text : subsets) {
    Mask m = model.ground().parse_subset(text);
    RankValue v = model.rank(m);
    if (cargs.json())
      out[model.ground().subset_to_string(m)] = v.to_string();
    else
      std::cout << v.to_string() << "\n";
  }
  if (cargs.json()) std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_check(const ModelArgs& margs, const CommonArgs& cargs) {
  RankModel model = margs.load();
  const GroundSet& g = model.ground();
  AxiomReport rep = check_axioms(model, cargs.options());
  InteractionReport inter = check_interaction(model, cargs.options());
  if (cargs.json()) {
    nlohmann::ordered_json j;
    j["model"] = model.kind_name();
    j["comparison"] = model.exact() ? "exact" : "epsilon";
    j["R1"] = axiom_json(rep.r1, g);
    j["R2-left"] = axiom_json(rep.r2_left, g);
    j["R2-right"] = axiom_json(rep.r2_right, g);
    j["R3"] = axiom_json(rep.r3, g);
    j["R4"] = axiom_json(rep.r4, g);
    j["SUBM"] = axiom_json(rep.subm, g);
    j["constancy_equivalence"] = axiom_json(inter.constancy_equivalence, g);
    j["propagation"] = axiom_json(inter.propagation, g);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "model: " << model.kind_name()
              << " (comparison " << (model.exact() ? "exact" : "epsilon") << ")\n";
    std::cout << axiom_line("R1", rep.r1, g) << "\n";
    std::cout << axiom_line("R2-left", rep.r2_left, g) << "\n";
    std::cout << axiom_line("R2-right", rep.r2_right, g) << "\n";
    std::cout << axiom_line("R3", rep.r3, g) << "\n";
    std::cout << axiom_line("R4", rep.r4, g) << "\n";
    std::cout << axiom_line("SUBM", rep.subm, g) << "\n";
    std::cout << axiom_line("ConstancyEquivalence", inter.constancy_equivalence, g) << "\n";
    std::cout << axiom_line("Propagation", inter.propagation, g) << "\n";
  }
  return rep.core_pass() ? kExitOk : kExitNegative;
}

int cmd_atoms(const ModelArgs& margs, const CommonArgs& cargs) {
  RankModel model = margs.load();
  std::vector<Assertion> atoms = atoms_of(model, cargs.options());
  if (cargs.json()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : atoms) arr.push_back(format_assertion(model.ground(), a));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& a : atoms)
      std::cout << format_assertion(model.ground(), a) << "\n";
  }
  return kExitOk;
}

int infer_common(const std::string& assertions_path, const std::string& goal_text,
                 const std::string& out_path, const CommonArgs& cargs,
                 bool countermodel_only) {
  AssertionSet sigma = load_assertions(assertions_path);
  Assertion goal = parse_assertion(sigma.universe, goal_text);

  bool dep_mode = goal.normalized().tag == Assertion::Tag::Dep;
  bool sigma_dep = sigma.only(Assertion::Tag::Dep) ||
                   std::all_of(sigma.items.begin(), sigma.items.end(), [](const Assertion& a) {
                     return a.tag != Assertion::Tag::Indep;
                   });
  bool sigma_indep = sigma.only(Assertion::Tag::Indep);
  if ((dep_mode && !sigma_dep) || (!dep_mode && !sigma_indep))
    throw UsageError("combined inference unsupported (paper open problem)");

  bool derivable;
  std::vector<std::string> trace;
  std::optional<Team> counter;
  if (dep_mode) {
    AssertionSet norm(sigma.universe, [&] {
      std::vector<Assertion> v;
      for (const auto& a : sigma.items) v.push_back(a.normalized());
      return v;
    }());
    derivable = dep_entails(norm, goal);
    if (derivable)
      trace = dep_derivation(norm, goal);
    else
      counter = dep_countermodel(norm, goal).team;
  } else {
    IndepSaturation sat(sigma, cargs.cap);
    derivable = sat.derived(goal.lhs, goal.rhs);
    if (derivable)
      trace = sat.derivation(goal.lhs, goal.rhs);
    else
      counter = indep_countermodel(sigma, goal, cargs.cap);
  }

  if (derivable && countermodel_only)
    throw UsageError("goal is derivable; no countermodel exists");

  std::string written;
  if (counter) {
    std::string path = out_path.empty() ? "countermodel.csv" : out_path;
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    counter->to_csv(out);
    written = path;
  }

  if (cargs.json()) {
    nlohmann::ordered_json j;
    j["goal"] = format_assertion(sigma.universe, goal);
    j["derivable"] = derivable;
    if (!trace.empty()) j["derivation"] = trace;
    if (!written.empty()) j["countermodel"] = written;
    std::cout << j.dump(2) << "\n";
  } else if (derivable) {
    std::cout << "DERIVABLE\n";
    for (const auto& s : trace) std::cout << "  " << s << "\n";
  } else {
    std::cout << "NOT DERIVABLE\ncountermodel written to " << written << "\n";
  }
  return derivable ? kExitOk : kExitNegative;
}

int cmd_represent(const std::string& assertions_path, bool close,
                  const std::string& out_path, const std::string& dot_path,
                  const CommonArgs& cargs) {
  AssertionSet sigma = load_assertions(assertions_path);
  {
    std::vector<Assertion> norm;
    for (const auto& a : sigma.items) norm.push_back(a.normalized());
    sigma = AssertionSet(sigma.universe, std::move(norm));
  }
  if (close) sigma = armstrong_close(sigma, cargs.cap);
  ExplicitRankTable table = [&] {
    try {
      return realize_rank(sigma, cargs.cap);
    } catch (const NotClosedError& e) {
      std::cerr << e.what() << " (use --close to apply armstrong_close first)\n";
      std::exit(kExitNegative);
    }
  }();
  bool ok = roundtrip_verify(sigma, table);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    write_explicit_table(out, table);
  } else {
    write_explicit_table(std::cout, table);
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw UsageError("cannot write '" + dot_path + "'");
    poset_to_dot(out, build_poset(sigma, cargs.cap));
  }
  if (cargs.json()) {
    nlohmann::ordered_json j;
    j["roundtrip"] = ok;
    if (!out_path.empty()) j["table"] = out_path;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "roundtrip: " << (ok ? "OK" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diversity rank functions: evaluation, axiom checking, inference,"
               " countermodels and representation"};
  app.require_subcommand(1);

  ModelArgs margs;
  CommonArgs cargs;

  auto* rank = app.add_subcommand("rank", "evaluate ranks of subsets");
  std::vector<std::string> subsets;
  margs.attach(rank);
  cargs.attach(rank);
  rank->add_option("subsets", subsets, "subsets as comma-joined attributes ('' = empty)");

  auto* check = app.add_subcommand("check", "verify R1-R4, SUBM and interaction laws");
  margs.attach(check);
  cargs.attach(check);

  auto* atoms = app.add_subcommand("atoms", "list dependence/independence atoms of a model");
  margs.attach(atoms);
  cargs.attach(atoms);

  std::string assertions_path, goal_text, out_path, dot_path;
  bool close = false;

  auto* infer = app.add_subcommand("infer", "decide entailment of an assertion");
  infer->add_option("--assertions", assertions_path, "assertion file")->required();
  infer->add_option("--goal", goal_text, "goal assertion")->required();
  infer->add_option("--out", out_path, "countermodel output path");
  cargs.attach(infer);

  auto* counterex = app.add_subcommand("counterexample",
                                       "synthesize a countermodel for a non-entailed goal");
  counterex->add_option("--assertions", assertions_path, "assertion file")->required();
  counterex->add_option("--goal", goal_text, "goal assertion")->required();
  counterex->add_option("--out", out_path, "countermodel output path");
  cargs.attach(counterex);

  auto* represent = app.add_subcommand("represent",
                                       "realize an Armstrong-closed set as a rank table");
  represent->add_option("--assertions", assertions_path, "assertion file")->required();
  represent->add_flag("--close", close, "apply armstrong_close first");
  represent->add_option("--out", out_path, "table output path");
  represent->add_option("--dot", dot_path, "poset DOT output path");
  cargs.attach(represent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rank->parsed()) return cmd_rank(margs, cargs, subsets);
    if (check->parsed()) return cmd_check(margs, cargs);
    if (atoms->parsed()) return cmd_atoms(margs, cargs);
    if (infer->parsed()) return infer_common(assertions_path, goal_text, out_path, cargs, false);
    if (counterex->parsed())
      return infer_common(assertions_path, goal_text, out_path, cargs, true);
    if (represent->parsed())
      return cmd_represent(assertions_path, close, out_path, dot_path, cargs);
  } catch (const TableValidationError& e) {
    // an invalid table is a semantic negative for `check`, a usage error elsewhere
    if (check->parsed()) {
      auto line = [&](const char* name, const AxiomCheck& c) {
        std::cout << name << ": " << (c.pass ? "PASS" : "FAIL");
        if (c.witness) std::cout << " (" << c.witness->detail << ")";
        std::cout << "\n";
      };
      line("R1", e.report.r1);
      line("R2-left", e.report.r2_left);
      line("R2-right", e.report.r2_right);
      line("R3", e.report.r3);
      line("R4", e.report.r4);
      return kExitNegative;
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
