// Copyright 2026 The ddlcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ddl/casestudy.hpp"
#include "ddl/errors.hpp"
#include "ddl/finder.hpp"
#include "ddl/formula.hpp"
#include "ddl/model.hpp"
#include "ddl/relprops.hpp"
#include "ddl/report.hpp"
#include "ddl/schemas.hpp"
#include "ddl/semantics.hpp"

namespace ddl::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string rule = "max";
  std::string props;
  std::string exclude;
  std::optional<int> maxN;
  int minN = 1;
  bool json = false;
  bool timing = false;
  bool isoReject = false;
  bool strictAtoms = false;
  double timeoutSeconds = 60;
  unsigned workers = 0;
  std::string modelPath;
  std::vector<std::string> formulas;

  // find-model
  std::string atoms;
  bool refute = false;

  // correspond
  bool table = false;
  bool list = false;
  std::string axiom;
  std::string schema;
  std::string background;
  std::string converse;
  bool modelLevel = false;
  bool force = false;

  // paradox
  std::string part = "grid";

  // props
  std::string premises;
  std::string conclusion;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

SearchOptions searchOptions(const Flags& f) {
  if (f.timeoutSeconds < 0) throw UsageError("--timeout must be >= 0");
  SearchOptions o;
  o.isoReject = f.isoReject;
  o.workers =
      f.workers ? f.workers : std::max(1u, std::thread::hardware_concurrency());
  o.timeout = std::chrono::milliseconds(
      static_cast<std::int64_t>(std::llround(f.timeoutSeconds * 1000)));
  return o;
}

void checkRange(int maxN, int lo, int hi) {
  if (maxN < lo || maxN > hi) {
    throw UsageError("--max-n must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
}

// Frame validity costs 2^(n * metavars) assignments per frame.
void checkSchemaBound(const Formula& schema, int maxN, bool force) {
  const int cap = metavars(schema).size() <= 2 ? 4 : 3;
  checkRange(maxN, 1, force ? kMaxSearchWorlds : cap);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string joined(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s;
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

AtomPolicy atomPolicy(const Flags& f) {
  return f.strictAtoms ? AtomPolicy::kStrict : AtomPolicy::kEmpty;
}

int cmdEval(const Flags& f, std::ostream& out) {
  const PreferenceModel m = parseModel(readFile(f.modelPath));
  const EvalRule rule = parseRule(f.rule);
  const Formula formula = parse(f.formulas.front());
  const WorldSet truth = truthSet(formula, m, {}, rule, atomPolicy(f));
  const bool valid = truth == m.universe();
  if (f.json) {
    json worlds = json::array();
    for (int w = 0; w < m.size(); ++w) {
      worlds.push_back({{"world", w}, {"value", truth.contains(w)}});
    }
    json truthList = json::array();
    for (int w : truth) truthList.push_back(w);
    emit(out, {{"formula", render(formula)},
               {"rule", ruleName(rule)},
               {"truth_set", truthList},
               {"valid", valid},
               {"worlds", worlds}});
  } else {
    out << render(formula) << " under " << ruleName(rule) << "\n";
    for (int w = 0; w < m.size(); ++w) {
      out << "  world " << w << ": " << (truth.contains(w) ? "true" : "false")
          << "\n";
    }
    out << "truth set " << toString(truth) << ", "
        << (valid ? "valid" : "not valid") << " in the model\n";
  }
  return valid ? kExitOk : kExitRefuted;
}

int cmdCheckModel(const Flags& f, std::ostream& out) {
  const PreferenceModel m = parseModel(readFile(f.modelPath));
  const EvalRule rule = parseRule(f.rule);
  const PropertySet props = PropertySet::parse(f.props);
  bool ok = true;
  json formulas = json::array();
  json properties = json::object();
  std::ostringstream text;
  text << "model with " << m.size() << " worlds parsed\n";
  for (const std::string& src : f.formulas) {
    const Formula formula = parse(src);
    const bool valid = validInModel(formula, m, rule, atomPolicy(f));
    ok = ok && valid;
    formulas.push_back({{"formula", render(formula)}, {"valid", valid}});
    text << "  " << (valid ? "valid    " : "INVALID  ") << render(formula)
         << "\n";
  }
  for (RelationProperty p : props.members()) {
    const bool holds = checkProperty(p, m);
    ok = ok && holds;
    properties[std::string(propertyName(p))] = holds;
    text << "  " << (holds ? "holds    " : "FAILS    ") << propertyName(p)
         << "\n";
  }
  if (f.json) {
    emit(out, {{"rule", ruleName(rule)},
               {"worlds", m.size()},
               {"formulas", formulas},
               {"properties", properties},
               {"ok", ok}});
  } else {
    out << text.str() << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitRefuted;
}

int statusExit(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return kExitOk;
    case SearchStatus::kExhausted:
      return kExitRefuted;
    case SearchStatus::kTimedOut:
      return kExitTimeout;
  }
  return kExitUsage;
}

int cmdFindModel(const Flags& f, std::ostream& out) {
  SearchSpec spec;
  spec.minN = f.minN;
  spec.maxN = f.maxN.value_or(4);
  checkRange(spec.maxN, 1, kMaxSearchWorlds);
  spec.properties = PropertySet::parse(f.props);
  spec.excluded = PropertySet::parse(f.exclude);
  spec.rule = parseRule(f.rule);
  spec.mode = f.refute ? SearchMode::kRefute : SearchMode::kSatisfy;
  spec.atoms = splitList(f.atoms);
  for (const std::string& src : f.formulas) spec.targets.push_back(parse(src));
  validateSpec(spec);

  const SearchResult r = findSatisfyingModel(spec, searchOptions(f));
  if (f.json) {
    json formulas = json::array();
    for (const Formula& t : spec.targets) formulas.push_back(render(t));
    emit(out, {{"command", "find-model"},
               {"rule", ruleName(spec.rule)},
               {"mode", f.refute ? "refute" : "satisfy"},
               {"formulas", formulas},
               {"properties", spec.properties.names()},
               {"excluded", spec.excluded.names()},
               {"result", toJson(r, ReportOptions{.timing = true})}});
  } else {
    switch (r.status) {
      case SearchStatus::kFound:
        out << (f.refute ? "countermodel" : "model") << " with "
            << r.model->size() << " worlds\n"
            << serializeModel(*r.model);
        break;
      case SearchStatus::kExhausted:
        out << "none up to " << r.bound << " worlds (" << r.framesChecked()
            << " frames, " << r.modelsChecked() << " models)\n";
        break;
      case SearchStatus::kTimedOut:
        out << "timeout\n";
        break;
    }
  }
  return statusExit(r.status);
}

AxiomSchema selectSchema(const Flags& f) {
  if (!f.schema.empty()) return AxiomSchema{"custom", parse(f.schema)};
  if (f.axiom.empty()) throw UsageError("need --table, --axiom or --schema");
  if (f.axiom == "PrefTrans") return preferenceTransitivity();
  return findAxiom(f.axiom);
}

std::string assignmentText(const Assignment& a) {
  std::string s;
  for (const auto& [name, set] : a) {
    s += (s.empty() ? "" : " ") + ("?" + name) + "=" + toString(set);
  }
  return s;
}

int cmdCorrespond(const Flags& f, std::ostream& out) {
  const EvalRule rule = parseRule(f.rule);
  const SearchOptions options = searchOptions(f);
  const int maxN = f.maxN.value_or(3);

  if (f.list) {
    json list = json::array();
    for (const AxiomSchema& a : axiomRegistry()) {
      list.push_back({{"name", a.name}, {"schema", render(a.formula)}});
      if (!f.json) out << a.name << "\t" << render(a.formula) << "\n";
    }
    const AxiomSchema pt = preferenceTransitivity();
    list.push_back({{"name", pt.name}, {"schema", render(pt.formula)}});
    if (f.json) {
      emit(out, list);
    } else {
      out << pt.name << "\t" << render(pt.formula) << "\n";
    }
    return kExitOk;
  }

  if (f.table) {
    checkRange(maxN, 1, f.force ? 4 : 3);
    const SweepReport report = tableSweep(rule, maxN, options);
    if (f.json) {
      emit(out, toJson(report));
    } else {
      out << renderText(report);
    }
    for (const SweepRow& row : report.rows) {
      if (row.result.timedOut) return kExitTimeout;
    }
    return report.allAsExpected() ? kExitOk : kExitRefuted;
  }

  const AxiomSchema axiom = selectSchema(f);
  checkSchemaBound(axiom.formula, maxN, f.force);

  if (!f.converse.empty()) {
    const RelationProperty property = parseProperty(f.converse);
    const ConverseLevel level =
        f.modelLevel ? ConverseLevel::kModel : ConverseLevel::kFrame;
    const ConverseResult r =
        converseSearch(axiom, property, rule, maxN, level, options);
    if (f.json) {
      emit(out, {{"rule", ruleName(rule)},
                 {"axiom", axiom.name},
                 {"schema", render(axiom.formula)},
                 {"property", propertyName(property)},
                 {"result", toJson(r)}});
    } else {
      out << axiom.name << " without " << propertyName(property) << ", rule "
          << ruleName(rule) << ", n <= " << maxN << " ("
          << (f.modelLevel ? "model" : "frame") << " level): ";
      if (r.timedOut) {
        out << "timeout\n";
      } else if (r.found) {
        out << "witness\n" << serializeModel(*r.witness);
      } else {
        out << "none up to bound (" << r.checked << " checked)\n";
      }
    }
    if (r.timedOut) return kExitTimeout;
    return r.found ? kExitOk : kExitRefuted;
  }

  const FrameClass frames{PropertySet::parse(f.props), splitList(f.background)};
  for (const std::string& b : frames.background) findAxiom(b);
  const ForwardResult r = forwardCheck(frames, axiom, rule, maxN, options);
  if (f.json) {
    emit(out, {{"rule", ruleName(rule)},
               {"properties", frames.properties.names()},
               {"background", frames.background},
               {"check", toJson(r, axiom)}});
  } else {
    out << axiom.name << " on {" << joined(frames.properties.names()) << "}";
    for (const std::string& b : frames.background) out << " +" << b;
    out << ", rule " << ruleName(rule) << ", n <= " << maxN << ": ";
    if (r.timedOut) {
      out << "timeout\n";
    } else if (r.confirmed) {
      out << "confirmed (" << r.framesChecked << " frames)\n";
    } else {
      const FrameCounterexample& c = *r.counterexample;
      out << "counterexample\n  assignment " << assignmentText(c.assignment)
          << "\n  falsified instance " << render(metavarsToAtoms(axiom.formula))
          << "\n"
          << serializeModel(c.asModel());
    }
  }
  if (r.timedOut) return kExitTimeout;
  return r.confirmed ? kExitOk : kExitRefuted;
}

int cmdCollapse(const Flags& f, std::ostream& out) {
  const int maxN = f.maxN.value_or(4);
  checkRange(maxN, 1, kMaxSearchWorlds);
  const PropertySet props = PropertySet::parse(
      f.props.empty() ? "reflexive,total,transitive" : f.props);
  const CollapseResult r = collapseCheck(maxN, props, searchOptions(f));
  if (f.json) {
    emit(out, {{"properties", props.names()}, {"result", toJson(r)}});
  } else {
    out << "frames {" << joined(props.names()) << "}\n" << renderText(r);
  }
  if (r.timedOut) return kExitTimeout;
  return r.confirmed ? kExitOk : kExitRefuted;
}

bool anyTimeout(const std::vector<mere_addition::Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const auto& x) {
    return x.result.status == SearchStatus::kTimedOut;
  });
}

int cmdParadox(const Flags& f, std::ostream& out) {
  namespace ma = mere_addition;
  const int maxN = f.maxN.value_or(4);
  checkRange(maxN, 1, kMaxSearchWorlds);
  const SearchOptions options = searchOptions(f);
  const ReportOptions ropts{.timing = f.timing};
  const bool all = f.part == "all";

  json j = json::object();
  bool expected = true;
  bool timedOut = false;
  if (all || f.part == "grid") {
    const ma::GridReport grid = ma::runGrid(maxN, options);
    for (const auto& cell : grid.cells)
      expected = expected && cell.asExpected();
    timedOut = timedOut || anyTimeout(grid.cells);
    j["grid"] = toJson(grid, ropts);
    if (!f.json) out << renderText(grid);
  }
  auto evidence = [&](const char* key, const ma::EvidenceReport& r) {
    expected = expected && r.allAsExpected();
    timedOut = timedOut || anyTimeout(r.findings);
    j[key] = toJson(r, ropts);
    if (!f.json) out << renderText(r);
  };
  if (all || f.part == "cycle") {
    evidence("cycle", ma::cycleEvidence(maxN, options));
  }
  if (all || f.part == "interval") {
    evidence("interval", ma::intervalEvidence(maxN, options));
  }
  if (all || f.part == "fmp") evidence("fmp", ma::fmpEvidence(maxN, options));
  if (f.json) emit(out, j);
  if (timedOut) return kExitTimeout;
  return expected ? kExitOk : kExitRefuted;
}

int cmdLattice(const Flags& f, std::ostream& out) {
  const int maxN = f.maxN.value_or(4);
  checkRange(maxN, 1, kMaxSearchWorlds);
  const LatticeReport r = checkLattice(maxN);
  if (f.json) {
    emit(out, toJson(r));
  } else {
    out << renderText(r);
  }
  return r.allAsExpected() ? kExitOk : kExitRefuted;
}

int cmdProps(const Flags& f, std::ostream& out) {
  if (!f.modelPath.empty()) {
    const PreferenceModel m = parseModel(readFile(f.modelPath));
    json j = json::object();
    for (RelationProperty p : allProperties()) {
      const bool holds = checkProperty(p, m);
      j[std::string(propertyName(p))] = holds;
      if (!f.json) {
        out << (holds ? "yes  " : "no   ") << propertyName(p) << "\n";
      }
    }
    if (f.json) emit(out, j);
    return kExitOk;
  }
  if (f.conclusion.empty()) {
    throw UsageError("need --model, or --premises with --conclusion");
  }
  const int maxN = f.maxN.value_or(4);
  checkRange(maxN, 1, kMaxSearchWorlds);
  const PropertySet premises = PropertySet::parse(f.premises);
  const RelationProperty conclusion = parseProperty(f.conclusion);
  const ImplicationResult r =
      propertyImplicationUpTo(premises, conclusion, maxN);
  if (f.json) {
    json j = toJson(r);
    j["premises"] = premises.names();
    j["conclusion"] = propertyName(conclusion);
    j["max_n"] = maxN;
    emit(out, j);
  } else {
    out << "{" << joined(premises.names()) << "} => "
        << propertyName(conclusion) << ", n <= " << maxN << ": ";
    if (r.confirmed) {
      out << "confirmed (" << r.relationsChecked << " relations)\n";
    } else {
      out << "witness\n" << serializeModel(PreferenceModel(*r.witness));
    }
  }
  return r.confirmed ? kExitOk : kExitRefuted;
}

void addRule(CLI::App* sub, Flags& f) {
  sub->add_option("--rule", f.rule, "Truth condition for O(../..)")
      ->check(CLI::IsMember({"opt", "max", "lewis"}))
      ->capture_default_str();
}

void addJson(CLI::App* sub, Flags& f) {
  sub->add_flag("--json", f.json, "Write a JSON report");
}

void addSearch(CLI::App* sub, Flags& f) {
  sub->add_flag("--iso-reject", f.isoReject,
                "Visit one frame per isomorphism class");
  sub->add_option("--timeout", f.timeoutSeconds,
                  "Seconds per search; 0 disables")
      ->capture_default_str();
  sub->add_option("--workers", f.workers,
                  "Worker threads (default: hardware concurrency)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite-model checks for preference-based dyadic deontic logic",
               "ddlcheck"};
  app.require_subcommand(1);
  Flags f;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula in a model");
  eval->add_option("--model", f.modelPath, "Model file")->required();
  eval->add_option("formula", f.formulas, "Formula")->required()->expected(1);
  addRule(eval, f);
  eval->add_flag("--strict-atoms", f.strictAtoms,
                 "Reject atoms the model does not value");
  addJson(eval, f);

  auto* check = app.add_subcommand(
      "check-model", "Validate a model file, formulas and properties");
  check->add_option("--model", f.modelPath, "Model file")->required();
  check->add_option("formulas", f.formulas, "Formulas that must be valid");
  check->add_option("--props", f.props, "Properties the relation must have");
  addRule(check, f);
  check->add_flag("--strict-atoms", f.strictAtoms,
                  "Reject atoms the model does not value");
  addJson(check, f);

  auto* find = app.add_subcommand(
      "find-model", "Search for the smallest model of a set of formulas");
  find->add_option("formulas", f.formulas, "Target formulas")->required();
  find->add_option("--props", f.props, "Required properties");
  find->add_option("--exclude", f.exclude, "Properties the relation lacks");
  find->add_option("--atoms", f.atoms, "Comma list of atoms to value");
  find->add_option("--max-n", f.maxN, "Largest model size (default 4)");
  find->add_option("--min-n", f.minN, "Smallest model size")
      ->capture_default_str();
  find->add_flag("--refute", f.refute,
                 "Look for a model where some formula fails");
  addRule(find, f);
  addSearch(find, f);
  addJson(find, f);

  auto* corr = app.add_subcommand(
      "correspond", "Check property/axiom correspondences on bounded frames");
  corr->add_flag("--table", f.table, "Run the whole table for --rule");
  corr->add_flag("--list", f.list, "List the axiom registry");
  corr->add_option("--axiom", f.axiom, "Registry axiom, or PrefTrans");
  corr->add_option("--schema", f.schema, "Custom schema over ?-variables");
  corr->add_option("--props", f.props, "Frame properties");
  corr->add_option("--background", f.background,
                   "Axioms every frame must validate");
  corr->add_option("--converse", f.converse,
                   "Search for frames validating the axiom without this "
                   "property");
  corr->add_flag("--model-level", f.modelLevel,
                 "Converse search over single models instead of frames");
  corr->add_option("--max-n", f.maxN, "Largest frame size (default 3)");
  corr->add_flag("--force", f.force,
                 "Allow bounds above the per-schema default cap");
  addRule(corr, f);
  addSearch(corr, f);
  addJson(corr, f);

  auto* collapse = app.add_subcommand(
      "collapse", "Compare the opt, max and lewis conditionals on frames");
  collapse->add_option("--props", f.props,
                       "Frame properties (default reflexive,total,transitive)");
  collapse->add_option("--max-n", f.maxN, "Largest frame size (default 4)");
  addSearch(collapse, f);
  addJson(collapse, f);

  auto* paradox = app.add_subcommand("paradox", "The mere addition scenario");
  paradox->add_option("--part", f.part, "Which report")
      ->check(CLI::IsMember({"grid", "cycle", "interval", "fmp", "all"}))
      ->capture_default_str();
  paradox->add_option("--max-n", f.maxN, "Largest model size (default 4)");
  paradox->add_flag("--timing", f.timing, "Include wall-clock figures");
  addSearch(paradox, f);
  addJson(paradox, f);

  auto* lattice = app.add_subcommand(
      "lattice", "Check the lattice of weakenings of transitivity");
  lattice->add_option("--max-n", f.maxN, "Largest relation size (default 4)");
  addJson(lattice, f);

  auto* props = app.add_subcommand(
      "props", "Relation properties of a model, or implications between them");
  props->add_option("--model", f.modelPath, "Model file");
  props->add_option("--premises", f.premises, "Comma list of properties");
  props->add_option("--conclusion", f.conclusion, "Property to derive");
  props->add_option("--max-n", f.maxN, "Largest relation size (default 4)");
  addJson(props, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmdEval(f, out);
    if (check->parsed()) return cmdCheckModel(f, out);
    if (find->parsed()) return cmdFindModel(f, out);
    if (corr->parsed()) return cmdCorrespond(f, out);
    if (collapse->parsed()) return cmdCollapse(f, out);
    if (paradox->parsed()) return cmdParadox(f, out);
    if (lattice->parsed()) return cmdLattice(f, out);
    if (props->parsed()) return cmdProps(f, out);
  } catch (const ParseError& e) {
    err << "error: formula: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelFormatError& e) {
    err << "error: model: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ddl::cli
