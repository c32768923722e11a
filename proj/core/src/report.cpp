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

#include "ddl/report.hpp"

#include <iomanip>
#include <sstream>

namespace ddl {

using nlohmann::json;

namespace {

json worldList(WorldSet s) {
  json out = json::array();
  for (int w : s) out.push_back(w);
  return out;
}

json frameJson(const Relation& r) { return toJson(PreferenceModel(r)); }

json propertyNames(PropertySet props) { return props.names(); }

std::string_view kindName(RowKind k) {
  switch (k) {
    case RowKind::kCorrespondence:
      return "correspondence";
    case RowKind::kDropped:
      return "dropped";
    case RowKind::kUnconditional:
      return "unconditional";
    case RowKind::kFails:
      return "fails";
    case RowKind::kNoAxiom:
      return "no-axiom";
  }
  return "?";
}

std::string_view kindName(LatticeEntry::Kind k) {
  switch (k) {
    case LatticeEntry::Kind::kArrow:
      return "arrow";
    case LatticeEntry::Kind::kDerived:
      return "derived";
    case LatticeEntry::Kind::kIndependent:
      return "independent";
  }
  return "?";
}

std::string verdict(const ForwardResult& r) {
  if (r.timedOut) return "timeout";
  return r.confirmed ? "confirmed" : "counterexample";
}

std::string verdict(const mere_addition::Finding& f) {
  switch (f.result.status) {
    case SearchStatus::kFound:
      return "SAT";
    case SearchStatus::kExhausted:
      return "UNSAT<=" + std::to_string(f.result.bound);
    case SearchStatus::kTimedOut:
      return "timeout";
  }
  return "?";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

json toJson(const PreferenceModel& m) {
  json rel = json::array();
  for (auto [i, j] : m.betterness().pairs()) rel.push_back({i, j});
  json val = json::object();
  for (const auto& [atom, set] : m.valuation()) val[atom] = worldList(set);
  return {{"worlds", m.size()},
          {"relation", rel},
          {"valuation", val},
          {"text", serializeModel(m)}};
}

json toJson(const SearchResult& r, const ReportOptions& opts) {
  json sizes = json::array();
  for (const SizeStats& s : r.sizes) {
    sizes.push_back({{"n", s.n}, {"frames", s.frames}, {"models", s.models}});
  }
  json out = {{"status", statusName(r.status)},
              {"bound", r.bound},
              {"frames_checked", r.framesChecked()},
              {"models_checked", r.modelsChecked()},
              {"sizes", sizes},
              {"witness", r.model ? toJson(*r.model) : json(nullptr)}};
  if (opts.timing) out["elapsed_ms"] = r.elapsedMs;
  return out;
}

json toJson(const ImplicationResult& r) {
  return {{"confirmed", r.confirmed},
          {"relations_checked", r.relationsChecked},
          {"witness", r.witness ? frameJson(*r.witness) : json(nullptr)}};
}

json toJson(const LatticeReport& r) {
  json entries = json::array();
  for (const LatticeEntry& e : r.entries) {
    json entry = toJson(e.result);
    entry["from"] = propertyName(e.from);
    entry["to"] = propertyName(e.to);
    entry["kind"] = kindName(e.kind);
    entry["as_expected"] = e.asExpected();
    entries.push_back(std::move(entry));
  }
  return {{"max_n", r.maxN},
          {"entries", entries},
          {"interval_from_reflexive_ferrers",
           toJson(r.intervalFromReflexiveFerrers)},
          {"reflexive_ferrers_from_interval",
           toJson(r.reflexiveFerrersFromInterval)},
          {"total_from_reflexive_ferrers", toJson(r.totalFromReflexiveFerrers)},
          {"all_as_expected", r.allAsExpected()}};
}

json toJson(const ForwardResult& r, const AxiomSchema& axiom) {
  json out = {{"axiom", axiom.name},
              {"schema", render(axiom.formula)},
              {"verdict", verdict(r)},
              {"bound", r.bound},
              {"frames_checked", r.framesChecked}};
  if (r.counterexample) {
    const FrameCounterexample& c = *r.counterexample;
    json assignment = json::object();
    for (const auto& [name, set] : c.assignment) {
      assignment[name] = worldList(set);
    }
    // The instance reads the metavariables as atoms so that check-model can
    // re-evaluate it against the model text.
    out["counterexample"] = {
        {"frame", frameJson(c.frame)},
        {"assignment", assignment},
        {"model", toJson(c.asModel())},
        {"instance", render(metavarsToAtoms(axiom.formula))}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json toJson(const ConverseResult& r) {
  std::string v = r.timedOut ? "timeout"
                  : r.found  ? "witness"
                             : "none_up_to_bound";
  return {{"verdict", v},
          {"level", r.level == ConverseLevel::kFrame ? "frame" : "model"},
          {"bound", r.bound},
          {"checked", r.checked},
          {"witness", r.witness ? toJson(*r.witness) : json(nullptr)}};
}

json toJson(const SweepReport& r) {
  json rows = json::array();
  for (const SweepRow& row : r.rows) {
    json j;
    j["kind"] = kindName(row.kind);
    j["label"] = row.label;
    j["properties"] = propertyNames(row.frames.properties);
    j["background"] = row.frames.background;
    j["as_expected"] = row.asExpected();
    if (row.kind == RowKind::kNoAxiom) {
      j["added_validities"] = row.addedValidities;
      j["frames_checked"] = row.result.framesChecked;
      j["bound"] = row.result.bound;
    } else {
      j["check"] = toJson(row.result, findAxiom(row.axiom));
    }
    rows.push_back(std::move(j));
  }
  return {{"rule", ruleName(r.rule)},
          {"max_n", r.maxN},
          {"rows", rows},
          {"all_as_expected", r.allAsExpected()}};
}

json toJson(const CollapseResult& r) {
  json out = {{"verdict", r.timedOut    ? "timeout"
                          : r.confirmed ? "confirmed"
                                        : "counterexample"},
              {"bound", r.bound},
              {"frames_checked", r.framesChecked},
              {"pairs_checked", r.pairsChecked}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out["counterexample"] = {{"frame", frameJson(c.frame)},
                             {"antecedent", worldList(c.antecedent)},
                             {"consequent", worldList(c.consequent)},
                             {"opt", c.opt},
                             {"max", c.max},
                             {"lewis", c.lewis}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

json toJson(const mere_addition::Finding& f, const ReportOptions& opts) {
  json eqs = json::array();
  for (int i : f.equations) eqs.push_back("eq" + std::to_string(i));
  json out = {{"label", f.label},
              {"equations", eqs},
              {"properties", propertyNames(f.properties)},
              {"excluded", propertyNames(f.excluded)},
              {"rule", ruleName(f.rule)},
              {"search", toJson(f.result, opts)},
              {"verified", f.verified},
              {"as_expected", f.asExpected()}};
  if (f.expectSat) {
    out["expected"] = *f.expectSat ? "sat" : "unsat_up_to_bound";
  } else {
    out["expected"] = nullptr;
  }
  if (f.chain) {
    out["strict_chain"] =
        f.chain->cyclic ? json("cyclic") : json(f.chain->length);
  } else {
    out["strict_chain"] = nullptr;
  }
  return out;
}

json toJson(const mere_addition::GridReport& r, const ReportOptions& opts) {
  json cells = json::array();
  bool all = true;
  for (const auto& f : r.cells) {
    cells.push_back(toJson(f, opts));
    all = all && f.asExpected();
  }
  return {{"max_n", r.maxN}, {"cells", cells}, {"all_as_expected", all}};
}

json toJson(const mere_addition::EvidenceReport& r, const ReportOptions& opts) {
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(toJson(f, opts));
  return {{"title", r.title},
          {"max_n", r.maxN},
          {"findings", findings},
          {"note", r.note},
          {"all_as_expected", r.allAsExpected()}};
}

std::string renderText(const LatticeReport& r) {
  std::ostringstream out;
  out << "lattice of relation properties, n <= " << r.maxN << "\n";
  for (const LatticeEntry& e : r.entries) {
    if (e.kind == LatticeEntry::Kind::kIndependent) continue;
    out << "  " << pad(std::string(propertyName(e.from)), 18) << " => "
        << pad(std::string(propertyName(e.to)), 18)
        << (e.result.confirmed ? "confirmed" : "FAILED") << " ("
        << kindName(e.kind) << ")\n";
  }
  int independent = 0, witnessed = 0;
  for (const LatticeEntry& e : r.entries) {
    if (e.kind != LatticeEntry::Kind::kIndependent) continue;
    ++independent;
    if (e.asExpected()) ++witnessed;
  }
  out << "  non-implications witnessed: " << witnessed << "/" << independent
      << "\n";
  auto line = [&](const char* label, const ImplicationResult& res) {
    out << "  " << pad(label, 40) << (res.confirmed ? "confirmed" : "FAILED")
        << "\n";
  };
  line("reflexive + ferrers => interval-order", r.intervalFromReflexiveFerrers);
  line("interval-order => reflexive + ferrers", r.reflexiveFerrersFromInterval);
  line("reflexive + ferrers => total", r.totalFromReflexiveFerrers);
  out << (r.allAsExpected() ? "all as expected" : "MISMATCH") << "\n";
  return out.str();
}

std::string renderText(const SweepReport& r) {
  std::ostringstream out;
  out << "correspondence table, rule " << ruleName(r.rule)
      << ", n <= " << r.maxN << "\n";
  for (const SweepRow& row : r.rows) {
    std::string cls = "{";
    const auto names = row.frames.properties.names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      cls += (i ? "," : "") + names[i];
    }
    cls += "}";
    for (const std::string& b : row.frames.background) cls += " +" + b;
    out << "  " << pad(std::string(kindName(row.kind)), 15)
        << pad(row.label, 42) << pad(cls, 46);
    if (row.kind == RowKind::kNoAxiom) {
      out << "adds:";
      if (row.addedValidities.empty()) out << " nothing";
      for (const auto& a : row.addedValidities) out << " " << a;
    } else {
      out << pad(row.axiom, 7) << verdict(row.result);
    }
    out << (row.asExpected() ? "" : "  MISMATCH") << "\n";
  }
  out << (r.allAsExpected() ? "all as expected" : "MISMATCH") << "\n";
  return out.str();
}

std::string renderText(const CollapseResult& r) {
  std::ostringstream out;
  out << "opt, max and lewis conditionals, n <= " << r.bound << ": ";
  if (r.timedOut) {
    out << "timeout\n";
  } else if (r.confirmed) {
    out << "agree on " << r.framesChecked << " frames (" << r.pairsChecked
        << " set pairs)\n";
  } else {
    const auto& c = *r.counterexample;
    out << "differ on frame [" << toString(c.frame) << "] for O("
        << toString(c.consequent) << " / " << toString(c.antecedent)
        << "): opt=" << c.opt << " max=" << c.max << " lewis=" << c.lewis
        << "\n";
  }
  return out.str();
}

std::string renderText(const mere_addition::GridReport& r) {
  std::ostringstream out;
  out << "mere addition, eq0..eq4, n <= " << r.maxN << "\n";
  out << "  " << pad("property", 26);
  for (EvalRule rule : kAllRules) out << pad(std::string(ruleName(rule)), 12);
  out << "\n";
  bool all = true;
  for (std::size_t i = 0; i < r.cells.size(); i += kAllRules.size()) {
    out << "  " << pad(r.cells[i].label, 26);
    for (std::size_t c = 0; c < kAllRules.size(); ++c) {
      const auto& f = r.cells[i + c];
      all = all && f.asExpected();
      out << pad(verdict(f) + (f.asExpected() ? "" : "!"), 12);
    }
    out << "\n";
  }
  out << (all ? "all as expected" : "MISMATCH (marked !)") << "\n";
  return out.str();
}

std::string renderText(const mere_addition::EvidenceReport& r) {
  std::ostringstream out;
  out << r.title << ", n <= " << r.maxN << "\n";
  for (const auto& f : r.findings) {
    out << "  " << pad(f.label, 36) << pad(verdict(f), 12);
    if (f.result.model) {
      out << (f.verified ? "witness verified" : "witness NOT verified");
      if (f.chain && f.chain->cyclic) out << ", strict cycle";
    }
    out << (f.asExpected() ? "" : "  MISMATCH") << "\n";
  }
  out << "  " << r.note << "\n";
  out << (r.allAsExpected() ? "all as expected" : "MISMATCH") << "\n";
  return out.str();
}

}  // namespace ddl
