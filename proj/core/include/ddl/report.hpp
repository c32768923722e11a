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

// JSON and plain-text renderings of every report. JSON key order is
// lexicographic, so equal reports serialize to identical bytes.

#ifndef DDL_REPORT_HPP_
#define DDL_REPORT_HPP_

#include <nlohmann/json.hpp>
#include <string>

#include "ddl/casestudy.hpp"
#include "ddl/finder.hpp"
#include "ddl/relprops.hpp"
#include "ddl/schemas.hpp"

namespace ddl {

struct ReportOptions {
  // Wall-clock figures break byte-for-byte reproducibility, so they are
  // opt-in for everything except the find-model envelope.
  bool timing = false;
};

nlohmann::json toJson(const PreferenceModel& m);
nlohmann::json toJson(const SearchResult& r, const ReportOptions& opts = {});
nlohmann::json toJson(const ImplicationResult& r);
nlohmann::json toJson(const LatticeReport& r);
nlohmann::json toJson(const ForwardResult& r, const AxiomSchema& axiom);
nlohmann::json toJson(const ConverseResult& r);
nlohmann::json toJson(const SweepReport& r);
nlohmann::json toJson(const CollapseResult& r);
nlohmann::json toJson(const mere_addition::Finding& f,
                      const ReportOptions& opts = {});
nlohmann::json toJson(const mere_addition::GridReport& r,
                      const ReportOptions& opts = {});
nlohmann::json toJson(const mere_addition::EvidenceReport& r,
                      const ReportOptions& opts = {});

std::string renderText(const LatticeReport& r);
std::string renderText(const SweepReport& r);
std::string renderText(const CollapseResult& r);
// The grid as a property x rule table.
std::string renderText(const mere_addition::GridReport& r);
std::string renderText(const mere_addition::EvidenceReport& r);

}  // namespace ddl

#endif  // DDL_REPORT_HPP_
