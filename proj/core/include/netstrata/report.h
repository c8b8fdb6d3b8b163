// Copyright 2026 The Netstrata Authors
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

#ifndef NETSTRATA_REPORT_H_
#define NETSTRATA_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "netstrata/analysis.h"
#include "netstrata/consistency.h"
#include "netstrata/fault_sim.h"
#include "netstrata/multiplex.h"
#include "netstrata/reference_model.h"

namespace netstrata {

// human:   line oriented, one finding per line
// machine: a JSON object with "report_version" and "report" keys; the
//          layout of each report kind is described in
//          schemas/report-v1.schema.json
enum class ReportFormat { kHuman, kMachine };

inline constexpr std::string_view kReportSchemaVersion = "1";

std::optional<ReportFormat> ParseReportFormat(std::string_view text);

std::string EmitReport(const ValidationReport& report, ReportFormat format);
std::string EmitReport(const ConformanceReport& report,
                       std::span<const Violation> role_violations,
                       ReportFormat format);
std::string EmitReport(const MetricsBundle& bundle, ReportFormat format);
std::string EmitReport(const CascadeResult& result, ReportFormat format);
std::string EmitReport(std::span<const Decomposition> decompositions,
                       ReportFormat format);
std::string EmitReport(std::span<const FaultImpact> ranking,
                       ReportFormat format);

}  // namespace netstrata

#endif  // NETSTRATA_REPORT_H_
