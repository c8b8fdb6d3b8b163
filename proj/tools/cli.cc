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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "netstrata/netstrata.h"

namespace netstrata::cli {

namespace {

// Raised for anything that maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string model_path;
  std::string mode;
  std::string format = "human";
};

void AddCommon(CLI::App* cmd, Common& common, bool with_format = true) {
  cmd->add_option("model", common.model_path, "Model file (.mln.json)")
      ->required();
  cmd->add_option("--mode", common.mode,
                  "strict or relaxed (default: $NETSTRATA_MODE, then the "
                  "document's mode)")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  if (with_format) {
    cmd->add_option("--format", common.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
  }
}

std::optional<Mode> ResolveMode(const std::string& flag) {
  if (!flag.empty()) return ParseMode(flag);
  if (const char* env = std::getenv("NETSTRATA_MODE"); env && *env) {
    auto mode = ParseMode(env);
    if (!mode) {
      throw UsageError("NETSTRATA_MODE must be 'strict' or 'relaxed', got '" +
                       std::string(env) + "'");
    }
    return mode;
  }
  return std::nullopt;
}

struct Loaded {
  ModelDocument document;
  MultilayerNetwork network;
};

Loaded Load(const Common& common) {
  std::string text;
  try {
    text = ReadTextFile(common.model_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  ModelDocument doc;
  try {
    doc = ParseModel(text);
  } catch (const ParseError& e) {
    throw UsageError(common.model_path + ": " + e.what());
  }
  try {
    MultilayerNetwork network = BuildNetwork(doc, ResolveMode(common.mode));
    return {std::move(doc), std::move(network)};
  } catch (const BuildError& e) {
    throw UsageError(common.model_path + ": " + e.what());
  }
}

ReportFormat FormatOf(const Common& common) {
  return *ParseReportFormat(common.format);
}

void CheckLayer(const MultilayerNetwork& network, int layer) {
  if (layer < 1 || layer > network.layer_count()) {
    throw UsageError("layer " + std::to_string(layer) + " out of range 1.." +
                     std::to_string(network.layer_count()));
  }
}

// "name" (must be unique across layers) or "<layer>:name".
ComponentId ResolveNode(const MultilayerNetwork& network,
                        const std::string& spec) {
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    const std::string layer_text = spec.substr(0, colon);
    const bool numeric =
        !layer_text.empty() &&
        std::all_of(layer_text.begin(), layer_text.end(),
                    [](char c) { return c >= '0' && c <= '9'; }) &&
        layer_text.size() < 7;
    if (numeric) {
      ComponentId id{std::stoi(layer_text), spec.substr(colon + 1)};
      if (!network.Contains(id)) throw UsageError("unknown component '" + spec + "'");
      return id;
    }
  }
  std::vector<ComponentId> hits;
  for (const Layer& layer : network.layers()) {
    if (layer.Find(spec) != nullptr) hits.push_back({layer.index, spec});
  }
  if (hits.empty()) throw UsageError("unknown component '" + spec + "'");
  if (hits.size() > 1) {
    throw UsageError("component name '" + spec +
                     "' exists on several layers; qualify it as <layer>:" + spec);
  }
  return hits.front();
}

int CmdValidate(const Common& common, std::ostream& out) {
  const Loaded loaded = Load(common);
  const ValidationReport report = Validate(loaded.network);
  out << EmitReport(report, FormatOf(common));
  return report.passed ? kSuccess : kViolations;
}

int CmdDecompose(const Common& common, std::optional<int> layer,
                 std::ostream& out) {
  const Loaded loaded = Load(common);
  if (layer) CheckLayer(loaded.network, *layer);
  std::vector<Decomposition> parts;
  for (const Layer& l : loaded.network.layers()) {
    if (layer && l.index != *layer) continue;
    parts.push_back(DecomposeLayer(l));
  }
  out << EmitReport(std::span<const Decomposition>(parts), FormatOf(common));
  const bool uncovered = std::any_of(parts.begin(), parts.end(), [](const auto& d) {
    return !d.uncovered.empty();
  });
  return uncovered && loaded.network.mode() == Mode::kStrict ? kViolations
                                                             : kSuccess;
}

int CmdMetrics(const Common& common, std::optional<int> layer,
               std::ostream& out) {
  const Loaded loaded = Load(common);
  if (layer) CheckLayer(loaded.network, *layer);
  out << EmitReport(ComputeMetrics(loaded.network, layer), FormatOf(common));
  return kSuccess;
}

int CmdConform(const Common& common, const std::string& kind,
               std::ostream& out) {
  const Loaded loaded = Load(common);
  const ConformanceReport report =
      CheckReferenceConformance(loaded.network, *ParseReferenceKind(kind));
  const auto roles = RoleKindConstraints(loaded.network);
  out << EmitReport(report, roles, FormatOf(common));
  return report.conforms && roles.empty() ? kSuccess : kViolations;
}

struct SimulateOptions {
  std::vector<std::string> fail;
  std::string scenario;
  bool exhaustive = false;
  int threads = 0;
};

int CmdSimulate(const Common& common, const SimulateOptions& options,
                std::ostream& out) {
  const int chosen = (options.fail.empty() ? 0 : 1) +
                     (options.scenario.empty() ? 0 : 1) +
                     (options.exhaustive ? 1 : 0);
  if (chosen != 1) {
    throw UsageError(
        "simulate needs exactly one of --fail, --scenario or --exhaustive");
  }
  const Loaded loaded = Load(common);
  if (options.exhaustive) {
    const auto ranking = ExhaustiveSingleFaults(loaded.network, options.threads);
    out << EmitReport(std::span<const FaultImpact>(ranking), FormatOf(common));
    return kSuccess;
  }
  FaultScenario scenario;
  if (!options.scenario.empty()) {
    auto it = std::find_if(
        loaded.document.scenarios.begin(), loaded.document.scenarios.end(),
        [&](const FaultScenario& s) { return s.label == options.scenario; });
    if (it == loaded.document.scenarios.end()) {
      throw UsageError("no scenario labelled '" + options.scenario + "'");
    }
    scenario = *it;
  } else {
    scenario.label = "cli";
    for (const std::string& spec : options.fail) {
      scenario.failed_nodes.push_back(ResolveNode(loaded.network, spec));
    }
  }
  out << EmitReport(RunCascade(loaded.network, scenario), FormatOf(common));
  return kSuccess;
}

int CmdExport(const Common& common, const std::string& view,
              std::optional<int> layer, const std::string& output,
              std::ostream& out) {
  const Loaded loaded = Load(common);
  if (layer) CheckLayer(loaded.network, *layer);
  const std::string dot = ExportDot(loaded.network, *ParseDotView(view), layer);
  if (output.empty() || output == "-") {
    out << dot;
    return kSuccess;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + output + "'");
  file << dot;
  return kSuccess;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Model, validate and analyse layered computer networks",
               "netstrata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "netstrata 0.1.0");

  Common common;
  std::optional<int> layer;
  std::string kind = "basic";
  std::string view = "flatten";
  std::string output;
  SimulateOptions sim;

  auto* validate = app.add_subcommand("validate", "Check top-down consistency");
  AddCommon(validate, common);

  auto* decompose =
      app.add_subcommand("decompose", "List protocol sub-layers of each layer");
  AddCommon(decompose, common);
  decompose->add_option("--layer", layer, "Layer index (default: all)");

  auto* metrics = app.add_subcommand("metrics", "Per-layer structural metrics");
  AddCommon(metrics, common);
  metrics->add_option("--layer", layer, "Layer index (default: all)");

  auto* conform =
      app.add_subcommand("conform", "Check the layer stack against a reference");
  AddCommon(conform, common);
  conform->add_option("--kind", kind, "basic or extended")
      ->check(CLI::IsMember({"basic", "extended"}));

  auto* simulate = app.add_subcommand("simulate", "Fault-injection cascade");
  AddCommon(simulate, common);
  simulate->add_option("--fail", sim.fail,
                       "Components to fail: name or <layer>:name")
      ->delimiter(',');
  simulate->add_option("--scenario", sim.scenario, "Scenario label from the model");
  simulate->add_flag("--exhaustive", sim.exhaustive,
                     "Rank every single layer-1 failure");
  simulate->add_option("--threads", sim.threads,
                       "Worker threads for --exhaustive (0 = auto)");

  auto* exporter = app.add_subcommand("export", "Write a Graphviz DOT view");
  AddCommon(exporter, common, /*with_format=*/false);
  exporter->add_option("--view", view, "flatten, layers or sublayers")
      ->check(CLI::IsMember({"flatten", "layers", "sublayers"}));
  exporter->add_option("--layer", layer, "Layer index for layers/sublayers views");
  exporter->add_option("-o,--output", output, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*validate) return CmdValidate(common, out);
    if (*decompose) return CmdDecompose(common, layer, out);
    if (*metrics) return CmdMetrics(common, layer, out);
    if (*conform) return CmdConform(common, kind, out);
    if (*simulate) return CmdSimulate(common, sim, out);
    if (*exporter) return CmdExport(common, view, layer, output, out);
  } catch (const std::exception& e) {
    err << "netstrata: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace netstrata::cli
