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

#include "netstrata/consistency.h"

#include <algorithm>

#include "graph_algorithms.h"
#include "netstrata/multiplex.h"

namespace netstrata {

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnsupportedNode: return "unsupported-node";
    case ViolationKind::kCardinality: return "cardinality";
    case ViolationKind::kPathInconsistency: return "path-inconsistency";
    case ViolationKind::kUncoveredLink: return "uncovered-link";
    case ViolationKind::kRoleKindMismatch: return "role-kind-mismatch";
  }
  return "unknown";
}

std::string_view ToString(InterlayerRole role) {
  switch (role) {
    case InterlayerRole::kClustering: return "clustering";
    case InterlayerRole::kVirtualizationReplication:
      return "virtualization-replication";
    case InterlayerRole::kDedicated: return "dedicated";
    case InterlayerRole::kMixed: return "mixed";
  }
  return "unknown";
}

std::string SubjectOf(const Violation& v) {
  if (v.component) return ToString(ComponentId{v.layer, *v.component});
  if (v.link) return "L" + std::to_string(v.layer) + ":" + ToString(*v.link);
  return "L" + std::to_string(v.layer) + "->L" + std::to_string(v.layer - 1);
}

std::vector<Violation> CheckNodeSupport(const MultilayerNetwork& network) {
  std::vector<Violation> out;
  for (int alpha = 2; alpha <= network.layer_count(); ++alpha) {
    const Layer& layer = network.layer(alpha);
    const ProjectionIndex& proj = network.projections(alpha);
    for (std::size_t v = 0; v < proj.down.size(); ++v) {
      if (proj.down[v].empty()) {
        out.push_back({ViolationKind::kUnsupportedNode, alpha,
                       layer.components[v].name, std::nullopt,
                       "no projection onto layer " + std::to_string(alpha - 1)});
      }
    }
    const std::size_t nodes = layer.components.size();
    const std::size_t edges = network.cross_layer(alpha).projections.size();
    if (nodes > edges) {
      out.push_back({ViolationKind::kCardinality, alpha, std::nullopt,
                     std::nullopt,
                     std::to_string(nodes) + " components but only " +
                         std::to_string(edges) + " projections"});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<ComponentId> Supporters(const MultilayerNetwork& network,
                                 const ComponentId& component) {
  if (component.layer < 1 || component.layer > network.layer_count()) {
    throw QueryError(QueryErrorCode::kLayerOutOfRange,
                     "no layer " + std::to_string(component.layer));
  }
  if (component.layer == 1) {
    throw QueryError(QueryErrorCode::kBottomLayerHasNoSupporters,
                     ToString(component) + " is on the bottom layer");
  }
  const auto index = network.IndexOf(component.layer, component.name);
  if (!index) {
    throw QueryError(QueryErrorCode::kUnknownComponent,
                     "unknown component " + ToString(component));
  }
  const Layer& lower = network.layer(component.layer - 1);
  std::set<ComponentId> out;
  for (int l : network.projections(component.layer).down[*index]) {
    out.insert({lower.index, lower.components[l].name});
  }
  return out;
}

std::vector<Violation> CheckPathConsistency(const MultilayerNetwork& network) {
  std::vector<Violation> out;
  std::vector<int> marks;
  for (int alpha = 2; alpha <= network.layer_count(); ++alpha) {
    const Layer& layer = network.layer(alpha);
    const Topology& upper = network.topology(alpha);
    const ProjectionIndex& proj = network.projections(alpha);
    const auto components = internal::LabelComponents(network.topology(alpha - 1));

    // marks[c] == stamp when component c holds a supporter of the first
    // endpoint of the link under test.
    marks.assign(components.sizes.size(), -1);
    for (std::size_t e = 0; e < upper.edges.size(); ++e) {
      const auto [u, v] = upper.edges[e];
      const int stamp = static_cast<int>(e);
      for (int s : proj.down[u]) marks[components.label[s]] = stamp;
      const bool joined = std::any_of(
          proj.down[v].begin(), proj.down[v].end(),
          [&](int s) { return marks[components.label[s]] == stamp; });
      if (!joined) {
        out.push_back({ViolationKind::kPathInconsistency, alpha, std::nullopt,
                       layer.links[e],
                       "no path on layer " + std::to_string(alpha - 1) +
                           " joins supporters of the endpoints"});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InterlayerClass ClassifyInterlayer(const MultilayerNetwork& network,
                                   int upper_index) {
  if (upper_index < 2 || upper_index > network.layer_count()) {
    throw QueryError(QueryErrorCode::kLayerOutOfRange,
                     "no cross-layer above layer " +
                         std::to_string(upper_index - 1));
  }
  const ProjectionIndex& proj = network.projections(upper_index);
  const Layer& hi = network.layer(upper_index);
  const Layer& lo = network.layer(upper_index - 1);

  // Bit set of edge classes seen per node.
  constexpr unsigned kCluster = 1, kVirtual = 2, kDedicated = 4;
  std::vector<unsigned> upper_bits(proj.down.size(), 0);
  std::vector<unsigned> lower_bits(proj.up.size(), 0);
  for (std::size_t u = 0; u < proj.down.size(); ++u) {
    for (int l : proj.down[u]) {
      const bool fan_out = proj.down[u].size() > 1;
      const bool fan_in = proj.up[l].size() > 1;
      unsigned bits = 0;
      if (fan_out) bits |= kCluster;
      if (fan_in) bits |= kVirtual;
      if (!fan_out && !fan_in) bits |= kDedicated;
      upper_bits[u] |= bits;
      lower_bits[l] |= bits;
    }
  }

  auto role_of = [](unsigned bits) {
    switch (bits) {
      case kCluster: return InterlayerRole::kClustering;
      case kVirtual: return InterlayerRole::kVirtualizationReplication;
      case kDedicated: return InterlayerRole::kDedicated;
      default: return InterlayerRole::kMixed;
    }
  };

  InterlayerClass out;
  out.upper_index = upper_index;
  for (std::size_t u = 0; u < upper_bits.size(); ++u) {
    if (upper_bits[u] != 0) {
      out.nodes.emplace(ComponentId{hi.index, hi.components[u].name},
                        role_of(upper_bits[u]));
    }
  }
  for (std::size_t l = 0; l < lower_bits.size(); ++l) {
    if (lower_bits[l] != 0) {
      out.nodes.emplace(ComponentId{lo.index, lo.components[l].name},
                        role_of(lower_bits[l]));
    }
  }
  return out;
}

ValidationReport Validate(const MultilayerNetwork& network) {
  ValidationReport report;
  report.mode = network.mode();
  report.violations = CheckNodeSupport(network);
  auto paths = CheckPathConsistency(network);
  report.violations.insert(report.violations.end(), paths.begin(), paths.end());
  report.warnings = network.warnings();

  for (const Layer& layer : network.layers()) {
    for (const Link& link : CheckCover(layer)) {
      const std::string detail = "endpoints share no protocol";
      if (network.mode() == Mode::kStrict) {
        report.violations.push_back({ViolationKind::kUncoveredLink, layer.index,
                                     std::nullopt, link, detail});
      } else {
        report.warnings.push_back(
            {"uncovered-link", layer.index, ToString(link), detail});
      }
    }
    for (const std::string& p : UnsupportedDeclaredProtocols(layer)) {
      report.warnings.push_back({"unsupported-protocol", layer.index, p,
                                 "declared protocol spoken by no component"});
    }
  }
  for (int alpha = 2; alpha <= network.layer_count(); ++alpha) {
    report.classes.push_back(ClassifyInterlayer(network, alpha));
  }
  std::sort(report.violations.begin(), report.violations.end());
  std::sort(report.warnings.begin(), report.warnings.end());
  report.passed = report.violations.empty();
  return report;
}

}  // namespace netstrata
