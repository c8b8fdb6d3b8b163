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

#include "netstrata/analysis.h"

#include <algorithm>
#include <stdexcept>

#include "graph_algorithms.h"
#include "netstrata/multiplex.h"

namespace netstrata {

namespace {

LayerMetrics MetricsOf(const Topology& graph,
                       const std::vector<std::string>& names) {
  LayerMetrics m;
  const int n = graph.size();
  const int links = static_cast<int>(graph.edges.size());
  m.node_count = n;
  m.link_count = links;
  if (n >= 2) {
    m.density = 2.0 * links / (static_cast<double>(n) * (n - 1));
  }
  if (n > 0) {
    m.degree.min = n;
    for (const auto& adj : graph.adjacency) {
      const int d = static_cast<int>(adj.size());
      m.degree.min = std::min(m.degree.min, d);
      m.degree.max = std::max(m.degree.max, d);
    }
    m.degree.mean = 2.0 * links / n;
  }

  const auto components = internal::LabelComponents(graph);
  m.connected_components = static_cast<int>(components.sizes.size());
  if (n > 0) {
    const int largest =
        *std::max_element(components.sizes.begin(), components.sizes.end());
    m.largest_component_fraction = static_cast<double>(largest) / n;
    std::vector<int> dist, queue;
    for (int v = 0; v < n; ++v) {
      if (components.sizes[components.label[v]] != largest) continue;
      m.diameter_of_largest_component = std::max(
          m.diameter_of_largest_component,
          internal::Eccentricity(graph, v, dist, queue));
    }
  }

  const auto cuts = internal::FindCuts(graph);
  for (int v : cuts.articulation_points) {
    m.articulation_points.push_back(names[v]);
  }
  for (int e : cuts.bridges) {
    const auto [a, b] = graph.edges[e];
    m.bridges.push_back(Link::Make(names[a], names[b]));
  }
  std::sort(m.articulation_points.begin(), m.articulation_points.end());
  std::sort(m.bridges.begin(), m.bridges.end());
  return m;
}

}  // namespace

LayerMetrics ComputeLayerMetrics(const Layer& layer) {
  std::vector<std::string> names;
  const Topology graph = internal::TopologyOf(layer, &names);
  return MetricsOf(graph, names);
}

std::map<std::string, LayerMetrics> ComputeSublayerMetrics(const Layer& layer) {
  std::map<std::string, LayerMetrics> out;
  for (const ProtocolSubLayer& sub : DecomposeLayer(layer).sublayers) {
    std::vector<std::string> names;
    const Topology graph = internal::TopologyOf(layer, sub.links, &names);
    out.emplace(sub.protocol, MetricsOf(graph, names));
  }
  return out;
}

DegreeHistogram InterlayerDegreeStats(const MultilayerNetwork& network,
                                      int upper_index) {
  if (upper_index < 2 || upper_index > network.layer_count()) {
    throw std::out_of_range("no cross-layer above layer " +
                            std::to_string(upper_index - 1));
  }
  const ProjectionIndex& proj = network.projections(upper_index);
  DegreeHistogram h;
  h.upper_index = upper_index;
  for (const auto& down : proj.down) {
    if (!down.empty()) ++h.upper[static_cast<int>(down.size())];
  }
  for (const auto& up : proj.up) {
    if (!up.empty()) ++h.lower[static_cast<int>(up.size())];
  }
  return h;
}

MetricsBundle ComputeMetrics(const MultilayerNetwork& network,
                             std::optional<int> only_layer) {
  MetricsBundle bundle;
  int first = 1;
  int last = network.layer_count();
  if (only_layer) {
    network.layer(*only_layer);
    first = last = *only_layer;
  }
  for (int alpha = first; alpha <= last; ++alpha) {
    const Layer& layer = network.layer(alpha);
    LayerMetricsSection section;
    section.layer = alpha;
    section.role = layer.role;
    section.metrics = MetricsOf(network.topology(alpha), [&] {
      std::vector<std::string> names;
      names.reserve(layer.components.size());
      for (const Component& c : layer.components) names.push_back(c.name);
      return names;
    }());
    section.sublayers = ComputeSublayerMetrics(layer);
    bundle.layers.push_back(std::move(section));
    if (alpha >= 2) bundle.interlayer.push_back(InterlayerDegreeStats(network, alpha));
  }
  return bundle;
}

}  // namespace netstrata
