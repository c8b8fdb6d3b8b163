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

#ifndef NETSTRATA_ANALYSIS_H_
#define NETSTRATA_ANALYSIS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netstrata/model.h"

namespace netstrata {

struct DegreeSummary {
  int min = 0;
  double mean = 0.0;
  int max = 0;
};

// Structural metrics of one layer seen as an undirected simple graph.
struct LayerMetrics {
  int node_count = 0;
  int link_count = 0;
  // 2m / (n (n - 1)) for n >= 2, else 0.
  double density = 0.0;
  DegreeSummary degree;
  int connected_components = 0;
  double largest_component_fraction = 0.0;
  // Unweighted; the maximum over all components of the largest size.
  int diameter_of_largest_component = 0;
  std::vector<std::string> articulation_points;  // sorted
  std::vector<Link> bridges;                     // sorted
};

LayerMetrics ComputeLayerMetrics(const Layer& layer);

// Metrics of every protocol sub-layer over the full vertex set of the layer.
// Protocols inducing no link are absent.
std::map<std::string, LayerMetrics> ComputeSublayerMetrics(const Layer& layer);

// histogram[d] = number of nodes with interlayer degree d. Nodes without any
// projection are not counted.
struct DegreeHistogram {
  int upper_index = 0;
  std::map<int, int> upper;
  std::map<int, int> lower;
};

DegreeHistogram InterlayerDegreeStats(const MultilayerNetwork& network,
                                      int upper_index);

struct LayerMetricsSection {
  int layer = 0;
  LayerRole role = LayerRole::kCustom;
  LayerMetrics metrics;
  std::map<std::string, LayerMetrics> sublayers;
};

struct MetricsBundle {
  std::vector<LayerMetricsSection> layers;
  std::vector<DegreeHistogram> interlayer;
};

// All layers, or just `only_layer` (which must exist).
MetricsBundle ComputeMetrics(const MultilayerNetwork& network,
                             std::optional<int> only_layer = std::nullopt);

}  // namespace netstrata

#endif  // NETSTRATA_ANALYSIS_H_
