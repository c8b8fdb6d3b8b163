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

#ifndef NETSTRATA_SRC_GRAPH_ALGORITHMS_H_
#define NETSTRATA_SRC_GRAPH_ALGORITHMS_H_

#include <span>
#include <string>
#include <vector>

#include "netstrata/model.h"

namespace netstrata::internal {

// Builds a Topology for an arbitrary layer value (components need not be
// sorted). `names` receives the vertex names in vertex order.
Topology TopologyOf(const Layer& layer, std::vector<std::string>* names);

// Topology over the same vertices restricted to a subset of links.
Topology TopologyOf(const Layer& layer, std::span<const Link> links,
                    std::vector<std::string>* names);

struct ComponentLabels {
  std::vector<int> label;  // -1 for vertices excluded by the mask
  std::vector<int> sizes;  // indexed by label
};

// Connected components over vertices with alive[v] != 0 and edges with
// active[e] != 0. Empty masks mean "everything".
ComponentLabels LabelComponents(const Topology& graph,
                                std::span<const char> alive = {},
                                std::span<const char> active = {});

// Largest eccentricity within the component containing `source`.
int Eccentricity(const Topology& graph, int source, std::vector<int>& dist,
                 std::vector<int>& queue);

struct CutStructure {
  std::vector<int> articulation_points;  // vertex ids, ascending
  std::vector<int> bridges;              // edge ids, ascending
};

// Iterative lowpoint search; safe on long paths.
CutStructure FindCuts(const Topology& graph);

}  // namespace netstrata::internal

#endif  // NETSTRATA_SRC_GRAPH_ALGORITHMS_H_
