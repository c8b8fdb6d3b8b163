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

#ifndef NETSTRATA_FAULT_SIM_H_
#define NETSTRATA_FAULT_SIM_H_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netstrata/model.h"

namespace netstrata {

struct FaultScenario {
  std::string label;
  std::vector<ComponentId> failed_nodes;
  std::vector<LayerLink> failed_links;

  bool operator==(const FaultScenario&) const = default;
};

class ScenarioError : public std::invalid_argument {
 public:
  explicit ScenarioError(const std::string& message)
      : std::invalid_argument("UnknownScenarioElement: " + message) {}
};

// Elements that changed state in one propagation round, sorted.
struct CascadeRound {
  std::vector<ComponentId> failed_nodes;
  std::vector<LayerLink> inactive_links;
};

struct LayerSurvival {
  int layer = 0;
  int total = 0;
  int surviving = 0;
  double survival = 1.0;  // surviving / total
  // Largest component over surviving nodes and active links, divided by the
  // layer's full node count.
  double largest_component_fraction = 1.0;
};

struct CascadeResult {
  std::string label;
  std::vector<CascadeRound> rounds;
  std::set<ComponentId> final_failed_nodes;    // includes injected nodes
  std::set<LayerLink> final_inactive_links;    // includes injected links
  std::vector<LayerSurvival> per_layer;        // bottom up
  // Some functional-role node survives. Networks without a functional layer
  // use their top layer instead.
  bool functional_alive = true;
};

// Injects the scenario and propagates upward in synchronous rounds until a
// fixed point. In each round, evaluated against the state after the previous
// round:
//   (a) a node above layer 1 fails once all its supporters have failed;
//   (b) a link above layer 1 turns inactive once no surviving supporter of
//       one endpoint reaches a surviving supporter of the other through
//       surviving nodes and active links of the layer below.
// Layer-1 elements change only by injection. Throws ScenarioError for
// elements that do not exist.
CascadeResult RunCascade(const MultilayerNetwork& network,
                         const FaultScenario& scenario);

struct FaultImpact {
  std::string node;  // layer-1 component name
  int failed_nodes = 0;
  bool functional_alive = true;
  int rounds = 0;
};

// One cascade per layer-1 node, ranked by: functional layer lost first, then
// failed-node count descending, then name ascending. `threads` <= 0 picks the
// hardware concurrency; the ranking does not depend on it.
std::vector<FaultImpact> ExhaustiveSingleFaults(const MultilayerNetwork& network,
                                                int threads = 0);

}  // namespace netstrata

#endif  // NETSTRATA_FAULT_SIM_H_
