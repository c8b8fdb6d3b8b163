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

#include "netstrata/fault_sim.h"

#include <algorithm>
#include <thread>

#include "graph_algorithms.h"

namespace netstrata {

namespace {

int LinkIndex(const Layer& layer, const Link& link) {
  auto it = std::lower_bound(layer.links.begin(), layer.links.end(), link);
  if (it == layer.links.end() || *it != link) return -1;
  return static_cast<int>(it - layer.links.begin());
}

// Survivor masks per layer, indexed [layer - 1][vertex or edge].
struct State {
  std::vector<std::vector<char>> alive;
  std::vector<std::vector<char>> active;
};

bool HasFunctionalLayer(const MultilayerNetwork& network) {
  for (const Layer& layer : network.layers()) {
    if (layer.role == LayerRole::kFunctional) return true;
  }
  return false;
}

}  // namespace

CascadeResult RunCascade(const MultilayerNetwork& network,
                         const FaultScenario& scenario) {
  const int n = network.layer_count();
  State state;
  for (int alpha = 1; alpha <= n; ++alpha) {
    state.alive.emplace_back(network.layer(alpha).components.size(), 1);
    state.active.emplace_back(network.layer(alpha).links.size(), 1);
  }

  CascadeResult result;
  result.label = scenario.label;
  for (const ComponentId& id : scenario.failed_nodes) {
    const auto index = network.IndexOf(id.layer, id.name);
    if (!index) throw ScenarioError("no component " + ToString(id));
    state.alive[id.layer - 1][*index] = 0;
    result.final_failed_nodes.insert(id);
  }
  for (const LayerLink& raw : scenario.failed_links) {
    const LayerLink ll{raw.layer, Link::Make(raw.link.a, raw.link.b)};
    const int e = (ll.layer >= 1 && ll.layer <= n)
                      ? LinkIndex(network.layer(ll.layer), ll.link)
                      : -1;
    if (e < 0) {
      throw ScenarioError("no link L" + std::to_string(ll.layer) + ":" +
                          ToString(ll.link));
    }
    state.active[ll.layer - 1][e] = 0;
    result.final_inactive_links.insert(ll);
  }

  // changed[alpha - 1]: layer alpha changed in the previous round. Every layer
  // counts as changed before the first round.
  std::vector<char> changed(n, 1);
  std::vector<int> marks;
  while (true) {
    std::vector<std::pair<int, int>> dead_now;      // (layer, vertex)
    std::vector<std::pair<int, int>> inactive_now;  // (layer, edge)
    for (int alpha = 2; alpha <= n; ++alpha) {
      if (!changed[alpha - 2]) continue;
      const int lo = alpha - 2;
      const int hi = alpha - 1;
      const ProjectionIndex& proj = network.projections(alpha);
      const auto& lower_alive = state.alive[lo];

      for (std::size_t u = 0; u < proj.down.size(); ++u) {
        if (!state.alive[hi][u]) continue;
        const bool orphaned =
            std::none_of(proj.down[u].begin(), proj.down[u].end(),
                         [&](int s) { return lower_alive[s] != 0; });
        if (orphaned) dead_now.emplace_back(alpha, static_cast<int>(u));
      }

      const Topology& upper = network.topology(alpha);
      if (upper.edges.empty()) continue;
      const auto components = internal::LabelComponents(
          network.topology(alpha - 1), state.alive[lo], state.active[lo]);
      marks.assign(components.sizes.size(), -1);
      for (std::size_t e = 0; e < upper.edges.size(); ++e) {
        if (!state.active[hi][e]) continue;
        const auto [u, v] = upper.edges[e];
        const int stamp = static_cast<int>(e);
        for (int s : proj.down[u]) {
          if (lower_alive[s]) marks[components.label[s]] = stamp;
        }
        const bool joined =
            std::any_of(proj.down[v].begin(), proj.down[v].end(), [&](int s) {
              return lower_alive[s] && marks[components.label[s]] == stamp;
            });
        if (!joined) inactive_now.emplace_back(alpha, static_cast<int>(e));
      }
    }
    if (dead_now.empty() && inactive_now.empty()) break;

    std::fill(changed.begin(), changed.end(), 0);
    CascadeRound round;
    for (const auto& [alpha, v] : dead_now) {
      state.alive[alpha - 1][v] = 0;
      changed[alpha - 1] = 1;
      ComponentId id{alpha, network.layer(alpha).components[v].name};
      result.final_failed_nodes.insert(id);
      round.failed_nodes.push_back(std::move(id));
    }
    for (const auto& [alpha, e] : inactive_now) {
      state.active[alpha - 1][e] = 0;
      changed[alpha - 1] = 1;
      LayerLink ll{alpha, network.layer(alpha).links[e]};
      result.final_inactive_links.insert(ll);
      round.inactive_links.push_back(std::move(ll));
    }
    std::sort(round.failed_nodes.begin(), round.failed_nodes.end());
    std::sort(round.inactive_links.begin(), round.inactive_links.end());
    result.rounds.push_back(std::move(round));
  }

  const bool has_functional = HasFunctionalLayer(network);
  result.functional_alive = false;
  for (int alpha = 1; alpha <= n; ++alpha) {
    const Layer& layer = network.layer(alpha);
    const auto& alive = state.alive[alpha - 1];
    LayerSurvival s;
    s.layer = alpha;
    s.total = static_cast<int>(alive.size());
    s.surviving = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
    s.survival = static_cast<double>(s.surviving) / s.total;
    const auto components = internal::LabelComponents(
        network.topology(alpha), alive, state.active[alpha - 1]);
    const int largest =
        components.sizes.empty()
            ? 0
            : *std::max_element(components.sizes.begin(), components.sizes.end());
    s.largest_component_fraction = static_cast<double>(largest) / s.total;
    result.per_layer.push_back(s);

    const bool counts = has_functional ? layer.role == LayerRole::kFunctional
                                       : alpha == n;
    if (counts && s.surviving > 0) result.functional_alive = true;
  }
  return result;
}

std::vector<FaultImpact> ExhaustiveSingleFaults(const MultilayerNetwork& network,
                                                int threads) {
  const Layer& bottom = network.layer(1);
  const int count = static_cast<int>(bottom.components.size());
  std::vector<FaultImpact> impacts(count);

  auto run = [&](int i) {
    FaultScenario scenario;
    scenario.label = bottom.components[i].name;
    scenario.failed_nodes.push_back({1, bottom.components[i].name});
    const CascadeResult r = RunCascade(network, scenario);
    impacts[i] = {bottom.components[i].name,
                  static_cast<int>(r.final_failed_nodes.size()),
                  r.functional_alive, static_cast<int>(r.rounds.size())};
  };

  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) run(i);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (int i = t; i < count; i += threads) run(i);
      });
    }
  }

  std::sort(impacts.begin(), impacts.end(),
            [](const FaultImpact& a, const FaultImpact& b) {
              if (a.functional_alive != b.functional_alive) {
                return !a.functional_alive;
              }
              if (a.failed_nodes != b.failed_nodes) {
                return a.failed_nodes > b.failed_nodes;
              }
              return a.node < b.node;
            });
  return impacts;
}

}  // namespace netstrata
