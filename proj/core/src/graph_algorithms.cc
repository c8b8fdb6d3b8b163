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

#include "graph_algorithms.h"

#include <algorithm>
#include <unordered_map>

namespace netstrata::internal {

Topology TopologyOf(const Layer& layer, std::span<const Link> links,
                    std::vector<std::string>* names) {
  std::vector<std::string> order;
  order.reserve(layer.components.size());
  for (const Component& c : layer.components) order.push_back(c.name);
  std::sort(order.begin(), order.end());

  std::unordered_map<std::string_view, int> index;
  index.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    index.emplace(order[i], static_cast<int>(i));
  }

  Topology topo;
  topo.adjacency.resize(order.size());
  for (const Link& link : links) {
    auto a = index.find(link.a);
    auto b = index.find(link.b);
    if (a == index.end() || b == index.end() || a->second == b->second) {
      continue;
    }
    topo.edges.emplace_back(a->second, b->second);
    topo.adjacency[a->second].push_back(b->second);
    topo.adjacency[b->second].push_back(a->second);
  }
  if (names != nullptr) *names = std::move(order);
  return topo;
}

Topology TopologyOf(const Layer& layer, std::vector<std::string>* names) {
  return TopologyOf(layer, layer.links, names);
}

ComponentLabels LabelComponents(const Topology& graph,
                                std::span<const char> alive,
                                std::span<const char> active) {
  const int n = graph.size();
  // Edge masks need edge ids, so walk the edge list into a masked adjacency
  // only when a mask is present.
  std::vector<std::vector<int>> masked;
  const std::vector<std::vector<int>>* adjacency = &graph.adjacency;
  if (!alive.empty() || !active.empty()) {
    masked.resize(n);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      if (!active.empty() && !active[e]) continue;
      const auto [a, b] = graph.edges[e];
      if (!alive.empty() && (!alive[a] || !alive[b])) continue;
      masked[a].push_back(b);
      masked[b].push_back(a);
    }
    adjacency = &masked;
  }

  ComponentLabels out;
  out.label.assign(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (out.label[s] != -1 || (!alive.empty() && !alive[s])) continue;
    const int id = static_cast<int>(out.sizes.size());
    out.sizes.push_back(0);
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      for (int w : (*adjacency)[v]) {
        if (out.label[w] == -1) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

int Eccentricity(const Topology& graph, int source, std::vector<int>& dist,
                 std::vector<int>& queue) {
  dist.assign(graph.size(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  int far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    far = std::max(far, dist[v]);
    for (int w : graph.adjacency[v]) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return far;
}

CutStructure FindCuts(const Topology& graph) {
  const int n = graph.size();
  // Edge ids per vertex; the walk skips only the tree edge it arrived by.
  std::vector<std::vector<std::pair<int, int>>> incident(n);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [a, b] = graph.edges[e];
    incident[a].emplace_back(b, static_cast<int>(e));
    incident[b].emplace_back(a, static_cast<int>(e));
  }

  std::vector<int> order(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<int> bridges;

  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  int clock = 0;

  for (int root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    order[root] = low[root] = clock++;
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const int v = top.vertex;
      if (top.next < incident[v].size()) {
        const auto [w, e] = incident[v][top.next++];
        if (e == top.parent_edge) continue;
        if (order[w] == -1) {
          order[w] = low[w] = clock++;
          ++top.children;
          stack.push_back({w, e, 0, 0});
        } else {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      const int parent_edge = top.parent_edge;
      const int children = top.children;
      stack.pop_back();
      if (stack.empty()) {
        if (children > 1) is_cut[v] = 1;
        continue;
      }
      const int u = stack.back().vertex;
      low[u] = std::min(low[u], low[v]);
      if (low[v] > order[u]) bridges.push_back(parent_edge);
      if (stack.size() > 1 && low[v] >= order[u]) is_cut[u] = 1;
    }
  }

  CutStructure out;
  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) out.articulation_points.push_back(v);
  }
  std::sort(bridges.begin(), bridges.end());
  out.bridges = std::move(bridges);
  return out;
}

}  // namespace netstrata::internal
