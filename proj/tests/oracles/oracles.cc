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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <limits>

namespace netstrata::oracle {

namespace {

using Alive = std::set<std::string>;

std::set<std::string> Names(const Layer& layer) {
  std::set<std::string> out;
  for (const Component& c : layer.components) out.insert(c.name);
  return out;
}

const Component& Get(const Layer& layer, const std::string& name) {
  for (const Component& c : layer.components) {
    if (c.name == name) return c;
  }
  throw std::logic_error("oracle: no component " + name);
}

// Reachability over `alive` nodes using only `links`.
bool ReachableVia(const std::set<std::string>& alive,
                  const std::vector<Link>& links, const std::string& from,
                  const std::string& to) {
  if (!alive.count(from) || !alive.count(to)) return false;
  std::set<std::string> seen{from};
  std::vector<std::string> stack{from};
  while (!stack.empty()) {
    const std::string node = stack.back();
    stack.pop_back();
    if (node == to) return true;
    for (const Link& l : links) {
      if (!alive.count(l.a) || !alive.count(l.b)) continue;
      std::string next;
      if (l.a == node) next = l.b;
      if (l.b == node) next = l.a;
      if (!next.empty() && seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

const CrossLayer* CrossOf(const MultilayerNetwork& network, int upper) {
  for (const CrossLayer& c : network.cross_layers()) {
    if (c.upper_index == upper) return &c;
  }
  return nullptr;
}

// Component sizes of the graph restricted to `alive` and `links`.
std::vector<std::set<std::string>> Parts(const std::set<std::string>& alive,
                                         const std::vector<Link>& links) {
  std::vector<std::set<std::string>> out;
  std::set<std::string> done;
  for (const std::string& v : alive) {
    if (done.count(v)) continue;
    std::set<std::string> part;
    for (const std::string& w : alive) {
      if (ReachableVia(alive, links, v, w)) part.insert(w);
    }
    done.insert(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace

Finding FindingOf(const Violation& v) {
  std::string subject;
  if (v.component) subject = *v.component;
  if (v.link) subject = v.link->a + "-" + v.link->b;
  return {v.layer, std::string(ToString(v.kind)), subject};
}

std::set<Finding> FindingsOf(const std::vector<Violation>& violations) {
  std::set<Finding> out;
  for (const Violation& v : violations) out.insert(FindingOf(v));
  return out;
}

std::set<std::string> SupportersOf(const MultilayerNetwork& network, int layer,
                                   const std::string& name) {
  std::set<std::string> out;
  if (const CrossLayer* cross = CrossOf(network, layer)) {
    for (const Projection& p : cross->projections) {
      if (p.upper == name) out.insert(p.lower);
    }
  }
  return out;
}

bool Reachable(const Layer& layer, const std::string& from,
               const std::string& to) {
  return ReachableVia(Names(layer), layer.links, from, to);
}

std::set<Finding> Violations(const MultilayerNetwork& network) {
  std::set<Finding> out;
  const auto& layers = network.layers();
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const Layer& hi = layers[i];
    const Layer& lo = layers[i - 1];
    for (const Component& c : hi.components) {
      if (SupportersOf(network, hi.index, c.name).empty()) {
        out.insert({hi.index, "unsupported-node", c.name});
      }
    }
    const CrossLayer* cross = CrossOf(network, hi.index);
    const std::size_t edges = cross ? cross->projections.size() : 0;
    if (hi.components.size() > edges) out.insert({hi.index, "cardinality", ""});

    for (const Link& link : hi.links) {
      bool ok = false;
      for (const std::string& s : SupportersOf(network, hi.index, link.a)) {
        for (const std::string& t : SupportersOf(network, hi.index, link.b)) {
          if (s == t || Reachable(lo, s, t)) ok = true;
        }
      }
      if (!ok) out.insert({hi.index, "path-inconsistency", link.a + "-" + link.b});
    }
  }
  if (network.mode() == Mode::kStrict) {
    for (const Layer& layer : layers) {
      for (const Link& link : layer.links) {
        bool shared = false;
        for (const std::string& p : layer.protocols) {
          if (Get(layer, link.a).spec.Supports(p) &&
              Get(layer, link.b).spec.Supports(p)) {
            shared = true;
          }
        }
        if (!shared) {
          out.insert({layer.index, "uncovered-link", link.a + "-" + link.b});
        }
      }
    }
  }
  return out;
}

std::map<std::string, std::set<Link>> SubLayers(const Layer& layer) {
  std::map<std::string, std::set<Link>> out;
  for (const std::string& p : layer.protocols) {
    for (const Link& link : layer.links) {
      if (Get(layer, link.a).spec.Supports(p) &&
          Get(layer, link.b).spec.Supports(p)) {
        out[p].insert(link);
      }
    }
  }
  return out;
}

Metrics LayerMetrics(const Layer& layer) {
  Metrics m;
  const std::set<std::string> all = Names(layer);
  const std::vector<std::string> names(all.begin(), all.end());
  const int n = static_cast<int>(names.size());
  auto at = [&](const std::string& s) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(), s) -
                            names.begin());
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Link& l : layer.links) d[at(l.a)][at(l.b)] = d[at(l.b)][at(l.a)] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }

  const auto parts = Parts(all, layer.links);
  m.components = static_cast<int>(parts.size());
  for (const auto& part : parts) {
    m.largest = std::max(m.largest, static_cast<int>(part.size()));
  }
  for (const auto& part : parts) {
    if (static_cast<int>(part.size()) != m.largest) continue;
    for (const std::string& a : part) {
      for (const std::string& b : part) m.diameter = std::max(m.diameter, d[at(a)][at(b)]);
    }
  }

  for (const std::string& v : names) {
    std::set<std::string> rest = all;
    rest.erase(v);
    if (static_cast<int>(Parts(rest, layer.links).size()) > m.components) {
      m.articulation_points.insert(v);
    }
  }
  for (std::size_t e = 0; e < layer.links.size(); ++e) {
    std::vector<Link> rest = layer.links;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
    if (static_cast<int>(Parts(all, rest).size()) > m.components) {
      m.bridges.insert(layer.links[e]);
    }
  }
  return m;
}

CascadeOutcome Cascade(const MultilayerNetwork& network,
                       const FaultScenario& scenario) {
  const auto& layers = network.layers();
  const int n = static_cast<int>(layers.size());
  // alive[a] / active[a]: names and links still working on layer a + 1.
  std::vector<Alive> alive(n);
  std::vector<std::set<Link>> active(n);
  for (int a = 0; a < n; ++a) {
    alive[a] = Names(layers[a]);
    active[a] = std::set<Link>(layers[a].links.begin(), layers[a].links.end());
  }
  for (const ComponentId& id : scenario.failed_nodes) alive[id.layer - 1].erase(id.name);
  for (const LayerLink& ll : scenario.failed_links) {
    active[ll.layer - 1].erase(Link::Make(ll.link.a, ll.link.b));
  }

  CascadeOutcome out;
  while (true) {
    auto next_alive = alive;
    auto next_active = active;
    for (int a = 1; a < n; ++a) {
      const int layer = a + 1;
      for (const std::string& v : alive[a]) {
        bool any = false;
        for (const std::string& s : SupportersOf(network, layer, v)) {
          if (alive[a - 1].count(s)) any = true;
        }
        if (!any) next_alive[a].erase(v);
      }
      const std::vector<Link> below(active[a - 1].begin(), active[a - 1].end());
      for (const Link& link : active[a]) {
        bool joined = false;
        for (const std::string& s : SupportersOf(network, layer, link.a)) {
          for (const std::string& t : SupportersOf(network, layer, link.b)) {
            if (ReachableVia(alive[a - 1], below, s, t)) joined = true;
          }
        }
        if (!joined) next_active[a].erase(link);
      }
    }
    if (next_alive == alive && next_active == active) break;
    alive = std::move(next_alive);
    active = std::move(next_active);
    ++out.rounds;
  }

  for (int a = 0; a < n; ++a) {
    for (const Component& c : layers[a].components) {
      if (!alive[a].count(c.name)) out.failed.insert({a + 1, c.name});
    }
    for (const Link& l : layers[a].links) {
      if (!active[a].count(l)) out.inactive.insert({a + 1, l});
    }
  }
  return out;
}

}  // namespace netstrata::oracle
