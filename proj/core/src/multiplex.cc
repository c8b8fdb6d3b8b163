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

#include "netstrata/multiplex.h"

#include <algorithm>
#include <iterator>
#include <set>
#include <unordered_map>

namespace netstrata {

namespace {

class SpecLookup {
 public:
  explicit SpecLookup(const Layer& layer) {
    specs_.reserve(layer.components.size());
    for (const Component& c : layer.components) specs_.emplace(c.name, &c.spec);
  }

  const SpecSet* Find(const std::string& name) const {
    auto it = specs_.find(name);
    return it == specs_.end() ? nullptr : it->second;
  }

 private:
  std::unordered_map<std::string_view, const SpecSet*> specs_;
};

// Protocols of the layer: the declaration plus everything components speak.
std::set<std::string> LayerProtocols(const Layer& layer) {
  std::set<std::string> all = layer.protocols;
  for (const Component& c : layer.components) {
    all.insert(c.spec.protocols.begin(), c.spec.protocols.end());
  }
  return all;
}

std::vector<std::string> SharedProtocols(const SpecLookup& lookup,
                                         const std::set<std::string>& layer_protocols,
                                         const Link& link) {
  std::vector<std::string> shared;
  const SpecSet* a = lookup.Find(link.a);
  const SpecSet* b = lookup.Find(link.b);
  if (a == nullptr || b == nullptr) return shared;
  std::vector<std::string> both;
  std::set_intersection(a->protocols.begin(), a->protocols.end(),
                        b->protocols.begin(), b->protocols.end(),
                        std::back_inserter(both));
  std::set_intersection(both.begin(), both.end(), layer_protocols.begin(),
                        layer_protocols.end(), std::back_inserter(shared));
  return shared;
}

}  // namespace

Decomposition DecomposeLayer(const Layer& layer) {
  const SpecLookup lookup(layer);
  const std::set<std::string> protocols = LayerProtocols(layer);

  std::map<std::string, std::vector<Link>> by_protocol;
  for (const std::string& p : protocols) by_protocol[p];

  Decomposition out;
  out.layer_index = layer.index;
  for (const Link& raw : layer.links) {
    const Link link = Link::Make(raw.a, raw.b);
    const auto shared = SharedProtocols(lookup, protocols, link);
    if (shared.empty()) out.uncovered.push_back(link);
    for (const std::string& p : shared) by_protocol[p].push_back(link);
  }
  for (auto& [protocol, links] : by_protocol) {
    if (links.empty()) {
      out.idle_protocols.push_back(protocol);
      continue;
    }
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    out.sublayers.push_back({layer.index, protocol, std::move(links)});
  }
  std::sort(out.uncovered.begin(), out.uncovered.end());
  out.uncovered.erase(std::unique(out.uncovered.begin(), out.uncovered.end()),
                      out.uncovered.end());
  return out;
}

std::vector<Link> CheckCover(const Layer& layer) {
  return DecomposeLayer(layer).uncovered;
}

std::map<Link, int> MultiplexMultiplicity(const Layer& layer) {
  const SpecLookup lookup(layer);
  const std::set<std::string> protocols = LayerProtocols(layer);
  std::map<Link, int> out;
  for (const Link& raw : layer.links) {
    const Link link = Link::Make(raw.a, raw.b);
    out[link] = static_cast<int>(SharedProtocols(lookup, protocols, link).size());
  }
  return out;
}

std::vector<std::string> UnsupportedDeclaredProtocols(const Layer& layer) {
  std::set<std::string> spoken;
  for (const Component& c : layer.components) {
    spoken.insert(c.spec.protocols.begin(), c.spec.protocols.end());
  }
  std::vector<std::string> out;
  std::set_difference(layer.protocols.begin(), layer.protocols.end(),
                      spoken.begin(), spoken.end(), std::back_inserter(out));
  return out;
}

}  // namespace netstrata
