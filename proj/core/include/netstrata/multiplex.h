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

#ifndef NETSTRATA_MULTIPLEX_H_
#define NETSTRATA_MULTIPLEX_H_

#include <map>
#include <string>
#include <vector>

#include "netstrata/model.h"

namespace netstrata {

// Links of one layer carried by a single protocol. A link belongs here iff
// both endpoint specs list the protocol; the same link may belong to several
// sub-layers.
struct ProtocolSubLayer {
  int layer_index = 0;
  std::string protocol;
  std::vector<Link> links;  // sorted

  bool operator==(const ProtocolSubLayer&) const = default;
};

struct Decomposition {
  int layer_index = 0;
  // One entry per protocol that induces at least one link, in protocol order.
  std::vector<ProtocolSubLayer> sublayers;
  // Protocols of the layer that induce no link. Not emitted as sub-layers.
  std::vector<std::string> idle_protocols;
  // Links whose endpoints share no protocol of the layer.
  std::vector<Link> uncovered;

  bool operator==(const Decomposition&) const = default;
};

Decomposition DecomposeLayer(const Layer& layer);

// Links no sub-layer can carry. Empty iff the sub-layers reunite to the full
// link set.
std::vector<Link> CheckCover(const Layer& layer);

// For every link, the number of sub-layers containing it:
// |spec(a) & spec(b) & protocols|.
std::map<Link, int> MultiplexMultiplicity(const Layer& layer);

// Protocols declared on the layer that no component spec mentions.
std::vector<std::string> UnsupportedDeclaredProtocols(const Layer& layer);

}  // namespace netstrata

#endif  // NETSTRATA_MULTIPLEX_H_
