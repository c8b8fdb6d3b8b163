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

#ifndef NETSTRATA_CONSISTENCY_H_
#define NETSTRATA_CONSISTENCY_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "netstrata/model.h"

namespace netstrata {

enum class ViolationKind {
  kUnsupportedNode,
  kCardinality,
  kPathInconsistency,
  kUncoveredLink,
  kRoleKindMismatch,
};

std::string_view ToString(ViolationKind kind);

// A single finding. Node-shaped kinds (unsupported-node, role-kind-mismatch)
// populate `component`; link-shaped kinds (path-inconsistency,
// uncovered-link) populate `link`; cardinality populates neither and refers
// to the cross-layer above `layer - 1`.
struct Violation {
  ViolationKind kind;
  int layer = 0;
  std::optional<std::string> component;
  std::optional<Link> link;
  std::string detail;

  auto Key() const { return std::tie(layer, kind, component, link); }
  bool SameFinding(const Violation& other) const { return Key() == other.Key(); }
  bool operator<(const Violation& other) const { return Key() < other.Key(); }
};

std::string SubjectOf(const Violation& violation);

enum class InterlayerRole {
  kClustering,
  kVirtualizationReplication,
  kDedicated,
  kMixed,
};

std::string_view ToString(InterlayerRole role);

struct InterlayerClass {
  int upper_index = 0;
  std::map<ComponentId, InterlayerRole> nodes;
};

enum class QueryErrorCode {
  kBottomLayerHasNoSupporters,
  kUnknownComponent,
  kLayerOutOfRange,
};

class QueryError : public std::invalid_argument {
 public:
  QueryError(QueryErrorCode code, const std::string& message)
      : std::invalid_argument(message), code_(code) {}
  QueryErrorCode code() const { return code_; }

 private:
  QueryErrorCode code_;
};

// Every node above layer 1 needs at least one projection onto the layer
// below; each cross-layer also needs at least as many projections as its
// upper layer has nodes.
std::vector<Violation> CheckNodeSupport(const MultilayerNetwork& network);

std::set<ComponentId> Supporters(const MultilayerNetwork& network,
                                 const ComponentId& component);

// An upper link (u, v) is consistent when some supporter of u and some
// supporter of v are joined by a path in the full layer below. A shared
// supporter counts as joined.
std::vector<Violation> CheckPathConsistency(const MultilayerNetwork& network);

// Classifies each projection by the interlayer degrees of its endpoints and
// each node by the classes of its projections. A node whose projections
// carry more than one class is mixed.
InterlayerClass ClassifyInterlayer(const MultilayerNetwork& network,
                                   int upper_index);

struct ValidationReport {
  Mode mode = Mode::kStrict;
  bool passed = false;
  std::vector<Violation> violations;  // sorted by layer, then kind, subject
  std::vector<Warning> warnings;
  std::vector<InterlayerClass> classes;  // one per cross-layer, bottom up
};

ValidationReport Validate(const MultilayerNetwork& network);

}  // namespace netstrata

#endif  // NETSTRATA_CONSISTENCY_H_
