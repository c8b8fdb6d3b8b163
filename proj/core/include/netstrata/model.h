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

#ifndef NETSTRATA_MODEL_H_
#define NETSTRATA_MODEL_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netstrata {

// strict enforces every non-emptiness rule of the layered model literally;
// relaxed downgrades empty link and projection sets to warnings.
enum class Mode { kStrict, kRelaxed };

enum class ComponentKind { kHardware, kSoftware, kPerson, kEngineeringSystem };

enum class LayerRole {
  kEngineeringEnvironment,
  kPhysical,
  kLogical,
  kService,
  kFunctional,
  kSocialEnvironment,
  kCustom,
};

std::string_view ToString(Mode mode);
std::string_view ToString(ComponentKind kind);
std::string_view ToString(LayerRole role);
std::optional<Mode> ParseMode(std::string_view text);
std::optional<ComponentKind> ParseComponentKind(std::string_view text);
std::optional<LayerRole> ParseLayerRole(std::string_view text);

// A component is identified by its layer and a name unique within that layer.
// The same name may appear on several layers.
struct ComponentId {
  int layer = 0;
  std::string name;

  auto operator<=>(const ComponentId&) const = default;
};

std::string ToString(const ComponentId& id);

// Label of a vertex: the protocols it speaks plus free-form key/value entries.
// Both collections are kept in lexicographic order.
struct SpecSet {
  std::set<std::string> protocols;
  std::map<std::string, std::string> attributes;

  bool Supports(std::string_view protocol) const {
    return protocols.find(std::string(protocol)) != protocols.end();
  }
  bool operator==(const SpecSet&) const = default;
};

struct Component {
  std::string name;
  ComponentKind kind = ComponentKind::kHardware;
  SpecSet spec;

  bool operator==(const Component&) const = default;
};

// Undirected intralayer link. Make() stores the endpoints in sorted order so
// that (a, b) and (b, a) compare equal.
struct Link {
  std::string a;
  std::string b;

  static Link Make(std::string x, std::string y) {
    if (y < x) std::swap(x, y);
    return Link{std::move(x), std::move(y)};
  }
  auto operator<=>(const Link&) const = default;
};

std::string ToString(const Link& link);

// Intralayer link tagged with its layer index.
struct LayerLink {
  int layer = 0;
  Link link;

  auto operator<=>(const LayerLink&) const = default;
};

struct Layer {
  int index = 0;
  LayerRole role = LayerRole::kCustom;
  std::vector<Component> components;
  std::vector<Link> links;
  // Declared protocol set. After construction this is the union of the
  // declaration and every protocol named in a component spec.
  std::set<std::string> protocols;

  // Binary search; requires components sorted by name, which holds for every
  // layer owned by a MultilayerNetwork.
  const Component* Find(std::string_view name) const;

  bool operator==(const Layer&) const = default;
};

// Projection from a component on layer `upper_index` onto the component of
// layer `upper_index - 1` that realizes it.
struct Projection {
  std::string upper;
  std::string lower;

  auto operator<=>(const Projection&) const = default;
};

struct CrossLayer {
  int upper_index = 0;
  std::vector<Projection> projections;

  bool operator==(const CrossLayer&) const = default;
};

enum class BuildErrorCode {
  kEmptyLayerSet,
  kLayerIndexMismatch,
  kEmptyComponentSet,
  kEmptyComponentName,
  kDuplicateComponentName,
  kEmptySpecSet,
  kDanglingLinkEndpoint,
  kSelfLoop,
  kCrossLayerIndexMismatch,
  kMissingCrossLayer,
  kEmptyEdgeSet,
};

std::string_view ToString(BuildErrorCode code);

struct Diagnostic {
  BuildErrorCode code;
  int layer = 0;
  std::string subject;
  std::string message;
};

std::string ToString(const Diagnostic& diagnostic);

// Non-fatal finding attached to a network or a report. `code` is a stable
// kebab-case identifier such as "empty-link-set".
struct Warning {
  std::string code;
  int layer = 0;
  std::string subject;
  std::string message;

  auto operator<=>(const Warning&) const = default;
};

class BuildError : public std::runtime_error {
 public:
  explicit BuildError(std::vector<Diagnostic> diagnostics);

  BuildErrorCode code() const { return diagnostics_.front().code; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Index-based undirected simple graph. Vertex i is the i-th component of the
// owning layer in name order; edges[k] corresponds to layer.links[k].
struct Topology {
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(adjacency.size()); }
};

// Projection adjacency of one cross-layer in both directions.
struct ProjectionIndex {
  std::vector<std::vector<int>> down;  // upper vertex -> lower vertices
  std::vector<std::vector<int>> up;    // lower vertex -> upper vertices
};

// Validated, immutable hierarchical multilayer network. Copies share state.
class MultilayerNetwork {
 public:
  // Checks every structural rule eagerly and throws BuildError carrying all
  // diagnostics found. Components, links and projections are normalized into
  // sorted, duplicate-free order.
  static MultilayerNetwork Build(std::vector<Layer> layers,
                                 std::vector<CrossLayer> cross_layers,
                                 Mode mode);

  int layer_count() const;
  Mode mode() const;
  const std::vector<Layer>& layers() const;
  const std::vector<CrossLayer>& cross_layers() const;
  const std::vector<Warning>& warnings() const;

  // 1-based; throws std::out_of_range.
  const Layer& layer(int index) const;
  const CrossLayer& cross_layer(int upper_index) const;
  const Topology& topology(int index) const;
  const ProjectionIndex& projections(int upper_index) const;

  std::optional<int> IndexOf(int layer, std::string_view name) const;
  bool Contains(const ComponentId& id) const;

  std::size_t component_count() const;
  std::size_t link_count() const;
  std::size_t projection_count() const;

  bool operator==(const MultilayerNetwork& other) const;

 private:
  struct State;
  explicit MultilayerNetwork(std::shared_ptr<const State> state);

  std::shared_ptr<const State> state_;
};

inline MultilayerNetwork BuildNetwork(std::vector<Layer> layers,
                                      std::vector<CrossLayer> cross_layers,
                                      Mode mode) {
  return MultilayerNetwork::Build(std::move(layers), std::move(cross_layers),
                                  mode);
}

struct FlatEdge {
  ComponentId from;
  ComponentId to;
  bool interlayer = false;

  auto operator<=>(const FlatEdge&) const = default;
};

// Vertex and edge unions over all layers and cross-layers. Intralayer edges
// keep their layer through the endpoint ids; projections are tagged
// interlayer and run from the upper to the lower component.
struct FlatGraph {
  std::vector<ComponentId> vertices;
  std::vector<FlatEdge> edges;
};

FlatGraph Flatten(const MultilayerNetwork& network);

}  // namespace netstrata

#endif  // NETSTRATA_MODEL_H_
