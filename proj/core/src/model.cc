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

#include "netstrata/model.h"

#include <algorithm>
#include <array>
#include <sstream>

namespace netstrata {

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 2> kModeNames = {{
    {Mode::kStrict, "strict"},
    {Mode::kRelaxed, "relaxed"},
}};

constexpr std::array<std::pair<ComponentKind, std::string_view>, 4>
    kKindNames = {{
        {ComponentKind::kHardware, "hardware"},
        {ComponentKind::kSoftware, "software"},
        {ComponentKind::kPerson, "person"},
        {ComponentKind::kEngineeringSystem, "engineering-system"},
    }};

constexpr std::array<std::pair<LayerRole, std::string_view>, 7> kRoleNames = {{
    {LayerRole::kEngineeringEnvironment, "engineering-environment"},
    {LayerRole::kPhysical, "physical"},
    {LayerRole::kLogical, "logical"},
    {LayerRole::kService, "service"},
    {LayerRole::kFunctional, "functional"},
    {LayerRole::kSocialEnvironment, "social-environment"},
    {LayerRole::kCustom, "custom"},
}};

template <typename Enum, std::size_t N>
std::string_view NameOf(const std::array<std::pair<Enum, std::string_view>, N>& table,
                        Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "unknown";
}

template <typename Enum, std::size_t N>
std::optional<Enum> ValueOf(
    const std::array<std::pair<Enum, std::string_view>, N>& table,
    std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

std::string JoinDiagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  out << "invalid multilayer network";
  for (const auto& d : diagnostics) out << "\n  " << ToString(d);
  return out.str();
}

}  // namespace

std::string_view ToString(Mode mode) { return NameOf(kModeNames, mode); }
std::string_view ToString(ComponentKind kind) {
  return NameOf(kKindNames, kind);
}
std::string_view ToString(LayerRole role) { return NameOf(kRoleNames, role); }

std::optional<Mode> ParseMode(std::string_view text) {
  return ValueOf(kModeNames, text);
}
std::optional<ComponentKind> ParseComponentKind(std::string_view text) {
  return ValueOf(kKindNames, text);
}
std::optional<LayerRole> ParseLayerRole(std::string_view text) {
  return ValueOf(kRoleNames, text);
}

std::string ToString(const ComponentId& id) {
  return "L" + std::to_string(id.layer) + ":" + id.name;
}

std::string ToString(const Link& link) { return link.a + "--" + link.b; }

std::string_view ToString(BuildErrorCode code) {
  switch (code) {
    case BuildErrorCode::kEmptyLayerSet: return "EmptyLayerSet";
    case BuildErrorCode::kLayerIndexMismatch: return "LayerIndexMismatch";
    case BuildErrorCode::kEmptyComponentSet: return "EmptyComponentSet";
    case BuildErrorCode::kEmptyComponentName: return "EmptyComponentName";
    case BuildErrorCode::kDuplicateComponentName:
      return "DuplicateComponentName";
    case BuildErrorCode::kEmptySpecSet: return "EmptySpecSet";
    case BuildErrorCode::kDanglingLinkEndpoint: return "DanglingLinkEndpoint";
    case BuildErrorCode::kSelfLoop: return "SelfLoop";
    case BuildErrorCode::kCrossLayerIndexMismatch:
      return "CrossLayerIndexMismatch";
    case BuildErrorCode::kMissingCrossLayer: return "MissingCrossLayer";
    case BuildErrorCode::kEmptyEdgeSet: return "EmptyEdgeSet";
  }
  return "Unknown";
}

std::string ToString(const Diagnostic& d) {
  std::string out(ToString(d.code));
  out += " (layer " + std::to_string(d.layer);
  if (!d.subject.empty()) out += ", " + d.subject;
  out += "): " + d.message;
  return out;
}

BuildError::BuildError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(JoinDiagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

const Component* Layer::Find(std::string_view name) const {
  auto it = std::lower_bound(
      components.begin(), components.end(), name,
      [](const Component& c, std::string_view n) { return c.name < n; });
  if (it == components.end() || it->name != name) return nullptr;
  return &*it;
}

struct MultilayerNetwork::State {
  Mode mode = Mode::kStrict;
  std::vector<Layer> layers;
  std::vector<CrossLayer> cross_layers;  // cross_layers[i].upper_index == i + 2
  std::vector<Topology> topologies;
  std::vector<ProjectionIndex> projection_indexes;
  std::vector<Warning> warnings;
  std::size_t component_count = 0;
  std::size_t link_count = 0;
  std::size_t projection_count = 0;
};

namespace {

class Builder {
 public:
  explicit Builder(Mode mode) : mode_(mode) {}

  void Error(BuildErrorCode code, int layer, std::string subject,
             std::string message) {
    errors_.push_back({code, layer, std::move(subject), std::move(message)});
  }

  void Warn(std::string code, int layer, std::string subject,
            std::string message) {
    warnings_.push_back(
        {std::move(code), layer, std::move(subject), std::move(message)});
  }

  // Empty link or projection sets: error in strict mode, warning otherwise.
  void EmptySet(std::string_view what, int layer, std::string subject) {
    std::string message = std::string(what) + " set is empty";
    if (mode_ == Mode::kStrict) {
      Error(BuildErrorCode::kEmptyEdgeSet, layer, std::move(subject),
            std::move(message));
    } else {
      Warn(what == "link" ? "empty-link-set" : "empty-projection-set", layer,
           std::move(subject), std::move(message));
    }
  }

  void NormalizeLayer(Layer& layer) {
    const int index = layer.index;
    if (layer.components.empty()) {
      Error(BuildErrorCode::kEmptyComponentSet, index, "",
            "layer has no components");
    }
    std::sort(layer.components.begin(), layer.components.end(),
              [](const Component& x, const Component& y) {
                return x.name < y.name;
              });
    for (std::size_t i = 0; i < layer.components.size(); ++i) {
      const Component& c = layer.components[i];
      if (c.name.empty()) {
        Error(BuildErrorCode::kEmptyComponentName, index, "",
              "component name is empty");
      }
      if (i > 0 && layer.components[i - 1].name == c.name) {
        Error(BuildErrorCode::kDuplicateComponentName, index, c.name,
              "component name appears more than once");
      }
      if (c.spec.protocols.empty()) {
        Error(BuildErrorCode::kEmptySpecSet, index, c.name,
              "component supports no protocol");
      }
      layer.protocols.insert(c.spec.protocols.begin(), c.spec.protocols.end());
    }

    std::vector<Link> links;
    links.reserve(layer.links.size());
    for (const Link& raw : layer.links) {
      Link link = Link::Make(raw.a, raw.b);
      if (link.a == link.b) {
        Error(BuildErrorCode::kSelfLoop, index, ToString(link),
              "link connects a component to itself");
        continue;
      }
      bool dangling = false;
      for (const std::string* end : {&link.a, &link.b}) {
        if (layer.Find(*end) == nullptr) {
          Error(BuildErrorCode::kDanglingLinkEndpoint, index, ToString(link),
                "link endpoint '" + *end + "' is not a component of the layer");
          dangling = true;
        }
      }
      if (!dangling) links.push_back(std::move(link));
    }
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    layer.links = std::move(links);
    if (layer.links.empty()) EmptySet("link", index, "");
  }

  std::vector<Diagnostic> TakeErrors() { return std::move(errors_); }
  std::vector<Warning> TakeWarnings() { return std::move(warnings_); }

 private:
  Mode mode_;
  std::vector<Diagnostic> errors_;
  std::vector<Warning> warnings_;
};

int IndexIn(const Layer& layer, std::string_view name) {
  const Component* c = layer.Find(name);
  return c == nullptr ? -1 : static_cast<int>(c - layer.components.data());
}

}  // namespace

MultilayerNetwork::MultilayerNetwork(std::shared_ptr<const State> state)
    : state_(std::move(state)) {}

MultilayerNetwork MultilayerNetwork::Build(std::vector<Layer> layers,
                                           std::vector<CrossLayer> cross_layers,
                                           Mode mode) {
  Builder builder(mode);
  if (layers.empty()) {
    builder.Error(BuildErrorCode::kEmptyLayerSet, 0, "",
                  "a network needs at least one layer");
    throw BuildError(builder.TakeErrors());
  }

  const int n = static_cast<int>(layers.size());
  for (int i = 0; i < n; ++i) {
    if (layers[i].index != i + 1) {
      builder.Error(BuildErrorCode::kLayerIndexMismatch, layers[i].index, "",
                    "layer at position " + std::to_string(i + 1) +
                        " declares index " + std::to_string(layers[i].index));
    }
    layers[i].index = i + 1;
    builder.NormalizeLayer(layers[i]);
  }

  std::vector<std::optional<CrossLayer>> slots(n + 1);
  for (CrossLayer& cross : cross_layers) {
    const int upper = cross.upper_index;
    if (upper < 2 || upper > n) {
      builder.Error(BuildErrorCode::kCrossLayerIndexMismatch, upper, "",
                    "cross-layer must join layers 2.." + std::to_string(n) +
                        " to the layer below");
      continue;
    }
    if (slots[upper]) {
      builder.Error(BuildErrorCode::kCrossLayerIndexMismatch, upper, "",
                    "more than one cross-layer above layer " +
                        std::to_string(upper - 1));
      continue;
    }
    const Layer& hi = layers[upper - 1];
    const Layer& lo = layers[upper - 2];
    std::vector<Projection> kept;
    kept.reserve(cross.projections.size());
    for (Projection& p : cross.projections) {
      bool ok = true;
      if (hi.Find(p.upper) == nullptr) {
        builder.Error(BuildErrorCode::kDanglingLinkEndpoint, upper,
                      p.upper + "->" + p.lower,
                      "projection source '" + p.upper +
                          "' is not a component of layer " +
                          std::to_string(upper));
        ok = false;
      }
      if (lo.Find(p.lower) == nullptr) {
        builder.Error(BuildErrorCode::kDanglingLinkEndpoint, upper,
                      p.upper + "->" + p.lower,
                      "projection target '" + p.lower +
                          "' is not a component of layer " +
                          std::to_string(upper - 1));
        ok = false;
      }
      if (ok) kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty() && cross.projections.empty()) {
      builder.EmptySet("projection", upper, "");
    }
    cross.projections = std::move(kept);
    slots[upper] = std::move(cross);
  }
  for (int upper = 2; upper <= n; ++upper) {
    if (!slots[upper]) {
      builder.Error(BuildErrorCode::kMissingCrossLayer, upper, "",
                    "no cross-layer joins layer " + std::to_string(upper) +
                        " to layer " + std::to_string(upper - 1));
    }
  }

  auto errors = builder.TakeErrors();
  if (!errors.empty()) throw BuildError(std::move(errors));

  auto state = std::make_shared<State>();
  state->mode = mode;
  state->warnings = builder.TakeWarnings();
  std::sort(state->warnings.begin(), state->warnings.end());

  state->topologies.reserve(n);
  for (const Layer& layer : layers) {
    Topology topo;
    topo.adjacency.resize(layer.components.size());
    topo.edges.reserve(layer.links.size());
    for (const Link& link : layer.links) {
      const int a = IndexIn(layer, link.a);
      const int b = IndexIn(layer, link.b);
      topo.edges.emplace_back(a, b);
      topo.adjacency[a].push_back(b);
      topo.adjacency[b].push_back(a);
    }
    state->component_count += layer.components.size();
    state->link_count += layer.links.size();
    state->topologies.push_back(std::move(topo));
  }

  for (int upper = 2; upper <= n; ++upper) {
    CrossLayer& cross = *slots[upper];
    const Layer& hi = layers[upper - 1];
    const Layer& lo = layers[upper - 2];
    ProjectionIndex index;
    index.down.resize(hi.components.size());
    index.up.resize(lo.components.size());
    for (const Projection& p : cross.projections) {
      const int u = IndexIn(hi, p.upper);
      const int l = IndexIn(lo, p.lower);
      index.down[u].push_back(l);
      index.up[l].push_back(u);
    }
    state->projection_count += cross.projections.size();
    state->projection_indexes.push_back(std::move(index));
    state->cross_layers.push_back(std::move(cross));
  }
  state->layers = std::move(layers);
  return MultilayerNetwork(std::move(state));
}

int MultilayerNetwork::layer_count() const {
  return static_cast<int>(state_->layers.size());
}
Mode MultilayerNetwork::mode() const { return state_->mode; }
const std::vector<Layer>& MultilayerNetwork::layers() const {
  return state_->layers;
}
const std::vector<CrossLayer>& MultilayerNetwork::cross_layers() const {
  return state_->cross_layers;
}
const std::vector<Warning>& MultilayerNetwork::warnings() const {
  return state_->warnings;
}

const Layer& MultilayerNetwork::layer(int index) const {
  if (index < 1 || index > layer_count()) {
    throw std::out_of_range("no layer " + std::to_string(index));
  }
  return state_->layers[index - 1];
}

const CrossLayer& MultilayerNetwork::cross_layer(int upper_index) const {
  if (upper_index < 2 || upper_index > layer_count()) {
    throw std::out_of_range("no cross-layer above layer " +
                            std::to_string(upper_index - 1));
  }
  return state_->cross_layers[upper_index - 2];
}

const Topology& MultilayerNetwork::topology(int index) const {
  layer(index);
  return state_->topologies[index - 1];
}

const ProjectionIndex& MultilayerNetwork::projections(int upper_index) const {
  cross_layer(upper_index);
  return state_->projection_indexes[upper_index - 2];
}

std::optional<int> MultilayerNetwork::IndexOf(int layer_index,
                                              std::string_view name) const {
  if (layer_index < 1 || layer_index > layer_count()) return std::nullopt;
  const int i = IndexIn(state_->layers[layer_index - 1], name);
  if (i < 0) return std::nullopt;
  return i;
}

bool MultilayerNetwork::Contains(const ComponentId& id) const {
  return IndexOf(id.layer, id.name).has_value();
}

std::size_t MultilayerNetwork::component_count() const {
  return state_->component_count;
}
std::size_t MultilayerNetwork::link_count() const { return state_->link_count; }
std::size_t MultilayerNetwork::projection_count() const {
  return state_->projection_count;
}

bool MultilayerNetwork::operator==(const MultilayerNetwork& other) const {
  if (state_ == other.state_) return true;
  return state_->mode == other.state_->mode &&
         state_->layers == other.state_->layers &&
         state_->cross_layers == other.state_->cross_layers;
}

FlatGraph Flatten(const MultilayerNetwork& network) {
  FlatGraph flat;
  flat.vertices.reserve(network.component_count());
  flat.edges.reserve(network.link_count() + network.projection_count());
  for (const Layer& layer : network.layers()) {
    for (const Component& c : layer.components) {
      flat.vertices.push_back({layer.index, c.name});
    }
    for (const Link& link : layer.links) {
      flat.edges.push_back(
          {{layer.index, link.a}, {layer.index, link.b}, false});
    }
  }
  for (const CrossLayer& cross : network.cross_layers()) {
    for (const Projection& p : cross.projections) {
      flat.edges.push_back({{cross.upper_index, p.upper},
                            {cross.upper_index - 1, p.lower},
                            true});
    }
  }
  return flat;
}

}  // namespace netstrata
