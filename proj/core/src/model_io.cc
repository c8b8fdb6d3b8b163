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

#include "netstrata/model_io.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace netstrata {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string Child(const std::string& pointer, std::string_view key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return pointer + "/" + escaped;
}

std::string Child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

std::string_view TypeName(const json& value) { return value.type_name(); }

[[noreturn]] void Fail(ParseErrorCode code, const std::string& pointer,
                       std::string message) {
  throw ParseError(code, std::move(message), 0, 0, pointer);
}

void ExpectType(const json& value, json::value_t type, std::string_view want,
                const std::string& pointer) {
  if (value.type() == type) return;
  Fail(ParseErrorCode::kTypeMismatch, pointer,
       "expected " + std::string(want) + ", found " +
           std::string(TypeName(value)));
}

void ExpectObject(const json& value, const std::string& pointer,
                  std::initializer_list<std::string_view> allowed) {
  ExpectType(value, json::value_t::object, "object", pointer);
  for (const auto& [key, _] : value.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(ParseErrorCode::kUnknownField, Child(pointer, key),
           "unknown field '" + key + "'");
    }
  }
}

const json* Optional(const json& object, std::string_view key) {
  auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

const json& Required(const json& object, std::string_view key,
                     const std::string& pointer) {
  const json* value = Optional(object, key);
  if (value == nullptr) {
    Fail(ParseErrorCode::kMissingField, pointer,
         "missing required field '" + std::string(key) + "'");
  }
  return *value;
}

std::string String(const json& value, const std::string& pointer) {
  ExpectType(value, json::value_t::string, "string", pointer);
  return value.get<std::string>();
}

std::string Name(const json& value, const std::string& pointer) {
  std::string s = String(value, pointer);
  if (s.empty()) Fail(ParseErrorCode::kInvalidValue, pointer, "empty name");
  return s;
}

int Integer(const json& value, const std::string& pointer) {
  if (!value.is_number_integer()) {
    Fail(ParseErrorCode::kTypeMismatch, pointer,
         "expected integer, found " + std::string(TypeName(value)));
  }
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > 1'000'000) Fail(ParseErrorCode::kInvalidValue, pointer, "out of range");
    return static_cast<int>(u);
  }
  const auto i = value.get<std::int64_t>();
  if (i < -1'000'000 || i > 1'000'000) {
    Fail(ParseErrorCode::kInvalidValue, pointer, "out of range");
  }
  return static_cast<int>(i);
}

const json& Array(const json& value, const std::string& pointer) {
  ExpectType(value, json::value_t::array, "array", pointer);
  return value;
}

std::pair<std::string, std::string> NamePair(const json& value,
                                             const std::string& pointer) {
  Array(value, pointer);
  if (value.size() != 2) {
    Fail(ParseErrorCode::kInvalidValue, pointer,
         "expected a pair of names, found " + std::to_string(value.size()) +
             " elements");
  }
  return {Name(value[0], Child(pointer, 0)), Name(value[1], Child(pointer, 1))};
}

template <typename T>
void SortUnique(std::vector<T>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

std::pair<int, int> LineColumn(std::string_view text, std::size_t byte) {
  // nlohmann reports the count of consumed bytes; the offending character is
  // the last one consumed.
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Component ParseComponent(const json& value, const std::string& ptr) {
  ExpectObject(value, ptr, {"name", "kind", "protocols", "attributes"});
  Component c;
  c.name = Name(Required(value, "name", ptr), Child(ptr, "name"));
  const std::string kind_ptr = Child(ptr, "kind");
  const std::string kind = String(Required(value, "kind", ptr), kind_ptr);
  const auto parsed = ParseComponentKind(kind);
  if (!parsed) {
    Fail(ParseErrorCode::kInvalidValue, kind_ptr,
         "unknown component kind '" + kind + "'");
  }
  c.kind = *parsed;
  const std::string proto_ptr = Child(ptr, "protocols");
  const json& protocols = Array(Required(value, "protocols", ptr), proto_ptr);
  for (std::size_t i = 0; i < protocols.size(); ++i) {
    c.spec.protocols.insert(Name(protocols[i], Child(proto_ptr, i)));
  }
  if (c.spec.protocols.empty()) {
    Fail(ParseErrorCode::kInvalidValue, proto_ptr,
         "component '" + c.name + "' must support at least one protocol");
  }
  if (const json* attrs = Optional(value, "attributes")) {
    const std::string attr_ptr = Child(ptr, "attributes");
    ExpectType(*attrs, json::value_t::object, "object", attr_ptr);
    for (const auto& [key, v] : attrs->items()) {
      c.spec.attributes.emplace(key, String(v, Child(attr_ptr, key)));
    }
  }
  return c;
}

Layer ParseLayer(const json& value, const std::string& ptr, int position) {
  ExpectObject(value, ptr, {"index", "role", "protocols", "components", "links"});
  Layer layer;
  layer.index = position;
  if (const json* index = Optional(value, "index")) {
    const int declared = Integer(*index, Child(ptr, "index"));
    if (declared != position) {
      Fail(ParseErrorCode::kInvalidValue, Child(ptr, "index"),
           "layer at position " + std::to_string(position) +
               " declares index " + std::to_string(declared));
    }
  }
  const std::string role_ptr = Child(ptr, "role");
  const std::string role = String(Required(value, "role", ptr), role_ptr);
  const auto parsed = ParseLayerRole(role);
  if (!parsed) {
    Fail(ParseErrorCode::kInvalidValue, role_ptr,
         "unknown layer role '" + role + "'");
  }
  layer.role = *parsed;

  if (const json* protocols = Optional(value, "protocols")) {
    const std::string proto_ptr = Child(ptr, "protocols");
    Array(*protocols, proto_ptr);
    for (std::size_t i = 0; i < protocols->size(); ++i) {
      layer.protocols.insert(Name((*protocols)[i], Child(proto_ptr, i)));
    }
  }

  const std::string comp_ptr = Child(ptr, "components");
  const json& components = Array(Required(value, "components", ptr), comp_ptr);
  std::set<std::string> names;
  for (std::size_t i = 0; i < components.size(); ++i) {
    Component c = ParseComponent(components[i], Child(comp_ptr, i));
    if (!names.insert(c.name).second) {
      Fail(ParseErrorCode::kDuplicateName, Child(Child(comp_ptr, i), "name"),
           "duplicate component '" + c.name + "' on layer " +
               std::to_string(position));
    }
    layer.components.push_back(std::move(c));
  }
  std::sort(layer.components.begin(), layer.components.end(),
            [](const Component& a, const Component& b) { return a.name < b.name; });

  if (const json* links = Optional(value, "links")) {
    const std::string links_ptr = Child(ptr, "links");
    Array(*links, links_ptr);
    for (std::size_t i = 0; i < links->size(); ++i) {
      const std::string link_ptr = Child(links_ptr, i);
      auto [a, b] = NamePair((*links)[i], link_ptr);
      for (int side = 0; side < 2; ++side) {
        const std::string& end = side == 0 ? a : b;
        if (!names.count(end)) {
          Fail(ParseErrorCode::kDanglingReference, Child(link_ptr, side),
               "link endpoint '" + end + "' is not a component of layer " +
                   std::to_string(position));
        }
      }
      if (a == b) {
        Fail(ParseErrorCode::kInvalidValue, link_ptr,
             "link connects '" + a + "' to itself");
      }
      layer.links.push_back(Link::Make(std::move(a), std::move(b)));
    }
    SortUnique(layer.links);
  }
  return layer;
}

CrossLayer ParseCrossLayer(const json& value, const std::string& ptr,
                           const std::vector<Layer>& layers) {
  ExpectObject(value, ptr, {"upper", "projections"});
  CrossLayer cross;
  const std::string upper_ptr = Child(ptr, "upper");
  cross.upper_index = Integer(Required(value, "upper", ptr), upper_ptr);
  const int n = static_cast<int>(layers.size());
  if (cross.upper_index < 2 || cross.upper_index > n) {
    Fail(ParseErrorCode::kDanglingReference, upper_ptr,
         "cross-layer upper index " + std::to_string(cross.upper_index) +
             " does not name a layer in 2.." + std::to_string(n));
  }
  const Layer& hi = layers[cross.upper_index - 1];
  const Layer& lo = layers[cross.upper_index - 2];
  const std::string proj_ptr = Child(ptr, "projections");
  const json& projections = Array(Required(value, "projections", ptr), proj_ptr);
  for (std::size_t i = 0; i < projections.size(); ++i) {
    const std::string p_ptr = Child(proj_ptr, i);
    auto [upper, lower] = NamePair(projections[i], p_ptr);
    if (hi.Find(upper) == nullptr) {
      Fail(ParseErrorCode::kDanglingReference, Child(p_ptr, 0),
           "projection source '" + upper + "' is not a component of layer " +
               std::to_string(hi.index));
    }
    if (lo.Find(lower) == nullptr) {
      Fail(ParseErrorCode::kDanglingReference, Child(p_ptr, 1),
           "projection target '" + lower + "' is not a component of layer " +
               std::to_string(lo.index));
    }
    cross.projections.push_back({std::move(upper), std::move(lower)});
  }
  SortUnique(cross.projections);
  return cross;
}

FaultScenario ParseScenario(const json& value, const std::string& ptr,
                            const std::vector<Layer>& layers) {
  ExpectObject(value, ptr, {"label", "failed_nodes", "failed_links"});
  FaultScenario scenario;
  scenario.label = Name(Required(value, "label", ptr), Child(ptr, "label"));
  const int n = static_cast<int>(layers.size());

  auto layer_at = [&](const json& entry, const std::string& entry_ptr) -> const Layer& {
    const std::string layer_ptr = Child(entry_ptr, "layer");
    const int index = Integer(Required(entry, "layer", entry_ptr), layer_ptr);
    if (index < 1 || index > n) {
      Fail(ParseErrorCode::kDanglingReference, layer_ptr,
           "no layer " + std::to_string(index));
    }
    return layers[index - 1];
  };

  if (const json* nodes = Optional(value, "failed_nodes")) {
    const std::string nodes_ptr = Child(ptr, "failed_nodes");
    Array(*nodes, nodes_ptr);
    for (std::size_t i = 0; i < nodes->size(); ++i) {
      const std::string e_ptr = Child(nodes_ptr, i);
      ExpectObject((*nodes)[i], e_ptr, {"layer", "name"});
      const Layer& layer = layer_at((*nodes)[i], e_ptr);
      std::string name = Name(Required((*nodes)[i], "name", e_ptr), Child(e_ptr, "name"));
      if (layer.Find(name) == nullptr) {
        Fail(ParseErrorCode::kDanglingReference, Child(e_ptr, "name"),
             "scenario node '" + name + "' is not a component of layer " +
                 std::to_string(layer.index));
      }
      scenario.failed_nodes.push_back({layer.index, std::move(name)});
    }
  }
  if (const json* links = Optional(value, "failed_links")) {
    const std::string links_ptr = Child(ptr, "failed_links");
    Array(*links, links_ptr);
    for (std::size_t i = 0; i < links->size(); ++i) {
      const std::string e_ptr = Child(links_ptr, i);
      ExpectObject((*links)[i], e_ptr, {"layer", "link"});
      const Layer& layer = layer_at((*links)[i], e_ptr);
      const std::string link_ptr = Child(e_ptr, "link");
      auto [a, b] = NamePair(Required((*links)[i], "link", e_ptr), link_ptr);
      Link link = Link::Make(std::move(a), std::move(b));
      if (!std::binary_search(layer.links.begin(), layer.links.end(), link)) {
        Fail(ParseErrorCode::kDanglingReference, link_ptr,
             "scenario link '" + ToString(link) + "' is not a link of layer " +
                 std::to_string(layer.index));
      }
      scenario.failed_links.push_back({layer.index, std::move(link)});
    }
  }
  SortUnique(scenario.failed_nodes);
  SortUnique(scenario.failed_links);
  return scenario;
}

ModelDocument ParseDocument(const json& root) {
  ExpectObject(root, "", {"format_version", "mode", "layers", "cross_layers",
                          "scenarios"});
  ModelDocument doc;
  const json& version = Required(root, "format_version", "");
  doc.format_version = String(version, "/format_version");
  if (doc.format_version != kModelFormatVersion) {
    throw ParseError(ParseErrorCode::kUnsupportedFormatVersion,
                     "format_version '" + doc.format_version +
                         "' is not supported (expected '" +
                         std::string(kModelFormatVersion) + "')",
                     0, 0, "/format_version");
  }
  if (const json* mode = Optional(root, "mode")) {
    const std::string text = String(*mode, "/mode");
    const auto parsed = ParseMode(text);
    if (!parsed) {
      Fail(ParseErrorCode::kInvalidValue, "/mode", "unknown mode '" + text + "'");
    }
    doc.mode = *parsed;
  }

  const json& layers = Array(Required(root, "layers", ""), "/layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    doc.layers.push_back(
        ParseLayer(layers[i], Child("/layers", i), static_cast<int>(i) + 1));
  }

  if (const json* cross = Optional(root, "cross_layers")) {
    Array(*cross, "/cross_layers");
    std::set<int> seen;
    for (std::size_t i = 0; i < cross->size(); ++i) {
      const std::string ptr = Child("/cross_layers", i);
      CrossLayer c = ParseCrossLayer((*cross)[i], ptr, doc.layers);
      if (!seen.insert(c.upper_index).second) {
        Fail(ParseErrorCode::kDuplicateName, Child(ptr, "upper"),
             "second cross-layer above layer " +
                 std::to_string(c.upper_index - 1));
      }
      doc.cross_layers.push_back(std::move(c));
    }
    std::sort(doc.cross_layers.begin(), doc.cross_layers.end(),
              [](const CrossLayer& a, const CrossLayer& b) {
                return a.upper_index < b.upper_index;
              });
  }

  if (const json* scenarios = Optional(root, "scenarios")) {
    Array(*scenarios, "/scenarios");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < scenarios->size(); ++i) {
      const std::string ptr = Child("/scenarios", i);
      FaultScenario s = ParseScenario((*scenarios)[i], ptr, doc.layers);
      if (!labels.insert(s.label).second) {
        Fail(ParseErrorCode::kDuplicateName, Child(ptr, "label"),
             "duplicate scenario label '" + s.label + "'");
      }
      doc.scenarios.push_back(std::move(s));
    }
    std::sort(doc.scenarios.begin(), doc.scenarios.end(),
              [](const FaultScenario& a, const FaultScenario& b) {
                return a.label < b.label;
              });
  }
  return doc;
}

ordered_json PairOf(const std::string& a, const std::string& b) {
  return ordered_json::array({a, b});
}

}  // namespace

std::string_view ToString(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::kSyntaxError: return "SyntaxError";
    case ParseErrorCode::kUnknownField: return "UnknownField";
    case ParseErrorCode::kMissingField: return "MissingField";
    case ParseErrorCode::kTypeMismatch: return "TypeMismatch";
    case ParseErrorCode::kInvalidValue: return "InvalidValue";
    case ParseErrorCode::kDuplicateName: return "DuplicateName";
    case ParseErrorCode::kDanglingReference: return "DanglingReference";
    case ParseErrorCode::kUnsupportedFormatVersion:
      return "UnsupportedFormatVersion";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorCode code, std::string message, int line,
                       int column, std::string pointer)
    : std::runtime_error([&] {
        std::string where = line > 0 ? "line " + std::to_string(line) +
                                           ", column " + std::to_string(column)
                            : pointer.empty() ? "document root"
                                              : pointer;
        return std::string(ToString(code)) + " at " + where + ": " + message;
      }()),
      code_(code),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      pointer_(std::move(pointer)) {}

std::string ParseError::position() const {
  if (line_ > 0) {
    return "line " + std::to_string(line_) + ", column " +
           std::to_string(column_);
  }
  return pointer_.empty() ? "document root" : pointer_;
}

ModelDocument ParseModel(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = LineColumn(text, e.byte);
    std::string message = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...: "
    // prefix; the position is reported separately.
    if (auto colon = message.find(": "); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    throw ParseError(ParseErrorCode::kSyntaxError, message, line, column, "");
  }
  try {
    return ParseDocument(root);
  } catch (const json::exception& e) {
    throw ParseError(ParseErrorCode::kTypeMismatch, e.what(), 0, 0, "");
  }
}

std::string SerializeModel(const ModelDocument& document) {
  ordered_json root;
  root["format_version"] = document.format_version;
  root["mode"] = std::string(ToString(document.mode));

  ordered_json layers = ordered_json::array();
  for (const Layer& layer : document.layers) {
    std::vector<const Component*> components;
    for (const Component& c : layer.components) components.push_back(&c);
    std::sort(components.begin(), components.end(),
              [](const Component* a, const Component* b) { return a->name < b->name; });

    ordered_json l;
    l["index"] = layer.index;
    l["role"] = std::string(ToString(layer.role));
    l["protocols"] = ordered_json(std::vector<std::string>(
        layer.protocols.begin(), layer.protocols.end()));
    ordered_json comps = ordered_json::array();
    for (const Component* c : components) {
      ordered_json jc;
      jc["name"] = c->name;
      jc["kind"] = std::string(ToString(c->kind));
      jc["protocols"] = ordered_json(std::vector<std::string>(
          c->spec.protocols.begin(), c->spec.protocols.end()));
      if (!c->spec.attributes.empty()) {
        ordered_json attrs = ordered_json::object();
        for (const auto& [k, v] : c->spec.attributes) attrs[k] = v;
        jc["attributes"] = std::move(attrs);
      }
      comps.push_back(std::move(jc));
    }
    l["components"] = std::move(comps);

    std::vector<Link> links;
    for (const Link& link : layer.links) links.push_back(Link::Make(link.a, link.b));
    SortUnique(links);
    ordered_json jl = ordered_json::array();
    for (const Link& link : links) jl.push_back(PairOf(link.a, link.b));
    l["links"] = std::move(jl);
    layers.push_back(std::move(l));
  }
  root["layers"] = std::move(layers);

  std::vector<const CrossLayer*> crosses;
  for (const CrossLayer& c : document.cross_layers) crosses.push_back(&c);
  std::sort(crosses.begin(), crosses.end(),
            [](const CrossLayer* a, const CrossLayer* b) {
              return a->upper_index < b->upper_index;
            });
  ordered_json cross = ordered_json::array();
  for (const CrossLayer* c : crosses) {
    std::vector<Projection> projections = c->projections;
    SortUnique(projections);
    ordered_json jp = ordered_json::array();
    for (const Projection& p : projections) jp.push_back(PairOf(p.upper, p.lower));
    ordered_json jc;
    jc["upper"] = c->upper_index;
    jc["projections"] = std::move(jp);
    cross.push_back(std::move(jc));
  }
  root["cross_layers"] = std::move(cross);

  std::vector<FaultScenario> scenarios = document.scenarios;
  std::sort(scenarios.begin(), scenarios.end(),
            [](const FaultScenario& a, const FaultScenario& b) {
              return a.label < b.label;
            });
  ordered_json js = ordered_json::array();
  for (FaultScenario& s : scenarios) {
    SortUnique(s.failed_nodes);
    for (LayerLink& ll : s.failed_links) ll.link = Link::Make(ll.link.a, ll.link.b);
    SortUnique(s.failed_links);
    ordered_json entry;
    entry["label"] = s.label;
    ordered_json nodes = ordered_json::array();
    for (const ComponentId& id : s.failed_nodes) {
      ordered_json n;
      n["layer"] = id.layer;
      n["name"] = id.name;
      nodes.push_back(std::move(n));
    }
    ordered_json links = ordered_json::array();
    for (const LayerLink& ll : s.failed_links) {
      ordered_json n;
      n["layer"] = ll.layer;
      n["link"] = PairOf(ll.link.a, ll.link.b);
      links.push_back(std::move(n));
    }
    entry["failed_nodes"] = std::move(nodes);
    entry["failed_links"] = std::move(links);
    js.push_back(std::move(entry));
  }
  root["scenarios"] = std::move(js);
  return root.dump(2) + "\n";
}

MultilayerNetwork BuildNetwork(const ModelDocument& document,
                               std::optional<Mode> mode_override) {
  return MultilayerNetwork::Build(document.layers, document.cross_layers,
                                  mode_override.value_or(document.mode));
}

ModelDocument ToDocument(const MultilayerNetwork& network,
                         std::vector<FaultScenario> scenarios) {
  ModelDocument doc;
  doc.mode = network.mode();
  doc.layers = network.layers();
  doc.cross_layers = network.cross_layers();
  doc.scenarios = std::move(scenarios);
  return doc;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace netstrata
