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

#include "netstrata/dot_export.h"

#include <sstream>

#include "netstrata/multiplex.h"

namespace netstrata {

namespace {

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

std::string NodeId(int layer, std::string_view name) {
  return Quote("L" + std::to_string(layer) + ":" + std::string(name));
}

std::string SubNodeId(int layer, std::string_view protocol,
                      std::string_view name) {
  return Quote("L" + std::to_string(layer) + ":" + std::string(protocol) + ":" +
               std::string(name));
}

std::string LayerLabel(const Layer& layer) {
  return Quote("L" + std::to_string(layer.index) + " " +
               std::string(ToString(layer.role)));
}

void WriteLayerCluster(std::ostream& out, const Layer& layer) {
  out << "  subgraph " << Quote("cluster_L" + std::to_string(layer.index))
      << " {\n";
  out << "    label=" << LayerLabel(layer) << ";\n";
  for (const Component& c : layer.components) {
    out << "    " << NodeId(layer.index, c.name) << " [label=" << Quote(c.name)
        << "];\n";
  }
  for (const Link& link : layer.links) {
    out << "    " << NodeId(layer.index, link.a) << " -- "
        << NodeId(layer.index, link.b) << ";\n";
  }
  out << "  }\n";
}

void WriteSublayerClusters(std::ostream& out, const Layer& layer) {
  out << "  subgraph " << Quote("cluster_L" + std::to_string(layer.index))
      << " {\n";
  out << "    label=" << LayerLabel(layer) << ";\n";
  for (const ProtocolSubLayer& sub : DecomposeLayer(layer).sublayers) {
    out << "    subgraph "
        << Quote("cluster_L" + std::to_string(layer.index) + "_" + sub.protocol)
        << " {\n";
    out << "      label=" << Quote(sub.protocol) << ";\n";
    for (const Component& c : layer.components) {
      out << "      " << SubNodeId(layer.index, sub.protocol, c.name)
          << " [label=" << Quote(c.name) << "];\n";
    }
    for (const Link& link : sub.links) {
      out << "      " << SubNodeId(layer.index, sub.protocol, link.a) << " -- "
          << SubNodeId(layer.index, sub.protocol, link.b) << ";\n";
    }
    out << "    }\n";
  }
  out << "  }\n";
}

}  // namespace

std::optional<DotView> ParseDotView(std::string_view text) {
  if (text == "flatten") return DotView::kFlatten;
  if (text == "layers") return DotView::kPerLayer;
  if (text == "sublayers") return DotView::kPerSublayer;
  return std::nullopt;
}

std::string ExportDot(const MultilayerNetwork& network, DotView view,
                      std::optional<int> only_layer) {
  if (only_layer) network.layer(*only_layer);
  std::ostringstream out;
  out << "graph multilayer {\n";
  out << "  compound=true;\n";
  out << "  node [shape=ellipse];\n";
  for (const Layer& layer : network.layers()) {
    if (view != DotView::kFlatten && only_layer && layer.index != *only_layer) {
      continue;
    }
    if (view == DotView::kPerSublayer) {
      WriteSublayerClusters(out, layer);
    } else {
      WriteLayerCluster(out, layer);
    }
  }
  if (view == DotView::kFlatten) {
    for (const CrossLayer& cross : network.cross_layers()) {
      for (const Projection& p : cross.projections) {
        out << "  " << NodeId(cross.upper_index, p.upper) << " -- "
            << NodeId(cross.upper_index - 1, p.lower) << " [style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace netstrata
