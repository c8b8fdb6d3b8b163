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

#ifndef NETSTRATA_DOT_EXPORT_H_
#define NETSTRATA_DOT_EXPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "netstrata/model.h"

namespace netstrata {

enum class DotView {
  kFlatten,      // all layers, one cluster each, dashed projection edges
  kPerLayer,     // one cluster per layer, intralayer links only
  kPerSublayer,  // one cluster per protocol sub-layer inside each layer
};

std::optional<DotView> ParseDotView(std::string_view text);

// Undirected DOT graph. `only_layer` restricts the per-layer and
// per-sublayer views to one layer; it is ignored by the flatten view.
std::string ExportDot(const MultilayerNetwork& network, DotView view,
                      std::optional<int> only_layer = std::nullopt);

}  // namespace netstrata

#endif  // NETSTRATA_DOT_EXPORT_H_
