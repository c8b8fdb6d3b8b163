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

#ifndef NETSTRATA_REFERENCE_MODEL_H_
#define NETSTRATA_REFERENCE_MODEL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netstrata/consistency.h"
#include "netstrata/model.h"

namespace netstrata {

// basic:    physical < logical < service < functional
// extended: engineering-environment < basic < social-environment
enum class ReferenceKind { kBasic, kExtended };

std::string_view ToString(ReferenceKind kind);
std::optional<ReferenceKind> ParseReferenceKind(std::string_view text);

// Required roles bottom to top.
std::span<const LayerRole> RequiredRoles(ReferenceKind kind);

struct OrderViolation {
  int layer = 0;
  LayerRole role = LayerRole::kCustom;
  std::string detail;
};

struct ConformanceReport {
  ReferenceKind kind = ReferenceKind::kBasic;
  bool conforms = false;
  std::vector<LayerRole> missing_roles;
  std::vector<OrderViolation> order_violations;
  std::vector<int> extras;  // indices of custom layers
};

// Custom layers are always listed in `extras`. In strict mode each one is
// also an order violation; in relaxed mode only those lying outside the span
// of required roles are.
ConformanceReport CheckReferenceConformance(const MultilayerNetwork& network,
                                            ReferenceKind kind);

// Component kinds admitted per role:
//   engineering-environment  engineering-system, hardware
//   physical                 hardware
//   logical/service/functional  software
//   social-environment       person
//   custom                   anything
bool RoleAdmits(LayerRole role, ComponentKind kind);

std::vector<Violation> RoleKindConstraints(const MultilayerNetwork& network);

}  // namespace netstrata

#endif  // NETSTRATA_REFERENCE_MODEL_H_
