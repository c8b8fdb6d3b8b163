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

#include "netstrata/reference_model.h"

#include <algorithm>
#include <array>

namespace netstrata {

namespace {

constexpr std::array<LayerRole, 4> kBasicStack = {
    LayerRole::kPhysical, LayerRole::kLogical, LayerRole::kService,
    LayerRole::kFunctional};

constexpr std::array<LayerRole, 6> kExtendedStack = {
    LayerRole::kEngineeringEnvironment, LayerRole::kPhysical,
    LayerRole::kLogical,                LayerRole::kService,
    LayerRole::kFunctional,             LayerRole::kSocialEnvironment};

int RankIn(std::span<const LayerRole> stack, LayerRole role) {
  auto it = std::find(stack.begin(), stack.end(), role);
  return it == stack.end() ? -1 : static_cast<int>(it - stack.begin());
}

std::string Name(LayerRole role) { return std::string(ToString(role)); }

}  // namespace

std::string_view ToString(ReferenceKind kind) {
  return kind == ReferenceKind::kBasic ? "basic" : "extended";
}

std::optional<ReferenceKind> ParseReferenceKind(std::string_view text) {
  if (text == "basic") return ReferenceKind::kBasic;
  if (text == "extended") return ReferenceKind::kExtended;
  return std::nullopt;
}

std::span<const LayerRole> RequiredRoles(ReferenceKind kind) {
  if (kind == ReferenceKind::kBasic) return kBasicStack;
  return kExtendedStack;
}

ConformanceReport CheckReferenceConformance(const MultilayerNetwork& network,
                                            ReferenceKind kind) {
  const auto stack = RequiredRoles(kind);
  ConformanceReport report;
  report.kind = kind;

  std::vector<int> seen_at(stack.size(), 0);
  int top_rank = -1;
  int top_layer = 0;
  int first_required = 0;
  int last_required = 0;

  for (const Layer& layer : network.layers()) {
    if (layer.role == LayerRole::kCustom) {
      report.extras.push_back(layer.index);
      continue;
    }
    const int rank = RankIn(stack, layer.role);
    if (rank < 0) {
      report.order_violations.push_back(
          {layer.index, layer.role,
           Name(layer.role) + " is not a role of the " +
               std::string(ToString(kind)) + " stack"});
      continue;
    }
    if (first_required == 0) first_required = layer.index;
    last_required = layer.index;
    if (seen_at[rank] != 0) {
      report.order_violations.push_back(
          {layer.index, layer.role,
           Name(layer.role) + " already assigned to layer " +
               std::to_string(seen_at[rank])});
      continue;
    }
    seen_at[rank] = layer.index;
    if (rank < top_rank) {
      report.order_violations.push_back(
          {layer.index, layer.role,
           Name(layer.role) + " lies above " + Name(stack[top_rank]) +
               " (layer " + std::to_string(top_layer) + ")"});
    } else {
      top_rank = rank;
      top_layer = layer.index;
    }
  }

  for (int extra : report.extras) {
    const bool inside = first_required != 0 && extra > first_required &&
                        extra < last_required;
    if (network.mode() == Mode::kStrict) {
      report.order_violations.push_back(
          {extra, LayerRole::kCustom, "custom layer not allowed in strict mode"});
    } else if (!inside) {
      report.order_violations.push_back(
          {extra, LayerRole::kCustom,
           "custom layer lies outside the required stack"});
    }
  }
  std::stable_sort(report.order_violations.begin(),
                   report.order_violations.end(),
                   [](const OrderViolation& a, const OrderViolation& b) {
                     return a.layer < b.layer;
                   });

  for (std::size_t r = 0; r < stack.size(); ++r) {
    if (seen_at[r] == 0) report.missing_roles.push_back(stack[r]);
  }
  report.conforms =
      report.missing_roles.empty() && report.order_violations.empty();
  return report;
}

bool RoleAdmits(LayerRole role, ComponentKind kind) {
  switch (role) {
    case LayerRole::kEngineeringEnvironment:
      return kind == ComponentKind::kEngineeringSystem ||
             kind == ComponentKind::kHardware;
    case LayerRole::kPhysical:
      return kind == ComponentKind::kHardware;
    case LayerRole::kLogical:
    case LayerRole::kService:
    case LayerRole::kFunctional:
      return kind == ComponentKind::kSoftware;
    case LayerRole::kSocialEnvironment:
      return kind == ComponentKind::kPerson;
    case LayerRole::kCustom:
      return true;
  }
  return false;
}

std::vector<Violation> RoleKindConstraints(const MultilayerNetwork& network) {
  std::vector<Violation> out;
  for (const Layer& layer : network.layers()) {
    for (const Component& c : layer.components) {
      if (RoleAdmits(layer.role, c.kind)) continue;
      out.push_back({ViolationKind::kRoleKindMismatch, layer.index, c.name,
                     std::nullopt,
                     std::string(ToString(c.kind)) + " component on a " +
                         Name(layer.role) + " layer"});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace netstrata
