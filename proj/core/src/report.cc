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

#include "netstrata/report.h"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace netstrata {

namespace {

using Json = nlohmann::ordered_json;

Json Envelope(std::string_view kind) {
  Json j;
  j["report_version"] = std::string(kReportSchemaVersion);
  j["report"] = std::string(kind);
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string Fixed(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

Json ToJson(const Link& link) { return Json::array({link.a, link.b}); }

Json ToJson(const ComponentId& id) {
  Json j;
  j["layer"] = id.layer;
  j["name"] = id.name;
  return j;
}

Json ToJson(const LayerLink& ll) {
  Json j;
  j["layer"] = ll.layer;
  j["link"] = ToJson(ll.link);
  return j;
}

Json ToJson(const Violation& v) {
  Json j;
  j["kind"] = std::string(ToString(v.kind));
  j["layer"] = v.layer;
  j["component"] = v.component ? Json(*v.component) : Json(nullptr);
  j["link"] = v.link ? ToJson(*v.link) : Json(nullptr);
  j["detail"] = v.detail;
  return j;
}

std::string Count(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

Json ToJson(const Warning& w) {
  Json j;
  j["code"] = w.code;
  j["layer"] = w.layer;
  j["subject"] = w.subject;
  j["message"] = w.message;
  return j;
}

Json ToJson(const LayerMetrics& m) {
  Json j;
  j["node_count"] = m.node_count;
  j["link_count"] = m.link_count;
  j["density"] = m.density;
  j["degree"] = {{"min", m.degree.min}, {"mean", m.degree.mean},
                 {"max", m.degree.max}};
  j["connected_components"] = m.connected_components;
  j["largest_component_fraction"] = m.largest_component_fraction;
  j["diameter_of_largest_component"] = m.diameter_of_largest_component;
  j["articulation_points"] = m.articulation_points;
  Json bridges = Json::array();
  for (const Link& b : m.bridges) bridges.push_back(ToJson(b));
  j["bridges"] = std::move(bridges);
  return j;
}

Json Histogram(const std::map<int, int>& h) {
  Json out = Json::array();
  for (const auto& [degree, count] : h) {
    out.push_back({{"degree", degree}, {"count", count}});
  }
  return out;
}

void HumanMetrics(std::ostream& out, std::string_view prefix,
                  const LayerMetrics& m) {
  out << prefix << " nodes=" << m.node_count << " links=" << m.link_count
      << " density=" << Fixed(m.density) << " degree=" << m.degree.min << "/"
      << Fixed(m.degree.mean) << "/" << m.degree.max
      << " components=" << m.connected_components
      << " largest=" << Fixed(m.largest_component_fraction)
      << " diameter=" << m.diameter_of_largest_component << "\n";
  for (const std::string& a : m.articulation_points) {
    out << prefix << " articulation-point " << a << "\n";
  }
  for (const Link& b : m.bridges) {
    out << prefix << " bridge " << ToString(b) << "\n";
  }
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view text) {
  if (text == "human") return ReportFormat::kHuman;
  if (text == "machine") return ReportFormat::kMachine;
  return std::nullopt;
}

std::string EmitReport(const ValidationReport& report, ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("validation");
    j["mode"] = std::string(ToString(report.mode));
    j["passed"] = report.passed;
    Json violations = Json::array();
    for (const Violation& v : report.violations) violations.push_back(ToJson(v));
    j["violations"] = std::move(violations);
    Json warnings = Json::array();
    for (const Warning& w : report.warnings) warnings.push_back(ToJson(w));
    j["warnings"] = std::move(warnings);
    Json classes = Json::array();
    for (const InterlayerClass& c : report.classes) {
      Json nodes = Json::array();
      for (const auto& [id, role] : c.nodes) {
        Json n = ToJson(id);
        n["class"] = std::string(ToString(role));
        nodes.push_back(std::move(n));
      }
      classes.push_back({{"upper", c.upper_index}, {"nodes", std::move(nodes)}});
    }
    j["classes"] = std::move(classes);
    return Dump(j);
  }
  std::ostringstream out;
  out << "validation " << (report.passed ? "passed" : "failed") << " ("
      << ToString(report.mode) << " mode, "
      << Count(report.violations.size(), "violation") << ", "
      << Count(report.warnings.size(), "warning") << ")\n";
  for (const Violation& v : report.violations) {
    out << "violation " << ToString(v.kind) << " " << SubjectOf(v) << ": "
        << v.detail << "\n";
  }
  for (const Warning& w : report.warnings) {
    out << "warning " << w.code << " L" << w.layer;
    if (!w.subject.empty()) out << ":" << w.subject;
    out << ": " << w.message << "\n";
  }
  for (const InterlayerClass& c : report.classes) {
    for (const auto& [id, role] : c.nodes) {
      out << "class L" << c.upper_index << "->L" << c.upper_index - 1 << " "
          << ToString(id) << " " << ToString(role) << "\n";
    }
  }
  return out.str();
}

std::string EmitReport(const ConformanceReport& report,
                       std::span<const Violation> role_violations,
                       ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("conformance");
    j["kind"] = std::string(ToString(report.kind));
    j["conforms"] = report.conforms;
    Json missing = Json::array();
    for (LayerRole r : report.missing_roles) missing.push_back(std::string(ToString(r)));
    j["missing_roles"] = std::move(missing);
    Json order = Json::array();
    for (const OrderViolation& o : report.order_violations) {
      order.push_back({{"layer", o.layer},
                       {"role", std::string(ToString(o.role))},
                       {"detail", o.detail}});
    }
    j["order_violations"] = std::move(order);
    j["extras"] = report.extras;
    Json roles = Json::array();
    for (const Violation& v : role_violations) roles.push_back(ToJson(v));
    j["role_violations"] = std::move(roles);
    return Dump(j);
  }
  std::ostringstream out;
  out << ToString(report.kind) << " reference stack: "
      << (report.conforms ? "conforms" : "does not conform") << "\n";
  for (LayerRole r : report.missing_roles) {
    out << "missing-role " << ToString(r) << "\n";
  }
  for (const OrderViolation& o : report.order_violations) {
    out << "order L" << o.layer << " " << ToString(o.role) << ": " << o.detail
        << "\n";
  }
  for (int e : report.extras) out << "extra L" << e << " custom\n";
  for (const Violation& v : role_violations) {
    out << "violation " << ToString(v.kind) << " " << SubjectOf(v) << ": "
        << v.detail << "\n";
  }
  return out.str();
}

std::string EmitReport(const MetricsBundle& bundle, ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("metrics");
    Json layers = Json::array();
    for (const LayerMetricsSection& s : bundle.layers) {
      Json section;
      section["layer"] = s.layer;
      section["role"] = std::string(ToString(s.role));
      section["metrics"] = ToJson(s.metrics);
      Json subs = Json::array();
      for (const auto& [protocol, m] : s.sublayers) {
        subs.push_back({{"protocol", protocol}, {"metrics", ToJson(m)}});
      }
      section["sublayers"] = std::move(subs);
      layers.push_back(std::move(section));
    }
    j["layers"] = std::move(layers);
    Json inter = Json::array();
    for (const DegreeHistogram& h : bundle.interlayer) {
      inter.push_back({{"upper", h.upper_index},
                       {"upper_degrees", Histogram(h.upper)},
                       {"lower_degrees", Histogram(h.lower)}});
    }
    j["interlayer"] = std::move(inter);
    return Dump(j);
  }
  std::ostringstream out;
  for (const LayerMetricsSection& s : bundle.layers) {
    const std::string prefix = "L" + std::to_string(s.layer);
    out << prefix << " " << ToString(s.role) << "\n";
    HumanMetrics(out, prefix, s.metrics);
    for (const auto& [protocol, m] : s.sublayers) {
      HumanMetrics(out, prefix + "/" + protocol, m);
    }
  }
  for (const DegreeHistogram& h : bundle.interlayer) {
    for (const auto& [d, c] : h.upper) {
      out << "L" << h.upper_index << "->L" << h.upper_index - 1
          << " upper-degree " << d << " x" << c << "\n";
    }
    for (const auto& [d, c] : h.lower) {
      out << "L" << h.upper_index << "->L" << h.upper_index - 1
          << " lower-degree " << d << " x" << c << "\n";
    }
  }
  return out.str();
}

std::string EmitReport(const CascadeResult& result, ReportFormat format) {
  int total = 0;
  int surviving = 0;
  for (const LayerSurvival& s : result.per_layer) {
    total += s.total;
    surviving += s.surviving;
  }
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("cascade");
    j["label"] = result.label;
    j["functional_alive"] = result.functional_alive;
    Json rounds = Json::array();
    for (std::size_t r = 0; r < result.rounds.size(); ++r) {
      Json nodes = Json::array();
      for (const ComponentId& id : result.rounds[r].failed_nodes) {
        nodes.push_back(ToJson(id));
      }
      Json links = Json::array();
      for (const LayerLink& ll : result.rounds[r].inactive_links) {
        links.push_back(ToJson(ll));
      }
      rounds.push_back({{"round", r + 1},
                        {"failed_nodes", std::move(nodes)},
                        {"inactive_links", std::move(links)}});
    }
    j["rounds"] = std::move(rounds);
    Json failed = Json::array();
    for (const ComponentId& id : result.final_failed_nodes) failed.push_back(ToJson(id));
    j["final_failed_nodes"] = std::move(failed);
    Json inactive = Json::array();
    for (const LayerLink& ll : result.final_inactive_links) {
      inactive.push_back(ToJson(ll));
    }
    j["final_inactive_links"] = std::move(inactive);
    Json layers = Json::array();
    for (const LayerSurvival& s : result.per_layer) {
      layers.push_back({{"layer", s.layer},
                        {"total", s.total},
                        {"surviving", s.surviving},
                        {"failed", s.total - s.surviving},
                        {"survival", s.survival},
                        {"largest_component_fraction",
                         s.largest_component_fraction}});
    }
    j["layers"] = std::move(layers);
    j["totals"] = {{"components", total},
                   {"surviving", surviving},
                   {"failed", total - surviving}};
    return Dump(j);
  }
  std::ostringstream out;
  out << "cascade " << (result.label.empty() ? "(unnamed)" : result.label)
      << ": " << Count(result.rounds.size(), "round") << ", "
      << Count(result.final_failed_nodes.size(), "failed node") << ", "
      << Count(result.final_inactive_links.size(), "inactive link")
      << ", functional "
      << (result.functional_alive ? "alive" : "lost") << "\n";
  for (std::size_t r = 0; r < result.rounds.size(); ++r) {
    for (const ComponentId& id : result.rounds[r].failed_nodes) {
      out << "round " << r + 1 << " node " << ToString(id) << "\n";
    }
    for (const LayerLink& ll : result.rounds[r].inactive_links) {
      out << "round " << r + 1 << " link L" << ll.layer << ":"
          << ToString(ll.link) << "\n";
    }
  }
  for (const LayerSurvival& s : result.per_layer) {
    out << "layer " << s.layer << " surviving " << s.surviving << "/"
        << s.total << " survival " << Fixed(s.survival) << " largest "
        << Fixed(s.largest_component_fraction) << "\n";
  }
  out << "total surviving " << surviving << "/" << total << "\n";
  return out.str();
}

std::string EmitReport(std::span<const Decomposition> decompositions,
                       ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("decomposition");
    Json layers = Json::array();
    for (const Decomposition& d : decompositions) {
      Json subs = Json::array();
      for (const ProtocolSubLayer& s : d.sublayers) {
        Json links = Json::array();
        for (const Link& l : s.links) links.push_back(ToJson(l));
        subs.push_back({{"protocol", s.protocol}, {"links", std::move(links)}});
      }
      Json uncovered = Json::array();
      for (const Link& l : d.uncovered) uncovered.push_back(ToJson(l));
      layers.push_back({{"layer", d.layer_index},
                        {"sublayers", std::move(subs)},
                        {"idle_protocols", d.idle_protocols},
                        {"uncovered_links", std::move(uncovered)}});
    }
    j["layers"] = std::move(layers);
    return Dump(j);
  }
  std::ostringstream out;
  for (const Decomposition& d : decompositions) {
    for (const ProtocolSubLayer& s : d.sublayers) {
      out << "L" << d.layer_index << " sublayer " << s.protocol << ":";
      for (const Link& l : s.links) out << " " << ToString(l);
      out << "\n";
    }
    for (const std::string& p : d.idle_protocols) {
      out << "L" << d.layer_index << " idle-protocol " << p << "\n";
    }
    for (const Link& l : d.uncovered) {
      out << "L" << d.layer_index << " uncovered " << ToString(l) << "\n";
    }
  }
  return out.str();
}

std::string EmitReport(std::span<const FaultImpact> ranking,
                       ReportFormat format) {
  if (format == ReportFormat::kMachine) {
    Json j = Envelope("fault-ranking");
    Json rows = Json::array();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      rows.push_back({{"rank", i + 1},
                      {"node", ranking[i].node},
                      {"functional_alive", ranking[i].functional_alive},
                      {"failed_nodes", ranking[i].failed_nodes},
                      {"rounds", ranking[i].rounds}});
    }
    j["ranking"] = std::move(rows);
    return Dump(j);
  }
  std::ostringstream out;
  out << "rank node functional failed rounds\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i + 1 << " " << ranking[i].node << " "
        << (ranking[i].functional_alive ? "alive" : "lost") << " "
        << ranking[i].failed_nodes << " " << ranking[i].rounds << "\n";
  }
  return out.str();
}

}  // namespace netstrata
