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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Time limits are wall-clock seconds.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "generators.h"
#include "netstrata/netstrata.h"
#include "oracles.h"

namespace netstrata {
namespace {

// Failure message, or empty on success.
using Check = std::function<std::string()>;

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  Check check;
};

std::string Describe(const std::set<oracle::Finding>& findings) {
  std::ostringstream out;
  for (const auto& [layer, kind, subject] : findings) {
    out << " L" << layer << ":" << kind << ":" << subject;
  }
  return out.str();
}

std::string FlattenCounts() {
  test::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    test::RandomNetworkOptions options;
    options.min_layers = 1;
    options.max_layers = 6;
    options.max_components = 40;
    options.mode = Mode::kStrict;
    const MultilayerNetwork net = test::RandomNetwork(rng, options);
    std::size_t v = 0;
    std::size_t e = 0;
    for (const Layer& l : net.layers()) {
      v += l.components.size();
      e += l.links.size();
    }
    for (const CrossLayer& c : net.cross_layers()) e += c.projections.size();
    const FlatGraph flat = Flatten(net);
    if (flat.vertices.size() != v || flat.edges.size() != e) {
      return "network " + std::to_string(i) + ": flatten has " +
             std::to_string(flat.vertices.size()) + "/" +
             std::to_string(flat.edges.size()) + ", expected " +
             std::to_string(v) + "/" + std::to_string(e);
    }
  }
  return "";
}

std::string DecompositionCover() {
  test::Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const MultilayerNetwork net = MultilayerNetwork::Build(
        {test::RandomCoveredLayer(rng, 16, 4)}, {}, Mode::kStrict);
    const Layer& layer = net.layer(1);
    const Decomposition d = DecomposeLayer(layer);
    std::set<Link> uni;
    const auto expected = oracle::SubLayers(layer);
    if (d.sublayers.size() != expected.size()) {
      return "layer " + std::to_string(i) + ": sub-layer count differs";
    }
    for (const ProtocolSubLayer& s : d.sublayers) {
      const std::set<Link> links(s.links.begin(), s.links.end());
      if (links != expected.at(s.protocol)) {
        return "layer " + std::to_string(i) + ": sub-layer " + s.protocol + " differs";
      }
      uni.insert(links.begin(), links.end());
    }
    if (uni != std::set<Link>(layer.links.begin(), layer.links.end())) {
      return "layer " + std::to_string(i) + ": union differs from the link set";
    }
    for (const auto& [link, k] : MultiplexMultiplicity(layer)) {
      if (k > static_cast<int>(layer.protocols.size())) {
        return "layer " + std::to_string(i) + ": multiplicity above protocol count";
      }
    }
  }
  return "";
}

std::vector<MultilayerNetwork> EdgeCases() {
  using test::MakeComponent;
  using test::MakeCross;
  using test::MakeLayer;
  std::vector<MultilayerNetwork> out;
  for (const std::string& name : test::FixtureNames()) {
    out.push_back(test::LoadFixture(name));
  }
  const auto lower = MakeLayer(1, LayerRole::kPhysical,
                               {MakeComponent("a", {"e"}), MakeComponent("b", {"e"}),
                                MakeComponent("c", {"e"}), MakeComponent("d", {"f"})},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  const auto upper = MakeLayer(2, LayerRole::kLogical,
                               {MakeComponent("x", {"ip"}), MakeComponent("y", {"ip"}),
                                MakeComponent("z", {"ip"})},
                               {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  const std::vector<std::vector<std::pair<std::string, std::string>>> projections{
      {},                                          // nothing supported
      {{"x", "a"}, {"y", "a"}, {"z", "a"}},        // one shared supporter
      {{"x", "a"}, {"y", "d"}},                    // long path, z orphaned
      {{"x", "a"}, {"x", "b"}, {"y", "c"}, {"z", "d"}},
  };
  for (const auto& p : projections) {
    for (Mode mode : {Mode::kRelaxed, Mode::kStrict}) {
      if (mode == Mode::kStrict && p.empty()) continue;
      out.push_back(MultilayerNetwork::Build({lower, upper}, {MakeCross(2, p)}, mode));
    }
  }
  // Split the lower layer in two.
  auto split = lower;
  split.links = {Link::Make("a", "b"), Link::Make("c", "d")};
  out.push_back(MultilayerNetwork::Build(
      {split, upper}, {MakeCross(2, {{"x", "a"}, {"y", "d"}, {"z", "b"}})},
      Mode::kRelaxed));
  return out;
}

std::string ValidatorMatchesOracle() {
  test::Rng rng(303);
  std::vector<MultilayerNetwork> networks = EdgeCases();
  for (int i = 0; i < 500; ++i) {
    test::RandomNetworkOptions options;
    options.max_components = 12;
    options.max_layers = 4;
    options.support_probability = 0.8;
    options.link_probability = 0.3;
    options.mode = i % 2 ? Mode::kStrict : Mode::kRelaxed;
    networks.push_back(test::RandomNetwork(rng, options));
  }
  std::map<std::string, int> kinds;
  for (std::size_t i = 0; i < networks.size(); ++i) {
    const MultilayerNetwork& net = networks[i];
    const auto expected = oracle::Violations(net);
    for (const auto& f : expected) ++kinds[std::get<1>(f)];
    const auto got = oracle::FindingsOf(Validate(net).violations);
    if (got != expected) {
      return "network " + std::to_string(i) + ": got" + Describe(got) +
             " expected" + Describe(expected);
    }
    // Same findings whatever the input order.
    const auto shuffled = BuildNetwork(test::Shuffled(rng, ToDocument(net)));
    if (oracle::FindingsOf(Validate(shuffled).violations) != expected) {
      return "network " + std::to_string(i) + ": findings depend on input order";
    }
  }
  // Guard against a vacuous pass: every kind must actually occur.
  for (const char* kind : {"unsupported-node", "cardinality", "path-inconsistency",
                           "uncovered-link"}) {
    if (kinds[kind] == 0) return std::string("samples never produced ") + kind;
  }
  return "";
}

std::string CascadeMatchesOracle() {
  test::Rng rng(404);
  int propagated = 0;
  for (int i = 0; i < 300; ++i) {
    test::RandomNetworkOptions options;
    options.max_components = 12;
    const MultilayerNetwork net = test::RandomNetwork(rng, options);
    const FaultScenario s = test::RandomScenario(rng, net, 0.2, 0.1);
    const CascadeResult r = RunCascade(net, s);
    const oracle::CascadeOutcome o = oracle::Cascade(net, s);
    if (r.final_failed_nodes != o.failed || r.final_inactive_links != o.inactive ||
        static_cast<int>(r.rounds.size()) != o.rounds) {
      return "network " + std::to_string(i) + ": cascade differs from fixed point";
    }
    if (r.rounds.size() >= 2) ++propagated;
  }
  if (propagated < 30) {
    return "only " + std::to_string(propagated) + " cascades ran two or more rounds";
  }
  for (int i = 0; i < 100; ++i) {
    test::RandomNetworkOptions options;
    options.max_components = 12;
    const MultilayerNetwork net = test::RandomNetwork(rng, options);
    const FaultScenario a = test::RandomScenario(rng, net, 0.1, 0.05);
    const FaultScenario b = test::Superset(rng, net, a, 0.15, 0.1);
    const CascadeResult ra = RunCascade(net, a);
    const CascadeResult rb = RunCascade(net, b);
    if (!std::includes(rb.final_failed_nodes.begin(), rb.final_failed_nodes.end(),
                       ra.final_failed_nodes.begin(), ra.final_failed_nodes.end()) ||
        !std::includes(rb.final_inactive_links.begin(), rb.final_inactive_links.end(),
                       ra.final_inactive_links.begin(), ra.final_inactive_links.end())) {
      return "pair " + std::to_string(i) + ": larger scenario lost a failure";
    }
  }
  // Networks in which every node above layer 1 has a supporter.
  for (int i = 0; i < 100; ++i) {
    test::RandomNetworkOptions options;
    options.max_components = 12;
    options.support_probability = 1.0;
    const CascadeResult r = RunCascade(test::RandomNetwork(rng, options), {});
    for (const LayerSurvival& s : r.per_layer) {
      if (s.survival != 1.0) {
        return "empty scenario " + std::to_string(i) + ": layer " +
               std::to_string(s.layer) + " survival " + std::to_string(s.survival);
      }
    }
  }
  return "";
}

std::string ReferenceStacks() {
  if (!CheckReferenceConformance(test::LoadFixture("basic_stack.mln.json"),
                                 ReferenceKind::kBasic)
           .conforms) {
    return "basic fixture does not conform to basic";
  }
  if (!CheckReferenceConformance(test::LoadFixture("extended_stack.mln.json"),
                                 ReferenceKind::kExtended)
           .conforms) {
    return "extended fixture does not conform to extended";
  }
  ModelDocument doc = test::LoadFixtureDocument("basic_stack.mln.json");
  std::array<LayerRole, 4> roles{LayerRole::kPhysical, LayerRole::kLogical,
                                 LayerRole::kService, LayerRole::kFunctional};
  int failing = 0;
  int total = 0;
  while (std::next_permutation(roles.begin(), roles.end())) {
    ++total;
    for (int i = 0; i < 4; ++i) doc.layers[i].role = roles[i];
    if (!CheckReferenceConformance(BuildNetwork(doc), ReferenceKind::kBasic).conforms) {
      ++failing;
    }
  }
  if (total != 23 || failing != 23) {
    return std::to_string(failing) + " of " + std::to_string(total) +
           " permutations rejected";
  }
  return "";
}

std::string WirelessSplit() {
  std::string first;
  for (int run = 0; run < 3; ++run) {
    const MultilayerNetwork net = test::LoadFixture("wireless_ap.mln.json");
    const Decomposition d = DecomposeLayer(net.layer(1));
    if (d.sublayers.size() != 2 || d.sublayers[0].protocol != "wired" ||
        d.sublayers[1].protocol != "wireless" ||
        d.sublayers[0].links != std::vector<Link>{Link::Make("ap", "sw")} ||
        d.sublayers[1].links != std::vector<Link>{Link::Make("ap", "cl")} ||
        !d.uncovered.empty()) {
      return "unexpected sub-layers";
    }
    const std::vector<Decomposition> parts{d};
    const std::string bytes =
        EmitReport(std::span<const Decomposition>(parts), ReportFormat::kMachine) +
        EmitReport(std::span<const Decomposition>(parts), ReportFormat::kHuman) +
        ExportDot(net, DotView::kPerSublayer);
    if (run == 0) first = bytes;
    if (bytes != first) return "output differs between runs";
  }
  return "";
}

std::string ModelIo() {
  test::Rng rng(707);
  std::vector<std::string> seeds;
  for (const std::string& name : test::FixtureNames()) {
    const std::string text = ReadTextFile(test::FixturePath(name));
    const ModelDocument doc = ParseModel(text);
    const std::string canonical = SerializeModel(doc);
    if (ParseModel(canonical) != doc || SerializeModel(ParseModel(canonical)) != canonical) {
      return name + ": parse/serialize is not an identity";
    }
    for (int i = 0; i < 10; ++i) {
      if (SerializeModel(test::Shuffled(rng, doc)) != canonical) {
        return name + ": permuted input serializes differently";
      }
    }
    seeds.push_back(text);
  }
  int malformed = 0;
  int attempts = 0;
  while (malformed < 10000) {
    if (++attempts > 100000) return "fuzzer produced too few malformed documents";
    const std::string text = test::MutateDocument(rng, seeds[attempts % seeds.size()]);
    try {
      ParseModel(text);
    } catch (const ParseError& e) {
      ++malformed;
      const bool positioned =
          e.code() == ParseErrorCode::kSyntaxError
              ? e.line() > 0 && e.column() > 0
              : e.line() == 0 && (e.pointer().empty() || e.pointer()[0] == '/');
      if (!positioned) return "unpositioned error: " + std::string(e.what());
    } catch (const std::exception& e) {
      return "non-parse exception: " + std::string(e.what());
    }
  }
  return "";
}

std::string LargeModel() {
  using Clock = std::chrono::steady_clock;
  const MultilayerNetwork net = test::LargeNetwork(808, 5, 10000, 30000);
  const std::size_t edges = net.link_count() + net.projection_count();
  if (net.layer_count() != 5 || net.component_count() != 10000 || edges != 30000) {
    return "generator produced " + std::to_string(net.component_count()) +
           " components and " + std::to_string(edges) + " edges";
  }
  const auto start = Clock::now();
  const ValidationReport report = Validate(net);
  const MetricsBundle metrics = ComputeMetrics(net);
  FaultScenario s;
  s.label = "bulk";
  for (int i = 0; i < 100; ++i) s.failed_nodes.push_back({1, "c" + std::to_string(i * 19)});
  const CascadeResult r = RunCascade(net, s);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!report.passed) return "large model does not validate";
  if (metrics.layers.size() != 5 || r.per_layer.size() != 5) return "incomplete results";
  if (seconds >= 5.0) return "took " + std::to_string(seconds) + " s";
  return "";
}

}  // namespace
}  // namespace netstrata

int main() {
  using netstrata::Criterion;
  const Criterion criteria[] = {
      {"AC1", "flatten preserves node and edge counts", 5.0, netstrata::FlattenCounts},
      {"AC2", "protocol sub-layers reunite to the link set", 5.0,
       netstrata::DecompositionCover},
      {"AC3", "validator agrees with brute-force oracle", 30.0,
       netstrata::ValidatorMatchesOracle},
      {"AC4", "cascade agrees with naive fixed point", 60.0,
       netstrata::CascadeMatchesOracle},
      {"AC5", "reference stack conformance", 1.0, netstrata::ReferenceStacks},
      {"AC6", "wireless access point splits into wired and wireless", 5.0,
       netstrata::WirelessSplit},
      {"AC7", "model round trip, canonical form and fuzzing", 60.0,
       netstrata::ModelIo},
      {"AC8", "10k-component model: validate, metrics, cascade", 5.0,
       netstrata::LargeModel},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds >= c.limit_seconds) {
      problem = "over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    std::printf("%s %s: %s (%.3f s, limit %.0f s)%s%s\n",
                problem.empty() ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.limit_seconds, problem.empty() ? "" : ": ", problem.c_str());
    if (!problem.empty()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
