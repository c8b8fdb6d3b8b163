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


#include <gtest/gtest.h>

#include "generators.h"
#include "netstrata/model_io.h"

namespace netstrata {
namespace {

ParseError ErrorOf(const std::string& text) {
  try {
    ParseModel(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ParseError(ParseErrorCode::kSyntaxError, "", 0, 0, "");
}

constexpr char kMinimal[] = R"({
  "format_version": "1",
  "layers": [
    {"role": "physical",
     "components": [{"name": "a", "kind": "hardware", "protocols": ["e"]},
                    {"name": "b", "kind": "hardware", "protocols": ["e"]}],
     "links": [["b", "a"]]}
  ]
})";

TEST(ParseModel, MinimalDocumentDefaults) {
  const ModelDocument doc = ParseModel(kMinimal);
  EXPECT_EQ(doc.format_version, "1");
  EXPECT_EQ(doc.mode, Mode::kStrict);
  ASSERT_EQ(doc.layers.size(), 1u);
  EXPECT_EQ(doc.layers[0].index, 1);
  EXPECT_EQ(doc.layers[0].links, std::vector<Link>{Link::Make("a", "b")});
  EXPECT_TRUE(doc.cross_layers.empty());
  EXPECT_TRUE(doc.scenarios.empty());
}

TEST(ParseModel, FixtureContents) {
  const ModelDocument doc = test::LoadFixtureDocument("basic_stack.mln.json");
  EXPECT_EQ(doc.layers.size(), 4u);
  EXPECT_EQ(doc.cross_layers.size(), 3u);
  ASSERT_EQ(doc.scenarios.size(), 2u);
  EXPECT_EQ(doc.layers[2].components[1].spec.protocols,
            (std::set<std::string>{"http", "sql"}));
  const ModelDocument ap = test::LoadFixtureDocument("wireless_ap.mln.json");
  EXPECT_EQ(ap.layers[0].components[0].spec.attributes.at("model"), "access-point");
}

TEST(ParseModel, SyntaxErrorHasLineAndColumn) {
  const ParseError e = ErrorOf(ReadTextFile(test::FixturePath("malformed.mln.json")));
  EXPECT_EQ(e.code(), ParseErrorCode::kSyntaxError);
  EXPECT_EQ(e.line(), 4);
  EXPECT_EQ(e.column(), 25);
  EXPECT_EQ(e.position(), "line 4, column 25");
}

TEST(ParseModel, SchemaErrorsCarryPointers) {
  struct Case {
    std::string from;
    std::string to;
    ParseErrorCode code;
    std::string pointer;
  };
  const std::vector<Case> cases{
      {R"("format_version": "1")", R"("format_version": "2")",
       ParseErrorCode::kUnsupportedFormatVersion, "/format_version"},
      {R"("format_version": "1",)", R"("format_version": "1", "extra": 1,)",
       ParseErrorCode::kUnknownField, "/extra"},
      {R"("role": "physical")", R"("role": "orbital")",
       ParseErrorCode::kInvalidValue, "/layers/0/role"},
      {R"("kind": "hardware", "protocols": ["e"]},)",
       R"("kind": "hardware", "protocols": []},)",
       ParseErrorCode::kInvalidValue, "/layers/0/components/0/protocols"},
      {R"({"name": "b")", R"({"name": "a")", ParseErrorCode::kDuplicateName,
       "/layers/0/components/1/name"},
      {R"([["b", "a"]])", R"([["b", "z"]])", ParseErrorCode::kDanglingReference,
       "/layers/0/links/0/1"},
      {R"([["b", "a"]])", R"([["b"]])", ParseErrorCode::kInvalidValue,
       "/layers/0/links/0"},
      {R"("links": [["b", "a"]])", R"("links": 7)", ParseErrorCode::kTypeMismatch,
       "/layers/0/links"},
      {R"("role": "physical",)", "", ParseErrorCode::kMissingField, "/layers/0"},
  };
  for (const Case& c : cases) {
    std::string text = kMinimal;
    const auto at = text.find(c.from);
    ASSERT_NE(at, std::string::npos) << c.from;
    text.replace(at, c.from.size(), c.to);
    const ParseError e = ErrorOf(text);
    EXPECT_EQ(e.code(), c.code) << text;
    EXPECT_EQ(e.pointer(), c.pointer) << text;
    EXPECT_EQ(e.line(), 0);
  }
}

TEST(ParseModel, RootLevelErrors) {
  EXPECT_EQ(ErrorOf("[]").position(), "document root");
  EXPECT_EQ(ErrorOf("{}").code(), ParseErrorCode::kMissingField);
  EXPECT_EQ(ErrorOf("").code(), ParseErrorCode::kSyntaxError);
}

TEST(ParseModel, CrossLayerAndScenarioReferences) {
  const std::string base = ReadTextFile(test::FixturePath("basic_stack.mln.json"));
  auto with = [&](const std::string& from, const std::string& to) {
    std::string text = base;
    text.replace(text.find(from), from.size(), to);
    return ErrorOf(text);
  };
  EXPECT_EQ(with(R"(["os1", "h1"])", R"(["os1", "web"])").pointer(),
            "/cross_layers/0/projections/0/1");
  const std::string first = R"({"upper": 2, "projections": [["os1", "h1"], ["os2", "h2"]]},)";
  EXPECT_EQ(with(first, first + first).pointer(), "/cross_layers/1/upper");
  EXPECT_EQ(with(R"({"upper": 3,)", R"({"upper": 9,)").code(),
            ParseErrorCode::kDanglingReference);
  EXPECT_EQ(with(R"("name": "r1"}]})", R"("name": "nope"}]})").pointer(),
            "/scenarios/0/failed_nodes/0/name");
  EXPECT_EQ(with(R"("label": "h2-down")", R"("label": "router-down")").code(),
            ParseErrorCode::kDuplicateName);
}

TEST(Serialize, RoundTripsEveryFixture) {
  for (const std::string& name : test::FixtureNames()) {
    const ModelDocument doc = test::LoadFixtureDocument(name);
    const std::string text = SerializeModel(doc);
    EXPECT_EQ(ParseModel(text), doc) << name;
    EXPECT_EQ(SerializeModel(ParseModel(text)), text) << name;
    EXPECT_EQ(text.back(), '\n');
  }
}

TEST(Serialize, CanonicalForPermutedInputs) {
  test::Rng rng(3);
  for (const std::string& name : test::FixtureNames()) {
    const ModelDocument doc = test::LoadFixtureDocument(name);
    const std::string canonical = SerializeModel(doc);
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(SerializeModel(test::Shuffled(rng, doc)), canonical) << name;
    }
  }
}

TEST(Serialize, NetworkDocumentRoundTrip) {
  const ModelDocument doc = test::LoadFixtureDocument("extended_stack.mln.json");
  const MultilayerNetwork net = BuildNetwork(doc);
  const ModelDocument back = ToDocument(net, doc.scenarios);
  // The network lists every spoken protocol on its layers; the fixture
  // declares none, so only the layer protocol lists differ.
  EXPECT_EQ(back.layers[3].protocols, (std::set<std::string>{"http", "sql"}));
  EXPECT_TRUE(BuildNetwork(back) == net);
  EXPECT_EQ(ParseModel(SerializeModel(back)), back);
  EXPECT_EQ(back.cross_layers, doc.cross_layers);
  EXPECT_EQ(back.scenarios, doc.scenarios);
}

TEST(BuildFromDocument, ModeOverride) {
  const ModelDocument doc = test::LoadFixtureDocument("dedicated.mln.json");
  EXPECT_EQ(BuildNetwork(doc).mode(), Mode::kRelaxed);
  // Layers 2 and 3 have no links, which strict mode rejects.
  EXPECT_THROW(BuildNetwork(doc, Mode::kStrict), BuildError);
}

TEST(ReadTextFile, MissingFile) {
  EXPECT_THROW(ReadTextFile("/nonexistent/model.mln.json"), std::runtime_error);
}

TEST(ParseFuzz, OnlyPositionedErrors) {
  test::Rng rng(1234);
  std::vector<std::string> seeds;
  for (const std::string& name : test::FixtureNames()) {
    seeds.push_back(ReadTextFile(test::FixturePath(name)));
  }
  int rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::string text =
        test::MutateDocument(rng, seeds[i % seeds.size()]);
    try {
      const ModelDocument doc = ParseModel(text);
      EXPECT_EQ(ParseModel(SerializeModel(doc)), doc);
    } catch (const ParseError& e) {
      ++rejected;
      if (e.code() == ParseErrorCode::kSyntaxError) {
        EXPECT_GT(e.line(), 0);
        EXPECT_GT(e.column(), 0);
      } else {
        EXPECT_TRUE(e.pointer().empty() || e.pointer().front() == '/');
      }
    }
  }
  EXPECT_GT(rejected, 1000);
}

}  // namespace
}  // namespace netstrata
