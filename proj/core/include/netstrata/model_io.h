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

#ifndef NETSTRATA_MODEL_IO_H_
#define NETSTRATA_MODEL_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netstrata/fault_sim.h"
#include "netstrata/model.h"

namespace netstrata {

inline constexpr std::string_view kModelFormatVersion = "1";
inline constexpr std::string_view kModelFileExtension = ".mln.json";

// In-memory form of a .mln.json document. Layers are listed bottom to top;
// a layer's index is its position.
struct ModelDocument {
  std::string format_version{kModelFormatVersion};
  Mode mode = Mode::kStrict;
  std::vector<Layer> layers;
  std::vector<CrossLayer> cross_layers;
  std::vector<FaultScenario> scenarios;

  bool operator==(const ModelDocument&) const = default;
};

enum class ParseErrorCode {
  kSyntaxError,
  kUnknownField,
  kMissingField,
  kTypeMismatch,
  kInvalidValue,
  kDuplicateName,
  kDanglingReference,
  kUnsupportedFormatVersion,
};

std::string_view ToString(ParseErrorCode code);

// Syntax errors carry a 1-based line and column. Schema and reference errors
// carry the JSON pointer of the offending value (line and column are 0).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorCode code, std::string message, int line, int column,
             std::string pointer);

  ParseErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& pointer() const { return pointer_; }
  const std::string& detail() const { return detail_; }
  // "line 3, column 7", "/layers/0/links/2" or "document root".
  std::string position() const;

 private:
  ParseErrorCode code_;
  std::string detail_;
  int line_;
  int column_;
  std::string pointer_;
};

// Parses and normalizes a document: components, links, protocols,
// projections and scenario elements come out sorted, so structurally equal
// documents compare equal. Checks the closed schema and every reference
// (link endpoints, projection endpoints, scenario elements). Mode-dependent
// rules such as non-empty link sets are left to BuildNetwork.
ModelDocument ParseModel(std::string_view text);

// Canonical text: layers bottom to top, everything else sorted, two-space
// indentation, trailing newline.
std::string SerializeModel(const ModelDocument& document);

MultilayerNetwork BuildNetwork(const ModelDocument& document,
                               std::optional<Mode> mode_override = std::nullopt);

ModelDocument ToDocument(const MultilayerNetwork& network,
                         std::vector<FaultScenario> scenarios = {});

std::string ReadTextFile(const std::string& path);

}  // namespace netstrata

#endif  // NETSTRATA_MODEL_IO_H_
