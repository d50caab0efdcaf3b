// Copyright 2026 The Authors.
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
//
// JSON documents for instances, packings, check reports, and errors.
// Rendering is canonical: object keys sorted, two-space indent, vertex sets
// as label arrays in vertex-id order, one trailing newline. Equal inputs
// always produce byte-identical documents.

#ifndef ARBOPACK_INSTANCE_IO_HPP_
#define ARBOPACK_INSTANCE_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbopack/conditions.hpp"
#include "arbopack/packing.hpp"

namespace arbopack {

// Malformed document; the message names the offending key or value.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance plus the vertex labels of the document it came from. Vertex i
// carries labels[i]; label order in the document defines vertex ids.
struct NamedInstance {
  Instance instance;
  std::vector<std::string> labels;
};

NamedInstance parse_instance_document(const std::string& text);
nlohmann::json instance_document(const NamedInstance& named);

Packing parse_packing_document(const std::string& text,
                               const NamedInstance& named);
nlohmann::json packing_document(const NamedInstance& named,
                                const SolveResult& result);

// condition names the check that ran, e.g. "digraph" or "iii".
nlohmann::json check_document(const NamedInstance& named,
                              const CheckResult& result,
                              const std::string& condition);

nlohmann::json verify_document(const std::vector<Violation>& violations);
nlohmann::json oracle_document(bool exists);
nlohmann::json error_document(const std::string& message);

// Canonical serialization of any document built by this module.
std::string render_document(const nlohmann::json& doc);

}  // namespace arbopack

#endif  // ARBOPACK_INSTANCE_IO_HPP_
