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

#include "arbopack/generator.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arbopack/matroid.hpp"
#include "arbopack/mixed_graph.hpp"

namespace arbopack {
namespace {

int draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// Distinct (a, b) with both below n; used for edge and arc endpoints.
std::pair<int, int> draw_pair(std::mt19937_64& rng, int n) {
  int a = draw(rng, n);
  int b = draw(rng, n - 1);
  if (b >= a) ++b;
  return {a, b};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

int spec_int(const std::string& field, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(field, &used);
    if (used == field.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError("matroid spec " + what + " must be an integer, got '" +
                   field + "'");
}

Matroid matroid_from_spec(const std::string& spec, std::mt19937_64& rng) {
  const std::vector<std::string> fields = split(spec, ':');
  const std::string& type = fields[0];
  auto arity = [&](std::size_t n) {
    if (fields.size() != n) {
      throw ParseError("matroid spec '" + spec + "' must have " +
                       std::to_string(n - 1) + " ':'-separated parameters");
    }
  };
  try {
    if (type == "free") {
      arity(2);
      return Matroid::free_matroid(spec_int(fields[1], "element count"));
    }
    if (type == "uniform") {
      arity(3);
      return Matroid::uniform(spec_int(fields[1], "element count"),
                              spec_int(fields[2], "rank"));
    }
    if (type == "partition") {
      arity(3);
      const int elements = spec_int(fields[1], "element count");
      std::vector<int> limits;
      for (const std::string& f : split(fields[2], ',')) {
        limits.push_back(spec_int(f, "class limit"));
      }
      std::vector<int> class_of(elements);
      for (int& c : class_of) c = draw(rng, static_cast<int>(limits.size()));
      return Matroid::partition(elements, std::move(class_of),
                                std::move(limits));
    }
    if (type == "graphic") {
      arity(3);
      const int elements = spec_int(fields[1], "element count");
      const int aux_vertices = spec_int(fields[2], "aux vertex count");
      if (aux_vertices <= 0) {
        throw ParseError("graphic matroid spec needs a positive aux vertex "
                         "count");
      }
      std::vector<Edge> aux_edges;
      for (int e = 0; e < elements; ++e) {
        // Aux loops are allowed; they make rank-0 elements.
        aux_edges.push_back(Edge{draw(rng, aux_vertices),
                                 draw(rng, aux_vertices)});
      }
      return Matroid::graphic(elements, aux_vertices, std::move(aux_edges));
    }
    if (type == "linear_gf2") {
      arity(3);
      const int elements = spec_int(fields[1], "element count");
      const int rows = spec_int(fields[2], "row count");
      if (rows < 0 || rows > 64) {
        throw ParseError("linear_gf2 spec row count outside [0, 64]");
      }
      const std::uint64_t mask =
          rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
      std::vector<std::uint64_t> columns;
      for (int e = 0; e < elements; ++e) columns.push_back(rng() & mask);
      return Matroid::linear_gf2(elements, rows, std::move(columns));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("matroid spec '" + spec + "' is invalid: " + e.what());
  }
  throw ParseError("unknown matroid spec type '" + type + "'");
}

}  // namespace

GenResult generate_instance(const GenOptions& options) {
  const int n = options.vertices;
  if (n < 0 || n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  if (options.edges < 0 || options.arcs < 0) {
    throw ParseError("edge and arc counts must be >= 0");
  }
  if (n < 2 && options.edges + options.arcs > 0) {
    throw ParseError("edges and arcs need at least 2 vertices (loops are "
                     "not allowed)");
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Edge> edges;
  for (int i = 0; i < options.edges; ++i) {
    auto [u, v] = draw_pair(rng, n);
    edges.push_back(Edge{u, v});
  }
  std::vector<Arc> arcs;
  for (int i = 0; i < options.arcs; ++i) {
    auto [tail, head] = draw_pair(rng, n);
    arcs.push_back(Arc{tail, head});
  }
  Matroid matroid = matroid_from_spec(options.matroid, rng);
  if (matroid.size() > 0 && n == 0) {
    throw ParseError("matroid elements need at least 1 vertex to live on");
  }

  int rejections = 0;
  std::vector<int> vertex_of(matroid.size());
  while (true) {
    for (int& v : vertex_of) v = draw(rng, n);
    if (is_placement_independent(matroid, Placement{vertex_of})) break;
    if (++rejections >= kGenRejectionLimit) {
      throw ParseError("no independent placement found after " +
                       std::to_string(kGenRejectionLimit) + " draws");
    }
  }

  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  MixedGraph graph(n, std::move(edges), std::move(arcs));
  return GenResult{
      NamedInstance{
          Instance(std::move(graph), std::move(matroid), Placement{vertex_of}),
          std::move(labels)},
      rejections};
}

}  // namespace arbopack
