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
// Seeded random instances. Byte-for-byte deterministic across platforms:
// draws come from std::mt19937_64 reduced by modulo, never from
// distribution objects (whose output is implementation-defined).

#ifndef ARBOPACK_GENERATOR_HPP_
#define ARBOPACK_GENERATOR_HPP_

#include <cstdint>
#include <string>

#include "arbopack/instance_io.hpp"

namespace arbopack {

// Placements whose element bundles are dependent are redrawn; give up after
// this many rejections.
inline constexpr int kGenRejectionLimit = 10000;

// Matroid spec strings:
//   free:K | uniform:K:R | partition:K:l1,...,lC | graphic:K:M |
//   linear_gf2:K:R
// Random parameters (partition classes, aux edges, GF(2) columns) are drawn
// from the generator stream.
struct GenOptions {
  std::uint64_t seed = 0;
  int vertices = 4;
  int edges = 2;
  int arcs = 3;
  std::string matroid = "free:2";
};

struct GenResult {
  NamedInstance named;
  int rejections = 0;
};

// Labels are "v0".."v{n-1}". Endpoints are drawn uniformly excluding loops;
// the placement is rejection-sampled until independent. The draw order
// (edges, arcs, matroid params, placement) is part of the determinism
// contract.
GenResult generate_instance(const GenOptions& options);

}  // namespace arbopack

#endif  // ARBOPACK_GENERATOR_HPP_
