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
// Packing of maximal matroid-independent mixed arborescences: one tree per
// ground-set element, rooted at its placement vertex, pairwise item-disjoint,
// with every vertex covered by an independent element set of full reachable
// rank. The solver orients each strong component against its demand function
// and then packs the resulting digraph; failures surface the certificate of
// the stage that failed.

#ifndef ARBOPACK_PACKING_HPP_
#define ARBOPACK_PACKING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/mixed_graph.hpp"
#include "arbopack/orientation.hpp"

namespace arbopack {

// Bounds for the brute-force existence oracle.
inline constexpr int kOracleEdgeLimit = 10;
inline constexpr int kOracleVertexLimit = 6;
inline constexpr int kOracleElementLimit = 4;

// One edge or arc of a tree together with its direction of use. Arcs are
// always used as stored; edges may be traversed either way.
struct ArborItem {
  enum class Kind { kArc, kEdge };
  Kind kind = Kind::kArc;
  int id = 0;
  int tail = 0;
  int head = 0;
};

// Mixed arborescence for one ground-set element: every non-root vertex has
// exactly one entering item and is reached from the root.
struct Arborescence {
  int element = 0;
  int root = 0;
  VertexSet vertices = 0;
  std::vector<ArborItem> items;
};

// Trees ordered by element id, one per element.
struct Packing {
  std::vector<Arborescence> trees;
};

struct Violation {
  enum class Kind {
    kBadStructure,   // not a mixed arborescence
    kRootMismatch,   // tree root differs from the element's placement
    kItemReuse,      // an edge or arc appears in two trees
    kDependentSet,   // elements covering a vertex are dependent
    kCountMismatch,  // vertex covered by the wrong number of trees
  };
  Kind kind = Kind::kBadStructure;
  std::string detail;
};

// Checks a packing against its instance and reports every failure: tree
// shape, roots, item disjointness, per-vertex independence, and per-vertex
// counts against r(S_W(v)). Unknown ids or endpoints that do not match the
// referenced item are malformed input and throw instead.
std::vector<Violation> verify_packing(const Instance& inst, const Packing& p);

struct SolveResult {
  enum class Status { kPacked, kPlacementDependent, kInfeasible };
  Status status = Status::kPacked;
  std::optional<Packing> packing;
  std::optional<PlacementDependence> dependence;
  std::optional<Certificate> certificate;
};

// Packs a digraph instance, or returns the in-degree certificate. The
// search is deterministic backtracking; it cannot fail once the in-degree
// condition holds.
SolveResult pack_digraph(const Instance& inst);

// Packs a mixed instance: per strong component, tabulates the component
// demand, orients the component's edges to cover it, then packs the
// oriented digraph and maps oriented arcs back to edges. An uncoverable
// component yields its deficient subpartition.
SolveResult pack_mixed(const Instance& inst, Exec exec = Exec::kAuto);

// Existence oracle by full enumeration: tries every edge orientation with an
// independent exhaustive search, verifying candidate packings against the
// original instance. Intentionally shares no search code with pack_digraph.
bool brute_force_exists(const Instance& inst, Exec exec = Exec::kAuto);

}  // namespace arbopack

#endif  // ARBOPACK_PACKING_HPP_
