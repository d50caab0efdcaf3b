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
// Orienting undirected edges so that every nonempty vertex set's in-degree
// covers a prescribed demand. For intersecting supermodular demands this is
// exactly characterized by subpartition counts, so failure always comes with
// a deficient subpartition.

#ifndef ARBOPACK_ORIENTATION_HPP_
#define ARBOPACK_ORIENTATION_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "arbopack/mixed_graph.hpp"
#include "arbopack/scan.hpp"

namespace arbopack {

// Demands are tabulated over all subsets, so universes are kept small.
inline constexpr int kDemandVertexLimit = 12;
// The exhaustive orientation fallback walks all 2^|E| direction choices.
inline constexpr int kOrientationEdgeLimit = 20;

// Integer demand on the nonempty subsets of a fixed universe, tabulated at
// construction. Values may be negative; covering only ever requires the
// positive part, but supermodularity is a property of the raw values.
class DemandFunction {
 public:
  DemandFunction(VertexSet universe, const std::function<int(VertexSet)>& eval);

  VertexSet universe() const { return universe_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }
  std::size_t table_size() const { return table_.size(); }

  int operator()(VertexSet x) const;
  int local(std::size_t local_mask) const { return table_[local_mask]; }
  std::size_t to_local(VertexSet x) const;
  VertexSet to_global(std::size_t local_mask) const;

 private:
  VertexSet universe_;
  std::vector<int> verts_;
  std::vector<int> table_;  // index: local mask; entry 0 unused
};

struct SupermodularityViolation {
  VertexSet x;
  VertexSet y;
  int gap;  // f(x) + f(y) - f(x|y) - f(x&y), positive
};

// First intersecting pair (ascending local masks) breaking supermodularity,
// or nullopt if f is intersecting supermodular.
std::optional<SupermodularityViolation> check_intersecting_supermodular(
    const DemandFunction& f);

struct CoverResult {
  // Direction per edge of the input list; present iff covering succeeded.
  std::optional<Orientation> orientation;
  // Otherwise: subpartition P of the universe maximizing
  // sum of max(f, 0) over parts minus the crossing edge count.
  std::optional<Subpartition> obstruction;
  int deficit = 0;

  bool covered() const { return orientation.has_value(); }
};

// Orients the given edges (all endpoints inside f's universe) so that
// d-(X) >= f(X) for every nonempty X, or reports a deficient subpartition.
// Runs a path-reversal improvement loop first and falls back to exhaustive
// enumeration of direction choices; for intersecting supermodular f the
// obstruction is guaranteed to exist on failure.
CoverResult cover_orientation(const std::vector<Edge>& edges,
                              const DemandFunction& f,
                              Exec exec = Exec::kAuto);

// Replays d-(X) >= f(X) for all nonempty X under the given orientation.
bool orientation_covers(const std::vector<Edge>& edges,
                        const DemandFunction& f, const Orientation& o);

}  // namespace arbopack

#endif  // ARBOPACK_ORIENTATION_HPP_
