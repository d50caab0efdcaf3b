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
// Feasibility conditions for packing maximal matroid-independent mixed
// arborescences, each checked by exhaustive enumeration with a replayable
// certificate on failure. The checkers pick deterministic certificates: a
// maximally deficient set with the smallest mask, or the first deficient
// subpartition in canonical enumeration order.

#ifndef ARBOPACK_CONDITIONS_HPP_
#define ARBOPACK_CONDITIONS_HPP_

#include <optional>
#include <vector>

#include "arbopack/matroid.hpp"
#include "arbopack/mixed_graph.hpp"
#include "arbopack/scan.hpp"

namespace arbopack {

// Subset-enumeration checkers walk all 2^n vertex sets.
inline constexpr int kSubsetScanVertexLimit = 24;
// Per-component stages enumerate subpartitions of the component.
inline constexpr int kComponentVertexLimit = 12;
// Ancestor-closed unions of upstream components, counted per component.
inline constexpr std::size_t kClosedSetLimit = std::size_t{1} << 20;

// A mixed graph with a matroid whose elements are placed at vertices.
// Immutable; reachability closures, strong components, and the per-vertex
// demands r(S_W(v)) are precomputed.
class Instance {
 public:
  Instance(MixedGraph graph, Matroid matroid, Placement placement);

  const MixedGraph& graph() const { return graph_; }
  const Matroid& matroid() const { return matroid_; }
  const Placement& placement() const { return placement_; }
  const StrongComponents& components() const { return components_; }

  // S_X: the elements placed at vertices of x.
  ElemSet elements_at(VertexSet x) const;
  // r(S_X).
  int rank_at(VertexSet x) const { return matroid_.rank(elements_at(x)); }
  // r(S_W(v)): how many arborescences must contain v in any packing.
  int demand(int v) const { return demand_[v]; }

 private:
  MixedGraph graph_;
  Matroid matroid_;
  Placement placement_;
  StrongComponents components_;
  std::vector<ElemSet> at_vertex_;
  std::vector<int> demand_;
};

// Smallest vertex whose own element bundle is dependent.
struct PlacementDependence {
  int vertex = 0;
  ElemSet elements = 0;
};

// Replayable witness that a condition fails. Exactly one layout is active,
// chosen by kind; deficit is always the amount by which the stated
// inequality fails.
struct Certificate {
  enum class Kind {
    kDeficientSet,            // one vertex set whose in-degree is short
    kDeficientBisetFamily,    // bi-sets over a subpartition (conditions with
                              // outer extensions)
    kDeficientSubpartition,   // subpartition of a strong component with its
                              // chosen demand maximizers
  };
  Kind kind = Kind::kDeficientSet;
  int deficit = 0;
  VertexSet deficient_set = 0;      // kDeficientSet
  VertexSet group = 0;              // component or atom the family lives in
  Subpartition parts;               // inner sets, for both family kinds
  std::vector<BiSet> bisets;        // kDeficientBisetFamily
  std::vector<VertexSet> maximizers;  // kDeficientSubpartition
};

enum class KiralyMode { kFull, kRestricted };

struct CheckResult {
  enum class Status { kOk, kPlacementDependent, kViolated };
  Status status = Status::kOk;
  std::optional<PlacementDependence> dependence;
  std::optional<Certificate> certificate;
  // Which enumeration check_kiraly ran; unset for the other checkers.
  std::optional<KiralyMode> kiraly_mode;

  bool ok() const { return status == Status::kOk; }
};

// Edmonds: spanning packing for root multiset exists in a digraph iff
// d-(X) >= |{i : roots[i] not in X}| for all nonempty X.
CheckResult check_edmonds(const MixedGraph& digraph,
                          const std::vector<int>& roots,
                          Exec exec = Exec::kAuto);

// Reachability-based packing in a digraph: d-(X) >= |{i : roots[i] in
// W(X) \ X}| for all nonempty X.
CheckResult check_kkt(const MixedGraph& digraph, const std::vector<int>& roots,
                      Exec exec = Exec::kAuto);

// Mixed-graph packing of maximal arborescences for a root multiset: for
// every atom, every subpartition of it, and every choice of outer
// extensions disjoint from the atom, the edge count plus bi-set in-degrees
// must cover the per-part root counts.
CheckResult check_mt(const MixedGraph& g, const std::vector<int>& roots);

// Matroid-based spanning packing in a digraph: d-(X) >= r(S) - r(S_X).
CheckResult check_dns(const Instance& inst, Exec exec = Exec::kAuto);

// Maximal matroid-independent packing in a digraph:
// d-(X) >= r(S_W(X)) - r(S_X). kRestricted only enumerates X with
// v in X, X contained in W(v) for some v; the verdict is unchanged, only
// the certificate set differs.
CheckResult check_kiraly(const Instance& inst, KiralyMode mode = KiralyMode::kFull,
                         Exec exec = Exec::kAuto);

// All distinct W(Y) for Y inside W(component) minus the component itself,
// i.e. the ancestor-closed unions of upstream strong components. Includes
// the empty set; ascending by mask.
std::vector<VertexSet> upstream_closed_sets(const Instance& inst,
                                            int component_index);

// f_C(x): the demand an orientation of component C must cover at x,
//   max over closed Z of r(S_W(V(C))) - r(S_{x union Z}) - d_A-(x union Z).
// If maximizer is non-null it receives x union Z for the first Z (ascending
// mask) attaining the maximum. x must be a nonempty subset of V(C).
int eval_component_demand(const Instance& inst, VertexSet component,
                          VertexSet x, VertexSet* maximizer = nullptr);

// Condition with bi-set in-degrees per strong component: e_E(P) plus the
// family's bi-set in-degrees must cover sum of r(S_W(V(C))) - r(S_outer).
CheckResult check_condition_ii(const Instance& inst);

// Simplified per-component condition: e_E(P) >= sum of f_C over parts for
// every subpartition P of every strong component C.
CheckResult check_condition_iii(const Instance& inst);

// Smallest (by size, then mask) nonempty X violating
// d-(X) >= r(S_W(X)) - r(S_X); nullopt if none. The first hit in this order
// is automatically inclusion-minimal.
std::optional<VertexSet> find_minimal_deficient_set(const Instance& inst);

// Smallest (by size, then mask) tight set entered by the given arc, in a
// digraph instance already satisfying the in-degree condition. Such a set
// always lies inside W(head). nullopt if no tight set is entered.
std::optional<VertexSet> find_minimal_tight_set(const Instance& inst,
                                                int arc_id);

}  // namespace arbopack

#endif  // ARBOPACK_CONDITIONS_HPP_
