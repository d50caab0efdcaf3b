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

#ifndef ARBOPACK_MIXED_GRAPH_HPP_
#define ARBOPACK_MIXED_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace arbopack {

// Vertex subsets are 64-bit masks: vertex i is bit i. The whole library is
// built around exhaustive enumeration over these masks, so graphs are capped
// at kMaxVertices and construction fails fast above that.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int set_size(std::uint64_t x) { return std::popcount(x); }
inline bool contains(std::uint64_t x, int i) { return (x >> i) & 1u; }
inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
inline int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

inline VertexSet vset(std::initializer_list<int> vs) {
  VertexSet x = 0;
  for (int v : vs) x |= bit(v);
  return x;
}

// Undirected edge; endpoints are unordered but stored as given.
struct Edge {
  int u;
  int v;
};

// Directed arc from tail to head.
struct Arc {
  int tail;
  int head;
};

// Nested pair of vertex sets, inner subset of outer.
struct BiSet {
  VertexSet outer;
  VertexSet inner;
};

// Pairwise disjoint nonempty vertex sets (need not cover V).
struct Subpartition {
  std::vector<VertexSet> parts;
};

// Direction choice per edge-id. forward[e] orients edge e from its stored
// .u endpoint to its stored .v endpoint; otherwise the reverse.
struct Orientation {
  std::vector<bool> forward;
};

inline Arc edge_as_arc(const Edge& e, bool forward) {
  return forward ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

// Strong components with their condensation. Components are listed in a
// topological order (every arc between distinct components goes from an
// earlier component to a later one), so sinks can be read off in O(1).
struct StrongComponents {
  std::vector<VertexSet> components;
  std::vector<int> component_of;             // vertex -> index into components
  std::vector<std::vector<int>> successors;  // condensation adjacency, deduped
  std::vector<bool> is_sink;                 // no arc leaves the component
};

// A multigraph with undirected edges and directed arcs, no loops. Edge and
// arc ids are their positions in the constructor lists and stay stable.
// Instances are immutable after construction and safe to share across
// threads; per-vertex reachability closures are precomputed once.
class MixedGraph {
 public:
  MixedGraph(int n, std::vector<Edge> edges, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  VertexSet all_vertices() const { return full_; }

  // W(X): X together with every vertex from which X can be reached along a
  // mixed path (arcs forward, edges either way). W(empty) is empty.
  VertexSet reach_set(VertexSet x) const;

  // W({v}) without the range check, straight from the precomputed table.
  VertexSet reach_of(int v) const { return reach_of_[v]; }

  // Vertices reachable *from* v (the U_i sets when v is a root).
  VertexSet forward_of(int v) const { return forward_of_[v]; }

  StrongComponents strong_components() const;

  // Partition of V by equal root-reachability signature: u and v share an
  // atom iff {i : u reachable from roots[i]} = {i : v reachable from
  // roots[i]}. Atoms are ordered by their smallest vertex.
  std::vector<VertexSet> atoms(const std::vector<int>& roots) const;

  // Number of arcs with tail outside x and head inside x. Edges never count.
  int indeg(VertexSet x) const;

  // Bi-set in-degree: arcs with tail outside b.outer and head inside b.inner.
  int indeg(const BiSet& b) const;

  // e_E(P): edges joining two distinct parts, or a part and a vertex outside
  // all parts. Edges inside one part or entirely outside are not counted.
  int subpartition_edge_count(const Subpartition& p) const;

  void require_vertex(int v) const;
  void require_subset(VertexSet x) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  VertexSet full_;
  std::vector<VertexSet> reach_of_;    // reach_of_[v] = W({v})
  std::vector<VertexSet> forward_of_;  // forward_of_[v] = U(v)
};

// Digraph obtained by replacing every edge with its chosen arc. Arc ids
// below base_arc_count are the original arcs, id-preserving; arc
// base_arc_count + k realizes edge k in the direction applied.forward[k].
struct OrientedGraph {
  MixedGraph digraph;
  int base_arc_count;
  Orientation applied;
};

OrientedGraph apply_orientation(const MixedGraph& g, const Orientation& o);

// Validity helpers shared by the checkers.
bool is_valid_subpartition(const MixedGraph& g, const Subpartition& p);

namespace internal {

// Bits of x at positions >= i; shift-safe for i up to 64.
inline std::uint64_t bits_from(std::uint64_t x, int i) {
  return i >= 64 ? 0 : (x >> i) << i;
}

template <typename Callback>
bool subpartition_rec(VertexSet avail, int next_vertex, int remaining,
                      std::vector<VertexSet>& parts, Callback& cb) {
  if (remaining == 0) return cb(parts);
  if (set_size(bits_from(avail, next_vertex)) < remaining) return false;
  for (VertexSet heads = bits_from(avail, next_vertex); heads != 0;
       heads &= heads - 1) {
    int v = lowest_bit(heads);
    VertexSet above = bits_from(avail, v + 1);
    VertexSet extra = 0;
    while (true) {
      VertexSet part = bit(v) | extra;
      parts.push_back(part);
      bool stop =
          subpartition_rec(avail & ~part, v + 1, remaining - 1, parts, cb);
      parts.pop_back();
      if (stop) return true;
      if (extra == above) break;
      extra = (extra - above) & above;  // next submask of above, ascending
    }
  }
  return false;
}

}  // namespace internal

// Enumerates every subpartition of universe (nonempty pairwise disjoint
// subsets, not necessarily covering it) in a fixed deterministic order:
// ascending part count first; parts carry strictly increasing smallest
// vertices and are chosen smallest-vertex first, then ascending mask. The
// callback gets the part list and stops the walk by returning true. Returns
// whether the walk was stopped. Certificates freeze "first violation" in
// exactly this order, so it must not change.
template <typename Callback>
bool for_each_subpartition(VertexSet universe, Callback&& cb) {
  std::vector<VertexSet> parts;
  int n = set_size(universe);
  for (int count = 1; count <= n; ++count) {
    if (internal::subpartition_rec(universe, 0, count, parts, cb)) return true;
  }
  return false;
}

}  // namespace arbopack

#endif  // ARBOPACK_MIXED_GRAPH_HPP_
