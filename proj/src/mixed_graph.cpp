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

#include "arbopack/mixed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arbopack {

namespace {

std::string describe(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::string describe(const Arc& a) {
  return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

}  // namespace

MixedGraph::MixedGraph(int n, std::vector<Edge> edges, std::vector<Arc> arcs)
    : n_(n), edges_(std::move(edges)), arcs_(std::move(arcs)) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " exceeds the bitset limit of " +
                                std::to_string(kMaxVertices));
  }
  full_ = n == kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw std::invalid_argument("edge " + describe(e) + " out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop edge " + describe(e) + " not allowed");
    }
  }
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw std::invalid_argument("arc " + describe(a) + " out of range");
    }
    if (a.tail == a.head) {
      throw std::invalid_argument("loop arc " + describe(a) + " not allowed");
    }
  }

  // step[v] collects the one-step predecessors of v (tails of arcs into v and
  // edge neighbours); back[v] the one-step successors. Closures follow by a
  // bitmask BFS per vertex.
  std::vector<VertexSet> pred(n_, 0), succ(n_, 0);
  for (const Edge& e : edges_) {
    pred[e.u] |= bit(e.v);
    pred[e.v] |= bit(e.u);
    succ[e.u] |= bit(e.v);
    succ[e.v] |= bit(e.u);
  }
  for (const Arc& a : arcs_) {
    pred[a.head] |= bit(a.tail);
    succ[a.tail] |= bit(a.head);
  }
  auto closure = [&](int start, const std::vector<VertexSet>& step) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
        next |= step[lowest_bit(rest)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  };
  reach_of_.resize(n_);
  forward_of_.resize(n_);
  for (int v = 0; v < n_; ++v) {
    reach_of_[v] = closure(v, pred);
    forward_of_[v] = closure(v, succ);
  }
}

void MixedGraph::require_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range");
  }
}

void MixedGraph::require_subset(VertexSet x) const {
  if ((x & ~full_) != 0) {
    throw std::invalid_argument("vertex set contains bits beyond the graph");
  }
}

VertexSet MixedGraph::reach_set(VertexSet x) const {
  require_subset(x);
  VertexSet w = 0;
  for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
    w |= reach_of_[lowest_bit(rest)];
  }
  return w;
}

StrongComponents MixedGraph::strong_components() const {
  StrongComponents sc;
  sc.component_of.assign(n_, -1);
  // u and v are strongly connected iff each reaches the other, i.e. the
  // backward and forward closures agree: comp(v) = W(v) & U(v).
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  // Topological order: if component A has an arc into component B then every
  // vertex of B is forward-reachable from A but not conversely, so A's
  // forward closure is strictly larger. Sorting by descending closure size
  // (ties by smallest vertex, for determinism) therefore places A first.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ca = set_size(forward_of_[a]), cb = set_size(forward_of_[b]);
    if (ca != cb) return ca > cb;
    return a < b;
  });
  for (int v : order) {
    if (sc.component_of[v] >= 0) continue;
    VertexSet comp = reach_of_[v] & forward_of_[v];
    int id = static_cast<int>(sc.components.size());
    sc.components.push_back(comp);
    for (VertexSet rest = comp; rest != 0; rest &= rest - 1) {
      sc.component_of[lowest_bit(rest)] = id;
    }
  }
  int k = static_cast<int>(sc.components.size());
  sc.successors.assign(k, {});
  sc.is_sink.assign(k, true);
  for (const Arc& a : arcs_) {
    int ct = sc.component_of[a.tail], ch = sc.component_of[a.head];
    if (ct != ch) {
      sc.successors[ct].push_back(ch);
      sc.is_sink[ct] = false;
    }
  }
  for (auto& succ : sc.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return sc;
}

std::vector<VertexSet> MixedGraph::atoms(const std::vector<int>& roots) const {
  if (roots.empty()) {
    throw std::invalid_argument("atoms require at least one root");
  }
  if (roots.size() > 64) {
    throw std::invalid_argument("more than 64 roots not supported");
  }
  for (int r : roots) require_vertex(r);
  std::vector<std::uint64_t> signature(n_, 0);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    VertexSet ui = forward_of_[roots[i]];
    for (VertexSet rest = ui; rest != 0; rest &= rest - 1) {
      signature[lowest_bit(rest)] |= bit(static_cast<int>(i));
    }
  }
  std::vector<VertexSet> result;
  std::vector<bool> grouped(n_, false);
  for (int v = 0; v < n_; ++v) {
    if (grouped[v]) continue;
    VertexSet atom = 0;
    for (int u = v; u < n_; ++u) {
      if (!grouped[u] && signature[u] == signature[v]) {
        atom |= bit(u);
        grouped[u] = true;
      }
    }
    result.push_back(atom);
  }
  return result;
}

int MixedGraph::indeg(VertexSet x) const {
  require_subset(x);
  if (x == 0) throw std::invalid_argument("in-degree of the empty set");
  int d = 0;
  for (const Arc& a : arcs_) {
    if (!contains(x, a.tail) && contains(x, a.head)) ++d;
  }
  return d;
}

int MixedGraph::indeg(const BiSet& b) const {
  require_subset(b.outer);
  if ((b.inner & ~b.outer) != 0) {
    throw std::invalid_argument("bi-set inner set not contained in outer set");
  }
  int d = 0;
  for (const Arc& a : arcs_) {
    if (!contains(b.outer, a.tail) && contains(b.inner, a.head)) ++d;
  }
  return d;
}

bool is_valid_subpartition(const MixedGraph& g, const Subpartition& p) {
  VertexSet seen = 0;
  for (VertexSet part : p.parts) {
    if (part == 0) return false;
    if ((part & ~g.all_vertices()) != 0) return false;
    if ((part & seen) != 0) return false;
    seen |= part;
  }
  return true;
}

int MixedGraph::subpartition_edge_count(const Subpartition& p) const {
  if (!is_valid_subpartition(*this, p)) {
    throw std::invalid_argument(
        "subpartition parts must be nonempty, in range, and disjoint");
  }
  std::vector<int> part_of(n_, -1);
  for (std::size_t q = 0; q < p.parts.size(); ++q) {
    for (VertexSet rest = p.parts[q]; rest != 0; rest &= rest - 1) {
      part_of[lowest_bit(rest)] = static_cast<int>(q);
    }
  }
  int count = 0;
  for (const Edge& e : edges_) {
    // Counts unless both endpoints share a part or both lie outside all parts.
    if (part_of[e.u] != part_of[e.v]) ++count;
  }
  return count;
}

OrientedGraph apply_orientation(const MixedGraph& g, const Orientation& o) {
  if (o.forward.size() != g.edges().size()) {
    throw std::invalid_argument("orientation covers " +
                                std::to_string(o.forward.size()) +
                                " edges, graph has " +
                                std::to_string(g.edges().size()));
  }
  std::vector<Arc> arcs = g.arcs();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    arcs.push_back(edge_as_arc(g.edges()[e], o.forward[e]));
  }
  return OrientedGraph{MixedGraph(g.vertex_count(), {}, std::move(arcs)),
                       static_cast<int>(g.arcs().size()), o};
}

}  // namespace arbopack
