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

#include "arbopack/orientation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arbopack {

DemandFunction::DemandFunction(VertexSet universe,
                               const std::function<int(VertexSet)>& eval)
    : universe_(universe) {
  if (universe == 0) {
    throw std::invalid_argument("demand universe must be nonempty");
  }
  if (set_size(universe) > kDemandVertexLimit) {
    throw std::invalid_argument("demand universe larger than " +
                                std::to_string(kDemandVertexLimit) +
                                " vertices");
  }
  for (VertexSet rest = universe; rest != 0; rest &= rest - 1) {
    verts_.push_back(lowest_bit(rest));
  }
  table_.assign(std::size_t{1} << verts_.size(), 0);
  for (std::size_t lm = 1; lm < table_.size(); ++lm) {
    table_[lm] = eval(to_global(lm));
  }
}

std::size_t DemandFunction::to_local(VertexSet x) const {
  if (x == 0 || (x & ~universe_) != 0) {
    throw std::invalid_argument(
        "demand argument must be a nonempty subset of the universe");
  }
  std::size_t lm = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (contains(x, verts_[i])) lm |= std::size_t{1} << i;
  }
  return lm;
}

VertexSet DemandFunction::to_global(std::size_t local_mask) const {
  VertexSet x = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (local_mask & (std::size_t{1} << i)) x |= bit(verts_[i]);
  }
  return x;
}

int DemandFunction::operator()(VertexSet x) const {
  return table_[to_local(x)];
}

std::optional<SupermodularityViolation> check_intersecting_supermodular(
    const DemandFunction& f) {
  std::size_t size = f.table_size();
  for (std::size_t a = 1; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if ((a & b) == 0) continue;
      int gap = f.local(a) + f.local(b) - f.local(a | b) - f.local(a & b);
      if (gap > 0) {
        return SupermodularityViolation{f.to_global(a), f.to_global(b), gap};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Local view of the covering problem: vertices renumbered to 0..k-1, edge
// directions tracked as a reversal bitmask against the stored endpoints.
struct CoverState {
  std::vector<int> fplus;                   // clipped demands by local mask
  std::vector<std::pair<int, int>> edges;   // local endpoints as stored
  std::uint64_t reversed = 0;

  int tail(int e) const {
    return (reversed >> e) & 1 ? edges[e].second : edges[e].first;
  }
  int head(int e) const {
    return (reversed >> e) & 1 ? edges[e].first : edges[e].second;
  }
  int indeg(std::size_t mask) const {
    int d = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(mask >> tail(static_cast<int>(e)) & 1) &&
          (mask >> head(static_cast<int>(e)) & 1)) {
        ++d;
      }
    }
    return d;
  }
  bool covers_all(std::uint64_t rev) {
    std::uint64_t saved = reversed;
    reversed = rev;
    bool ok = true;
    for (std::size_t m = 1; m < fplus.size() && ok; ++m) {
      ok = indeg(m) >= fplus[m];
    }
    reversed = saved;
    return ok;
  }
};

// Most deficient set, ties by fewer vertices then smaller mask; such a pick
// is inclusion-minimal among the maximally deficient sets. Returns 0 when
// nothing is deficient.
std::size_t worst_deficient(const CoverState& st) {
  std::size_t best = 0;
  int best_deficit = 0;
  int best_size = 0;
  for (std::size_t m = 1; m < st.fplus.size(); ++m) {
    int deficit = st.fplus[m] - st.indeg(m);
    if (deficit <= 0) continue;
    int size = set_size(m);
    if (deficit > best_deficit ||
        (deficit == best_deficit &&
         (size < best_size || (size == best_size && m < best)))) {
      best = m;
      best_deficit = deficit;
      best_size = size;
    }
  }
  return best;
}

// One pass of the improvement heuristic: find a reversible directed path
// from the worst deficient set to an outside vertex whose reversal hurts no
// set below its demand. Returns false when stuck.
bool improve_once(CoverState& st, int k) {
  std::size_t target = worst_deficient(st);
  if (target == 0) return false;

  std::vector<int> parent_edge(k, -1);
  std::vector<int> order;
  std::vector<bool> seen(k, false);
  for (int v = 0; v < k; ++v) {
    if (target >> v & 1) {
      seen[v] = true;
      order.push_back(v);
    }
  }
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int u = order[qi];
    for (std::size_t e = 0; e < st.edges.size(); ++e) {
      int ei = static_cast<int>(e);
      if (st.tail(ei) != u || seen[st.head(ei)]) continue;
      int w = st.head(ei);
      seen[w] = true;
      parent_edge[w] = ei;
      order.push_back(w);
    }
  }

  for (int t : order) {
    if (target >> t & 1) continue;
    // Walk back to the set to find this candidate's source.
    int s = t;
    while (!(target >> s & 1)) s = st.tail(parent_edge[s]);
    // Reversal lowers the in-degree of exactly the sets containing t but
    // not s; all of them need slack.
    bool safe = true;
    for (std::size_t m = 1; m < st.fplus.size() && safe; ++m) {
      if ((m >> t & 1) && !(m >> s & 1)) {
        safe = st.indeg(m) - st.fplus[m] >= 1;
      }
    }
    if (!safe) continue;
    int v = t;
    while (!(target >> v & 1)) {
      int e = parent_edge[v];
      int prev = st.tail(e);  // read before flipping the edge
      st.reversed ^= std::uint64_t{1} << e;
      v = prev;
    }
    return true;
  }
  return false;
}

}  // namespace

CoverResult cover_orientation(const std::vector<Edge>& edges,
                              const DemandFunction& f, Exec exec) {
  for (const Edge& e : edges) {
    if (!contains(f.universe(), e.u) || !contains(f.universe(), e.v)) {
      throw std::invalid_argument(
          "edge endpoints must lie inside the demand universe");
    }
  }
  if (edges.size() > kOrientationEdgeLimit) {
    throw std::domain_error("orienting more than " +
                            std::to_string(kOrientationEdgeLimit) +
                            " edges is not supported");
  }
  int k = f.vertex_count();
  CoverState st;
  st.fplus.resize(f.table_size());
  for (std::size_t m = 1; m < f.table_size(); ++m) {
    st.fplus[m] = std::max(f.local(m), 0);
  }
  st.edges.reserve(edges.size());
  for (const Edge& e : edges) {
    st.edges.emplace_back(
        lowest_bit(static_cast<std::uint64_t>(f.to_local(bit(e.u)))),
        lowest_bit(static_cast<std::uint64_t>(f.to_local(bit(e.v)))));
  }

  auto result_from = [&](std::uint64_t rev) {
    Orientation o;
    o.forward.resize(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      o.forward[e] = !(rev >> e & 1);
    }
    CoverResult r;
    r.orientation = std::move(o);
    return r;
  };

  // Improvement loop; every successful pass reduces the total deficit by at
  // least one, so the initial total bounds the iterations.
  long long budget = 0;
  for (std::size_t m = 1; m < st.fplus.size(); ++m) {
    budget += std::max(st.fplus[m] - st.indeg(m), 0);
  }
  for (long long i = 0; i < budget; ++i) {
    if (worst_deficient(st) == 0) break;
    if (!improve_once(st, k)) break;
  }
  if (worst_deficient(st) == 0) return result_from(st.reversed);

  // Exhaustive fallback over direction choices.
  auto found = min_satisfying_scan(
      0, std::uint64_t{1} << edges.size(),
      [&](std::uint64_t rev) { return st.covers_all(rev); }, exec);
  if (found) return result_from(*found);

  // No orientation exists: report the subpartition with the largest total
  // deficit, first in canonical order on ties.
  std::vector<int> part_of(k, -1);
  CoverResult r;
  Subpartition best;
  int best_deficit = 0;
  for_each_subpartition(f.universe(), [&](const std::vector<VertexSet>& parts) {
    std::fill(part_of.begin(), part_of.end(), -1);
    long long total = 0;
    for (std::size_t q = 0; q < parts.size(); ++q) {
      total += st.fplus[f.to_local(parts[q])];
      std::size_t lm = f.to_local(parts[q]);
      for (int v = 0; v < k; ++v) {
        if (lm >> v & 1) part_of[v] = static_cast<int>(q);
      }
    }
    for (const auto& [u, v] : st.edges) {
      if (part_of[u] != part_of[v]) --total;
    }
    if (total > best_deficit) {
      best_deficit = static_cast<int>(total);
      best.parts = parts;
    }
    return false;
  });
  if (best_deficit <= 0) {
    throw std::logic_error(
        "no orientation and no deficient subpartition; the demand function "
        "is not intersecting supermodular");
  }
  r.obstruction = std::move(best);
  r.deficit = best_deficit;
  return r;
}

bool orientation_covers(const std::vector<Edge>& edges,
                        const DemandFunction& f, const Orientation& o) {
  if (o.forward.size() != edges.size()) {
    throw std::invalid_argument("orientation size does not match edge list");
  }
  for (std::size_t m = 1; m < f.table_size(); ++m) {
    VertexSet x = f.to_global(m);
    int d = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      Arc a = edge_as_arc(edges[e], o.forward[e]);
      if (!contains(x, a.tail) && contains(x, a.head)) ++d;
    }
    if (d < f.local(m)) return false;
  }
  return true;
}

}  // namespace arbopack
