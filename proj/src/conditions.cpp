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

#include "arbopack/conditions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arbopack {

namespace {

void require_digraph(const MixedGraph& g, const char* what) {
  if (!g.edges().empty()) {
    throw std::invalid_argument(std::string(what) +
                                " is defined on digraphs; orient the edges "
                                "first");
  }
}

void require_scan_size(const MixedGraph& g) {
  if (g.vertex_count() > kSubsetScanVertexLimit) {
    throw std::domain_error("subset enumeration supports at most " +
                            std::to_string(kSubsetScanVertexLimit) +
                            " vertices, got " +
                            std::to_string(g.vertex_count()));
  }
}

CheckResult violated_set(VertexSet x, int deficit) {
  CheckResult result;
  result.status = CheckResult::Status::kViolated;
  Certificate cert;
  cert.kind = Certificate::Kind::kDeficientSet;
  cert.deficient_set = x;
  cert.deficit = deficit;
  result.certificate = std::move(cert);
  return result;
}

std::optional<CheckResult> placement_dependent(const Instance& inst) {
  int offender = 0;
  if (is_placement_independent(inst.matroid(), inst.placement(), &offender)) {
    return std::nullopt;
  }
  CheckResult result;
  result.status = CheckResult::Status::kPlacementDependent;
  result.dependence = PlacementDependence{
      offender, elements_at(inst.placement(), bit(offender))};
  return result;
}

// Deterministic subset-scan driver shared by the in-degree checkers: the
// certificate is the maximally deficient set, smallest mask on ties.
template <typename Eval>
CheckResult scan_check(const MixedGraph& g, Eval&& eval, Exec exec) {
  require_scan_size(g);
  DeficitHit hit =
      max_deficit_scan(1, bit(g.vertex_count()), std::forward<Eval>(eval),
                       exec);
  if (hit.found && hit.value > 0) {
    return violated_set(hit.mask, static_cast<int>(hit.value));
  }
  return CheckResult{};
}

int local_index(const std::vector<int>& verts, VertexSet global) {
  int local = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (contains(global, verts[i])) local |= 1 << i;
  }
  return local;
}

std::vector<int> member_list(VertexSet x) {
  std::vector<int> verts;
  for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
    verts.push_back(lowest_bit(rest));
  }
  return verts;
}

}  // namespace

Instance::Instance(MixedGraph graph, Matroid matroid, Placement placement)
    : graph_(std::move(graph)),
      matroid_(std::move(matroid)),
      placement_(std::move(placement)) {
  if (static_cast<int>(placement_.vertex_of.size()) != matroid_.size()) {
    throw std::invalid_argument("placement assigns " +
                                std::to_string(placement_.vertex_of.size()) +
                                " elements, matroid has " +
                                std::to_string(matroid_.size()));
  }
  for (int v : placement_.vertex_of) graph_.require_vertex(v);
  components_ = graph_.strong_components();
  at_vertex_.assign(graph_.vertex_count(), 0);
  for (std::size_t e = 0; e < placement_.vertex_of.size(); ++e) {
    at_vertex_[placement_.vertex_of[e]] |= bit(static_cast<int>(e));
  }
  demand_.resize(graph_.vertex_count());
  for (int v = 0; v < graph_.vertex_count(); ++v) {
    demand_[v] = rank_at(graph_.reach_of(v));
  }
}

ElemSet Instance::elements_at(VertexSet x) const {
  graph_.require_subset(x);
  ElemSet s = 0;
  for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
    s |= at_vertex_[lowest_bit(rest)];
  }
  return s;
}

CheckResult check_edmonds(const MixedGraph& digraph,
                          const std::vector<int>& roots, Exec exec) {
  require_digraph(digraph, "the spanning packing condition");
  for (int r : roots) digraph.require_vertex(r);
  return scan_check(
      digraph,
      [&](VertexSet x) -> long long {
        int demand = 0;
        for (int r : roots) {
          if (!contains(x, r)) ++demand;
        }
        return demand - digraph.indeg(x);
      },
      exec);
}

CheckResult check_kkt(const MixedGraph& digraph, const std::vector<int>& roots,
                      Exec exec) {
  require_digraph(digraph, "the reachability packing condition");
  for (int r : roots) digraph.require_vertex(r);
  return scan_check(
      digraph,
      [&](VertexSet x) -> long long {
        VertexSet w = digraph.reach_set(x);
        int demand = 0;
        for (int r : roots) {
          if (contains(w, r) && !contains(x, r)) ++demand;
        }
        return demand - digraph.indeg(x);
      },
      exec);
}

CheckResult check_mt(const MixedGraph& g, const std::vector<int>& roots) {
  for (int r : roots) g.require_vertex(r);
  if (roots.empty()) return CheckResult{};
  require_scan_size(g);
  std::vector<VertexSet> reachable;
  reachable.reserve(roots.size());
  for (int r : roots) reachable.push_back(g.forward_of(r));

  for (VertexSet atom : g.atoms(roots)) {
    if (set_size(atom) > kComponentVertexLimit) {
      throw std::domain_error("atom larger than the enumeration bound of " +
                              std::to_string(kComponentVertexLimit) +
                              " vertices");
    }
    std::vector<int> verts = member_list(atom);
    VertexSet outside = g.all_vertices() & ~atom;

    // Per-part demand: best outer extension disjoint from the atom. The
    // extension lowers the bi-set in-degree but disqualifies roots whose
    // reachable set meets it, so neither direction is monotone.
    std::size_t table_size = std::size_t{1} << verts.size();
    std::vector<int> best(table_size, 0);
    std::vector<VertexSet> best_outer(table_size, 0);
    for (std::size_t lm = 1; lm < table_size; ++lm) {
      VertexSet inner = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (lm & (std::size_t{1} << i)) inner |= bit(verts[i]);
      }
      bool first = true;
      VertexSet extension = 0;
      while (true) {
        int count = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
          if ((inner & ~reachable[i]) == 0 && !contains(inner, roots[i]) &&
              (extension & reachable[i]) == 0) {
            ++count;
          }
        }
        int value = count - g.indeg(BiSet{inner | extension, inner});
        if (first || value > best[lm]) {
          best[lm] = value;
          best_outer[lm] = inner | extension;
          first = false;
        }
        if (extension == outside) break;
        extension = (extension - outside) & outside;
      }
    }

    CheckResult result;
    for_each_subpartition(atom, [&](const std::vector<VertexSet>& parts) {
      long long total = 0;
      for (VertexSet part : parts) total += best[local_index(verts, part)];
      int crossing = g.subpartition_edge_count(Subpartition{parts});
      if (crossing >= total) return false;
      result.status = CheckResult::Status::kViolated;
      Certificate cert;
      cert.kind = Certificate::Kind::kDeficientBisetFamily;
      cert.group = atom;
      cert.parts = Subpartition{parts};
      for (VertexSet part : parts) {
        cert.bisets.push_back(BiSet{best_outer[local_index(verts, part)], part});
      }
      cert.deficit = static_cast<int>(total - crossing);
      result.certificate = std::move(cert);
      return true;
    });
    if (!result.ok()) return result;
  }
  return CheckResult{};
}

CheckResult check_dns(const Instance& inst, Exec exec) {
  require_digraph(inst.graph(), "the spanning matroid packing condition");
  if (auto dep = placement_dependent(inst)) return *dep;
  int total = inst.matroid().rank_all();
  return scan_check(
      inst.graph(),
      [&](VertexSet x) -> long long {
        return total - inst.rank_at(x) - inst.graph().indeg(x);
      },
      exec);
}

CheckResult check_kiraly(const Instance& inst, KiralyMode mode, Exec exec) {
  require_digraph(inst.graph(), "the in-degree condition");
  if (auto dep = placement_dependent(inst)) {
    dep->kiraly_mode = mode;
    return *dep;
  }
  const MixedGraph& g = inst.graph();
  auto deficit = [&](VertexSet x) -> long long {
    return inst.rank_at(g.reach_set(x)) - inst.rank_at(x) - g.indeg(x);
  };
  CheckResult result;
  if (mode == KiralyMode::kFull) {
    result = scan_check(g, deficit, exec);
  } else {
    result = scan_check(
        g,
        [&](VertexSet x) -> long long {
          // Only sets pinched between some vertex and its reach closure;
          // skipping the rest never changes the verdict.
          for (VertexSet rest = x; rest != 0; rest &= rest - 1) {
            if ((x & ~g.reach_of(lowest_bit(rest))) == 0) return deficit(x);
          }
          return kScanSkip;
        },
        exec);
  }
  result.kiraly_mode = mode;
  return result;
}

std::vector<VertexSet> upstream_closed_sets(const Instance& inst,
                                            int component_index) {
  const StrongComponents& sc = inst.components();
  if (component_index < 0 ||
      component_index >= static_cast<int>(sc.components.size())) {
    throw std::invalid_argument("component index out of range");
  }
  VertexSet wc = inst.graph().reach_set(sc.components[component_index]);

  // Components fully inside W(V(C)) other than C itself, in topological
  // order (the component list already is).
  std::vector<int> upstream;
  for (int j = 0; j < static_cast<int>(sc.components.size()); ++j) {
    if (j != component_index && (sc.components[j] & wc) != 0) {
      upstream.push_back(j);
    }
  }
  // Direct predecessors within the upstream list, as position masks.
  std::vector<std::uint64_t> pred(upstream.size(), 0);
  for (std::size_t i = 0; i < upstream.size(); ++i) {
    for (int succ : sc.successors[upstream[i]]) {
      for (std::size_t j = 0; j < upstream.size(); ++j) {
        if (upstream[j] == succ) pred[j] |= std::uint64_t{1} << i;
      }
    }
  }

  // Every W(Y) is an ancestor-closed union of upstream components and vice
  // versa; walk the order ideals directly. Positions are processed in
  // topological order so a component may join only after its predecessors.
  std::vector<VertexSet> result;
  struct Frame {
    std::size_t pos;
    std::uint64_t chosen;
    VertexSet vertices;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.pos == upstream.size()) {
      result.push_back(f.vertices);
      if (result.size() > kClosedSetLimit) {
        throw std::domain_error("too many closed upstream sets to enumerate");
      }
      continue;
    }
    stack.push_back({f.pos + 1, f.chosen, f.vertices});
    if ((pred[f.pos] & ~f.chosen) == 0) {
      stack.push_back({f.pos + 1, f.chosen | (std::uint64_t{1} << f.pos),
                       f.vertices | sc.components[upstream[f.pos]]});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

int component_index_of(const Instance& inst, VertexSet component) {
  if (component == 0) {
    throw std::invalid_argument("component must be nonempty");
  }
  inst.graph().require_subset(component);
  int idx = inst.components().component_of[lowest_bit(component)];
  if (inst.components().components[idx] != component) {
    throw std::invalid_argument("the given set is not a strong component");
  }
  return idx;
}

int component_demand(const Instance& inst, VertexSet x,
                     const std::vector<VertexSet>& closed, int whole_rank,
                     VertexSet* maximizer) {
  bool first = true;
  int best = 0;
  for (VertexSet z : closed) {
    int value =
        whole_rank - inst.rank_at(x | z) - inst.graph().indeg(x | z);
    if (first || value > best) {
      best = value;
      if (maximizer != nullptr) *maximizer = x | z;
      first = false;
    }
  }
  return best;
}

}  // namespace

int eval_component_demand(const Instance& inst, VertexSet component,
                          VertexSet x, VertexSet* maximizer) {
  int idx = component_index_of(inst, component);
  if (x == 0 || (x & ~component) != 0) {
    throw std::invalid_argument(
        "demand argument must be a nonempty subset of the component");
  }
  std::vector<VertexSet> closed = upstream_closed_sets(inst, idx);
  int whole_rank = inst.rank_at(inst.graph().reach_set(component));
  return component_demand(inst, x, closed, whole_rank, maximizer);
}

namespace {

// Shared per-component walk for the two subpartition conditions. The demand
// table and certificate layout differ; the enumeration order (and therefore
// the reported first violation) is identical.
template <typename DemandFn, typename MakeCert>
CheckResult per_component_check(const Instance& inst, DemandFn&& demand,
                                MakeCert&& make_cert) {
  if (auto dep = placement_dependent(inst)) return *dep;
  const StrongComponents& sc = inst.components();
  for (int c = 0; c < static_cast<int>(sc.components.size()); ++c) {
    VertexSet component = sc.components[c];
    if (set_size(component) > kComponentVertexLimit) {
      throw std::domain_error(
          "strong component larger than the enumeration bound of " +
          std::to_string(kComponentVertexLimit) + " vertices");
    }
    std::vector<int> verts = member_list(component);
    std::vector<VertexSet> closed = upstream_closed_sets(inst, c);
    int whole_rank = inst.rank_at(inst.graph().reach_set(component));

    std::size_t table_size = std::size_t{1} << verts.size();
    std::vector<int> table(table_size, 0);
    std::vector<VertexSet> arg(table_size, 0);
    for (std::size_t lm = 1; lm < table_size; ++lm) {
      VertexSet x = 0;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (lm & (std::size_t{1} << i)) x |= bit(verts[i]);
      }
      table[lm] = demand(x, closed, whole_rank, &arg[lm]);
    }

    CheckResult result;
    for_each_subpartition(component, [&](const std::vector<VertexSet>& parts) {
      long long total = 0;
      for (VertexSet part : parts) total += table[local_index(verts, part)];
      int crossing =
          inst.graph().subpartition_edge_count(Subpartition{parts});
      if (crossing >= total) return false;
      result.status = CheckResult::Status::kViolated;
      Certificate cert;
      cert.group = component;
      cert.parts = Subpartition{parts};
      cert.deficit = static_cast<int>(total - crossing);
      for (VertexSet part : parts) {
        make_cert(cert, part, arg[local_index(verts, part)]);
      }
      result.certificate = std::move(cert);
      return true;
    });
    if (!result.ok()) return result;
  }
  return CheckResult{};
}

}  // namespace

CheckResult check_condition_ii(const Instance& inst) {
  return per_component_check(
      inst,
      [&](VertexSet x, const std::vector<VertexSet>& closed, int whole_rank,
          VertexSet* outer) {
        bool first = true;
        int best = 0;
        for (VertexSet z : closed) {
          int value = whole_rank - inst.rank_at(x | z) -
                      inst.graph().indeg(BiSet{x | z, x});
          if (first || value > best) {
            best = value;
            *outer = x | z;
            first = false;
          }
        }
        return best;
      },
      [](Certificate& cert, VertexSet part, VertexSet outer) {
        cert.kind = Certificate::Kind::kDeficientBisetFamily;
        cert.bisets.push_back(BiSet{outer, part});
      });
}

CheckResult check_condition_iii(const Instance& inst) {
  return per_component_check(
      inst,
      [&](VertexSet x, const std::vector<VertexSet>& closed, int whole_rank,
          VertexSet* maximizer) {
        return component_demand(inst, x, closed, whole_rank, maximizer);
      },
      [](Certificate& cert, VertexSet part, VertexSet maximizer) {
        cert.kind = Certificate::Kind::kDeficientSubpartition;
        (void)part;
        cert.maximizers.push_back(maximizer);
      });
}

namespace {

// Walks nonempty subsets by ascending size, then ascending mask, calling
// pred until it returns true. The first hit is inclusion-minimal within the
// predicate's true-set restricted to its size class, and no smaller class
// had a hit, so it is inclusion-minimal overall.
template <typename Pred>
std::optional<VertexSet> first_subset_by_size(int n, Pred&& pred) {
  VertexSet limit = n == kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
  for (int size = 1; size <= n; ++size) {
    VertexSet mask = size == kMaxVertices ? ~VertexSet{0} : bit(size) - 1;
    while (true) {
      if (pred(mask)) return mask;
      // Gosper's hack: next mask of the same popcount.
      VertexSet low = mask & (~mask + 1);
      VertexSet ripple = mask + low;
      VertexSet next = ripple | (((mask ^ ripple) >> 2) / low);
      if (next > limit || next < mask) break;
      mask = next;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> find_minimal_deficient_set(const Instance& inst) {
  require_digraph(inst.graph(), "the in-degree condition");
  require_scan_size(inst.graph());
  const MixedGraph& g = inst.graph();
  return first_subset_by_size(g.vertex_count(), [&](VertexSet x) {
    return inst.rank_at(g.reach_set(x)) - inst.rank_at(x) - g.indeg(x) > 0;
  });
}

std::optional<VertexSet> find_minimal_tight_set(const Instance& inst,
                                                int arc_id) {
  require_digraph(inst.graph(), "the in-degree condition");
  require_scan_size(inst.graph());
  const MixedGraph& g = inst.graph();
  if (arc_id < 0 || arc_id >= static_cast<int>(g.arcs().size())) {
    throw std::invalid_argument("arc id out of range");
  }
  if (!check_kiraly(inst).ok()) {
    throw std::invalid_argument(
        "tight sets are only defined when the in-degree condition holds");
  }
  Arc arc = g.arcs()[arc_id];
  auto hit = first_subset_by_size(g.vertex_count(), [&](VertexSet x) {
    if (contains(x, arc.tail) || !contains(x, arc.head)) return false;
    return inst.rank_at(g.reach_set(x)) - inst.rank_at(x) - g.indeg(x) == 0;
  });
  if (hit && (*hit & ~g.reach_of(arc.head)) != 0) {
    throw std::logic_error("minimal tight set escaped the head's closure");
  }
  return hit;
}

}  // namespace arbopack
