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

#include "arbopack/packing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace arbopack {

namespace {

void require_digraph(const MixedGraph& g) {
  if (!g.edges().empty()) {
    throw std::invalid_argument("expected a digraph; orient the edges first");
  }
}

std::optional<PlacementDependence> find_dependence(const Instance& inst) {
  int offender = 0;
  if (is_placement_independent(inst.matroid(), inst.placement(), &offender)) {
    return std::nullopt;
  }
  return PlacementDependence{offender,
                             elements_at(inst.placement(), bit(offender))};
}

// Shared backtracking state: one growing vertex set per element plus the
// element bundle at every vertex. Failed states are memoized on the used
// item set and the tree vertex sets, which determine the residual problem.
struct SearchState {
  const Instance* inst;
  std::vector<Arc> arcs;  // search works on a pure arc list
  std::vector<int> demand;
  std::vector<VertexSet> tree;
  std::vector<ElemSet> at;
  std::vector<int> count;
  std::vector<bool> used;
  std::vector<std::vector<int>> picked;  // arc ids per element, in pick order
  long long remaining = 0;
  std::unordered_set<std::string> failed;

  explicit SearchState(const Instance& instance, std::vector<Arc> arc_list)
      : inst(&instance), arcs(std::move(arc_list)) {
    const MixedGraph& g = inst->graph();
    int n = g.vertex_count();
    int k = inst->matroid().size();
    demand.resize(n);
    for (int v = 0; v < n; ++v) demand[v] = inst->demand(v);
    tree.resize(k);
    at.assign(n, 0);
    count.assign(n, 0);
    used.assign(arcs.size(), false);
    picked.resize(k);
    for (int s = 0; s < k; ++s) {
      int root = inst->placement().vertex_of[s];
      tree[s] = bit(root);
      at[root] |= bit(s);
      ++count[root];
    }
    for (int v = 0; v < n; ++v) remaining += demand[v] - count[v];
  }

  std::string key() const {
    std::string k((used.size() + 7) / 8 + tree.size() * 8, '\0');
    for (std::size_t a = 0; a < used.size(); ++a) {
      if (used[a]) k[a / 8] |= static_cast<char>(1 << (a % 8));
    }
    std::size_t off = (used.size() + 7) / 8;
    for (std::size_t s = 0; s < tree.size(); ++s) {
      for (int b = 0; b < 8; ++b) {
        k[off + s * 8 + b] = static_cast<char>((tree[s] >> (8 * b)) & 0xff);
      }
    }
    return k;
  }

  void apply(int a, int s) {
    used[a] = true;
    tree[s] |= bit(arcs[a].head);
    at[arcs[a].head] |= bit(s);
    ++count[arcs[a].head];
    --remaining;
    picked[s].push_back(a);
  }

  void undo(int a, int s) {
    used[a] = false;
    tree[s] &= ~bit(arcs[a].head);
    at[arcs[a].head] &= ~bit(s);
    --count[arcs[a].head];
    ++remaining;
    picked[s].pop_back();
  }

  bool extendable(int a, int s) const {
    const Arc& arc = arcs[a];
    return !used[a] && count[arc.head] < demand[arc.head] &&
           contains(tree[s], arc.tail) && !contains(tree[s], arc.head) &&
           inst->matroid().is_independent(at[arc.head] | bit(s));
  }
};

// Deterministic production search: hungriest head first, then arc id, then
// element id.
bool solve_priority(SearchState& st) {
  if (st.remaining == 0) return true;
  std::string key = st.key();
  if (st.failed.count(key) != 0) return false;

  struct Move {
    int slack;
    int arc;
    int elem;
  };
  std::vector<Move> moves;
  for (int a = 0; a < static_cast<int>(st.arcs.size()); ++a) {
    for (int s = 0; s < static_cast<int>(st.tree.size()); ++s) {
      if (st.extendable(a, s)) {
        moves.push_back(
            {st.demand[st.arcs[a].head] - st.count[st.arcs[a].head], a, s});
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) {
    if (x.slack != y.slack) return x.slack > y.slack;
    if (x.arc != y.arc) return x.arc < y.arc;
    return x.elem < y.elem;
  });
  for (const Move& mv : moves) {
    st.apply(mv.arc, mv.elem);
    if (solve_priority(st)) return true;
    st.undo(mv.arc, mv.elem);
  }
  st.failed.insert(std::move(key));
  return false;
}

// Oracle search: plain arc-major order, no precheck, no move ranking. Kept
// deliberately independent of solve_priority.
bool solve_plain(SearchState& st) {
  if (st.remaining == 0) return true;
  std::string key = st.key();
  if (st.failed.count(key) != 0) return false;
  for (int a = 0; a < static_cast<int>(st.arcs.size()); ++a) {
    for (int s = 0; s < static_cast<int>(st.tree.size()); ++s) {
      if (!st.extendable(a, s)) continue;
      st.apply(a, s);
      if (solve_plain(st)) return true;
      st.undo(a, s);
    }
  }
  st.failed.insert(std::move(key));
  return false;
}

// Turns a finished search state into a packing; ids at or beyond arc_base
// are oriented edges and are mapped back to their edge id.
Packing harvest(const SearchState& st, int arc_base) {
  Packing p;
  int k = static_cast<int>(st.tree.size());
  for (int s = 0; s < k; ++s) {
    Arborescence t;
    t.element = s;
    t.root = st.inst->placement().vertex_of[s];
    t.vertices = st.tree[s];
    for (int a : st.picked[s]) {
      ArborItem item;
      item.tail = st.arcs[a].tail;
      item.head = st.arcs[a].head;
      if (a < arc_base) {
        item.kind = ArborItem::Kind::kArc;
        item.id = a;
      } else {
        item.kind = ArborItem::Kind::kEdge;
        item.id = a - arc_base;
      }
      t.items.push_back(item);
    }
    p.trees.push_back(std::move(t));
  }
  return p;
}

}  // namespace

std::vector<Violation> verify_packing(const Instance& inst, const Packing& p) {
  const MixedGraph& g = inst.graph();
  const Matroid& m = inst.matroid();
  if (static_cast<int>(p.trees.size()) != m.size()) {
    throw std::invalid_argument("packing must contain one tree per element");
  }
  for (int s = 0; s < m.size(); ++s) {
    if (p.trees[s].element != s) {
      throw std::invalid_argument("trees must be ordered by element id");
    }
  }

  std::vector<Violation> out;
  auto flag = [&](Violation::Kind kind, std::string detail) {
    out.push_back(Violation{kind, std::move(detail)});
  };

  for (const Arborescence& t : p.trees) {
    std::string who = "tree " + std::to_string(t.element);
    g.require_vertex(t.root);
    g.require_subset(t.vertices);
    if (t.root != inst.placement().vertex_of[t.element]) {
      flag(Violation::Kind::kRootMismatch,
           who + " is rooted at " + std::to_string(t.root) +
               " but its element is placed at " +
               std::to_string(inst.placement().vertex_of[t.element]));
    }
    VertexSet heads = 0;
    bool shape_ok = true;
    for (const ArborItem& it : t.items) {
      if (it.kind == ArborItem::Kind::kArc) {
        if (it.id < 0 || it.id >= static_cast<int>(g.arcs().size())) {
          throw std::invalid_argument(who + " references unknown arc " +
                                      std::to_string(it.id));
        }
        const Arc& a = g.arcs()[it.id];
        if (it.tail != a.tail || it.head != a.head) {
          throw std::invalid_argument(who + " uses arc " +
                                      std::to_string(it.id) +
                                      " with endpoints that are not the "
                                      "arc's");
        }
      } else {
        if (it.id < 0 || it.id >= static_cast<int>(g.edges().size())) {
          throw std::invalid_argument(who + " references unknown edge " +
                                      std::to_string(it.id));
        }
        const Edge& e = g.edges()[it.id];
        bool forward = it.tail == e.u && it.head == e.v;
        bool backward = it.tail == e.v && it.head == e.u;
        if (!forward && !backward) {
          throw std::invalid_argument(who + " uses edge " +
                                      std::to_string(it.id) +
                                      " with endpoints that are not the "
                                      "edge's");
        }
      }
      if (contains(heads, it.head)) {
        flag(Violation::Kind::kBadStructure,
             who + " has two items entering vertex " +
                 std::to_string(it.head));
        shape_ok = false;
      }
      heads |= bit(it.head);
    }
    if (contains(heads, t.root)) {
      flag(Violation::Kind::kBadStructure,
           who + " has an item entering its root");
      shape_ok = false;
    }
    VertexSet computed = heads | bit(t.root);
    if (t.vertices != computed) {
      flag(Violation::Kind::kBadStructure,
           who + " vertex set does not match its items");
      shape_ok = false;
    }
    for (const ArborItem& it : t.items) {
      if (!contains(computed, it.tail)) {
        flag(Violation::Kind::kBadStructure,
             who + " item from " + std::to_string(it.tail) +
                 " starts outside the tree");
        shape_ok = false;
      }
    }
    if (shape_ok) {
      // Heads are unique and the root is not one, so reaching every vertex
      // from the root certifies a tree.
      VertexSet reached = bit(t.root);
      bool grew = true;
      while (grew) {
        grew = false;
        for (const ArborItem& it : t.items) {
          if (contains(reached, it.tail) && !contains(reached, it.head)) {
            reached |= bit(it.head);
            grew = true;
          }
        }
      }
      if (reached != computed) {
        flag(Violation::Kind::kBadStructure,
             who + " is not connected from its root");
      }
    }
  }

  std::vector<int> arc_use(g.arcs().size(), 0);
  std::vector<int> edge_use(g.edges().size(), 0);
  for (const Arborescence& t : p.trees) {
    for (const ArborItem& it : t.items) {
      if (it.kind == ArborItem::Kind::kArc) {
        ++arc_use[it.id];
      } else {
        ++edge_use[it.id];
      }
    }
  }
  for (std::size_t a = 0; a < arc_use.size(); ++a) {
    if (arc_use[a] > 1) {
      flag(Violation::Kind::kItemReuse,
           "arc " + std::to_string(a) + " appears in " +
               std::to_string(arc_use[a]) + " trees");
    }
  }
  for (std::size_t e = 0; e < edge_use.size(); ++e) {
    if (edge_use[e] > 1) {
      flag(Violation::Kind::kItemReuse,
           "edge " + std::to_string(e) + " appears in " +
               std::to_string(edge_use[e]) + " trees");
    }
  }

  for (int v = 0; v < g.vertex_count(); ++v) {
    ElemSet covering = 0;
    for (const Arborescence& t : p.trees) {
      if (contains(t.vertices, v)) covering |= bit(t.element);
    }
    if (!m.is_independent(covering)) {
      flag(Violation::Kind::kDependentSet,
           "elements covering vertex " + std::to_string(v) +
               " are dependent");
    }
    if (set_size(covering) != inst.demand(v)) {
      flag(Violation::Kind::kCountMismatch,
           "vertex " + std::to_string(v) + " lies in " +
               std::to_string(set_size(covering)) + " trees, demand is " +
               std::to_string(inst.demand(v)));
    }
  }
  return out;
}

SolveResult pack_digraph(const Instance& inst) {
  require_digraph(inst.graph());
  CheckResult pre = check_kiraly(inst);
  if (pre.status == CheckResult::Status::kPlacementDependent) {
    SolveResult r;
    r.status = SolveResult::Status::kPlacementDependent;
    r.dependence = pre.dependence;
    return r;
  }
  if (pre.status == CheckResult::Status::kViolated) {
    SolveResult r;
    r.status = SolveResult::Status::kInfeasible;
    r.certificate = pre.certificate;
    return r;
  }

  SearchState st(inst, inst.graph().arcs());
  if (!solve_priority(st)) {
    throw std::logic_error(
        "packing search exhausted although the in-degree condition holds");
  }
  SolveResult r;
  r.packing = harvest(st, static_cast<int>(inst.graph().arcs().size()));
  return r;
}

SolveResult pack_mixed(const Instance& inst, Exec exec) {
  if (auto dep = find_dependence(inst)) {
    SolveResult r;
    r.status = SolveResult::Status::kPlacementDependent;
    r.dependence = dep;
    return r;
  }
  const MixedGraph& g = inst.graph();
  const StrongComponents& sc = inst.components();
  Orientation full;
  full.forward.assign(g.edges().size(), false);

  for (int c = 0; c < static_cast<int>(sc.components.size()); ++c) {
    VertexSet component = sc.components[c];
    if (set_size(component) > kDemandVertexLimit) {
      throw std::domain_error(
          "strong component larger than the orientation bound of " +
          std::to_string(kDemandVertexLimit) + " vertices");
    }
    std::vector<int> edge_ids;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      bool u_in = contains(component, g.edges()[e].u);
      bool v_in = contains(component, g.edges()[e].v);
      if (u_in != v_in) {
        throw std::logic_error("edge crosses strong components");
      }
      if (u_in) {
        edge_ids.push_back(static_cast<int>(e));
        edges.push_back(g.edges()[e]);
      }
    }
    DemandFunction demand(component, [&](VertexSet x) {
      return eval_component_demand(inst, component, x);
    });
    CoverResult cover = cover_orientation(edges, demand, exec);
    if (!cover.covered()) {
      Certificate cert;
      cert.kind = Certificate::Kind::kDeficientSubpartition;
      cert.group = component;
      cert.parts = *cover.obstruction;
      cert.deficit = cover.deficit;
      for (VertexSet part : cert.parts.parts) {
        VertexSet maximizer = 0;
        eval_component_demand(inst, component, part, &maximizer);
        cert.maximizers.push_back(maximizer);
      }
      SolveResult r;
      r.status = SolveResult::Status::kInfeasible;
      r.certificate = std::move(cert);
      return r;
    }
    for (std::size_t i = 0; i < edge_ids.size(); ++i) {
      full.forward[edge_ids[i]] = cover.orientation->forward[i];
    }
  }

  OrientedGraph oriented = apply_orientation(g, full);
  Instance directed(oriented.digraph, inst.matroid(), inst.placement());
  if (!check_kiraly(directed).ok()) {
    throw std::logic_error(
        "component orientations do not cover the in-degree condition");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (directed.demand(v) != inst.demand(v)) {
      throw std::logic_error("orientation changed the demand of a vertex");
    }
  }

  SearchState st(directed, directed.graph().arcs());
  if (!solve_priority(st)) {
    throw std::logic_error(
        "packing search exhausted although the in-degree condition holds");
  }
  SolveResult r;
  r.packing = harvest(st, oriented.base_arc_count);
  // The search ran on the derived digraph; replay the result against the
  // original mixed instance before handing it out.
  if (!verify_packing(inst, *r.packing).empty()) {
    throw std::logic_error("produced packing failed verification");
  }
  return r;
}

bool brute_force_exists(const Instance& inst, Exec exec) {
  const MixedGraph& g = inst.graph();
  if (static_cast<int>(g.edges().size()) > kOracleEdgeLimit ||
      g.vertex_count() > kOracleVertexLimit ||
      inst.matroid().size() > kOracleElementLimit) {
    throw std::domain_error("oracle bounds: at most " +
                            std::to_string(kOracleEdgeLimit) + " edges, " +
                            std::to_string(kOracleVertexLimit) +
                            " vertices, " +
                            std::to_string(kOracleElementLimit) + " elements");
  }
  if (find_dependence(inst)) return false;

  int arc_base = static_cast<int>(g.arcs().size());
  auto feasible_under = [&](std::uint64_t reversal) {
    std::vector<Arc> arcs = g.arcs();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      arcs.push_back(edge_as_arc(g.edges()[e], !(reversal >> e & 1)));
    }
    SearchState st(inst, std::move(arcs));
    if (!solve_plain(st)) return false;
    return verify_packing(inst, harvest(st, arc_base)).empty();
  };
  return min_satisfying_scan(0, std::uint64_t{1} << g.edges().size(),
                             feasible_under, exec)
      .has_value();
}

}  // namespace arbopack
