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
// Acceptance harness. Runs the full property suite against the library and
// the command line binary and prints one PASS/FAIL line per criterion:
//   1. exhaustive oracle/checker/solver agreement on all small mixed graphs
//   2. the same agreement on 500 seeded random instances
//   3. intersecting supermodularity of every component demand seen in 1-2
//   4. bi-set condition implies component condition on free-matroid inputs
//   5. digraph specializations of the component condition
//   6. minimal tight sets stay inside the arc head's reach closure
//   7. every emitted packing verifies; 100 mutations each draw a violation
//   8. edge covering matches exhaustive orientation search and replays its
//      in-degree bound
//   9. command line golden documents, byte for byte, with exit codes
//
// Usage: acceptance <cli-binary> <golden-dir>

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/generator.hpp"
#include "arbopack/instance_io.hpp"
#include "arbopack/matroid.hpp"
#include "arbopack/mixed_graph.hpp"
#include "arbopack/orientation.hpp"
#include "arbopack/packing.hpp"

namespace {

using arbopack::Arc;
using arbopack::CheckResult;
using arbopack::DemandFunction;
using arbopack::Edge;
using arbopack::Instance;
using arbopack::Matroid;
using arbopack::MixedGraph;
using arbopack::Orientation;
using arbopack::Packing;
using arbopack::Placement;
using arbopack::SolveResult;
using arbopack::VertexSet;

// ---------------------------------------------------------------------------
// Shared tallies. Criteria 1 and 2 walk instances through the same assay and
// feed criteria 3 through 8 as side effects.

struct Assay {
  long long instances = 0;
  long long feasible = 0;
  long long agree_fail = 0;

  long long components = 0;
  long long supermod_fail = 0;

  long long mt_cases = 0;
  long long mt_fail = 0;

  long long digraphs = 0;
  long long strong_digraphs = 0;
  long long spec_kiraly_fail = 0;
  long long spec_kkt_fail = 0;
  long long spec_dns_fail = 0;

  long long tight_arcs = 0;
  long long tight_fail = 0;

  long long packings = 0;
  long long verify_fail = 0;

  long long cover_cases = 0;
  long long cover_fail = 0;
  long long replay_fail = 0;
};

bool coverable_by_enumeration(const std::vector<Edge>& edges,
                              const DemandFunction& f) {
  for (std::uint64_t rev = 0; rev < (std::uint64_t{1} << edges.size());
       ++rev) {
    Orientation o;
    o.forward.resize(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      o.forward[e] = !(rev >> e & 1);
    }
    if (arbopack::orientation_covers(edges, f, o)) return true;
  }
  return false;
}

// Replays the oriented in-degree bound: for every nonempty X inside the
// component and every closed upstream Z, the arcs plus the oriented component
// edges must enter X union Z at least (whole rank - rank there) times.
bool replay_orientation_bound(const Instance& inst, int comp_idx,
                              const std::vector<Edge>& edges,
                              const Orientation& o) {
  std::vector<Arc> arcs = inst.graph().arcs();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    arcs.push_back(arbopack::edge_as_arc(edges[e], o.forward[e]));
  }
  MixedGraph oriented(inst.graph().vertex_count(), {}, std::move(arcs));
  VertexSet c = inst.components().components[comp_idx];
  int whole = inst.rank_at(inst.graph().reach_set(c));
  std::vector<VertexSet> closed = arbopack::upstream_closed_sets(inst, comp_idx);
  for (VertexSet x = c; x != 0; x = (x - 1) & c) {
    for (VertexSet z : closed) {
      if (oriented.indeg(x | z) < whole - inst.rank_at(x | z)) return false;
    }
  }
  return true;
}

// Orientation contract on one component: solver verdict equals exhaustive
// enumeration, and successful orientations replay the bound.
void assay_component_cover(const Instance& inst, int comp_idx, Assay& a) {
  VertexSet c = inst.components().components[comp_idx];
  std::vector<Edge> edges;
  for (const Edge& e : inst.graph().edges()) {
    if (arbopack::contains(c, e.u)) edges.push_back(e);
  }
  if (edges.empty() || edges.size() > 8) return;
  ++a.cover_cases;
  DemandFunction f(c, [&](VertexSet x) {
    return arbopack::eval_component_demand(inst, c, x);
  });
  arbopack::CoverResult r = arbopack::cover_orientation(edges, f);
  if (r.covered() != coverable_by_enumeration(edges, f)) {
    ++a.cover_fail;
    return;
  }
  if (r.covered() &&
      !replay_orientation_bound(inst, comp_idx, edges, *r.orientation)) {
    ++a.replay_fail;
  }
}

void assay_instance(const Instance& inst, bool exhaustive_pass, Assay& a) {
  ++a.instances;

  const bool oracle = arbopack::brute_force_exists(inst);
  CheckResult iii = arbopack::check_condition_iii(inst);
  SolveResult solved = arbopack::pack_mixed(inst);
  const bool iii_ok = iii.status == CheckResult::Status::kOk;
  const bool packed = solved.status == SolveResult::Status::kPacked;
  if (oracle != iii_ok || oracle != packed) ++a.agree_fail;
  if (packed) {
    ++a.feasible;
    ++a.packings;
    if (!arbopack::verify_packing(inst, *solved.packing).empty()) {
      ++a.verify_fail;
    }
  }

  const arbopack::StrongComponents& sc = inst.components();
  for (int ci = 0; ci < static_cast<int>(sc.components.size()); ++ci) {
    ++a.components;
    DemandFunction f(sc.components[ci], [&](VertexSet x) {
      return arbopack::eval_component_demand(inst, sc.components[ci], x);
    });
    if (arbopack::check_intersecting_supermodular(f).has_value()) {
      ++a.supermod_fail;
    }
    assay_component_cover(inst, ci, a);
  }

  if (!exhaustive_pass) return;
  const std::vector<int>& roots = inst.placement().vertex_of;
  const bool free_family =
      inst.matroid().family() == Matroid::Family::kFree;

  if (free_family) {
    ++a.mt_cases;
    const bool mt_ok = arbopack::check_mt(inst.graph(), roots).ok();
    const bool ii_ok = arbopack::check_condition_ii(inst).status ==
                       CheckResult::Status::kOk;
    if (mt_ok && !ii_ok) ++a.mt_fail;
  }

  if (!inst.graph().edges().empty()) return;
  ++a.digraphs;
  CheckResult kiraly = arbopack::check_kiraly(inst);
  if (kiraly.status != iii.status) ++a.spec_kiraly_fail;
  if (free_family &&
      arbopack::check_kkt(inst.graph(), roots).ok() != iii_ok) {
    ++a.spec_kkt_fail;
  }
  if (sc.components.size() == 1) {
    ++a.strong_digraphs;
    if (arbopack::check_dns(inst).status != kiraly.status) ++a.spec_dns_fail;
  }

  if (kiraly.status != CheckResult::Status::kOk) return;
  for (int arc_id = 0; arc_id < static_cast<int>(inst.graph().arcs().size());
       ++arc_id) {
    ++a.tight_arcs;
    std::optional<VertexSet> tight =
        arbopack::find_minimal_tight_set(inst, arc_id);
    if (tight.has_value()) {
      VertexSet head_reach =
          inst.graph().reach_of(inst.graph().arcs()[arc_id].head);
      if ((*tight & ~head_reach) != 0) ++a.tight_fail;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 1: labeled enumeration of all mixed graphs with n <= 3 and
// |E| + |A| <= 4, crossed with the fixed matroid menu and all placements.

void enumerate_item_counts(int idx, int budget, std::vector<int>& counts,
                           const std::function<void()>& emit) {
  if (idx == static_cast<int>(counts.size())) {
    emit();
    return;
  }
  for (int c = 0; c <= budget; ++c) {
    counts[idx] = c;
    enumerate_item_counts(idx + 1, budget - c, counts, emit);
  }
  counts[idx] = 0;
}

std::vector<Matroid> sweep_matroids() {
  std::vector<Matroid> out;
  for (int k = 0; k <= 2; ++k) out.push_back(Matroid::free_matroid(k));
  out.push_back(Matroid::uniform(2, 1));
  // Two-class partition matroids, |S| <= 3; the first element is pinned to
  // class 0 since swapping class names relabels the same matroid.
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> class_of(k, 0);
    int frees = k - 1;
    for (int bits = 0; bits < (1 << frees); ++bits) {
      for (int i = 0; i < frees; ++i) class_of[i + 1] = (bits >> i) & 1;
      for (int l0 = 1; l0 <= 2; ++l0) {
        for (int l1 = 1; l1 <= 2; ++l1) {
          out.push_back(Matroid::partition(k, class_of, {l0, l1}));
        }
      }
    }
  }
  return out;
}

void run_exhaustive_sweep(Assay& a) {
  std::vector<Matroid> matroids = sweep_matroids();
  for (int n = 1; n <= 3; ++n) {
    std::vector<Edge> edge_slots;
    std::vector<Arc> arc_slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edge_slots.push_back(Edge{u, v});
    }
    for (int t = 0; t < n; ++t) {
      for (int h = 0; h < n; ++h) {
        if (t != h) arc_slots.push_back(Arc{t, h});
      }
    }
    const int slots =
        static_cast<int>(edge_slots.size() + arc_slots.size());
    std::vector<int> counts(slots, 0);
    enumerate_item_counts(0, 4, counts, [&]() {
      std::vector<Edge> edges;
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < edge_slots.size(); ++i) {
        for (int c = 0; c < counts[i]; ++c) edges.push_back(edge_slots[i]);
      }
      for (std::size_t i = 0; i < arc_slots.size(); ++i) {
        for (int c = 0; c < counts[edge_slots.size() + i]; ++c) {
          arcs.push_back(arc_slots[i]);
        }
      }
      MixedGraph graph(n, edges, arcs);
      for (const Matroid& m : matroids) {
        std::vector<int> placement(m.size(), 0);
        while (true) {
          assay_instance(Instance(graph, m, Placement{placement}), true, a);
          int i = 0;
          while (i < m.size() && ++placement[i] == n) placement[i++] = 0;
          if (i == m.size()) break;
        }
      }
    });
  }
}

// Criterion 2: 500 seeded random instances inside the oracle bounds. Seeds
// whose drawn matroid admits no independent placement fall back to a free
// matroid so the count stays exact.
int run_random_sweep(Assay& a) {
  int fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    arbopack::GenOptions opt;
    opt.seed = seed;
    opt.vertices = 2 + static_cast<int>(seed % 4);
    opt.edges = static_cast<int>(seed % 7);
    opt.arcs = static_cast<int>((seed / 7) % 7);
    switch (seed % 5) {
      case 0: opt.matroid = "free:" + std::to_string(1 + seed % 3); break;
      case 1: opt.matroid = "uniform:3:2"; break;
      case 2: opt.matroid = "partition:3:2,1"; break;
      case 3: opt.matroid = "graphic:3:3"; break;
      default: opt.matroid = "linear_gf2:3:2"; break;
    }
    std::optional<Instance> inst;
    for (int retry = 0; retry < 6 && !inst.has_value(); ++retry) {
      try {
        inst = arbopack::generate_instance(opt).named.instance;
      } catch (const arbopack::ParseError&) {
        // The drawn matroid admits no independent placement (a graphic
        // loop or a zero column); redraw it under a sibling seed, keeping
        // the instance count exact with a free fallback as a last resort.
        opt.seed += 1000003;
        if (retry == 4) {
          ++fallbacks;
          opt.matroid = "free:2";
        }
      }
    }
    assay_instance(*inst, false, a);
  }
  return fallbacks;
}

// ---------------------------------------------------------------------------
// Criterion 7: mutation tests. Every mutation of a valid packing must draw
// at least one violation from the verifier.

struct MutationStats {
  int performed = 0;
  int undetected = 0;
};

MutationStats run_mutation_tests() {
  MutationStats stats;
  for (std::uint64_t seed = 9000; stats.performed < 100 && seed < 20000;
       ++seed) {
    arbopack::GenOptions opt;
    opt.seed = seed;
    opt.vertices = 2 + static_cast<int>(seed % 4);
    opt.edges = static_cast<int>(seed % 3);
    opt.arcs = static_cast<int>(seed % 5);
    switch (seed % 3) {
      case 0: opt.matroid = "free:2"; break;
      case 1: opt.matroid = "uniform:3:2"; break;
      default: opt.matroid = "partition:3:2,1"; break;
    }
    std::optional<Instance> drawn;
    try {
      drawn = arbopack::generate_instance(opt).named.instance;
    } catch (const arbopack::ParseError&) {
      continue;  // drawn matroid admits no independent placement
    }
    const Instance& inst = *drawn;
    SolveResult solved = arbopack::pack_mixed(inst);
    if (solved.status != SolveResult::Status::kPacked) continue;
    const Packing& good = *solved.packing;
    if (!arbopack::verify_packing(inst, good).empty()) continue;

    auto expect_caught = [&](const Packing& mutated) {
      if (stats.performed >= 100) return;
      ++stats.performed;
      if (arbopack::verify_packing(inst, mutated).empty()) {
        ++stats.undetected;
      }
    };

    int with_items = -1;
    for (std::size_t t = 0; t < good.trees.size(); ++t) {
      if (!good.trees[t].items.empty()) {
        with_items = static_cast<int>(t);
        break;
      }
    }
    if (with_items >= 0) {
      Packing dropped = good;
      dropped.trees[with_items].items.pop_back();
      expect_caught(dropped);
      if (good.trees.size() >= 2) {
        Packing doubled = good;
        std::size_t other = (with_items + 1) % good.trees.size();
        doubled.trees[other].items.push_back(
            good.trees[with_items].items.front());
        expect_caught(doubled);
      }
    }
    if (inst.graph().vertex_count() >= 2 && !good.trees.empty()) {
      Packing rerooted = good;
      rerooted.trees[0].root =
          (rerooted.trees[0].root + 1) % inst.graph().vertex_count();
      expect_caught(rerooted);
    }
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Criterion 8 extra load: components with up to 8 parallel edges.

void run_cover_stress(Assay& a) {
  for (std::uint64_t seed = 3000; seed < 3250; ++seed) {
    arbopack::GenOptions opt;
    opt.seed = seed;
    opt.vertices = 2 + static_cast<int>(seed % 3);
    opt.edges = static_cast<int>(seed % 9);
    opt.arcs = static_cast<int>(seed % 4);
    opt.matroid = seed % 2 == 0 ? "free:3" : "partition:3:2,1";
    std::optional<Instance> drawn;
    try {
      drawn = arbopack::generate_instance(opt).named.instance;
    } catch (const arbopack::ParseError&) {
      continue;  // drawn matroid admits no independent placement
    }
    const Instance& inst = *drawn;
    const arbopack::StrongComponents& sc = inst.components();
    for (int ci = 0; ci < static_cast<int>(sc.components.size()); ++ci) {
      assay_component_cover(inst, ci, a);
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 9: drive the installed binary over the golden documents.

struct CmdResult {
  int code = -1;
  std::string out;
};

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

CmdResult run_command(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GoldenCase {
  std::string name;        // instance file stem under the golden directory
  std::string subcommand;  // CLI invocation after the binary path
  std::string expected;    // expected-output file name
  int exit_code = 0;
};

bool run_golden_cases(const std::string& cli, const std::string& dir,
                      std::string& detail) {
  const std::vector<GoldenCase> cases = {
      {"parallel_edges", "solve", "parallel_edges.solve.json", 0},
      {"single_edge", "solve", "single_edge.solve.json", 2},
      {"single_edge", "check --level iii", "single_edge.check_iii.json", 2},
      {"arc_edge", "solve", "arc_edge.solve.json", 2},
  };
  for (const GoldenCase& c : cases) {
    const std::string instance = dir + "/" + c.name + ".instance.json";
    std::optional<std::string> expected = read_file(dir + "/" + c.expected);
    if (!read_file(instance).has_value() || !expected.has_value()) {
      detail = "missing golden files for " + c.name;
      return false;
    }
    CmdResult r = run_command(shell_quote(cli) + " " + c.subcommand + " < " +
                              shell_quote(instance) + " 2>/dev/null");
    if (r.code != c.exit_code) {
      detail = c.name + " " + c.subcommand + ": exit " +
               std::to_string(r.code) + ", expected " +
               std::to_string(c.exit_code);
      return false;
    }
    if (r.out != *expected) {
      detail = c.name + " " + c.subcommand + ": output differs from " +
               c.expected;
      return false;
    }
  }
  // Seeded generation must be byte-stable across runs.
  const std::string gen = shell_quote(cli) +
                          " gen --seed 7 --vertices 4 --edges 2 --arcs 3 "
                          "2>/dev/null";
  CmdResult first = run_command(gen);
  CmdResult second = run_command(gen);
  if (first.code != 0 || first.out != second.out || first.out.empty()) {
    detail = "gen --seed 7 is not byte-stable";
    return false;
  }
  detail = std::to_string(cases.size()) +
           " golden documents matched, generation is seed-stable";
  return true;
}

bool report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", id, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  return pass;
}

std::string plural(long long n, const char* what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <cli-binary> <golden-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  Assay a1;
  run_exhaustive_sweep(a1);
  Assay a2;
  int fallbacks = run_random_sweep(a2);
  run_cover_stress(a2);
  MutationStats mutations = run_mutation_tests();
  std::string golden_detail;
  const bool golden_ok = run_golden_cases(cli, golden, golden_detail);

  bool all = true;
  all &= report(1, a1.agree_fail == 0 && a1.instances > 0,
                plural(a1.instances, "instances") + ", " +
                    plural(a1.feasible, "feasible") + ", " +
                    plural(a1.agree_fail, "disagreements"));
  all &= report(2, a2.agree_fail == 0 && a2.instances == 500,
                plural(a2.instances, "instances") + ", " +
                    plural(a2.feasible, "feasible") + ", " +
                    std::to_string(fallbacks) + " fallback draws, " +
                    plural(a2.agree_fail, "disagreements"));
  all &= report(3, a1.supermod_fail + a2.supermod_fail == 0,
                plural(a1.components + a2.components, "component demands") +
                    ", " +
                    plural(a1.supermod_fail + a2.supermod_fail,
                           "supermodularity violations"));
  all &= report(4, a1.mt_fail == 0,
                plural(a1.mt_cases, "free-matroid instances") + ", " +
                    plural(a1.mt_fail, "implication failures"));
  all &= report(
      5,
      a1.spec_kiraly_fail + a1.spec_kkt_fail + a1.spec_dns_fail == 0,
      plural(a1.digraphs, "digraphs") + " (" +
          std::to_string(a1.strong_digraphs) + " strongly connected), " +
          std::to_string(a1.spec_kiraly_fail) + "/" +
          std::to_string(a1.spec_kkt_fail) + "/" +
          std::to_string(a1.spec_dns_fail) +
          " mismatches against in-degree/reachability/spanning forms");
  all &= report(6, a1.tight_fail == 0,
                plural(a1.tight_arcs, "arcs probed") + ", " +
                    plural(a1.tight_fail, "escaped closures"));
  all &= report(
      7,
      a1.verify_fail + a2.verify_fail == 0 && mutations.performed == 100 &&
          mutations.undetected == 0,
      plural(a1.packings + a2.packings, "packings verified") + ", " +
          std::to_string(mutations.performed) + " mutations, " +
          plural(mutations.undetected, "undetected"));
  all &= report(8,
                a1.cover_fail + a2.cover_fail + a1.replay_fail +
                        a2.replay_fail ==
                    0,
                plural(a1.cover_cases + a2.cover_cases, "components") + ", " +
                    plural(a1.cover_fail + a2.cover_fail,
                           "verdict mismatches") +
                    ", " +
                    plural(a1.replay_fail + a2.replay_fail,
                           "bound replay failures"));
  all &= report(9, golden_ok, golden_detail);

  return all ? 0 : 1;
}
