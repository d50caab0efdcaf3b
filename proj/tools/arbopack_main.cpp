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
// Command line driver. Documents go to stdout; exit codes: 0 feasible/ok,
// 2 infeasible or violated (with certificate), 1 parse/bounds errors (with
// an error document).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arbopack/conditions.hpp"
#include "arbopack/generator.hpp"
#include "arbopack/instance_io.hpp"
#include "arbopack/packing.hpp"

namespace {

using arbopack::CheckResult;
using arbopack::NamedInstance;

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>());
}

void emit(const nlohmann::json& doc) {
  std::cout << arbopack::render_document(doc);
}

int run_solve() {
  NamedInstance named = arbopack::parse_instance_document(read_stdin());
  arbopack::SolveResult result = arbopack::pack_mixed(named.instance);
  emit(arbopack::packing_document(named, result));
  return result.status == arbopack::SolveResult::Status::kPacked ? 0 : 2;
}

int run_check(const std::string& level) {
  NamedInstance named = arbopack::parse_instance_document(read_stdin());
  const arbopack::Instance& inst = named.instance;
  // mt, kkt, and edmonds take a root multiset: the placement vertices.
  const std::vector<int>& roots = inst.placement().vertex_of;
  CheckResult result;
  if (level == "digraph") {
    result = arbopack::check_kiraly(inst);
  } else if (level == "ii") {
    result = arbopack::check_condition_ii(inst);
  } else if (level == "iii") {
    result = arbopack::check_condition_iii(inst);
  } else if (level == "mt") {
    result = arbopack::check_mt(inst.graph(), roots);
  } else if (level == "kkt") {
    result = arbopack::check_kkt(inst.graph(), roots);
  } else if (level == "edmonds") {
    result = arbopack::check_edmonds(inst.graph(), roots);
  } else if (level == "dns") {
    result = arbopack::check_dns(inst);
  } else {
    throw arbopack::ParseError("unknown check level '" + level + "'");
  }
  emit(arbopack::check_document(named, result, level));
  return result.ok() ? 0 : 2;
}

int run_verify(const std::string& packing_path) {
  NamedInstance named = arbopack::parse_instance_document(read_stdin());
  std::ifstream in(packing_path);
  if (!in) {
    throw arbopack::ParseError("cannot open packing file '" + packing_path +
                               "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  arbopack::Packing packing =
      arbopack::parse_packing_document(buffer.str(), named);
  std::vector<arbopack::Violation> violations =
      arbopack::verify_packing(named.instance, packing);
  emit(arbopack::verify_document(violations));
  return violations.empty() ? 0 : 2;
}

int run_oracle() {
  NamedInstance named = arbopack::parse_instance_document(read_stdin());
  const bool exists = arbopack::brute_force_exists(named.instance);
  emit(arbopack::oracle_document(exists));
  return exists ? 0 : 2;
}

int run_gen(const arbopack::GenOptions& options) {
  arbopack::GenResult result = arbopack::generate_instance(options);
  std::cerr << "rejections: " << result.rejections << "\n";
  emit(arbopack::instance_document(result.named));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Packs maximal matroid-independent mixed arborescences and checks "
      "the feasibility conditions. Instance documents are read from stdin."};
  app.require_subcommand(1);

  app.add_subcommand("solve",
                     "Pack arborescences; emits a packing or a certificate");

  std::string level;
  CLI::App* check =
      app.add_subcommand("check", "Run one feasibility condition");
  check
      ->add_option("--level", level,
                   "One of digraph|ii|iii|mt|kkt|edmonds|dns")
      ->required();

  std::string packing_path;
  CLI::App* verify =
      app.add_subcommand("verify", "Verify a packing against the instance");
  verify->add_option("--packing", packing_path, "Packing document file")
      ->required();

  app.add_subcommand("oracle",
                     "Brute-force existence check (small instances only)");

  arbopack::GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--seed", gen_options.seed, "Random seed");
  gen->add_option("--vertices", gen_options.vertices, "Vertex count");
  gen->add_option("--edges", gen_options.edges, "Undirected edge count");
  gen->add_option("--arcs", gen_options.arcs, "Arc count");
  gen->add_option("--matroid", gen_options.matroid,
                  "free:K | uniform:K:R | partition:K:l1,...,lC | "
                  "graphic:K:M | linear_gf2:K:R");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit(arbopack::error_document(e.what()));
    return 1;
  }

  try {
    if (app.got_subcommand("solve")) return run_solve();
    if (app.got_subcommand("check")) return run_check(level);
    if (app.got_subcommand("verify")) return run_verify(packing_path);
    if (app.got_subcommand("oracle")) return run_oracle();
    return run_gen(gen_options);
  } catch (const std::exception& e) {
    emit(arbopack::error_document(e.what()));
    return 1;
  }
}
