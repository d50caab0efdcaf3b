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
// Times the serial scan kernels against their OpenMP counterparts and
// cross-checks that both return identical results. Speedups depend on the
// machine; the equality check is the part that must always hold.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "arbopack/conditions.hpp"
#include "arbopack/generator.hpp"
#include "arbopack/scan.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Cheap stand-in for a deficit function: hash the mask, bias so that only a
// sparse set of masks scores above zero.
long long synthetic_eval(std::uint64_t mask) {
  std::uint64_t h = mask * 0x9E3779B97F4A7C15ull;
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 32;
  return static_cast<long long>(h & 0xFFFF) +
         4096 * std::popcount(mask & 0xFFF) - 80000;
}

void report(const std::string& name, double serial_ms, double parallel_ms,
            bool match) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel "
            << parallel_ms << " ms, speedup " << serial_ms / parallel_ms
            << ", results " << (match ? "match" : "DIFFER") << "\n";
  if (!match) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  int bits = 22;
  int vertices = 18;
  int arcs = 40;
  std::uint64_t seed = 1;
  CLI::App app{"Serial vs OpenMP scan kernel benchmark"};
  app.add_option("--bits", bits, "Synthetic scan walks 2^bits masks");
  app.add_option("--vertices", vertices, "Digraph benchmark vertex count");
  app.add_option("--arcs", arcs, "Digraph benchmark arc count");
  app.add_option("--seed", seed, "Digraph benchmark seed");
  CLI11_PARSE(app, argc, argv);

#if defined(_OPENMP)
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp unavailable; parallel falls back to serial\n";
#endif

  const std::uint64_t limit = std::uint64_t{1} << bits;
  arbopack::DeficitHit serial_hit, parallel_hit;
  const double max_serial = run_ms([&] {
    serial_hit = arbopack::max_deficit_scan_serial(1, limit, synthetic_eval);
  });
  const double max_parallel = run_ms([&] {
    parallel_hit = arbopack::max_deficit_scan(1, limit, synthetic_eval,
                                              arbopack::Exec::kParallel);
  });
  report("max_deficit_scan 2^" + std::to_string(bits), max_serial,
         max_parallel,
         serial_hit.found == parallel_hit.found &&
             serial_hit.value == parallel_hit.value &&
             serial_hit.mask == parallel_hit.mask);

  auto satisfied_late = [limit](std::uint64_t mask) {
    return synthetic_eval(mask) > 28000 && mask > limit / 2;
  };
  std::optional<std::uint64_t> first_serial, first_parallel;
  const double min_serial = run_ms([&] {
    first_serial = arbopack::min_satisfying_scan_serial(0, limit,
                                                        satisfied_late);
  });
  const double min_parallel = run_ms([&] {
    first_parallel = arbopack::min_satisfying_scan(0, limit, satisfied_late,
                                                   arbopack::Exec::kParallel);
  });
  report("min_satisfying_scan 2^" + std::to_string(bits), min_serial,
         min_parallel, first_serial == first_parallel);

  arbopack::GenOptions options;
  options.seed = seed;
  options.vertices = vertices;
  options.edges = 0;
  options.arcs = arcs;
  options.matroid = "free:4";
  const arbopack::Instance inst =
      arbopack::generate_instance(options).named.instance;
  arbopack::CheckResult check_serial, check_parallel;
  const double kiraly_serial = run_ms([&] {
    check_serial = arbopack::check_kiraly(inst, arbopack::KiralyMode::kFull,
                                          arbopack::Exec::kSerial);
  });
  const double kiraly_parallel = run_ms([&] {
    check_parallel = arbopack::check_kiraly(inst, arbopack::KiralyMode::kFull,
                                            arbopack::Exec::kParallel);
  });
  const bool same_status = check_serial.status == check_parallel.status;
  const bool same_cert =
      check_serial.certificate.has_value() ==
          check_parallel.certificate.has_value() &&
      (!check_serial.certificate.has_value() ||
       (check_serial.certificate->deficient_set ==
            check_parallel.certificate->deficient_set &&
        check_serial.certificate->deficit ==
            check_parallel.certificate->deficit));
  report("check_kiraly n=" + std::to_string(vertices), kiraly_serial,
         kiraly_parallel, same_status && same_cert);
  return 0;
}
