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
// Exhaustive scans over bitmask ranges. These are the hot loops of every
// checker: evaluate a function on each subset mask and reduce. Both
// reductions are commutative and pick deterministic representatives
// (smallest mask), so the parallel variants return bit-identical results to
// the serial references; the serial code is kept both as the fallback for
// builds without OpenMP and as the reference the tests compare against.

#ifndef ARBOPACK_SCAN_HPP_
#define ARBOPACK_SCAN_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace arbopack {

enum class Exec { kSerial, kParallel, kAuto };

// Masks whose eval returns kScanSkip are left out of the reduction.
inline constexpr long long kScanSkip =
    std::numeric_limits<long long>::min();

// Best hit of a deficit scan: the maximum value eval returned and the
// smallest mask attaining it. found is false when every mask was skipped.
struct DeficitHit {
  bool found = false;
  long long value = kScanSkip;
  std::uint64_t mask = 0;

  void absorb(long long v, std::uint64_t m) {
    if (v == kScanSkip) return;
    if (!found || v > value || (v == value && m < mask)) {
      found = true;
      value = v;
      mask = m;
    }
  }
  void absorb(const DeficitHit& other) {
    if (other.found) absorb(other.value, other.mask);
  }
};

namespace scan_internal {

inline bool use_parallel(Exec exec, std::uint64_t work) {
#if defined(_OPENMP)
  if (exec == Exec::kSerial) return false;
  if (exec == Exec::kParallel) return true;
  return work >= (std::uint64_t{1} << 14) && omp_get_max_threads() > 1;
#else
  (void)exec;
  (void)work;
  return false;
#endif
}

}  // namespace scan_internal

// Serial reference: masks first..limit-1 in ascending order.
template <typename Eval>
DeficitHit max_deficit_scan_serial(std::uint64_t first, std::uint64_t limit,
                                   Eval&& eval) {
  DeficitHit best;
  for (std::uint64_t mask = first; mask < limit; ++mask) {
    best.absorb(eval(mask), mask);
  }
  return best;
}

template <typename Eval>
DeficitHit max_deficit_scan(std::uint64_t first, std::uint64_t limit,
                            Eval&& eval, Exec exec = Exec::kAuto) {
  if (first >= limit) return DeficitHit{};
  if (!scan_internal::use_parallel(exec, limit - first)) {
    return max_deficit_scan_serial(first, limit, std::forward<Eval>(eval));
  }
#if defined(_OPENMP)
  DeficitHit best;
#pragma omp parallel
  {
    DeficitHit local;
#pragma omp for schedule(static)
    for (long long m = static_cast<long long>(first);
         m < static_cast<long long>(limit); ++m) {
      std::uint64_t mask = static_cast<std::uint64_t>(m);
      local.absorb(eval(mask), mask);
    }
#pragma omp critical(arbopack_deficit_scan)
    best.absorb(local);
  }
  return best;
#else
  return max_deficit_scan_serial(first, limit, std::forward<Eval>(eval));
#endif
}

// Serial reference: smallest mask in [first, limit) satisfying pred.
template <typename Pred>
std::optional<std::uint64_t> min_satisfying_scan_serial(std::uint64_t first,
                                                        std::uint64_t limit,
                                                        Pred&& pred) {
  for (std::uint64_t mask = first; mask < limit; ++mask) {
    if (pred(mask)) return mask;
  }
  return std::nullopt;
}

template <typename Pred>
std::optional<std::uint64_t> min_satisfying_scan(std::uint64_t first,
                                                 std::uint64_t limit,
                                                 Pred&& pred,
                                                 Exec exec = Exec::kAuto) {
  if (first >= limit) return std::nullopt;
  if (!scan_internal::use_parallel(exec, limit - first)) {
    return min_satisfying_scan_serial(first, limit, std::forward<Pred>(pred));
  }
#if defined(_OPENMP)
  // Blockwise so that a hit in an early block skips the rest of the range;
  // within a block the reduction keeps the smallest satisfying mask.
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 16;
  for (std::uint64_t lo = first; lo < limit; ) {
    std::uint64_t hi = limit - lo < kBlock ? limit : lo + kBlock;
    std::uint64_t found = ~std::uint64_t{0};
#pragma omp parallel
    {
      std::uint64_t local = ~std::uint64_t{0};
#pragma omp for schedule(static)
      for (long long m = static_cast<long long>(lo);
           m < static_cast<long long>(hi); ++m) {
        std::uint64_t mask = static_cast<std::uint64_t>(m);
        if (mask < local && pred(mask)) local = mask;
      }
#pragma omp critical(arbopack_min_scan)
      if (local < found) found = local;
    }
    if (found != ~std::uint64_t{0}) return found;
    lo = hi;
  }
  return std::nullopt;
#else
  return min_satisfying_scan_serial(first, limit, std::forward<Pred>(pred));
#endif
}

}  // namespace arbopack

#endif  // ARBOPACK_SCAN_HPP_
