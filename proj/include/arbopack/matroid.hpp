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

#ifndef ARBOPACK_MATROID_HPP_
#define ARBOPACK_MATROID_HPP_

#include <cstdint>
#include <vector>

#include "arbopack/mixed_graph.hpp"

namespace arbopack {

// Element subsets are 64-bit masks like vertex sets; element i is bit i.
using ElemSet = std::uint64_t;

inline constexpr int kMaxElements = 64;

// Rank oracle over a ground set {0, ..., size-1}. Five concrete families
// are provided; all rank queries are deterministic and thread-safe.
class Matroid {
 public:
  enum class Family { kFree, kUniform, kPartition, kGraphic, kLinearGf2 };

  static Matroid free_matroid(int size);
  static Matroid uniform(int size, int rank);
  // class_of[e] names the partition class of element e; limits[c] caps how
  // many elements of class c an independent set may use.
  static Matroid partition(int size, std::vector<int> class_of,
                           std::vector<int> limits);
  // Element e is aux_edges[e] in an auxiliary graph on aux_vertices vertices;
  // independent sets are the forests. Parallel aux edges are fine and an aux
  // loop is a rank-zero element.
  static Matroid graphic(int size, int aux_vertices,
                         std::vector<Edge> aux_edges);
  // Element e is a vector over GF(2) with `rows` coordinates, packed into
  // columns[e] (row i is bit i); independence is linear independence.
  static Matroid linear_gf2(int size, int rows,
                            std::vector<std::uint64_t> columns);

  int size() const { return size_; }
  Family family() const { return family_; }
  ElemSet ground_set() const { return full_; }

  int rank(ElemSet x) const;
  bool is_independent(ElemSet x) const { return rank(x) == set_size(x); }
  int rank_all() const { return rank_all_; }

  // Family parameters, for serialization.
  int uniform_rank() const { return uniform_rank_; }
  const std::vector<int>& partition_class_of() const { return class_of_; }
  const std::vector<int>& partition_limits() const { return limits_; }
  int graphic_aux_vertices() const { return aux_vertices_; }
  const std::vector<Edge>& graphic_aux_edges() const { return aux_edges_; }
  int linear_rows() const { return rows_; }
  const std::vector<std::uint64_t>& linear_columns() const { return columns_; }

 private:
  Matroid(Family family, int size);
  void require_subset(ElemSet x) const;

  Family family_;
  int size_;
  ElemSet full_;
  int rank_all_ = 0;
  int uniform_rank_ = 0;
  std::vector<int> class_of_;
  std::vector<int> limits_;
  int aux_vertices_ = 0;
  std::vector<Edge> aux_edges_;
  int rows_ = 0;
  std::vector<std::uint64_t> columns_;
};

// Assignment of every matroid element to a vertex.
struct Placement {
  std::vector<int> vertex_of;  // element -> vertex
};

// S_X: elements placed at vertices of x.
ElemSet elements_at(const Placement& p, VertexSet x);

// Whether every per-vertex bundle of elements is independent. When it is
// not, *offender receives the smallest offending vertex if non-null.
bool is_placement_independent(const Matroid& m, const Placement& p,
                              int* offender = nullptr);

}  // namespace arbopack

#endif  // ARBOPACK_MATROID_HPP_
