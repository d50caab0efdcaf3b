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

#include "arbopack/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arbopack {

Matroid::Matroid(Family family, int size) : family_(family), size_(size) {
  if (size < 0 || size > kMaxElements) {
    throw std::invalid_argument("ground set size " + std::to_string(size) +
                                " outside [0, " +
                                std::to_string(kMaxElements) + "]");
  }
  full_ = size == kMaxElements ? ~ElemSet{0}
                               : (ElemSet{1} << size) - 1;
}

Matroid Matroid::free_matroid(int size) {
  Matroid m(Family::kFree, size);
  m.rank_all_ = size;
  return m;
}

Matroid Matroid::uniform(int size, int rank) {
  if (rank < 0) throw std::invalid_argument("uniform rank must be >= 0");
  Matroid m(Family::kUniform, size);
  m.uniform_rank_ = rank;
  m.rank_all_ = std::min(size, rank);
  return m;
}

Matroid Matroid::partition(int size, std::vector<int> class_of,
                           std::vector<int> limits) {
  Matroid m(Family::kPartition, size);
  if (static_cast<int>(class_of.size()) != size) {
    throw std::invalid_argument("class_of must assign every element");
  }
  for (int c : class_of) {
    if (c < 0 || c >= static_cast<int>(limits.size())) {
      throw std::invalid_argument("element assigned to unknown class " +
                                  std::to_string(c));
    }
  }
  for (int l : limits) {
    if (l < 0) throw std::invalid_argument("class limit must be >= 0");
  }
  m.class_of_ = std::move(class_of);
  m.limits_ = std::move(limits);
  m.rank_all_ = m.rank(m.full_);
  return m;
}

Matroid Matroid::graphic(int size, int aux_vertices,
                         std::vector<Edge> aux_edges) {
  Matroid m(Family::kGraphic, size);
  if (static_cast<int>(aux_edges.size()) != size) {
    throw std::invalid_argument("graphic matroid needs one aux edge per "
                                "element");
  }
  if (aux_vertices < 0) {
    throw std::invalid_argument("aux vertex count must be >= 0");
  }
  for (const Edge& e : aux_edges) {
    if (e.u < 0 || e.u >= aux_vertices || e.v < 0 || e.v >= aux_vertices) {
      throw std::invalid_argument("aux edge endpoint out of range");
    }
  }
  m.aux_vertices_ = aux_vertices;
  m.aux_edges_ = std::move(aux_edges);
  m.rank_all_ = m.rank(m.full_);
  return m;
}

Matroid Matroid::linear_gf2(int size, int rows,
                            std::vector<std::uint64_t> columns) {
  Matroid m(Family::kLinearGf2, size);
  if (rows < 0 || rows > 64) {
    throw std::invalid_argument("row count outside [0, 64]");
  }
  if (static_cast<int>(columns.size()) != size) {
    throw std::invalid_argument("linear matroid needs one column per element");
  }
  std::uint64_t row_mask =
      rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  for (std::uint64_t col : columns) {
    if ((col & ~row_mask) != 0) {
      throw std::invalid_argument("column has bits beyond the row count");
    }
  }
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  m.rank_all_ = m.rank(m.full_);
  return m;
}

void Matroid::require_subset(ElemSet x) const {
  if ((x & ~full_) != 0) {
    throw std::invalid_argument("element set contains unknown elements");
  }
}

int Matroid::rank(ElemSet x) const {
  require_subset(x);
  switch (family_) {
    case Family::kFree:
      return set_size(x);
    case Family::kUniform:
      return std::min(set_size(x), uniform_rank_);
    case Family::kPartition: {
      // Sum of min(|x within class|, limit) over classes.
      std::vector<int> used(limits_.size(), 0);
      for (ElemSet rest = x; rest != 0; rest &= rest - 1) {
        ++used[class_of_[lowest_bit(rest)]];
      }
      int r = 0;
      for (std::size_t c = 0; c < limits_.size(); ++c) {
        r += std::min(used[c], limits_[c]);
      }
      return r;
    }
    case Family::kGraphic: {
      // Union-find over the aux graph; rank is the number of merges, i.e.
      // vertices touched minus connected components.
      std::vector<int> parent(aux_vertices_);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[v] != v) {
          parent[v] = parent[parent[v]];
          v = parent[v];
        }
        return v;
      };
      int r = 0;
      for (ElemSet rest = x; rest != 0; rest &= rest - 1) {
        const Edge& e = aux_edges_[lowest_bit(rest)];
        int a = find(e.u), b = find(e.v);
        if (a != b) {
          parent[a] = b;
          ++r;
        }
      }
      return r;
    }
    case Family::kLinearGf2: {
      // Incremental GF(2) elimination, one basis slot per leading bit.
      std::uint64_t basis[64] = {0};
      int r = 0;
      for (ElemSet rest = x; rest != 0; rest &= rest - 1) {
        std::uint64_t col = columns_[lowest_bit(rest)];
        while (col != 0) {
          int h = 63 - std::countl_zero(col);
          if (basis[h] == 0) {
            basis[h] = col;
            ++r;
            break;
          }
          col ^= basis[h];
        }
      }
      return r;
    }
  }
  throw std::logic_error("unknown matroid family");
}

ElemSet elements_at(const Placement& p, VertexSet x) {
  ElemSet s = 0;
  for (std::size_t e = 0; e < p.vertex_of.size(); ++e) {
    if (contains(x, p.vertex_of[e])) s |= bit(static_cast<int>(e));
  }
  return s;
}

bool is_placement_independent(const Matroid& m, const Placement& p,
                              int* offender) {
  if (static_cast<int>(p.vertex_of.size()) != m.size()) {
    throw std::invalid_argument("placement size does not match ground set");
  }
  int max_vertex = -1;
  for (int v : p.vertex_of) max_vertex = std::max(max_vertex, v);
  for (int v = 0; v <= max_vertex; ++v) {
    ElemSet at_v = 0;
    for (std::size_t e = 0; e < p.vertex_of.size(); ++e) {
      if (p.vertex_of[e] == v) at_v |= bit(static_cast<int>(e));
    }
    if (!m.is_independent(at_v)) {
      if (offender != nullptr) *offender = v;
      return false;
    }
  }
  return true;
}

}  // namespace arbopack
