// Copyright 2026 The Nervus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"
#include "nervus/scalar.hpp"

namespace nervus {

/// Sparse matrix with small integer entries, stored by column. Entries are
/// interpreted in a field when reduced (GF(2) takes them mod 2).
struct IntMatrix {
  using Column = std::vector<std::pair<std::uint32_t, int>>;  // sorted rows

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  int at(std::size_t r, std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Dense matrix of field elements; small by construction (homology bases,
/// chain maps in tests).
struct ScalarMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;  // row-major
  Field field = Field::rational;

  ScalarMatrix() = default;
  ScalarMatrix(std::size_t r, std::size_t c, Field f)
      : rows(r), cols(c), data(r * c, Scalar(f)), field(f) {}

  static ScalarMatrix identity(std::size_t n, Field f);

  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
};

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

/// Rank of an integer matrix over `field`, exact.
std::size_t rank(const IntMatrix& m, Field field);

/// Product a*b of integer matrices (entries may grow beyond +-1).
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Chain (or cochain) complex of a simplicial complex in its simplex bases.
///
/// For a boundary complex, maps()[n] is the boundary C_n -> C_{n-1}
/// (maps()[0] has zero rows). For a coboundary complex, maps()[n] is
/// C^n -> C^{n+1} (the last one has zero rows).
class GradedChainComplex {
 public:
  enum class Direction { boundary, coboundary };

  GradedChainComplex(Field field, Direction dir, std::vector<std::size_t> dims,
                     std::vector<IntMatrix> maps)
      : field_(field), dir_(dir), dims_(std::move(dims)), maps_(std::move(maps)) {}

  Field field() const { return field_; }
  Direction direction() const { return dir_; }
  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int n) const { return dims_[n]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const IntMatrix& map(int n) const { return maps_[n]; }
  const std::vector<IntMatrix>& maps() const { return maps_; }

  /// Matrix entry as a field element.
  Scalar entry(int n, std::size_t r, std::size_t c) const;

  /// Every composite of consecutive maps vanishes over the field.
  bool squares_to_zero() const;

 private:
  Field field_;
  Direction dir_;
  std::vector<std::size_t> dims_;
  std::vector<IntMatrix> maps_;
};

/// Boundary matrices d = sum (-1)^i d_i in the complex's simplex order.
GradedChainComplex boundary_complex(const SimplicialComplex& k, Field field);

/// Transposes of the boundary matrices.
GradedChainComplex coboundary_complex(const SimplicialComplex& k, Field field);

/// Betti numbers by exact rank-nullity; empty for the empty complex.
std::vector<std::size_t> betti_numbers(const GradedChainComplex& c);

inline std::vector<std::size_t> betti_numbers(const SimplicialComplex& k,
                                              Field field = Field::rational) {
  return betti_numbers(boundary_complex(k, field));
}

/// Induced chain map f#, one (target count x source count) matrix per source
/// degree. Degenerate images go to zero; otherwise the sign is that of the
/// permutation sorting the image vertices.
std::vector<IntMatrix> induced_chain_map(const SimplicialMap& f);

/// Matrix of H_n(f) in the deterministic homology bases of source and target.
/// Out-of-range degree gives an empty matrix.
ScalarMatrix homology_map(const SimplicialMap& f, int degree, Field field);

/// Cycle representatives of the chosen homology basis in degree n, as dense
/// coefficient vectors over the n-simplices.
std::vector<std::vector<Scalar>> homology_basis(const SimplicialComplex& k,
                                                int degree, Field field);

}  // namespace nervus
