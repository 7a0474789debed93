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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace nervus {

/// A simplex is a strictly increasing list of vertex ranks.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

enum class VertexOrder {
  lexicographic,  // vertices ranked by name
  declared,       // vertices ranked by their position in the input list
};

/// Finite abstract simplicial complex with a total order on its vertices.
///
/// Vertex i has rank i; simplices of each dimension are kept sorted
/// lexicographically, which fixes the chain bases used by homology.
/// Every nonempty subset of a simplex is a simplex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `maximal`. Every vertex named in `vertices` is a
  /// 0-simplex even if it appears in no listed simplex.
  static SimplicialComplex from_maximal(
      const std::vector<std::string>& vertices,
      const std::vector<std::vector<std::string>>& maximal,
      VertexOrder order = VertexOrder::lexicographic);

  /// Downward closure of faces given by vertex rank. `vertices` is already in
  /// rank order.
  static SimplicialComplex from_faces(std::vector<std::string> vertices,
                                      std::vector<Simplex> faces);

  std::size_t num_vertices() const { return vertices_.size(); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t count(int dim) const;
  std::size_t total_count() const;
  const std::vector<Simplex>& simplices(int dim) const;

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  const std::string& vertex_name(std::uint32_t rank) const {
    return vertices_[rank];
  }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  std::optional<std::uint32_t> vertex_rank(const std::string& name) const;

  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  /// "{a,b,c}" using vertex names.
  std::string describe(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::unordered_map<std::string, std::uint32_t> rank_of_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex k) {
  return std::make_shared<const SimplicialComplex>(std::move(k));
}

/// Vertex map between complexes that sends simplices to simplices.
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target,
                std::vector<std::uint32_t> vertex_map)
      : source_(std::move(source)),
        target_(std::move(target)),
        vertex_map_(std::move(vertex_map)) {}

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  std::uint32_t operator()(std::uint32_t v) const { return vertex_map_[v]; }
  const std::vector<std::uint32_t>& vertex_map() const { return vertex_map_; }

  /// Image as a sorted vertex set (repeats removed).
  Simplex image(const Simplex& s) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<std::uint32_t> vertex_map_;
};

/// Validates that `vertex_map` (indexed by source rank) is simplicial.
/// Throws Error(not_simplicial) naming the first violating simplex.
SimplicialMap check_simplicial_map(std::vector<std::uint32_t> vertex_map,
                                   ComplexPtr source, ComplexPtr target);

/// Same, keyed by vertex names.
SimplicialMap check_named_map(
    const std::unordered_map<std::string, std::string>& vertex_map,
    ComplexPtr source, ComplexPtr target);

SimplicialMap identity_map(const ComplexPtr& k);

/// g after f. Requires f.target == g.source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Vertex-relabelling isomorphism from a onto b, if one exists.
std::optional<std::vector<std::uint32_t>> find_isomorphism(
    const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace nervus
