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

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"
#include "nervus/context.hpp"
#include "nervus/geometry.hpp"
#include "nervus/homology.hpp"
#include "nervus/poset.hpp"
#include "nervus/refinement.hpp"

namespace nervus {

/// Default level caps, overridable per call.
inline constexpr int cantor_cap = 12;
inline constexpr int carpet_cap = 4;
inline constexpr int sponge_cap = 2;
inline constexpr std::size_t solenoid_vertex_cap = std::size_t{1} << 16;

/// Finite sequence of complexes, coarsest first, with simplicial bonding maps
/// bonds[j] : levels[j+1] -> levels[j].
struct Tower {
  int first_level = 0;  // level number of levels[0]
  std::vector<ComplexPtr> levels;
  std::vector<SimplicialMap> bonds;
};

/// Validates each bonding map and assembles the tower.
Tower make_tower(int first_level, std::vector<ComplexPtr> levels,
                 std::vector<std::vector<std::uint32_t>> bond_vertex_maps);

/// Closed intervals of the n-th middle-thirds stage, left to right.
struct IntervalSystem {
  int level = 0;
  std::vector<std::pair<mpq_class, mpq_class>> intervals;
};

IntervalSystem cantor_intervals(int n);

/// Symbolic points of stage n (each interval's endpoints and midpoint, in
/// increasing order) against the half-open star cover of stage
/// `cover_level` <= n. Attributes are "[l,r)" and "(l,r]" per interval.
ChuSpace cantor_cover_on(int cover_level, int point_level, int cap = cantor_cap);

/// cantor_cover_on(n, n).
ChuSpace cantor_context(int n, int cap = cantor_cap);

/// Carrier from stage n+1 points to the stage n point with the same stage n
/// attribute row.
CarrierFunction cantor_carrier(int n, int cap = cantor_cap);

struct CantorTower {
  Tower tower;                               // order complexes of the quotients
  std::vector<ChuSpace> contexts;            // stages 1..n
  std::vector<SorkinQuotient> quotients;     // stages 1..n
  std::vector<std::vector<std::size_t>> class_maps;  // stage k+1 -> stage k
};

CantorTower cantor_tower(int n, int cap = cantor_cap);

/// One attribute U_v per vertex; objects are the simplices of K (a point of
/// the open cell), and sigma satisfies U_v iff v is a vertex of sigma.
ChuSpace star_cover(const SimplicialComplex& k);

/// Stage-n Sierpinski carpet on the 3^n grid, two triangles per kept square.
SimplicialComplex carpet_complex(int n, int cap = carpet_cap);
/// Stages 1..n with the grid-rounding bonding maps.
Tower carpet_tower(int n, int cap = carpet_cap);

/// Stage-n Menger sponge, six tetrahedra per kept cube (Kuhn subdivision
/// along the main diagonal).
SimplicialComplex sponge_complex(int n, int cap = sponge_cap);
Tower sponge_tower(int n, int cap = sponge_cap);

/// Cycles with m * 2^j vertices for j = 0..k and the doubling maps
/// i -> i mod (m * 2^(j-1)).
Tower solenoid_tower(int m, int k, std::size_t cap = solenoid_vertex_cap);

struct OdeParams {
  double a = 0.15;
  double b = 0.2;
  double c = 10.0;
  double step = 0.01;
  long total_steps = 30000;
  long transient_steps = 5000;
  std::array<double, 3> start{1.0, 1.0, 1.0};
};

/// Fixed-step classical RK4 of the Rossler system, transient discarded,
/// `count` states sampled at evenly spaced step indices.
PointCloud rossler_cloud(const OdeParams& params, std::size_t count);

struct TowerHomology {
  Field field = Field::rational;
  std::vector<std::vector<std::size_t>> betti;            // per level
  std::vector<std::vector<ScalarMatrix>> bond_matrices;   // per bond, per degree
};

TowerHomology tower_homology(const Tower& t, Field field);

}  // namespace nervus
