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

#include <catch_amalgamated.hpp>

#include <random>

#include "nervus/homology.hpp"
#include "support.hpp"

using namespace nervus;
using namespace nervus::testing;

namespace {

using Betti = std::vector<std::size_t>;

// Vertex i of the octagon goes to i mod 4 on the square.
SimplicialMap doubling(std::uint32_t fine = 8, std::uint32_t coarse = 4) {
  std::vector<std::uint32_t> v(fine);
  for (std::uint32_t i = 0; i < fine; ++i) v[i] = i % coarse;
  return check_simplicial_map(v, share(cycle(fine)), share(cycle(coarse)));
}

ScalarMatrix scalar(const IntMatrix& m, Field f) {
  ScalarMatrix out(m.rows, m.cols, f);
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.columns[c]) out(r, c) = Scalar(f, v);
  }
  return out;
}

}  // namespace

TEST_CASE("boundary matrices") {
  const auto d = boundary_complex(hollow_triangle(), Field::rational);
  const auto& d1 = d.map(1);
  REQUIRE(d1.rows == 3);
  REQUIRE(d1.cols == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    int sum = 0;
    for (std::size_t r = 0; r < 3; ++r) sum += d1.at(r, c);
    CHECK(sum == 0);
  }
  const auto p = boundary_complex(point(), Field::rational);
  CHECK(p.top_degree() == 0);
  CHECK(p.map(0).rows == 0);
  CHECK(boundary_complex(hollow_tetrahedron(), Field::rational).squares_to_zero());
  CHECK(multiply(boundary_complex(hollow_tetrahedron(), Field::rational).map(1),
                 boundary_complex(hollow_tetrahedron(), Field::rational).map(2))
            .is_zero());
}

TEST_CASE("Betti numbers of small complexes") {
  CHECK(betti_numbers(hollow_triangle()) == Betti{1, 1});
  CHECK(betti_numbers(filled_triangle()) == Betti{1, 0, 0});
  CHECK(betti_numbers(hollow_tetrahedron()) == Betti{1, 0, 1});
  CHECK(betti_numbers(SimplicialComplex{}).empty());
  CHECK(betti_numbers(torus()) == Betti{1, 2, 1});
  CHECK(betti_numbers(wedge_of_circles()) == Betti{1, 3});
  CHECK(betti_numbers(tree()) == Betti{1, 0});
}

TEST_CASE("GF(2) sees torsion that the rationals do not") {
  CHECK(betti_numbers(projective_plane(), Field::rational) == Betti{1, 0, 0});
  CHECK(betti_numbers(projective_plane(), Field::gf2) == Betti{1, 1, 1});
}

TEST_CASE("coboundary complex") {
  const auto k = hollow_triangle();
  const auto b = boundary_complex(k, Field::rational);
  const auto c = coboundary_complex(k, Field::rational);
  CHECK(c.direction() == GradedChainComplex::Direction::coboundary);
  CHECK(c.map(0) == b.map(1).transpose());
  CHECK(betti_numbers(c) == Betti{1, 1});
  CHECK(betti_numbers(coboundary_complex(edge(), Field::rational))[0] == 1);
  CHECK(betti_numbers(coboundary_complex(SimplicialComplex::from_maximal({"a", "b"}, {}),
                                         Field::gf2))[0] == 2);
}

TEST_CASE("boundary squares to zero over both fields") {
  for (const auto& [name, k] : complex_corpus()) {
    INFO(name);
    CHECK(boundary_complex(k, Field::rational).squares_to_zero());
    CHECK(boundary_complex(k, Field::gf2).squares_to_zero());
    CHECK(coboundary_complex(k, Field::gf2).squares_to_zero());
  }
}

TEST_CASE("rational and GF(2) Betti numbers agree on torsion-free members") {
  for (const auto& k : {tree(), hollow_triangle(), hollow_tetrahedron(), wedge_of_circles(),
                        cycle(8), torus()}) {
    CHECK(betti_numbers(k, Field::rational) == betti_numbers(k, Field::gf2));
  }
}

TEST_CASE("Betti numbers equal dimension counts through Euler characteristic") {
  for (const auto& [name, k] : complex_corpus()) {
    INFO(name);
    for (Field f : {Field::rational, Field::gf2}) {
      long alt = 0;
      const auto b = betti_numbers(k, f);
      for (std::size_t i = 0; i < b.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long>(b[i]);
      CHECK(alt == k.euler_characteristic());
    }
  }
}

TEST_CASE("Betti numbers do not depend on vertex names") {
  std::mt19937 rng(7);
  for (const auto& [name, k] : complex_corpus()) {
    INFO(name);
    std::vector<std::string> names(k.num_vertices());
    std::vector<std::uint32_t> perm(k.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::uint32_t v = 0; v < perm.size(); ++v) names[v] = "w" + std::to_string(perm[v]);
    std::vector<std::vector<std::string>> maximal;
    for (const auto& s : k.maximal_simplices()) {
      std::vector<std::string> m;
      for (auto v : s) m.push_back(names[v]);
      maximal.push_back(m);
    }
    const auto renamed = SimplicialComplex::from_maximal(names, maximal);
    CHECK(betti_numbers(renamed) == betti_numbers(k));
    CHECK(betti_numbers(renamed, Field::gf2) == betti_numbers(k, Field::gf2));
  }
}

TEST_CASE("induced chain maps") {
  const auto k = share(hollow_triangle());
  const auto id = induced_chain_map(identity_map(k));
  for (std::size_t d = 0; d < id.size(); ++d) {
    for (std::size_t c = 0; c < id[d].cols; ++c) {
      for (std::size_t r = 0; r < id[d].rows; ++r) CHECK(id[d].at(r, c) == (r == c ? 1 : 0));
    }
  }

  const auto e = share(edge());
  const auto collapse = induced_chain_map(check_simplicial_map({0, 0}, e, e));
  CHECK(collapse[1].is_zero());

  // Image of each oriented octagon edge on the square; the fundamental
  // cycle (v0 v1) + (v1 v2) + ... + (v7 v0) goes to twice the square cycle,
  // i.e. coefficients (0,1): 2, (0,3): -2, (1,2): 2, (2,3): 2.
  const auto f = doubling();
  const auto f1 = induced_chain_map(f)[1];
  const auto& oct = f.source();
  std::vector<int> cycle_vector(oct.count(1), 0);
  for (std::uint32_t i = 0; i < 8; ++i) {
    const std::uint32_t j = (i + 1) % 8;
    cycle_vector[*oct.index_of({std::min(i, j), std::max(i, j)})] += i < j ? 1 : -1;
  }
  std::vector<int> image(f.target().count(1), 0);
  for (std::size_t c = 0; c < f1.cols; ++c) {
    for (const auto& [r, v] : f1.columns[c]) image[r] += v * cycle_vector[c];
  }
  const auto& sq = f.target();
  CHECK(image[*sq.index_of({0, 1})] == 2);
  CHECK(image[*sq.index_of({0, 3})] == -2);
  CHECK(image[*sq.index_of({1, 2})] == 2);
  CHECK(image[*sq.index_of({2, 3})] == 2);
}

TEST_CASE("induced chain maps commute with boundaries") {
  std::mt19937 rng(11);
  std::vector<SimplicialMap> maps{doubling(), doubling(12, 6), doubling(6, 3)};
  // Random vertex maps into a full simplex are always simplicial.
  for (const auto& [name, k] : complex_corpus()) {
    const auto src = share(k);
    const auto dst = share(complex_of({{"0", "1", "2", "3"}}));
    std::uniform_int_distribution<std::uint32_t> v(0, 3);
    std::vector<std::uint32_t> vm(k.num_vertices());
    for (auto& x : vm) x = v(rng);
    maps.push_back(check_simplicial_map(vm, src, dst));
    maps.push_back(identity_map(src));
  }
  for (const auto& f : maps) {
    for (Field field : {Field::rational, Field::gf2}) {
      const auto fs = induced_chain_map(f);
      const auto ds = boundary_complex(f.source(), field);
      const auto dt = boundary_complex(f.target(), field);
      for (int n = 1; n < static_cast<int>(fs.size()); ++n) {
        if (n > dt.top_degree()) {
          CHECK(fs[n].is_zero());
          continue;
        }
        CHECK(scalar(multiply(dt.map(n), fs[n]), field) ==
              scalar(multiply(fs[n - 1], ds.map(n)), field));
      }
    }
  }
}

TEST_CASE("homology maps") {
  const auto k = share(torus());
  for (int n = 0; n <= 2; ++n) {
    const auto m = homology_map(identity_map(k), n, Field::rational);
    CHECK(m == ScalarMatrix::identity(betti_numbers(*k)[n], Field::rational));
  }
  const auto h = homology_map(doubling(), 1, Field::rational);
  REQUIRE(h.rows == 1);
  REQUIRE(h.cols == 1);
  CHECK(h(0, 0) == Scalar(Field::rational, 2));
  CHECK(homology_map(doubling(), 1, Field::gf2)(0, 0).is_zero());

  const auto point_target = share(point());
  const auto constant = check_simplicial_map(std::vector<std::uint32_t>(8, 0), share(cycle(8)),
                                             point_target);
  const auto z = homology_map(constant, 1, Field::rational);
  CHECK(z.cols == 1);
  CHECK(z.rows == 0);
  CHECK(homology_map(constant, 0, Field::rational)(0, 0) == Scalar(Field::rational, 1));
  const auto out_of_range = homology_map(doubling(), 5, Field::rational);
  CHECK(out_of_range.rows == 0);
  CHECK(out_of_range.cols == 0);
}

TEST_CASE("homology maps are functorial and deterministic") {
  const auto f = doubling(16, 8);
  const auto g = doubling(8, 4);
  const auto gf = compose(g, f);
  CHECK(homology_map(gf, 1, Field::rational) ==
        homology_map(g, 1, Field::rational) * homology_map(f, 1, Field::rational));
  CHECK(homology_map(gf, 1, Field::rational)(0, 0) == Scalar(Field::rational, 4));
  CHECK(homology_map(f, 1, Field::rational) == homology_map(doubling(16, 8), 1, Field::rational));
}

TEST_CASE("homology basis vectors are cycles") {
  for (const auto& [name, k] : complex_corpus()) {
    INFO(name);
    for (int n = 1; n <= k.dimension(); ++n) {
      const auto basis = homology_basis(k, n, Field::rational);
      CHECK(basis.size() == betti_numbers(k)[n]);
      const auto d = boundary_complex(k, Field::rational).map(n);
      for (const auto& z : basis) {
        std::vector<Scalar> bz(d.rows, Scalar(Field::rational));
        for (std::size_t c = 0; c < d.cols; ++c) {
          for (const auto& [r, v] : d.columns[c]) bz[r] += Scalar(Field::rational, v) * z[c];
        }
        for (const auto& x : bz) CHECK(x.is_zero());
      }
    }
  }
}

TEST_CASE("rank over each field") {
  IntMatrix m(2, 2);
  m.columns[0] = {{0, 1}, {1, 1}};
  m.columns[1] = {{0, 1}, {1, -1}};
  CHECK(rank(m, Field::rational) == 2);
  CHECK(rank(m, Field::gf2) == 1);
}
