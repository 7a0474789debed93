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

#include "nervus/context.hpp"
#include "nervus/error.hpp"
#include "nervus/fractafold.hpp"
#include "nervus/homology.hpp"
#include "support.hpp"

using namespace nervus;
using namespace nervus::testing;

namespace {

using Betti = std::vector<std::size_t>;

ChuSpace cantor1() { return cantor_context(1); }

std::vector<std::size_t> all(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("contexts from label pairs") {
  const auto p = ChuSpace::from_pairs({"x", "y"}, {"a", "b"}, {{"x", "a"}, {"y", "b"}});
  CHECK(p.satisfies(0, 0));
  CHECK_FALSE(p.satisfies(0, 1));
  CHECK(p.extent(1).count() == 1);
  CHECK_THROWS_AS(ChuSpace::from_pairs({"x"}, {"a"}, {{"x", "z"}}), Error);
  CHECK_THROWS_AS(ChuSpace::from_pairs({"x", "x"}, {"a"}, {}), Error);
}

TEST_CASE("Chu transform validation") {
  std::mt19937 rng(3);
  const auto p = share(random_context(rng, 3, 4));
  CHECK_NOTHROW(validate_transform(all(3), all(4), p, p));

  const auto one = share(ChuSpace::from_pairs({"x"}, {"a", "b"}, {{"x", "a"}, {"x", "b"}}));
  const auto other = share(ChuSpace::from_pairs({"y"}, {"c"}, {{"y", "c"}}));
  CHECK_NOTHROW(validate_transform({0}, {0}, one, other));

  // x |= f_a(y) but f_o(x) does not satisfy y.
  const auto src = share(ChuSpace::from_pairs({"x1", "x2"}, {"a1", "a2"}, {{"x1", "a1"}}));
  const auto dst = share(ChuSpace::from_pairs({"y1", "y2"}, {"b1", "b2"}, {{"y2", "b1"}}));
  try {
    validate_transform({0, 1}, {0, 1}, src, dst);
    FAIL("expected not_adjoint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_adjoint);
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
    CHECK(std::string(e.what()).find("b1") != std::string::npos);
  }
}

TEST_CASE("duality") {
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_context(rng, 2 + i % 3, 3);
    CHECK(dual(dual(p)) == p);
  }
  const auto none = ChuSpace::from_pairs({"x", "y"}, {}, {});
  CHECK(dual(none).num_objects() == 0);
  const auto p = ChuSpace::from_pairs({"x", "y"}, {"a", "b", "c"}, {{"x", "a"}, {"y", "c"}});
  const auto d = dual(p);
  CHECK(d.num_objects() == 3);
  CHECK(d.num_attributes() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(d.satisfies(j, i) == p.satisfies(i, j));
  }
}

TEST_CASE("Cech nerve") {
  const auto k = cech_nerve(cantor1());
  CHECK(k.num_vertices() == 4);
  CHECK(k.count(1) == 2);
  CHECK(betti_numbers(k) == Betti{2, 0});
  CHECK(k.describe(k.simplices(1)[0]) == "{[0,1/3),(0,1/3]}");

  CHECK(cech_nerve(ChuSpace::from_pairs({"x"}, {"a"}, {})).dimension() == -1);
  const auto full = cech_nerve(
      ChuSpace::from_pairs({"x"}, {"a", "b", "c"}, {{"x", "a"}, {"x", "b"}, {"x", "c"}}));
  CHECK(full.count(2) == 1);
}

TEST_CASE("Vietoris nerve") {
  const auto k = vietoris_nerve(cantor1());
  CHECK(k.num_vertices() == 6);
  CHECK(k.count(1) == 4);
  CHECK(betti_numbers(k) == Betti{2, 0});
  CHECK(vietoris_nerve(ChuSpace::from_pairs({"x"}, {"a"}, {})).dimension() == -1);

  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_context(rng, 1 + i % 6, 1 + (i / 6) % 6);
    CHECK(vietoris_nerve(p) == cech_nerve(dual(p)));
  }
}

TEST_CASE("unsupported attributes are not nerve vertices") {
  std::mt19937 rng(19);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_context(rng, 4, 5, 0.3);
    const auto k = cech_nerve(p);
    for (std::size_t a = 0; a < p.num_attributes(); ++a) {
      CHECK(k.vertex_rank(p.attributes()[a]).has_value() == p.extent(a).any());
    }
  }
}

TEST_CASE("corestriction") {
  const auto p = cantor1();
  CHECK(corestrict(p, p.attributes()) == p);
  CHECK(cech_nerve(corestrict(p, std::vector<std::size_t>{})).dimension() == -1);
  const auto left = corestrict(p, std::vector<std::string>{"[0,1/3)", "(0,1/3]"});
  const auto k = cech_nerve(left);
  CHECK(k.num_vertices() == 2);
  CHECK(k.count(1) == 1);
  CHECK_THROWS_AS(corestrict(p, std::vector<std::string>{"[0,1)"}), Error);
}

TEST_CASE("covers as contexts") {
  const auto p = cover_to_context(
      {"0", "1/6", "1/3", "2/3", "5/6", "1"},
      {{"[0,1/3)", {"0", "1/6"}},
       {"(0,1/3]", {"1/6", "1/3"}},
       {"[2/3,1)", {"2/3", "5/6"}},
       {"(2/3,1]", {"5/6", "1"}}});
  CHECK(p == cantor1());

  const auto whole = cover_to_context({"x", "y", "z"}, {{"X", {"x", "y", "z"}}});
  CHECK(vietoris_nerve(whole).count(2) == 1);
  const auto singletons = cover_to_context({"x", "y"}, {{"X", {"x"}}, {"Y", {"y"}}});
  CHECK(cech_nerve(singletons).dimension() == 0);
  CHECK(cech_nerve(singletons).num_vertices() == 2);
  CHECK_THROWS_AS(cover_to_context({"x"}, {{"X", {"w"}}}), Error);
}

TEST_CASE("induced Vietoris maps") {
  std::mt19937 rng(23);
  const auto p = share(random_context(rng, 4, 3));
  const auto id = validate_transform(all(4), all(3), p, p);
  const auto f = induced_vietoris_map(id, all(3));
  for (std::uint32_t v = 0; v < f.source().num_vertices(); ++v) CHECK(f(v) == v);

  // Stage-2 Cantor points against the stage-1 cover, carried to stage 1.
  const auto fine = share(cantor_cover_on(1, 2));
  const auto coarse = share(cantor_context(1));
  const auto t = validate_transform(cantor_carrier(1), all(4), fine, coarse);
  const auto g = induced_vietoris_map(t, all(4));
  CHECK(g.source().num_vertices() == 12);
  CHECK(g.target().num_vertices() == 6);
  CHECK(homology_map(g, 0, Field::rational) == ScalarMatrix::identity(2, Field::rational));

  // Two objects with the same row merged: the edge between them collapses.
  const auto three = share(ChuSpace::from_pairs({"x", "y", "z"}, {"a", "b"},
                                                {{"x", "a"}, {"y", "a"}, {"z", "b"}}));
  const auto two = share(ChuSpace::from_pairs({"u", "w"}, {"a", "b"}, {{"u", "a"}, {"w", "b"}}));
  const auto merge = validate_transform({0, 0, 1}, {0, 1}, three, two);
  const auto m = induced_vietoris_map(merge, all(2));
  CHECK(m.source().count(1) == 1);
  CHECK(m.image(m.source().simplices(1)[0]).size() == 1);
}

TEST_CASE("induced Cech maps and splittings") {
  // Q has four attributes over the two of P; f_a is 2-to-1.
  const auto p = share(ChuSpace::from_pairs({"x", "y"}, {"a", "b"},
                                            {{"x", "a"}, {"y", "a"}, {"y", "b"}}));
  const auto q = share(ChuSpace::from_pairs(
      {"x", "y"}, {"a1", "a2", "b1", "b2"},
      {{"x", "a1"}, {"x", "a2"}, {"y", "a1"}, {"y", "a2"}, {"y", "b1"}, {"y", "b2"}}));
  const auto t = validate_transform({0, 1}, {0, 0, 1, 1}, p, q);
  const auto splittings = enumerate_splittings(t, all(4));
  REQUIRE(splittings.size() == 4);
  const auto first = induced_cech_map(t, all(4), splittings[0]);
  for (const auto& rho : splittings) {
    const auto f = induced_cech_map(t, all(4), rho);
    for (int n = 0; n <= 1; ++n) {
      CHECK(homology_map(f, n, Field::rational) == homology_map(first, n, Field::rational));
    }
  }
  CHECK_THROWS_AS(induced_cech_map(t, all(4), Splitting{{0, 2}, {1, 3}}), Error);
  CHECK_THROWS_AS(induced_cech_map(t, all(4), Splitting{{0, 0}}), Error);

  const auto bij = validate_transform({0, 1}, {0, 1}, p, p);
  CHECK(enumerate_splittings(bij, all(2)).size() == 1);
  const auto empty = induced_cech_map(bij, {}, Splitting{});
  CHECK(empty.source().dimension() == -1);
}

TEST_CASE("splitting enumeration is the product of fiber sizes") {
  const auto p = share(ChuSpace::from_pairs({"x"}, {"a", "b"}, {{"x", "a"}}));
  const auto q = share(ChuSpace::from_pairs({"x"}, {"a1", "a2", "b1", "b2", "b3"},
                                            {{"x", "a1"}, {"x", "a2"}}));
  const auto t = validate_transform({0}, {0, 0, 1, 1, 1}, p, q);
  CHECK(enumerate_splittings(t, all(5)).size() == 6);
  try {
    enumerate_splittings(t, all(5), 4);
    FAIL("expected enumeration_limit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::enumeration_limit);
  }
}

TEST_CASE("Dowker on random contexts") {
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    const auto p = random_context(rng, 5, 5, 0.45);
    CHECK(trimmed(betti_numbers(cech_nerve(p))) == trimmed(betti_numbers(vietoris_nerve(p))));
  }
}

TEST_CASE("induced maps are simplicial on random transforms") {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    const auto d = random_surjective_transform(rng, 4, 3, 2, 5);
    const auto t = validate_transform(d.f_o, d.f_a, d.p, d.q);
    CHECK_NOTHROW(induced_vietoris_map(t, all(5)));
    for (const auto& rho : enumerate_splittings(t, all(5), 64)) {
      CHECK_NOTHROW(induced_cech_map(t, all(5), rho));
    }
  }
}
