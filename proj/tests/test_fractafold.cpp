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

#include <cmath>

#include "nervus/error.hpp"
#include "nervus/fractafold.hpp"
#include "support.hpp"

using namespace nervus;
using namespace nervus::testing;

namespace {

using Betti = std::vector<std::size_t>;
constexpr Field Q = Field::rational;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST_CASE("Cantor interval systems") {
  for (int n = 0; n <= 6; ++n) {
    const auto s = cantor_intervals(n);
    REQUIRE(s.intervals.size() == (std::size_t{1} << n));
    for (std::size_t i = 0; i < s.intervals.size(); ++i) {
      const auto& [l, r] = s.intervals[i];
      CHECK(r - l == mpq_class(1) / static_cast<unsigned long>(std::pow(3, n)));
      if (i + 1 < s.intervals.size()) CHECK(r < s.intervals[i + 1].first);
    }
    if (n > 0) {
      const auto parent = cantor_intervals(n - 1);
      for (std::size_t i = 0; i < s.intervals.size(); ++i) {
        CHECK(parent.intervals[i / 2].first <= s.intervals[i].first);
        CHECK(s.intervals[i].second <= parent.intervals[i / 2].second);
      }
    }
  }
  CHECK(code_of([] { cantor_intervals(-1); }) == Errc::invalid_argument);
}

TEST_CASE("first Cantor context is the half-open star cover") {
  const auto p = cantor_context(1);
  CHECK(p.attributes() == std::vector<std::string>{"[0,1/3)", "(0,1/3]", "[2/3,1)", "(2/3,1]"});
  CHECK(p.objects() == std::vector<std::string>{"0", "1/6", "1/3", "2/3", "5/6", "1"});
  CHECK(betti_numbers(cech_nerve(p)) == Betti{2, 0});
  CHECK(betti_numbers(cech_nerve(cantor_context(3))) == Betti{8, 0});
}

TEST_CASE("Cantor caps") {
  CHECK(code_of([] { cantor_context(13); }) == Errc::cap_exceeded);
  CHECK(code_of([] { cantor_context(4, 3); }) == Errc::cap_exceeded);
  CHECK(code_of([] { cantor_context(0); }) == Errc::invalid_argument);
  CHECK(code_of([] { cantor_cover_on(3, 2); }) == Errc::invalid_argument);
}

TEST_CASE("Cantor stages up to 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto p = cantor_context(n);
    CHECK(betti_numbers(cech_nerve(p))[0] == (std::size_t{1} << n));
    CHECK(sorkin_quotient(p).poset.size() == 3 * (std::size_t{1} << n));
  }
}

TEST_CASE("Cantor tower") {
  const auto t = cantor_tower(3);
  REQUIRE(t.quotients.size() == 3);
  CHECK(t.quotients[0].poset.size() == 6);
  CHECK(t.quotients[1].poset.size() == 12);
  CHECK(t.quotients[2].poset.size() == 24);
  for (std::size_t k = 0; k < t.class_maps.size(); ++k) {
    std::vector<bool> hit(t.quotients[k].poset.size(), false);
    for (auto c : t.class_maps[k]) hit[c] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
  const auto h = tower_homology(t.tower, Q);
  CHECK(h.betti == std::vector<Betti>{{2, 0}, {4, 0}, {8, 0}});
  REQUIRE(h.bond_matrices.size() == 2);
  for (const auto& per_degree : h.bond_matrices) {
    // Components of the finer stage project onto their parent component.
    const auto& m = per_degree[0];
    CHECK(m.cols == 2 * m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::size_t ones = 0;
      for (std::size_t r = 0; r < m.rows; ++r) {
        CHECK((m(r, c).is_zero() || m(r, c) == Scalar(Q, 1)));
        ones += !m(r, c).is_zero();
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("Cantor carrier sends points to the matching stage point") {
  const auto f = cantor_carrier(1);
  const auto fine = cantor_cover_on(1, 2);
  const auto coarse = cantor_context(1);
  REQUIRE(f.size() == 12);
  for (std::size_t x = 0; x < f.size(); ++x) CHECK(fine.row(x) == coarse.row(f[x]));
  CHECK(coarse.objects()[f[fine.object_index("1/18")]] == "1/6");
  CHECK(coarse.objects()[f[fine.object_index("1/3")]] == "1/3");
}

TEST_CASE("star covers recover the triangulation") {
  for (const auto& k : {hollow_triangle(), edge(), hollow_tetrahedron(), torus(), tree()}) {
    const auto nerve = cech_nerve(star_cover(k));
    CHECK(find_isomorphism(nerve, k).has_value());
  }
  CHECK(betti_numbers(cech_nerve(star_cover(carpet_complex(1)))) == Betti{1, 1, 0});
  for (const auto& [name, k] : complex_corpus()) {
    INFO(name);
    CHECK(find_isomorphism(cech_nerve(star_cover(k)), k).has_value());
  }
}

TEST_CASE("Sierpinski carpet") {
  const auto k1 = carpet_complex(1);
  CHECK(k1.count(2) == 16);
  CHECK(betti_numbers(k1) == Betti{1, 1, 0});
  CHECK(betti_numbers(carpet_complex(2)) == Betti{1, 9, 0});
  long holes = 1;
  for (int n = 1; n <= 3; ++n) {
    const auto k = carpet_complex(n);
    const auto b = betti_numbers(k);
    CHECK(static_cast<long>(b[1]) == holes);
    CHECK(static_cast<long>(b[1]) == 1 - k.euler_characteristic());
    holes = 8 * holes + 1;
  }
  CHECK(code_of([] { carpet_complex(5); }) == Errc::cap_exceeded);
  CHECK(code_of([] { carpet_complex(0); }) == Errc::invalid_argument);
}

TEST_CASE("Menger sponge") {
  const auto k = sponge_complex(1);
  CHECK(k.count(3) == 20 * 6);
  const auto b = betti_numbers(k);
  CHECK(b == Betti{1, 5, 0, 0});
  long alt = 0;
  for (std::size_t i = 0; i < b.size(); ++i) alt += (i % 2 ? -1 : 1) * static_cast<long>(b[i]);
  CHECK(alt == k.euler_characteristic());
  CHECK(code_of([] { sponge_complex(3); }) == Errc::cap_exceeded);
}

TEST_CASE("grid towers have simplicial bonds") {
  const auto carpet = carpet_tower(3);
  CHECK(carpet.levels.size() == 3);
  CHECK(carpet.bonds.size() == 2);
  const auto h = tower_homology(carpet, Q);
  CHECK(h.betti[2] == Betti{1, 73, 0});
  // The large hole survives every bond.
  for (const auto& m : h.bond_matrices) {
    std::size_t rank_one = 0;
    for (const auto& x : m[1].data) rank_one += !x.is_zero();
    CHECK(rank_one >= 1);
  }
  const auto sponge = sponge_tower(2);
  CHECK(sponge.bonds.size() == 1);
}

TEST_CASE("dyadic solenoid tower") {
  const auto t = solenoid_tower(4, 3);
  REQUIRE(t.levels.size() == 4);
  const auto h = tower_homology(t, Q);
  for (const auto& b : h.betti) CHECK(b == Betti{1, 1});
  for (const auto& m : h.bond_matrices) {
    REQUIRE(m[1].rows == 1);
    CHECK(m[1](0, 0) == Scalar(Q, 2));
  }
  auto composite = identity_map(t.levels.back());
  for (std::size_t j = t.bonds.size(); j-- > 0;) {
    composite = compose(t.bonds[j], composite);
    const long degree = 1L << (t.bonds.size() - j);
    CHECK(homology_map(composite, 1, Q)(0, 0) == Scalar(Q, degree));
  }
  CHECK(code_of([] { solenoid_tower(2, 3); }) == Errc::invalid_argument);
  CHECK(code_of([] { solenoid_tower(4, 0); }) == Errc::invalid_argument);
  CHECK(code_of([] { solenoid_tower(4, 5, 64); }) == Errc::cap_exceeded);
  CHECK_NOTHROW(solenoid_tower(4, 4, 64));
}

TEST_CASE("tower assembly") {
  const auto single = make_tower(0, {share(cycle(4))}, {});
  CHECK(tower_homology(single, Q).bond_matrices.empty());
  CHECK(code_of([] { make_tower(0, {share(cycle(4))}, {{0, 1, 2, 3}}); }) ==
        Errc::malformed_input);
  // Rotating an octagon onto a square by i -> i mod 4 is simplicial; a
  // non-adjacent jump is not.
  CHECK(code_of([] {
          make_tower(0, {share(cycle(4)), share(cycle(8))}, {{0, 2, 1, 3, 0, 1, 2, 3}});
        }) == Errc::not_simplicial);
}

TEST_CASE("Rossler point clouds") {
  const OdeParams defaults;
  CHECK(defaults.a == 0.15);
  CHECK(defaults.b == 0.2);
  CHECK(defaults.c == 10.0);
  const auto s = rossler_cloud(defaults, 400);
  REQUIRE(s.size() == 400);
  CHECK(s.dim() == 3);
  double largest = 0;
  for (double x : s.coords()) largest = std::max(largest, std::abs(x));
  CHECK(largest < 100);
  CHECK(largest == Catch::Approx(34.26276171074821).epsilon(1e-9));
  // First and last samples from an independent RK4 run.
  CHECK(s.point(0)[0] == Catch::Approx(3.208279994045431).epsilon(1e-12));
  CHECK(s.point(0)[1] == Catch::Approx(10.090627106420023).epsilon(1e-12));
  CHECK(s.point(0)[2] == Catch::Approx(0.053071675366233424).epsilon(1e-12));
  CHECK(s.point(399)[0] == Catch::Approx(3.64804461919563).epsilon(1e-12));
  CHECK(s.point(399)[1] == Catch::Approx(9.656439568725967).epsilon(1e-12));
  CHECK(s.point(399)[2] == Catch::Approx(0.05712154524086923).epsilon(1e-12));
  CHECK(rossler_cloud(defaults, 400).coords() == s.coords());
}

TEST_CASE("Rossler parameter validation") {
  OdeParams p;
  p.step = 0;
  CHECK(code_of([&] { rossler_cloud(p, 10); }) == Errc::invalid_argument);
  p = OdeParams{};
  p.transient_steps = p.total_steps;
  CHECK(code_of([&] { rossler_cloud(p, 10); }) == Errc::invalid_argument);
  p = OdeParams{};
  CHECK(code_of([&] { rossler_cloud(p, 0); }) == Errc::invalid_argument);
  CHECK(code_of([&] { rossler_cloud(p, 25001); }) == Errc::invalid_argument);
  p.start = {1e300, 1e300, 1e300};
  try {
    rossler_cloud(p, 10);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::divergence);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}
