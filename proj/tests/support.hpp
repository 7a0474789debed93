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

// Shared fixtures and generators for the test binaries.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"
#include "nervus/context.hpp"
#include "nervus/poset.hpp"

namespace nervus::testing {

inline std::vector<std::string> letters(std::size_t n, char first = 'a') {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>(first + i)));
  return out;
}

inline SimplicialComplex complex_of(const std::vector<std::vector<std::string>>& maximal) {
  std::vector<std::string> names;
  for (const auto& s : maximal) names.insert(names.end(), s.begin(), s.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return SimplicialComplex::from_maximal(names, maximal);
}

inline SimplicialComplex hollow_triangle() { return complex_of({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }
inline SimplicialComplex filled_triangle() { return complex_of({{"a", "b", "c"}}); }
inline SimplicialComplex hollow_tetrahedron() {
  return complex_of({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}
inline SimplicialComplex edge() { return complex_of({{"a", "b"}}); }
inline SimplicialComplex point() { return complex_of({{"a"}}); }

// Cycle on n vertices "v0".."v{n-1}" with the vertices declared in numeric order.
inline SimplicialComplex cycle(std::uint32_t n) {
  std::vector<std::string> names;
  std::vector<Simplex> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  }
  return SimplicialComplex::from_faces(names, edges);
}

// Minimal triangulations used as fixed test objects.
inline SimplicialComplex torus() {
  // 7-vertex Moebius torus.
  std::vector<std::vector<std::string>> f;
  for (int i = 0; i < 7; ++i) {
    auto v = [](int k) { return std::to_string(((k % 7) + 7) % 7); };
    f.push_back({v(i), v(i + 1), v(i + 3)});
    f.push_back({v(i), v(i + 2), v(i + 3)});
  }
  return complex_of(f);
}

inline SimplicialComplex projective_plane() {
  return complex_of({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                     {"1", "2", "6"}, {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"},
                     {"3", "4", "6"}, {"3", "5", "6"}});
}

inline SimplicialComplex wedge_of_circles() {
  return complex_of({{"o", "a"}, {"a", "b"}, {"o", "b"}, {"o", "c"}, {"c", "d"}, {"o", "d"},
                     {"o", "e"}, {"e", "f"}, {"f", "o"}});
}

inline SimplicialComplex tree() {
  return complex_of({{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}, {"d", "f"}});
}

// Betti sequence with trailing zeros removed, for comparing complexes of
// different dimensions.
inline std::vector<std::size_t> trimmed(std::vector<std::size_t> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

struct Named {
  std::string name;
  SimplicialComplex complex;
};

inline std::vector<Named> complex_corpus() {
  return {
      {"empty", SimplicialComplex{}},
      {"point", point()},
      {"edge", edge()},
      {"two points", SimplicialComplex::from_maximal({"a", "b"}, {})},
      {"hollow triangle", hollow_triangle()},
      {"filled triangle", filled_triangle()},
      {"hollow tetrahedron", hollow_tetrahedron()},
      {"tree", tree()},
      {"wedge of circles", wedge_of_circles()},
      {"octagon", cycle(8)},
      {"torus", torus()},
      {"projective plane", projective_plane()},
      {"bowtie", complex_of({{"a", "b", "c"}, {"c", "d", "e"}, {"f"}})},
  };
}

inline ChuSpace random_context(std::mt19937& rng, std::size_t objects, std::size_t attributes,
                               double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<Bits> rows(objects, Bits(attributes));
  for (auto& r : rows) {
    for (std::size_t a = 0; a < attributes; ++a) r[a] = bit(rng);
  }
  return ChuSpace(letters(objects, 'p'), letters(attributes, 'A'), rows);
}

// Context number `code` among all objects x attributes relations, bit i of
// code standing for (i / attributes, i % attributes).
inline ChuSpace context_from_code(std::uint32_t code, std::size_t objects, std::size_t attributes) {
  std::vector<Bits> rows(objects, Bits(attributes));
  for (std::size_t i = 0; i < objects * attributes; ++i) {
    rows[i / attributes][i % attributes] = (code >> i) & 1u;
  }
  return ChuSpace(letters(objects, 'p'), letters(attributes, 'A'), rows);
}

// Every partial order on {a, b, ..} given by its strict pairs.
inline std::vector<Poset> all_labeled_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<Poset> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((code >> k) & 1u) lt[pairs[k].first][pairs[k].second] = true;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!lt[i][j]) continue;
        if (lt[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k) {
          if (lt[j][k] && k != i && !lt[i][k]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::pair<std::size_t, std::size_t>> le;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (lt[i][j]) le.emplace_back(i, j);
      }
    }
    out.push_back(Poset::from_relation(letters(n), le));
  }
  return out;
}

// Random order: a relation compatible with a random permutation, closed
// transitively.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double density = 0.35) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution bit(density);
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bit(rng)) le.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_relation(letters(n), le);
}

inline std::vector<Poset> random_posets(std::uint32_t seed, std::size_t count, std::size_t max_size) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<Poset> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_poset(rng, size(rng)));
  return out;
}

// Transform P -> Q with f_o injective and f_a : Q_a -> P_a surjective; the
// rows of Q over the image of f_o are forced by adjointness, the rest random.
struct TransformData {
  ChuPtr p;
  ChuPtr q;
  std::vector<std::size_t> f_o;
  std::vector<std::size_t> f_a;
};

inline TransformData random_surjective_transform(std::mt19937& rng, std::size_t p_objects,
                                                 std::size_t p_attributes,
                                                 std::size_t q_extra_objects,
                                                 std::size_t q_attributes) {
  const auto p = random_context(rng, p_objects, p_attributes);
  const std::size_t q_objects = p_objects + q_extra_objects;
  std::vector<std::size_t> slots(q_objects);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::size_t> f_o(slots.begin(), slots.begin() + static_cast<long>(p_objects));
  std::vector<std::size_t> f_a(q_attributes);
  std::uniform_int_distribution<std::size_t> any(0, p_attributes - 1);
  for (std::size_t y = 0; y < q_attributes; ++y) f_a[y] = y < p_attributes ? y : any(rng);
  std::shuffle(f_a.begin(), f_a.end(), rng);
  std::bernoulli_distribution bit(0.5);
  std::vector<Bits> rows(q_objects, Bits(q_attributes));
  for (auto& r : rows) {
    for (std::size_t y = 0; y < q_attributes; ++y) r[y] = bit(rng);
  }
  for (std::size_t x = 0; x < p_objects; ++x) {
    for (std::size_t y = 0; y < q_attributes; ++y) rows[f_o[x]][y] = p.satisfies(x, f_a[y]);
  }
  auto q = ChuSpace(letters(q_objects, 'p'), letters(q_attributes, 'a'), rows);
  return {share(p), share(q), f_o, f_a};
}

}  // namespace nervus::testing
