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

#include "nervus/fractafold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "nervus/error.hpp"

namespace nervus {

Tower make_tower(int first_level, std::vector<ComplexPtr> levels,
                 std::vector<std::vector<std::uint32_t>> bond_vertex_maps) {
  if (levels.empty() ? !bond_vertex_maps.empty()
                     : bond_vertex_maps.size() + 1 != levels.size()) {
    throw Error(Errc::malformed_input, "a tower needs one bonding map per adjacent pair");
  }
  Tower t;
  t.first_level = first_level;
  t.levels = std::move(levels);
  for (std::size_t j = 0; j < bond_vertex_maps.size(); ++j) {
    t.bonds.push_back(check_simplicial_map(std::move(bond_vertex_maps[j]), t.levels[j + 1],
                                           t.levels[j]));
  }
  return t;
}

IntervalSystem cantor_intervals(int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "negative Cantor stage");
  IntervalSystem s{0, {{mpq_class(0), mpq_class(1)}}};
  for (; s.level < n; ++s.level) {
    std::vector<std::pair<mpq_class, mpq_class>> next;
    next.reserve(2 * s.intervals.size());
    for (const auto& [l, r] : s.intervals) {
      const mpq_class third = (r - l) / 3;
      next.emplace_back(l, l + third);
      next.emplace_back(r - third, r);
    }
    s.intervals = std::move(next);
  }
  return s;
}

namespace {

void check_cantor_level(int n, int cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "Cantor stage must be at least 1");
  if (n > cap) {
    throw Error(Errc::cap_exceeded, "Cantor stage " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
  }
}

std::vector<mpq_class> cantor_points(int n) {
  std::vector<mpq_class> pts;
  for (const auto& [l, r] : cantor_intervals(n).intervals) {
    pts.push_back(l);
    pts.push_back((l + r) / 2);
    pts.push_back(r);
  }
  return pts;
}

}  // namespace

ChuSpace cantor_cover_on(int cover_level, int point_level, int cap) {
  check_cantor_level(cover_level, cap);
  check_cantor_level(point_level, cap);
  if (cover_level > point_level) {
    throw Error(Errc::invalid_argument, "cover stage finer than point stage");
  }
  const auto cover = cantor_intervals(cover_level).intervals;
  const auto pts = cantor_points(point_level);
  std::vector<std::string> objects, attributes;
  for (const auto& p : pts) objects.push_back(p.get_str());
  for (const auto& [l, r] : cover) {
    attributes.push_back("[" + l.get_str() + "," + r.get_str() + ")");
    attributes.push_back("(" + l.get_str() + "," + r.get_str() + "]");
  }
  std::vector<Bits> rows(pts.size(), Bits(attributes.size()));
  for (std::size_t x = 0; x < pts.size(); ++x) {
    // Points are sorted and intervals disjoint, so only one interval can
    // contain x; a linear scan keeps this simple at these sizes.
    for (std::size_t i = 0; i < cover.size(); ++i) {
      const auto& [l, r] = cover[i];
      if (l <= pts[x] && pts[x] < r) rows[x].set(2 * i);
      if (l < pts[x] && pts[x] <= r) rows[x].set(2 * i + 1);
    }
  }
  return ChuSpace(std::move(objects), std::move(attributes), std::move(rows));
}

ChuSpace cantor_context(int n, int cap) { return cantor_cover_on(n, n, cap); }

CarrierFunction cantor_carrier(int n, int cap) {
  check_cantor_level(n + 1, cap);
  const auto coarse = cantor_context(n, cap);
  const auto fine_on_coarse = cantor_cover_on(n, n + 1, cap);
  std::map<Bits, std::size_t> point_of_row;
  for (std::size_t x = 0; x < coarse.num_objects(); ++x) point_of_row.emplace(coarse.row(x), x);
  CarrierFunction f(fine_on_coarse.num_objects());
  for (std::size_t x = 0; x < f.size(); ++x) {
    auto it = point_of_row.find(fine_on_coarse.row(x));
    if (it == point_of_row.end()) {
      throw Error(Errc::internal, "Cantor point " + fine_on_coarse.objects()[x] +
                                      " has no stage-" + std::to_string(n) + " counterpart");
    }
    f[x] = it->second;
  }
  return f;
}

CantorTower cantor_tower(int n, int cap) {
  check_cantor_level(n, cap);
  CantorTower ct;
  std::vector<ComplexPtr> levels;
  for (int k = 1; k <= n; ++k) {
    ct.contexts.push_back(cantor_context(k, cap));
    ct.quotients.push_back(sorkin_quotient(ct.contexts.back()));
    levels.push_back(share(order_complex(ct.quotients.back().poset)));
  }
  std::vector<std::vector<std::uint32_t>> bonds;
  for (int k = 1; k < n; ++k) {
    const auto& fine = ct.contexts[k];  // stage k+1
    const auto coarse = cantor_cover_on(k, k + 1, cap);
    const auto witness =
        maximal_refinement_relation(identity_carrier(fine, coarse), fine, coarse);
    const auto r = sorkin_refinement_map(fine, coarse, witness);

    // Coarse classes of the stage k+1 points are identified with stage k
    // classes through their attribute rows.
    const auto& target = ct.quotients[k - 1];
    std::map<Bits, std::size_t> class_of_row;
    for (std::size_t c = 0; c < target.attributes.size(); ++c) {
      class_of_row.emplace(target.attributes[c], c);
    }
    std::vector<std::size_t> class_map(r.class_map.size());
    for (std::size_t c = 0; c < class_map.size(); ++c) {
      auto it = class_of_row.find(r.coarse.attributes[r.class_map[c]]);
      if (it == class_of_row.end()) {
        throw Error(Errc::internal, "Cantor refinement leaves the stage poset");
      }
      class_map[c] = it->second;
    }
    const auto& source_poset = ct.quotients[k].poset;
    const auto f = order_complex_map(class_map, source_poset, target.poset, levels[k],
                                     levels[k - 1]);
    ct.class_maps.push_back(std::move(class_map));
    bonds.push_back(f.vertex_map());
  }
  ct.tower = make_tower(1, std::move(levels), std::move(bonds));
  return ct;
}

ChuSpace star_cover(const SimplicialComplex& k) {
  std::vector<std::string> objects;
  std::vector<Bits> rows;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      objects.push_back(k.describe(s));
      Bits row(k.num_vertices());
      for (auto v : s) row.set(v);
      rows.push_back(std::move(row));
    }
  }
  return ChuSpace(std::move(objects), k.vertex_names(), std::move(rows));
}

namespace {

using Cell = std::vector<long>;

long pow3(int n) {
  long p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

// A cell of the 3^n grid survives when no ternary digit position has the
// middle digit in two or more coordinates.
bool kept(const Cell& cell, int n) {
  Cell c = cell;
  for (int digit = 0; digit < n; ++digit) {
    int middles = 0;
    for (auto& x : c) {
      if (x % 3 == 1) ++middles;
      x /= 3;
    }
    if (middles >= 2) return false;
  }
  return true;
}

std::string point_name(const Cell& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// Kuhn subdivision of each kept cell: one simplex per axis permutation,
// walking from the low corner to the high corner.
SimplicialComplex cube_complex(int dim, int n) {
  const long side = pow3(n);
  std::vector<Cell> cells;
  Cell cell(dim, 0);
  while (true) {
    if (kept(cell, n)) cells.push_back(cell);
    int axis = 0;
    for (; axis < dim; ++axis) {
      if (++cell[axis] < side) break;
      cell[axis] = 0;
    }
    if (axis == dim) break;
  }
  std::vector<int> perm(dim);
  std::vector<std::vector<Cell>> simplices;
  std::map<Cell, std::uint32_t> vertex_id;
  for (const auto& c : cells) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Cell> s{c};
      Cell p = c;
      for (int axis : perm) {
        ++p[axis];
        s.push_back(p);
      }
      for (const auto& v : s) vertex_id.emplace(v, 0);
      simplices.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::string> names;
  std::uint32_t next = 0;
  for (auto& [v, id] : vertex_id) {
    id = next++;
    names.push_back(point_name(v));
  }
  std::vector<Simplex> faces;
  faces.reserve(simplices.size());
  for (const auto& s : simplices) {
    Simplex f;
    for (const auto& v : s) f.push_back(vertex_id.at(v));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(std::move(names), std::move(faces));
}

Cell parse_point(const std::string& name) {
  Cell p;
  std::size_t i = 1;
  while (i < name.size()) {
    std::size_t end = name.find_first_of(",)", i);
    p.push_back(std::stol(name.substr(i, end - i)));
    i = end + 1;
  }
  return p;
}

// Grid coordinate x at stage n+1 goes to floor((x+1)/3) at stage n.
Tower cube_tower(int dim, int n, int cap, const char* what) {
  if (n < 1) throw Error(Errc::invalid_argument, std::string(what) + " stage must be at least 1");
  if (n > cap) {
    throw Error(Errc::cap_exceeded, std::string(what) + " stage " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<ComplexPtr> levels;
  for (int k = 1; k <= n; ++k) levels.push_back(share(cube_complex(dim, k)));
  std::vector<std::vector<std::uint32_t>> bonds;
  for (int k = 1; k < n; ++k) {
    const auto& fine = *levels[k];
    const auto& coarse = *levels[k - 1];
    std::vector<std::uint32_t> vmap(fine.num_vertices());
    for (std::uint32_t v = 0; v < vmap.size(); ++v) {
      Cell p = parse_point(fine.vertex_name(v));
      for (auto& x : p) x = (x + 1) / 3;
      vmap[v] = *coarse.vertex_rank(point_name(p));
    }
    bonds.push_back(std::move(vmap));
  }
  return make_tower(1, std::move(levels), std::move(bonds));
}

void check_cube_level(int n, int cap, const char* what) {
  if (n < 1) throw Error(Errc::invalid_argument, std::string(what) + " stage must be at least 1");
  if (n > cap) {
    throw Error(Errc::cap_exceeded, std::string(what) + " stage " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

SimplicialComplex carpet_complex(int n, int cap) {
  check_cube_level(n, cap, "carpet");
  return cube_complex(2, n);
}

Tower carpet_tower(int n, int cap) { return cube_tower(2, n, cap, "carpet"); }

SimplicialComplex sponge_complex(int n, int cap) {
  check_cube_level(n, cap, "sponge");
  return cube_complex(3, n);
}

Tower sponge_tower(int n, int cap) { return cube_tower(3, n, cap, "sponge"); }

Tower solenoid_tower(int m, int k, std::size_t cap) {
  if (m < 3) throw Error(Errc::invalid_argument, "solenoid base cycle needs at least 3 vertices");
  if (k < 1) throw Error(Errc::invalid_argument, "solenoid needs at least one bonding level");
  if (k >= 63 || static_cast<std::size_t>(m) > (cap >> k)) {
    throw Error(Errc::cap_exceeded, "solenoid top level exceeds " + std::to_string(cap) +
                                        " vertices");
  }
  std::vector<ComplexPtr> levels;
  std::vector<std::vector<std::uint32_t>> bonds;
  for (int j = 0; j <= k; ++j) {
    const std::uint32_t size = static_cast<std::uint32_t>(m) << j;
    std::vector<std::string> names;
    std::vector<Simplex> edges;
    for (std::uint32_t i = 0; i < size; ++i) {
      names.push_back("v" + std::to_string(i));
      const std::uint32_t next = (i + 1) % size;
      edges.push_back({std::min(i, next), std::max(i, next)});
    }
    levels.push_back(share(SimplicialComplex::from_faces(std::move(names), std::move(edges))));
    if (j > 0) {
      std::vector<std::uint32_t> vmap(size);
      for (std::uint32_t i = 0; i < size; ++i) vmap[i] = i % (size / 2);
      bonds.push_back(std::move(vmap));
    }
  }
  return make_tower(0, std::move(levels), std::move(bonds));
}

PointCloud rossler_cloud(const OdeParams& p, std::size_t count) {
  if (!(p.step > 0)) throw Error(Errc::invalid_argument, "step size must be positive");
  if (p.transient_steps < 0 || p.transient_steps >= p.total_steps) {
    throw Error(Errc::invalid_argument, "transient must be shorter than the run");
  }
  const auto kept_states = static_cast<std::size_t>(p.total_steps - p.transient_steps);
  if (count == 0 || count > kept_states) {
    throw Error(Errc::invalid_argument, "subsample count must be in 1.." +
                                            std::to_string(kept_states));
  }
  using State = std::array<double, 3>;
  auto field = [&](const State& s) -> State {
    return {-(s[1] + s[2]), s[0] + p.a * s[1], p.b + s[0] * s[2] - p.c * s[2]};
  };
  auto shifted = [](const State& s, const State& k, double h) -> State {
    return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]};
  };

  State s = p.start;
  const double h = p.step;
  std::vector<double> coords;
  coords.reserve(3 * count);
  std::size_t next_sample = 0;
  for (long step = 1; step <= p.total_steps; ++step) {
    const State k1 = field(s);
    const State k2 = field(shifted(s, k1, h / 2));
    const State k3 = field(shifted(s, k2, h / 2));
    const State k4 = field(shifted(s, k3, h));
    for (int i = 0; i < 3; ++i) s[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]) || !std::isfinite(s[2])) {
      throw Error(Errc::divergence, "Rossler state became non-finite at step " +
                                        std::to_string(step));
    }
    if (step <= p.transient_steps || next_sample >= count) continue;
    // Kept state number i (0-based) is sampled when i == floor(j * kept / count).
    const auto i = static_cast<std::size_t>(step - p.transient_steps - 1);
    if (i == next_sample * kept_states / count) {
      coords.insert(coords.end(), s.begin(), s.end());
      ++next_sample;
    }
  }
  return PointCloud(3, std::move(coords));
}

TowerHomology tower_homology(const Tower& t, Field field) {
  TowerHomology h;
  h.field = field;
  for (const auto& level : t.levels) h.betti.push_back(betti_numbers(*level, field));
  for (const auto& bond : t.bonds) {
    const int top = std::max(bond.source().dimension(), bond.target().dimension());
    std::vector<ScalarMatrix> per_degree;
    for (int n = 0; n <= top; ++n) per_degree.push_back(homology_map(bond, n, field));
    h.bond_matrices.push_back(std::move(per_degree));
  }
  return h;
}

}  // namespace nervus
