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

#include "nervus/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "nervus/error.hpp"

namespace nervus {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SimplicialComplex SimplicialComplex::from_maximal(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& maximal, VertexOrder order) {
  std::vector<std::string> names = vertices;
  {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) {
        throw Error(Errc::malformed_input, "duplicate vertex name '" + n + "'");
      }
    }
  }
  if (order == VertexOrder::lexicographic) std::sort(names.begin(), names.end());

  std::unordered_map<std::string, std::uint32_t> rank;
  for (std::uint32_t i = 0; i < names.size(); ++i) rank.emplace(names[i], i);

  std::vector<Simplex> faces;
  faces.reserve(maximal.size() + names.size());
  for (const auto& m : maximal) {
    if (m.empty()) {
      throw Error(Errc::malformed_input, "empty vertex set in simplex list");
    }
    Simplex s;
    for (const auto& n : m) {
      auto it = rank.find(n);
      if (it == rank.end()) {
        throw Error(Errc::unknown_label, "simplex uses undeclared vertex '" + n + "'");
      }
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::malformed_input, "repeated vertex in simplex");
    }
    faces.push_back(std::move(s));
  }
  return from_faces(std::move(names), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertices,
                                                std::vector<Simplex> faces) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  for (std::uint32_t i = 0; i < k.vertices_.size(); ++i) {
    if (!k.rank_of_.emplace(k.vertices_[i], i).second) {
      throw Error(Errc::malformed_input,
                  "duplicate vertex name '" + k.vertices_[i] + "'");
    }
  }

  std::size_t top = 0;
  for (auto& f : faces) {
    if (f.empty()) throw Error(Errc::malformed_input, "empty simplex");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(Errc::malformed_input, "repeated vertex in simplex");
    }
    if (f.back() >= k.vertices_.size()) {
      throw Error(Errc::malformed_input, "simplex vertex out of range");
    }
    top = std::max(top, f.size());
  }
  if (k.vertices_.empty()) return k;
  top = std::max<std::size_t>(top, 1);

  std::vector<std::vector<Simplex>> by_dim(top);
  for (auto& f : faces) by_dim[f.size() - 1].push_back(std::move(f));
  for (std::uint32_t v = 0; v < k.vertices_.size(); ++v) by_dim[0].push_back({v});

  // Closing downward one dimension at a time: facets of every d-simplex
  // are added to dimension d-1 before it is deduplicated.
  for (std::size_t d = top; d-- > 0;) {
    auto& level = by_dim[d];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (d == 0) break;
    auto& below = by_dim[d - 1];
    below.reserve(below.size() + level.size() * (d + 1));
    for (const auto& s : level) {
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex facet;
        facet.reserve(d);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) facet.push_back(s[i]);
        }
        below.push_back(std::move(facet));
      }
    }
  }

  k.simplices_ = std::move(by_dim);
  k.index_.resize(k.simplices_.size());
  for (std::size_t d = 0; d < k.simplices_.size(); ++d) {
    auto& idx = k.index_[d];
    idx.reserve(k.simplices_[d].size());
    for (std::size_t i = 0; i < k.simplices_[d].size(); ++i) {
      idx.emplace(k.simplices_[d][i], i);
    }
  }
  return k;
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return simplices_[dim].size();
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& level : simplices_) n += level.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim > dimension()) return empty;
  return simplices_[dim];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || static_cast<int>(s.size()) - 1 > dimension()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> SimplicialComplex::vertex_rank(
    const std::string& name) const {
  auto it = rank_of_.find(name);
  if (it == rank_of_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  // A simplex is maximal iff none of its one-vertex extensions exists.
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::vector<char> covered(simplices_[d].size(), 0);
    if (d < dimension()) {
      for (const auto& s : simplices_[d + 1]) {
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
          Simplex facet;
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != skip) facet.push_back(s[i]);
          }
          covered[*index_of(facet)] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (!covered[i]) out.push_back(simplices_[d][i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices_[d].size());
  }
  return chi;
}

std::string SimplicialComplex::describe(const Simplex& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] < vertices_.size() ? vertices_[s[i]] : std::to_string(s[i]);
  }
  return out + "}";
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertex_map_[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialMap check_simplicial_map(std::vector<std::uint32_t> vertex_map,
                                   ComplexPtr source, ComplexPtr target) {
  if (vertex_map.size() != source->num_vertices()) {
    throw Error(Errc::malformed_input, "vertex map is not defined on every source vertex");
  }
  for (auto v : vertex_map) {
    if (v >= target->num_vertices()) {
      throw Error(Errc::not_simplicial, "vertex image outside the target complex");
    }
  }
  SimplicialMap f(std::move(source), std::move(target), std::move(vertex_map));
  for (int d = 1; d <= f.source().dimension(); ++d) {
    for (const auto& s : f.source().simplices(d)) {
      if (!f.target().contains(f.image(s))) {
        throw Error(Errc::not_simplicial,
                    "image of simplex " + f.source().describe(s) + " is " +
                        f.target().describe(f.image(s)) +
                        ", which is not a simplex of the target");
      }
    }
  }
  return f;
}

SimplicialMap check_named_map(
    const std::unordered_map<std::string, std::string>& vertex_map,
    ComplexPtr source, ComplexPtr target) {
  std::vector<std::uint32_t> by_rank(source->num_vertices());
  for (std::uint32_t v = 0; v < source->num_vertices(); ++v) {
    auto it = vertex_map.find(source->vertex_name(v));
    if (it == vertex_map.end()) {
      throw Error(Errc::malformed_input,
                  "vertex map undefined at '" + source->vertex_name(v) + "'");
    }
    auto r = target->vertex_rank(it->second);
    if (!r) {
      throw Error(Errc::unknown_label, "unknown target vertex '" + it->second + "'");
    }
    by_rank[v] = *r;
  }
  return check_simplicial_map(std::move(by_rank), std::move(source), std::move(target));
}

SimplicialMap identity_map(const ComplexPtr& k) {
  std::vector<std::uint32_t> id(k->num_vertices());
  std::iota(id.begin(), id.end(), 0u);
  return SimplicialMap(k, k, std::move(id));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) {
    throw Error(Errc::invalid_argument, "maps are not composable");
  }
  std::vector<std::uint32_t> m(f.vertex_map().size());
  for (std::size_t v = 0; v < m.size(); ++v) m[v] = g(f(static_cast<std::uint32_t>(v)));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(m));
}

namespace {

// Per-vertex signature: number of incident simplices in each dimension.
std::vector<std::vector<std::size_t>> vertex_signatures(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> sig(
      k.num_vertices(), std::vector<std::size_t>(std::max(k.dimension() + 1, 0), 0));
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.simplices(d)) {
      for (auto v : s) ++sig[v][d];
    }
  }
  return sig;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> find_isomorphism(
    const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.dimension() != b.dimension()) return std::nullopt;
  for (int d = 0; d <= a.dimension(); ++d) {
    if (a.count(d) != b.count(d)) return std::nullopt;
  }
  const std::size_t n = a.num_vertices();
  const auto sig_a = vertex_signatures(a);
  const auto sig_b = vertex_signatures(b);

  // Incident simplices per vertex of a, to check images as vertices are fixed.
  std::vector<std::vector<const Simplex*>> incident(n);
  for (int d = 1; d <= a.dimension(); ++d) {
    for (const auto& s : a.simplices(d)) {
      for (auto v : s) incident[v].push_back(&s);
    }
  }

  // Visit vertices of a in BFS order over edges so constraints bite early.
  std::vector<std::uint32_t> visit;
  {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& e : a.simplices(1)) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
    std::vector<char> seen(n, 0);
    for (std::uint32_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = visit.size();
      visit.push_back(root);
      while (head < visit.size()) {
        auto v = visit[head++];
        for (auto w : adj[v]) {
          if (!seen[w]) {
            seen[w] = 1;
            visit.push_back(w);
          }
        }
      }
    }
  }

  constexpr std::uint32_t unset = UINT32_MAX;
  std::vector<std::uint32_t> map(n, unset);
  std::vector<char> used(n, 0);

  std::function<bool(std::size_t)> extend = [&](std::size_t pos) -> bool {
    if (pos == visit.size()) return true;
    const auto v = visit[pos];
    for (std::uint32_t w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      map[v] = w;
      bool ok = true;
      for (const Simplex* s : incident[v]) {
        Simplex img;
        bool complete = true;
        for (auto u : *s) {
          if (map[u] == unset) {
            complete = false;
            break;
          }
          img.push_back(map[u]);
        }
        if (!complete) continue;
        std::sort(img.begin(), img.end());
        if (!b.contains(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = 1;
        if (extend(pos + 1)) return true;
        used[w] = 0;
      }
      map[v] = unset;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace nervus
