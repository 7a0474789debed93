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

#include "nervus/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "nervus/error.hpp"

namespace nervus {

Poset Poset::from_relation(std::vector<std::string> elements,
                           const std::vector<std::pair<std::size_t, std::size_t>>& le) {
  Poset k;
  const std::size_t n = elements.size();
  k.labels_ = std::move(elements);
  for (std::size_t i = 0; i < n; ++i) {
    if (!k.index_.emplace(k.labels_[i], i).second) {
      throw Error(Errc::malformed_input, "duplicate element '" + k.labels_[i] + "'");
    }
  }
  k.up_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) k.up_[i].set(i);
  for (const auto& [a, b] : le) {
    if (a >= n || b >= n) throw Error(Errc::malformed_input, "order pair out of range");
    k.up_[a].set(b);
  }
  // Warshall on bit rows.
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (k.up_[i][m]) k.up_[i] |= k.up_[m];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = k.up_[i].find_next(i); j != Bits::npos; j = k.up_[i].find_next(j)) {
      if (k.up_[j][i]) {
        throw Error(Errc::not_a_poset, "antisymmetry fails: '" + k.labels_[i] +
                                           "' and '" + k.labels_[j] +
                                           "' are distinct but mutually below");
      }
    }
  }
  k.derive();
  return k;
}

Poset Poset::from_labels(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& le) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) idx.emplace(elements[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : le) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw Error(Errc::unknown_label,
                  "order pair uses unknown element '" + (ia == idx.end() ? a : b) + "'");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_relation(std::move(elements), pairs);
}

void Poset::derive() {
  const std::size_t n = size();
  down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) {
      down_[j].set(i);
    }
  }
  hasse_.clear();
  covers_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
      if (b == a) continue;
      Bits between = up_[a] & down_[b];
      between.reset(a);
      between.reset(b);
      if (between.none()) {
        hasse_.emplace_back(a, b);
        covers_[a].push_back(b);
      }
    }
  }
}

std::size_t Poset::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(Errc::unknown_label, "unknown element '" + label + "'");
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b = up_[a].find_first(); b != Bits::npos; b = up_[a].find_next(b)) {
      if (b != a) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : hasse_) ++indegree[b];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> out;
  out.reserve(n);
  while (!ready.empty()) {
    auto a = ready.top();
    ready.pop();
    out.push_back(a);
    for (auto b : covers_[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  return out;
}

Poset Poset::reversed() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : hasse_) pairs.emplace_back(b, a);
  return from_relation(labels_, pairs);
}

SorkinQuotient sorkin_quotient(const ChuSpace& p) {
  SorkinQuotient q;
  std::map<Bits, std::size_t> class_of_row;
  q.class_of.resize(p.num_objects());
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    auto [it, fresh] = class_of_row.emplace(p.row(x), q.members.size());
    if (fresh) {
      q.members.emplace_back();
      q.attributes.push_back(p.row(x));
    }
    q.class_of[x] = it->second;
    q.members[it->second].push_back(x);
  }
  std::vector<std::string> labels;
  for (const auto& m : q.members) {
    std::string label = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) label += ",";
      label += p.objects()[m[i]];
    }
    labels.push_back(label + "}");
  }
  std::vector<std::pair<std::size_t, std::size_t>> le;
  const std::size_t c = q.members.size();
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      if (a != b && q.attributes[b].is_subset_of(q.attributes[a])) le.emplace_back(a, b);
    }
  }
  q.poset = Poset::from_relation(std::move(labels), le);
  return q;
}

std::vector<std::size_t> minimal_open_set(const SorkinQuotient& q, std::size_t cls) {
  if (cls >= q.poset.size()) throw Error(Errc::unknown_label, "unknown class");
  std::vector<std::size_t> out;
  const auto& down = q.poset.down(cls);
  for (auto i = down.find_first(); i != Bits::npos; i = down.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> minimal_open_set(const SorkinQuotient& q, const std::string& cls) {
  return minimal_open_set(q, q.poset.index(cls));
}

SimplicialComplex order_complex(const Poset& k) {
  const auto order = k.linear_extension();
  std::vector<std::uint32_t> rank(k.size());
  std::vector<std::string> names;
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = static_cast<std::uint32_t>(r);
    names.push_back(k.label(order[r]));
  }
  // Maximal chains are the saturated chains from minimal to maximal
  // elements, i.e. Hasse paths; closure supplies the rest.
  std::vector<Simplex> faces;
  Simplex chain;
  std::function<void(std::size_t)> walk = [&](std::size_t a) {
    chain.push_back(rank[a]);
    if (k.upper_covers(a).empty()) {
      faces.push_back(chain);
    } else {
      for (auto b : k.upper_covers(a)) walk(b);
    }
    chain.pop_back();
  };
  for (std::size_t a = 0; a < k.size(); ++a) {
    if (k.down(a).count() == 1) walk(a);
  }
  return SimplicialComplex::from_faces(std::move(names), std::move(faces));
}

Poset face_poset(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  std::vector<std::size_t> offset;
  for (int d = 0; d <= k.dimension(); ++d) {
    offset.push_back(labels.size());
    for (const auto& s : k.simplices(d)) labels.push_back(k.describe(s));
  }
  std::vector<std::pair<std::size_t, std::size_t>> le;
  for (int d = 1; d <= k.dimension(); ++d) {
    const auto& level = k.simplices(d);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& s = level[i];
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex facet;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != skip) facet.push_back(s[j]);
        }
        le.emplace_back(offset[d - 1] + *k.index_of(facet), offset[d] + i);
      }
    }
  }
  return Poset::from_relation(std::move(labels), le);
}

SimplicialComplex barycentric(const SimplicialComplex& k) {
  return order_complex(face_poset(k));
}

bool is_monotone(const std::vector<std::size_t>& map, const Poset& from, const Poset& to) {
  if (map.size() != from.size()) return false;
  for (auto m : map) {
    if (m >= to.size()) return false;
  }
  for (const auto& [a, b] : from.hasse()) {
    if (!to.le(map[a], map[b])) return false;
  }
  return true;
}

SimplicialMap order_complex_map(const std::vector<std::size_t>& map,
                                const Poset& from, const Poset& to,
                                ComplexPtr from_complex, ComplexPtr to_complex) {
  if (!is_monotone(map, from, to)) {
    throw Error(Errc::not_simplicial, "poset map is not monotone");
  }
  std::vector<std::uint32_t> vmap(from_complex->num_vertices());
  for (std::uint32_t v = 0; v < vmap.size(); ++v) {
    const auto a = from.index(from_complex->vertex_name(v));
    vmap[v] = *to_complex->vertex_rank(to.label(map[a]));
  }
  return check_simplicial_map(std::move(vmap), std::move(from_complex),
                              std::move(to_complex));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Poset& k, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  for (const auto& l : k.labels()) os << "  " << dot_quote(l) << ";\n";
  for (const auto& [a, b] : k.hasse()) {
    os << "  " << dot_quote(k.label(a)) << " -> " << dot_quote(k.label(b)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nervus
