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

#include "nervus/incidence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "nervus/error.hpp"

namespace nervus {

namespace {

void require_same(const PosetPtr& a, const PosetPtr& b, Field fa, Field fb) {
  if (a != b && !(*a == *b)) {
    throw Error(Errc::poset_mismatch, "elements live over different posets");
  }
  if (fa != fb) throw Error(Errc::invalid_argument, "mixed coefficient fields");
}

template <class Key>
void accumulate(std::map<Key, Scalar>& terms, const Key& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string describe(const Poset& k, const Chain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += "<";
    out += k.label(c[i]);
  }
  return out + ")";
}

}  // namespace

IncidenceElement IncidenceElement::basis(PosetPtr poset, std::size_t p, std::size_t q,
                                         Field field) {
  if (p >= poset->size() || q >= poset->size() || !poset->le(p, q)) {
    throw Error(Errc::invalid_argument, "not an interval of the poset");
  }
  IncidenceElement e(std::move(poset), field);
  e.terms_.emplace(Interval{p, q}, Scalar(field, 1));
  return e;
}

IncidenceElement IncidenceElement::unit(PosetPtr poset, Field field) {
  IncidenceElement e(poset, field);
  for (std::size_t p = 0; p < poset->size(); ++p) {
    e.terms_.emplace(Interval{p, p}, Scalar(field, 1));
  }
  return e;
}

void IncidenceElement::add_term(const Interval& i, const Scalar& c) {
  if (i.first >= poset_->size() || i.second >= poset_->size() ||
      !poset_->le(i.first, i.second)) {
    throw Error(Errc::invalid_argument, "not an interval of the poset");
  }
  accumulate(terms_, i, c);
}

IncidenceElement& IncidenceElement::operator+=(const IncidenceElement& rhs) {
  require_same(poset_, rhs.poset_, field_, rhs.field_);
  for (const auto& [i, c] : rhs.terms_) accumulate(terms_, i, c);
  return *this;
}

IncidenceElement incidence_product(const IncidenceElement& u, const IncidenceElement& v) {
  require_same(u.poset_ptr(), v.poset_ptr(), u.field(), v.field());
  IncidenceElement out(u.poset_ptr(), u.field());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (a.second == b.first) out.add_term({a.first, b.second}, ca * cb);
    }
  }
  return out;
}

ChainElement ChainElement::basis(PosetPtr poset, Chain chain, Field field) {
  if (chain.empty()) throw Error(Errc::malformed_input, "empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i] >= poset->size()) throw Error(Errc::malformed_input, "chain element out of range");
    if (i > 0 && !poset->lt(chain[i - 1], chain[i])) {
      throw Error(Errc::malformed_input,
                  "chain " + describe(*poset, chain) + " is not strictly increasing");
    }
  }
  ChainElement e(std::move(poset), field);
  e.terms_.emplace(std::move(chain), Scalar(field, 1));
  return e;
}

ChainElement ChainElement::component(int degree) const {
  ChainElement out(poset_, field_);
  for (const auto& [c, s] : terms_) {
    if (static_cast<int>(c.size()) - 1 == degree) out.terms_.emplace(c, s);
  }
  return out;
}

void ChainElement::add_term(const Chain& c, const Scalar& coeff) {
  accumulate(terms_, c, coeff);
}

ChainElement& ChainElement::operator+=(const ChainElement& rhs) {
  require_same(poset_, rhs.poset_, field_, rhs.field_);
  for (const auto& [c, s] : rhs.terms_) accumulate(terms_, c, s);
  return *this;
}

ChainElement& ChainElement::operator-=(const ChainElement& rhs) {
  require_same(poset_, rhs.poset_, field_, rhs.field_);
  for (const auto& [c, s] : rhs.terms_) accumulate(terms_, c, -s);
  return *this;
}

ChainElement ChainElement::operator*(const Scalar& s) const {
  ChainElement out(poset_, field_);
  for (const auto& [c, v] : terms_) accumulate(out.terms_, c, v * s);
  return out;
}

ChainElement zapatrin_d(const ChainElement& c) {
  const Poset& k = c.poset();
  ChainElement out(c.poset_ptr(), c.field());
  for (const auto& [chain, coeff] : c.terms()) {
    const std::size_t n = chain.size() - 1;
    for (std::size_t y = 0; y < k.size(); ++y) {
      // Position at which y can be inserted, if any.
      std::size_t pos = SIZE_MAX;
      if (k.lt(y, chain.front())) {
        pos = 0;
      } else if (k.lt(chain.back(), y)) {
        pos = n + 1;
      } else {
        for (std::size_t m = 1; m <= n; ++m) {
          if (k.lt(chain[m - 1], y) && k.lt(y, chain[m])) {
            pos = m;
            break;
          }
        }
      }
      if (pos == SIZE_MAX) continue;
      Chain longer = chain;
      longer.insert(longer.begin() + static_cast<std::ptrdiff_t>(pos), y);
      out.add_term(longer, pos % 2 == 0 ? coeff : -coeff);
    }
  }
  return out;
}

ChainElement chain_product(const ChainElement& u, const ChainElement& v) {
  require_same(u.poset_ptr(), v.poset_ptr(), u.field(), v.field());
  ChainElement out(u.poset_ptr(), u.field());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (a.back() != b.front()) continue;
      Chain joined = a;
      joined.insert(joined.end(), b.begin() + 1, b.end());
      out.add_term(joined, ca * cb);
    }
  }
  return out;
}

std::vector<std::vector<Chain>> chain_basis(const Poset& k) {
  const auto oc = order_complex(k);
  std::vector<std::vector<Chain>> out;
  for (int d = 0; d <= oc.dimension(); ++d) {
    std::vector<Chain> level;
    for (const auto& s : oc.simplices(d)) {
      Chain c;
      for (auto v : s) c.push_back(k.index(oc.vertex_name(v)));
      level.push_back(std::move(c));
    }
    out.push_back(std::move(level));
  }
  return out;
}

std::vector<IntMatrix> zapatrin_matrices(const Poset& k) {
  const auto basis = chain_basis(k);
  std::vector<std::map<Chain, std::uint32_t>> index(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d) {
    for (std::uint32_t i = 0; i < basis[d].size(); ++i) index[d].emplace(basis[d][i], i);
  }
  auto poset = std::make_shared<const Poset>(k);
  std::vector<IntMatrix> out;
  for (std::size_t d = 0; d < basis.size(); ++d) {
    const std::size_t rows = d + 1 < basis.size() ? basis[d + 1].size() : 0;
    IntMatrix m(rows, basis[d].size());
    for (std::size_t c = 0; c < basis[d].size(); ++c) {
      const auto dc = zapatrin_d(ChainElement::basis(poset, basis[d][c], Field::rational));
      for (const auto& [chain, coeff] : dc.terms()) {
        m.columns[c].emplace_back(index[d + 1].at(chain),
                                  static_cast<int>(coeff.value().get_num().get_si()));
      }
      std::sort(m.columns[c].begin(), m.columns[c].end());
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> zapatrin_cohomology(const Poset& k, Field field) {
  const auto mats = zapatrin_matrices(k);
  std::vector<std::size_t> dims;
  for (const auto& m : mats) dims.push_back(m.cols);
  GradedChainComplex c(field, GradedChainComplex::Direction::coboundary, std::move(dims),
                       mats);
  return betti_numbers(c);
}

PropertyVerdict check_dd_zero(const PosetPtr& k, Field field) {
  for (const auto& level : chain_basis(*k)) {
    for (const auto& chain : level) {
      const auto e = ChainElement::basis(k, chain, field);
      if (!zapatrin_d(zapatrin_d(e)).is_zero()) {
        return {false, "d(d" + describe(*k, chain) + ") != 0"};
      }
    }
  }
  return {};
}

PropertyVerdict check_leibniz(const PosetPtr& k, Field field) {
  std::vector<Chain> all;
  for (const auto& level : chain_basis(*k)) all.insert(all.end(), level.begin(), level.end());
  std::vector<ChainElement> elems, diffs;
  for (const auto& c : all) {
    elems.push_back(ChainElement::basis(k, c, field));
    diffs.push_back(zapatrin_d(elems.back()));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int deg = static_cast<int>(all[i].size()) - 1;
    const Scalar sign(field, deg % 2 == 0 ? 1 : -1);
    for (std::size_t j = 0; j < all.size(); ++j) {
      const auto lhs = zapatrin_d(chain_product(elems[i], elems[j]));
      auto rhs = chain_product(diffs[i], elems[j]);
      rhs += chain_product(elems[i], diffs[j]) * sign;
      if (!(lhs == rhs)) {
        return {false, "Leibniz fails for " + describe(*k, all[i]) + " * " +
                           describe(*k, all[j])};
      }
    }
  }
  return {};
}

bool matches_order_complex_coboundary(const Poset& k) {
  const auto z = zapatrin_matrices(k);
  const auto cob = coboundary_complex(order_complex(k), Field::rational);
  if (static_cast<int>(z.size()) != cob.top_degree() + 1) return false;
  for (std::size_t n = 0; n < z.size(); ++n) {
    if (!(z[n] == cob.map(static_cast<int>(n)))) return false;
  }
  return true;
}

Digraph hasse_digraph(const Poset& k) { return Digraph{k.labels(), k.hasse()}; }

PathAlgebra::PathAlgebra(Digraph g) : graph_(std::move(g)) {
  const std::size_t n = graph_.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : graph_.edges) {
    if (a >= n || b >= n) throw Error(Errc::malformed_input, "edge endpoint out of range");
    if (!seen.insert({a, b}).second) {
      throw Error(Errc::malformed_input, "parallel edges are not supported");
    }
    out[a].push_back(b);
  }
  // Kahn: every node must be removable for the graph to be acyclic.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : graph_.edges) ++indegree[e.second];
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) stack.push_back(i);
  }
  std::size_t removed = 0;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    ++removed;
    for (auto b : out[a]) {
      if (--indegree[b] == 0) stack.push_back(b);
    }
  }
  if (removed != n) throw Error(Errc::cyclic_digraph, "digraph has a directed cycle");

  Path path;
  std::function<void(std::size_t)> walk = [&](std::size_t a) {
    path.push_back(a);
    paths_.push_back(path);
    for (auto b : out[a]) walk(b);
    path.pop_back();
  };
  for (std::size_t a = 0; a < n; ++a) walk(a);
  std::sort(paths_.begin(), paths_.end(), [](const Path& x, const Path& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::optional<std::size_t> PathAlgebra::product(std::size_t a, std::size_t b) const {
  const auto& x = paths_[a];
  const auto& y = paths_[b];
  if (x.back() != y.front()) return std::nullopt;
  Path joined = x;
  joined.insert(joined.end(), y.begin() + 1, y.end());
  return index_.at(joined);
}

std::optional<std::size_t> PathAlgebra::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool HasseEpimorphism::is_surjective() const {
  std::set<std::size_t> hit(image.begin(), image.end());
  return hit.size() == target_basis.size();
}

bool HasseEpimorphism::is_multiplicative(const PosetPtr& k) const {
  auto as_element = [&](std::size_t interval) {
    const auto [p, q] = target_basis[interval];
    return IncidenceElement::basis(k, p, q, Field::rational);
  };
  for (std::size_t a = 0; a < source.dimension(); ++a) {
    for (std::size_t b = 0; b < source.dimension(); ++b) {
      const auto prod = incidence_product(as_element(image[a]), as_element(image[b]));
      const auto ab = source.product(a, b);
      const auto expected =
          ab ? as_element(image[*ab]) : IncidenceElement(k, Field::rational);
      if (!(prod == expected)) return false;
    }
  }
  return true;
}

HasseEpimorphism hasse_epimorphism(const Poset& k) {
  HasseEpimorphism h{PathAlgebra(hasse_digraph(k)), {}, {}};
  std::map<IncidenceElement::Interval, std::size_t> idx;
  for (std::size_t p = 0; p < k.size(); ++p) {
    for (std::size_t q = 0; q < k.size(); ++q) {
      if (k.le(p, q)) {
        idx.emplace(IncidenceElement::Interval{p, q}, h.target_basis.size());
        h.target_basis.emplace_back(p, q);
      }
    }
  }
  for (const auto& path : h.source.basis()) {
    h.image.push_back(idx.at({path.front(), path.back()}));
  }
  return h;
}

}  // namespace nervus
