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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nervus/homology.hpp"
#include "nervus/poset.hpp"
#include "nervus/scalar.hpp"

namespace nervus {

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset k) { return std::make_shared<const Poset>(std::move(k)); }

/// Element of the incidence algebra: a combination of intervals e_{p<=q}.
class IncidenceElement {
 public:
  using Interval = std::pair<std::size_t, std::size_t>;

  IncidenceElement(PosetPtr poset, Field field) : poset_(std::move(poset)), field_(field) {}

  /// e_{p<=q}; throws Error(invalid_argument) unless p <= q.
  static IncidenceElement basis(PosetPtr poset, std::size_t p, std::size_t q, Field field);
  /// Sum of e_{p<=p}, the two-sided unit.
  static IncidenceElement unit(PosetPtr poset, Field field);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  Field field() const { return field_; }
  const std::map<Interval, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Interval& i, const Scalar& c);
  IncidenceElement& operator+=(const IncidenceElement& rhs);
  friend bool operator==(const IncidenceElement& a, const IncidenceElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  PosetPtr poset_;
  Field field_;
  std::map<Interval, Scalar> terms_;
};

/// Bilinear extension of e_{p<=q} e_{r<=s} = e_{p<=s} if q = r, else 0.
IncidenceElement incidence_product(const IncidenceElement& u, const IncidenceElement& v);

/// Strictly increasing chain of poset elements; its degree is length - 1.
using Chain = std::vector<std::size_t>;

/// Combination of strictly increasing chains, graded by chain degree.
class ChainElement {
 public:
  ChainElement(PosetPtr poset, Field field) : poset_(std::move(poset)), field_(field) {}

  /// Throws Error(malformed_input) unless the chain is strictly increasing.
  static ChainElement basis(PosetPtr poset, Chain chain, Field field);

  const Poset& poset() const { return *poset_; }
  const PosetPtr& poset_ptr() const { return poset_; }
  Field field() const { return field_; }
  const std::map<Chain, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Homogeneous component of the given degree.
  ChainElement component(int degree) const;

  void add_term(const Chain& c, const Scalar& coeff);
  ChainElement& operator+=(const ChainElement& rhs);
  ChainElement& operator-=(const ChainElement& rhs);
  ChainElement operator*(const Scalar& s) const;
  friend bool operator==(const ChainElement& a, const ChainElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  PosetPtr poset_;
  Field field_;
  std::map<Chain, Scalar> terms_;
};

/// Insertion differential on chains: y below x_0 with sign +1, y in gap m
/// with sign (-1)^m, y above x_n with sign (-1)^(n+1).
ChainElement zapatrin_d(const ChainElement& c);

/// Endpoint-matching concatenation: (x_0..x_n)(y_0..y_m) is
/// (x_0..x_n, y_1..y_m) if x_n = y_0, else 0.
ChainElement chain_product(const ChainElement& u, const ChainElement& v);

/// Strictly increasing chains by degree, in the order of the matching
/// simplices of order_complex(k).
std::vector<std::vector<Chain>> chain_basis(const Poset& k);

/// Matrices of d from degree n to n+1 in the chain_basis bases.
std::vector<IntMatrix> zapatrin_matrices(const Poset& k);

/// Cohomology dimensions of the Zapatrin complex.
std::vector<std::size_t> zapatrin_cohomology(const Poset& k, Field field);

struct PropertyVerdict {
  bool holds = true;
  std::string counterexample;
};

/// d(d(c)) = 0 on every basis chain.
PropertyVerdict check_dd_zero(const PosetPtr& k, Field field);
/// d(uv) = d(u)v + (-1)^deg(u) u d(v) on every pair of basis chains.
PropertyVerdict check_leibniz(const PosetPtr& k, Field field);
/// zapatrin_matrices agree with the coboundary of the order complex.
bool matches_order_complex_coboundary(const Poset& k);

struct Digraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Digraph hasse_digraph(const Poset& k);

/// Path algebra of a finite acyclic digraph: basis of all directed paths
/// (including one trivial path per node) under concatenation.
class PathAlgebra {
 public:
  using Path = std::vector<std::size_t>;  // node sequence

  /// Throws Error(cyclic_digraph) for a digraph with a cycle.
  explicit PathAlgebra(Digraph g);

  const Digraph& digraph() const { return graph_; }
  std::size_t dimension() const { return paths_.size(); }
  const std::vector<Path>& basis() const { return paths_; }
  /// Index of a . b (a followed by b), or nullopt when they do not compose.
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> index_of(const Path& p) const;

 private:
  Digraph graph_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

/// Linear map from the path algebra of the Hasse diagram onto the incidence
/// algebra, sending a path to the interval between its endpoints.
struct HasseEpimorphism {
  PathAlgebra source;
  std::vector<IncidenceElement::Interval> target_basis;  // all p <= q
  std::vector<std::size_t> image;                        // path -> interval index

  bool is_surjective() const;
  /// Image of every composable product equals the product of the images.
  bool is_multiplicative(const PosetPtr& k) const;
};

HasseEpimorphism hasse_epimorphism(const Poset& k);

}  // namespace nervus
