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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"
#include "nervus/context.hpp"

namespace nervus {

/// Finite partial order. The full relation is stored as bit rows; the Hasse
/// diagram is always derived from it.
class Poset {
 public:
  Poset() = default;

  /// `le` pairs (a, b) mean a <= b; reflexive pairs are optional and the
  /// transitive closure is taken. Throws Error(not_a_poset) on a cycle.
  static Poset from_relation(std::vector<std::string> elements,
                             const std::vector<std::pair<std::size_t, std::size_t>>& le);
  static Poset from_labels(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& le);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index(const std::string& label) const;

  bool le(std::size_t a, std::size_t b) const { return up_[a][b]; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && up_[a][b]; }
  /// Elements >= a (including a).
  const Bits& up(std::size_t a) const { return up_[a]; }
  /// Elements <= a (including a).
  const Bits& down(std::size_t a) const { return down_[a]; }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return covers_[a]; }

  /// All strict pairs a < b, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  /// Deterministic linear extension (smallest available index first).
  std::vector<std::size_t> linear_extension() const;

  /// Same elements with the order reversed.
  Poset reversed() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  void derive();

  std::vector<std::string> labels_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::vector<std::vector<std::size_t>> covers_;
  std::map<std::string, std::size_t> index_;
};

/// Specialization poset of a context: objects with identical attribute rows
/// are identified, and [x] <= [x'] iff every attribute true at x' is true at x.
struct SorkinQuotient {
  Poset poset;
  std::vector<std::size_t> class_of;               // object -> class
  std::vector<std::vector<std::size_t>> members;   // class -> objects
  std::vector<Bits> attributes;                    // class -> attribute row
};

SorkinQuotient sorkin_quotient(const ChuSpace& p);

/// Classes below the given one: the smallest open set containing it.
std::vector<std::size_t> minimal_open_set(const SorkinQuotient& q, std::size_t cls);
std::vector<std::size_t> minimal_open_set(const SorkinQuotient& q, const std::string& cls);

/// Simplices are the strictly increasing chains. Vertices are ranked by the
/// poset's linear extension, so a chain's order is its vertex order.
SimplicialComplex order_complex(const Poset& k);

/// Nonempty simplices ordered by inclusion (faces below cofaces).
Poset face_poset(const SimplicialComplex& k);

SimplicialComplex barycentric(const SimplicialComplex& k);

/// True iff a <= b implies map[a] <= map[b].
bool is_monotone(const std::vector<std::size_t>& map, const Poset& from, const Poset& to);

/// Simplicial map of order complexes induced by a monotone map.
SimplicialMap order_complex_map(const std::vector<std::size_t>& map,
                                const Poset& from, const Poset& to,
                                ComplexPtr from_complex, ComplexPtr to_complex);

/// Hasse diagram in DOT: one node per element, one edge per cover (lower to
/// upper).
std::string to_dot(const Poset& k, const std::string& name = "hasse");

}  // namespace nervus
