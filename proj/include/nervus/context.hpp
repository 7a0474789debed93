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

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"

namespace nervus {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Finite dyadic Chu space (formal context): objects, attributes and the
/// satisfaction relation between them.
class ChuSpace {
 public:
  ChuSpace() = default;

  /// `rows[x]` holds the attributes satisfied by object x.
  ChuSpace(std::vector<std::string> objects, std::vector<std::string> attributes,
           std::vector<Bits> rows);

  /// Relation given as (object, attribute) label pairs.
  static ChuSpace from_pairs(
      std::vector<std::string> objects, std::vector<std::string> attributes,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_attributes() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool satisfies(std::size_t object, std::size_t attribute) const {
    return rows_[object][attribute];
  }
  const Bits& row(std::size_t object) const { return rows_[object]; }
  /// Objects satisfying the attribute.
  const Bits& extent(std::size_t attribute) const { return extents_[attribute]; }

  std::size_t object_index(const std::string& label) const;
  std::size_t attribute_index(const std::string& label) const;

  friend bool operator==(const ChuSpace& a, const ChuSpace& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<Bits> rows_;
  std::vector<Bits> extents_;
  std::map<std::string, std::size_t> object_index_;
  std::map<std::string, std::size_t> attribute_index_;
};

using ChuPtr = std::shared_ptr<const ChuSpace>;

inline ChuPtr share(ChuSpace p) { return std::make_shared<const ChuSpace>(std::move(p)); }

/// Objects and attributes swapped, relation transposed.
ChuSpace dual(const ChuSpace& p);

/// Keeps only the sampled attributes (given as indices, in that order).
ChuSpace corestrict(const ChuSpace& p, const std::vector<std::size_t>& sample);
ChuSpace corestrict(const ChuSpace& p, const std::vector<std::string>& sample);

/// Nerve on attributes: a set of attributes spans a simplex iff some object
/// satisfies all of them. Attributes with empty extent are not vertices.
SimplicialComplex cech_nerve(const ChuSpace& p);

/// Nerve on objects: a set of objects spans a simplex iff some attribute is
/// satisfied by all of them. Equals cech_nerve(dual(p)).
SimplicialComplex vietoris_nerve(const ChuSpace& p);

/// x satisfies U iff x is a member of U.
ChuSpace cover_to_context(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& cover);

/// Pair of maps f_o : P_o -> Q_o and f_a : Q_a -> P_a with
/// f_o(x) |=_Q y  iff  x |=_P f_a(y).
class ChuTransform {
 public:
  const ChuSpace& source() const { return *source_; }
  const ChuSpace& target() const { return *target_; }
  const ChuPtr& source_ptr() const { return source_; }
  const ChuPtr& target_ptr() const { return target_; }
  const std::vector<std::size_t>& object_map() const { return f_o_; }
  const std::vector<std::size_t>& attribute_map() const { return f_a_; }

 private:
  friend ChuTransform validate_transform(std::vector<std::size_t>,
                                         std::vector<std::size_t>, ChuPtr, ChuPtr);
  ChuTransform(ChuPtr p, ChuPtr q, std::vector<std::size_t> f_o,
               std::vector<std::size_t> f_a)
      : source_(std::move(p)), target_(std::move(q)), f_o_(std::move(f_o)),
        f_a_(std::move(f_a)) {}

  ChuPtr source_;
  ChuPtr target_;
  std::vector<std::size_t> f_o_;
  std::vector<std::size_t> f_a_;
};

/// Throws Error(not_adjoint) naming the first violating (x, y).
ChuTransform validate_transform(std::vector<std::size_t> f_o,
                                std::vector<std::size_t> f_a, ChuPtr p, ChuPtr q);

/// Choice, for each P-attribute p in f_a(sample), of a sampled Q-attribute
/// q with f_a(q) = p. Keys and values are attribute indices.
using Splitting = std::map<std::size_t, std::size_t>;

/// Distinct images f_a(sample), ascending.
std::vector<std::size_t> attribute_image(const ChuTransform& f,
                                         const std::vector<std::size_t>& sample);

/// Vietoris map V(P | f_a(sample)) -> V(Q | sample) given by f_o.
SimplicialMap induced_vietoris_map(const ChuTransform& f,
                                   const std::vector<std::size_t>& sample);

/// Cech map N(P | f_a(sample)) -> N(Q | sample) given by a splitting.
SimplicialMap induced_cech_map(const ChuTransform& f,
                               const std::vector<std::size_t>& sample,
                               const Splitting& rho);

inline constexpr std::size_t default_splitting_cap = 1024;

/// Every splitting of f_a over the sample; throws
/// Error(enumeration_limit) when their number exceeds `cap`.
std::vector<Splitting> enumerate_splittings(const ChuTransform& f,
                                            const std::vector<std::size_t>& sample,
                                            std::size_t cap = default_splitting_cap);

}  // namespace nervus
