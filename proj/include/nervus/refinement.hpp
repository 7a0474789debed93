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
#include <utility>
#include <vector>

#include "nervus/context.hpp"
#include "nervus/poset.hpp"

namespace nervus {

/// Object map P_o -> Q_o against which refinements are judged.
using CarrierFunction = std::vector<std::size_t>;

/// Relation p ->_f q between P- and Q-attributes, sound for its carrier:
/// x |=_P p and p ->_f q imply f(x) |=_Q q.
struct RefinementRelation {
  CarrierFunction carrier;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted, unique
  std::size_t source_attributes = 0;
  std::size_t target_attributes = 0;

  bool related(std::size_t p, std::size_t q) const;
  /// X ->_f Y on finite attribute sets: every p in X relates to some q in Y.
  /// Evaluated per query.
  bool related(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) const;
};

/// Throws Error(not_sound) naming the first violating (x, p, q).
RefinementRelation check_refinement_relation(
    std::vector<std::pair<std::size_t, std::size_t>> pairs, CarrierFunction f,
    const ChuSpace& p, const ChuSpace& q);

/// p ->_f q iff {x | x |= p} is contained in {x | f(x) |= q}.
RefinementRelation maximal_refinement_relation(CarrierFunction f, const ChuSpace& p,
                                               const ChuSpace& q);

/// Total attribute map rho : P_a -> Q_a with p ->_f rho(p) for every p.
using RefinementMap = std::vector<std::size_t>;

/// Throws Error(not_sound) naming the first attribute p that fails.
RefinementMap check_refinement_map(RefinementMap rho, const CarrierFunction& f,
                                   const ChuSpace& p, const ChuSpace& q);

/// Graph {(f_a(q), q)} of a Chu transform, a refinement relation for f_o.
RefinementRelation transform_relation(const ChuTransform& t);

struct SorkinRefinement {
  SorkinQuotient fine;
  SorkinQuotient coarse;
  std::vector<std::size_t> class_map;  // fine class -> coarse class
};

/// Natural map of Sorkin quotients X_fine -> X_coarse for two contexts on the
/// same objects. `witness` relates fine to coarse attributes over the
/// identity carrier; it must be sound and give every supported fine
/// attribute at least one coarse attribute. The result is verified to be
/// well defined and monotone.
SorkinRefinement sorkin_refinement_map(const ChuSpace& fine, const ChuSpace& coarse,
                                       const RefinementRelation& witness);

/// Identity carrier from `fine` objects to the same-labelled `coarse` objects.
CarrierFunction identity_carrier(const ChuSpace& fine, const ChuSpace& coarse);

}  // namespace nervus
