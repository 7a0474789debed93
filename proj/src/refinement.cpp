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

#include "nervus/refinement.hpp"

#include <algorithm>
#include <set>

#include "nervus/error.hpp"

namespace nervus {

namespace {

void check_carrier(const CarrierFunction& f, const ChuSpace& p, const ChuSpace& q) {
  if (f.size() != p.num_objects()) {
    throw Error(Errc::malformed_input, "carrier function is not total on P_o");
  }
  for (auto y : f) {
    if (y >= q.num_objects()) throw Error(Errc::unknown_label, "carrier image out of range");
  }
}

// {x in P_o | f(x) |=_Q q}
Bits pulled_back_extent(const CarrierFunction& f, const ChuSpace& p, const ChuSpace& q,
                        std::size_t attr) {
  Bits out(p.num_objects());
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    if (q.satisfies(f[x], attr)) out.set(x);
  }
  return out;
}

}  // namespace

bool RefinementRelation::related(std::size_t p, std::size_t q) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(p, q));
}

bool RefinementRelation::related(const std::vector<std::size_t>& x,
                                 const std::vector<std::size_t>& y) const {
  return std::all_of(x.begin(), x.end(), [&](std::size_t p) {
    return std::any_of(y.begin(), y.end(), [&](std::size_t q) { return related(p, q); });
  });
}

RefinementRelation check_refinement_relation(
    std::vector<std::pair<std::size_t, std::size_t>> pairs, CarrierFunction f,
    const ChuSpace& p, const ChuSpace& q) {
  check_carrier(f, p, q);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [a, b] : pairs) {
    if (a >= p.num_attributes() || b >= q.num_attributes()) {
      throw Error(Errc::unknown_label, "relation pair out of range");
    }
  }
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    for (const auto& [a, b] : pairs) {
      if (p.satisfies(x, a) && !q.satisfies(f[x], b)) {
        throw Error(Errc::not_sound, "refinement fails at (" + p.objects()[x] + ", " +
                                         p.attributes()[a] + ", " +
                                         q.attributes()[b] + ")");
      }
    }
  }
  return RefinementRelation{std::move(f), std::move(pairs), p.num_attributes(),
                            q.num_attributes()};
}

RefinementRelation maximal_refinement_relation(CarrierFunction f, const ChuSpace& p,
                                               const ChuSpace& q) {
  check_carrier(f, p, q);
  std::vector<Bits> pulled;
  pulled.reserve(q.num_attributes());
  for (std::size_t b = 0; b < q.num_attributes(); ++b) {
    pulled.push_back(pulled_back_extent(f, p, q, b));
  }
  RefinementRelation rel{std::move(f), {}, p.num_attributes(), q.num_attributes()};
  for (std::size_t a = 0; a < p.num_attributes(); ++a) {
    for (std::size_t b = 0; b < q.num_attributes(); ++b) {
      if (p.extent(a).is_subset_of(pulled[b])) rel.pairs.emplace_back(a, b);
    }
  }
  return rel;
}

RefinementMap check_refinement_map(RefinementMap rho, const CarrierFunction& f,
                                   const ChuSpace& p, const ChuSpace& q) {
  check_carrier(f, p, q);
  if (rho.size() != p.num_attributes()) {
    throw Error(Errc::malformed_input, "refinement map is not total on P_a");
  }
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (rho[a] >= q.num_attributes()) {
      throw Error(Errc::unknown_label, "refinement map image out of range");
    }
    const Bits pulled = pulled_back_extent(f, p, q, rho[a]);
    if (!p.extent(a).is_subset_of(pulled)) {
      throw Error(Errc::not_sound, "refinement map fails at attribute '" +
                                       p.attributes()[a] + "'");
    }
  }
  return rho;
}

RefinementRelation transform_relation(const ChuTransform& t) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t q = 0; q < t.target().num_attributes(); ++q) {
    pairs.emplace_back(t.attribute_map()[q], q);
  }
  return check_refinement_relation(std::move(pairs), t.object_map(), t.source(),
                                   t.target());
}

CarrierFunction identity_carrier(const ChuSpace& fine, const ChuSpace& coarse) {
  if (fine.num_objects() != coarse.num_objects()) {
    throw Error(Errc::not_refinement, "contexts have different object sets");
  }
  CarrierFunction f(fine.num_objects());
  for (std::size_t x = 0; x < fine.num_objects(); ++x) {
    try {
      f[x] = coarse.object_index(fine.objects()[x]);
    } catch (const Error&) {
      throw Error(Errc::not_refinement, "object '" + fine.objects()[x] +
                                            "' is missing from the coarse context");
    }
  }
  return f;
}

SorkinRefinement sorkin_refinement_map(const ChuSpace& fine, const ChuSpace& coarse,
                                       const RefinementRelation& witness) {
  const CarrierFunction id = identity_carrier(fine, coarse);
  if (witness.carrier != id) {
    throw Error(Errc::not_refinement, "witness is not over the identity carrier");
  }
  check_refinement_relation(witness.pairs, id, fine, coarse);
  for (std::size_t a = 0; a < fine.num_attributes(); ++a) {
    if (fine.extent(a).none()) continue;
    auto it = std::lower_bound(witness.pairs.begin(), witness.pairs.end(),
                               std::make_pair(a, std::size_t{0}));
    if (it == witness.pairs.end() || it->first != a) {
      throw Error(Errc::not_refinement, "fine attribute '" + fine.attributes()[a] +
                                            "' lies in no coarse attribute");
    }
  }

  SorkinRefinement out{sorkin_quotient(fine), sorkin_quotient(coarse), {}};
  out.class_map.assign(out.fine.poset.size(), SIZE_MAX);
  for (std::size_t x = 0; x < fine.num_objects(); ++x) {
    const auto c = out.fine.class_of[x];
    const auto d = out.coarse.class_of[id[x]];
    if (out.class_map[c] == SIZE_MAX) {
      out.class_map[c] = d;
    } else if (out.class_map[c] != d) {
      throw Error(Errc::not_refinement,
                  "fine class " + out.fine.poset.label(c) + " splits in the coarse quotient");
    }
  }
  if (!is_monotone(out.class_map, out.fine.poset, out.coarse.poset)) {
    throw Error(Errc::not_refinement, "class map is not monotone");
  }
  return out;
}

}  // namespace nervus
