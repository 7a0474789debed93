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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nervus/complex.hpp"
#include "nervus/context.hpp"
#include "nervus/fractafold.hpp"
#include "nervus/geometry.hpp"
#include "nervus/homology.hpp"
#include "nervus/incidence.hpp"
#include "nervus/poset.hpp"
#include "nervus/refinement.hpp"

// Text formats. Every JSON writer emits sorted keys and a trailing newline;
// readers throw Error(malformed_input) on syntax or shape errors.
namespace nervus::io {

// {"maximal":[[names...],...],"vertices":[names...]}
SimplicialComplex parse_complex(std::string_view json,
                                VertexOrder order = VertexOrder::lexicographic);
std::string complex_json(const SimplicialComplex& k);

// {"betti":[...],"field":"Q"|"GF2"}
std::string betti_json(Field field, const std::vector<std::size_t>& betti);

// {"attributes":[...],"objects":[...],"pairs":[[object,attribute],...]}
ChuSpace parse_context(std::string_view json);
std::string context_json(const ChuSpace& p);

// {"elements":[...],"le":[[a,b],...]}; the writer lists every strict pair.
Poset parse_poset(std::string_view json);
std::string poset_json(const Poset& k);

// {"carrier":[[p_object,q_object],...],"pairs":[[p_attribute,q_attribute],...]}
struct RefinementInput {
  CarrierFunction carrier;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
RefinementInput parse_refinement(std::string_view json, const ChuSpace& p,
                                 const ChuSpace& q);
std::string refinement_json(const RefinementRelation& r, const ChuSpace& p,
                            const ChuSpace& q);

// [{"chain":[elements...],"coeff":"num/den"},...]
ChainElement parse_chain_element(std::string_view json, const PosetPtr& k, Field field);
std::string chain_element_json(const ChainElement& c);
// [{"coeff":"num/den","interval":[p,q]},...]
IncidenceElement parse_incidence_element(std::string_view json, const PosetPtr& k,
                                         Field field);
std::string incidence_element_json(const IncidenceElement& u);

// Matrices of a poset's Zapatrin complex with its verdicts.
std::string zapatrin_report_json(const PosetPtr& k, Field field);

// {"pairs":[[source_vertex,target_vertex],...]}
std::string vertex_map_json(const SimplicialMap& f);
std::string tower_homology_json(const Tower& t, const TowerHomology& h);
// level-<j>.complex.json and bond-<j>.map.json (bond j maps level j to j-1).
void write_tower(const Tower& t, const std::string& directory);

// One point per line, comma separated decimals.
PointCloud parse_cloud_csv(std::string_view csv);
std::string cloud_csv(const PointCloud& s);

}  // namespace nervus::io
