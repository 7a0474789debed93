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

#include "nervus/context.hpp"

#include <algorithm>
#include <set>

#include "nervus/error.hpp"

namespace nervus {

namespace {

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                const char* what) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!out.emplace(labels[i], i).second) {
      throw Error(Errc::malformed_input,
                  std::string("duplicate ") + what + " label '" + labels[i] + "'");
    }
  }
  return out;
}

}  // namespace

ChuSpace::ChuSpace(std::vector<std::string> objects,
                   std::vector<std::string> attributes, std::vector<Bits> rows)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(rows)) {
  object_index_ = index_labels(objects_, "object");
  attribute_index_ = index_labels(attributes_, "attribute");
  if (rows_.size() != objects_.size()) {
    throw Error(Errc::malformed_input, "relation has wrong number of rows");
  }
  extents_.assign(attributes_.size(), Bits(objects_.size()));
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (rows_[x].size() != attributes_.size()) {
      throw Error(Errc::malformed_input, "relation row has wrong width");
    }
    for (auto a = rows_[x].find_first(); a != Bits::npos; a = rows_[x].find_next(a)) {
      extents_[a].set(x);
    }
  }
}

ChuSpace ChuSpace::from_pairs(
    std::vector<std::string> objects, std::vector<std::string> attributes,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  const auto oi = index_labels(objects, "object");
  const auto ai = index_labels(attributes, "attribute");
  std::vector<Bits> rows(objects.size(), Bits(attributes.size()));
  for (const auto& [o, a] : pairs) {
    auto x = oi.find(o);
    if (x == oi.end()) throw Error(Errc::unknown_label, "unknown object '" + o + "'");
    auto y = ai.find(a);
    if (y == ai.end()) throw Error(Errc::unknown_label, "unknown attribute '" + a + "'");
    rows[x->second].set(y->second);
  }
  return ChuSpace(std::move(objects), std::move(attributes), std::move(rows));
}

std::size_t ChuSpace::object_index(const std::string& label) const {
  auto it = object_index_.find(label);
  if (it == object_index_.end()) {
    throw Error(Errc::unknown_label, "unknown object '" + label + "'");
  }
  return it->second;
}

std::size_t ChuSpace::attribute_index(const std::string& label) const {
  auto it = attribute_index_.find(label);
  if (it == attribute_index_.end()) {
    throw Error(Errc::unknown_label, "unknown attribute '" + label + "'");
  }
  return it->second;
}

ChuSpace dual(const ChuSpace& p) {
  std::vector<Bits> rows;
  rows.reserve(p.num_attributes());
  for (std::size_t a = 0; a < p.num_attributes(); ++a) rows.push_back(p.extent(a));
  return ChuSpace(p.attributes(), p.objects(), std::move(rows));
}

ChuSpace corestrict(const ChuSpace& p, const std::vector<std::size_t>& sample) {
  std::vector<std::string> attrs;
  for (auto a : sample) {
    if (a >= p.num_attributes()) {
      throw Error(Errc::unknown_label, "sampled attribute out of range");
    }
    attrs.push_back(p.attributes()[a]);
  }
  std::vector<Bits> rows(p.num_objects(), Bits(sample.size()));
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      if (p.satisfies(x, sample[j])) rows[x].set(j);
    }
  }
  return ChuSpace(p.objects(), std::move(attrs), std::move(rows));
}

ChuSpace corestrict(const ChuSpace& p, const std::vector<std::string>& sample) {
  std::vector<std::size_t> idx;
  idx.reserve(sample.size());
  for (const auto& s : sample) idx.push_back(p.attribute_index(s));
  return corestrict(p, idx);
}

SimplicialComplex cech_nerve(const ChuSpace& p) {
  // Vertices are the attributes with nonempty extent, in declared order; the
  // maximal candidate simplices are the object rows.
  std::vector<std::string> names;
  std::vector<std::uint32_t> rank(p.num_attributes(), UINT32_MAX);
  for (std::size_t a = 0; a < p.num_attributes(); ++a) {
    if (p.extent(a).any()) {
      rank[a] = static_cast<std::uint32_t>(names.size());
      names.push_back(p.attributes()[a]);
    }
  }
  std::set<Bits> distinct_rows;
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    if (p.row(x).any()) distinct_rows.insert(p.row(x));
  }
  std::vector<Simplex> faces;
  faces.reserve(distinct_rows.size());
  for (const auto& row : distinct_rows) {
    Simplex s;
    for (auto a = row.find_first(); a != Bits::npos; a = row.find_next(a)) {
      s.push_back(rank[a]);
    }
    faces.push_back(std::move(s));
  }
  return SimplicialComplex::from_faces(std::move(names), std::move(faces));
}

SimplicialComplex vietoris_nerve(const ChuSpace& p) { return cech_nerve(dual(p)); }

ChuSpace cover_to_context(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& cover) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> names;
  std::set<std::string> known(points.begin(), points.end());
  for (const auto& [name, members] : cover) {
    names.push_back(name);
    for (const auto& m : members) {
      if (!known.count(m)) {
        throw Error(Errc::unknown_label,
                    "cover member '" + name + "' references unknown point '" + m + "'");
      }
      pairs.emplace_back(m, name);
    }
  }
  return ChuSpace::from_pairs(points, std::move(names), pairs);
}

ChuTransform validate_transform(std::vector<std::size_t> f_o,
                                std::vector<std::size_t> f_a, ChuPtr p, ChuPtr q) {
  if (f_o.size() != p->num_objects() || f_a.size() != q->num_attributes()) {
    throw Error(Errc::malformed_input, "transform maps are not total");
  }
  for (auto y : f_o) {
    if (y >= q->num_objects()) throw Error(Errc::unknown_label, "object image out of range");
  }
  for (auto a : f_a) {
    if (a >= p->num_attributes()) {
      throw Error(Errc::unknown_label, "attribute image out of range");
    }
  }
  for (std::size_t x = 0; x < p->num_objects(); ++x) {
    for (std::size_t y = 0; y < q->num_attributes(); ++y) {
      if (q->satisfies(f_o[x], y) != p->satisfies(x, f_a[y])) {
        throw Error(Errc::not_adjoint,
                    "adjointness fails at (" + p->objects()[x] + ", " +
                        q->attributes()[y] + ")");
      }
    }
  }
  return ChuTransform(std::move(p), std::move(q), std::move(f_o), std::move(f_a));
}

std::vector<std::size_t> attribute_image(const ChuTransform& f,
                                         const std::vector<std::size_t>& sample) {
  std::set<std::size_t> img;
  for (auto y : sample) {
    if (y >= f.target().num_attributes()) {
      throw Error(Errc::unknown_label, "sampled attribute out of range");
    }
    img.insert(f.attribute_map()[y]);
  }
  return {img.begin(), img.end()};
}

SimplicialMap induced_vietoris_map(const ChuTransform& f,
                                   const std::vector<std::size_t>& sample) {
  auto src = share(vietoris_nerve(corestrict(f.source(), attribute_image(f, sample))));
  auto dst = share(vietoris_nerve(corestrict(f.target(), sample)));
  std::vector<std::uint32_t> vmap(src->num_vertices());
  for (std::uint32_t v = 0; v < src->num_vertices(); ++v) {
    const auto x = f.source().object_index(src->vertex_name(v));
    const auto& image = f.target().objects()[f.object_map()[x]];
    auto r = dst->vertex_rank(image);
    if (!r) {
      throw Error(Errc::internal, "Vietoris map: object '" + image +
                                      "' is not a vertex of the target nerve");
    }
    vmap[v] = *r;
  }
  try {
    return check_simplicial_map(std::move(vmap), src, dst);
  } catch (const Error& e) {
    throw Error(Errc::internal, std::string("induced Vietoris map: ") + e.what());
  }
}

SimplicialMap induced_cech_map(const ChuTransform& f,
                               const std::vector<std::size_t>& sample,
                               const Splitting& rho) {
  const auto image = attribute_image(f, sample);
  const std::set<std::size_t> sampled(sample.begin(), sample.end());
  if (rho.size() != image.size()) {
    throw Error(Errc::not_splitting, "splitting domain differs from f_a(sample)");
  }
  for (auto p : image) {
    auto it = rho.find(p);
    if (it == rho.end()) {
      throw Error(Errc::not_splitting,
                  "splitting undefined at '" + f.source().attributes()[p] + "'");
    }
    if (!sampled.count(it->second) || f.attribute_map()[it->second] != p) {
      throw Error(Errc::not_splitting,
                  "f_a(rho(" + f.source().attributes()[p] + ")) differs from it");
    }
  }
  auto src = share(cech_nerve(corestrict(f.source(), image)));
  auto dst = share(cech_nerve(corestrict(f.target(), sample)));
  std::vector<std::uint32_t> vmap(src->num_vertices());
  for (std::uint32_t v = 0; v < src->num_vertices(); ++v) {
    const auto p = f.source().attribute_index(src->vertex_name(v));
    const auto& label = f.target().attributes()[rho.at(p)];
    auto r = dst->vertex_rank(label);
    if (!r) {
      throw Error(Errc::internal, "Cech map: attribute '" + label +
                                      "' is not a vertex of the target nerve");
    }
    vmap[v] = *r;
  }
  try {
    return check_simplicial_map(std::move(vmap), src, dst);
  } catch (const Error& e) {
    throw Error(Errc::internal, std::string("induced Cech map: ") + e.what());
  }
}

std::vector<Splitting> enumerate_splittings(const ChuTransform& f,
                                            const std::vector<std::size_t>& sample,
                                            std::size_t cap) {
  const auto image = attribute_image(f, sample);
  std::vector<std::vector<std::size_t>> fibers(image.size());
  const std::set<std::size_t> sampled(sample.begin(), sample.end());
  for (auto q : sampled) {
    const auto p = f.attribute_map()[q];
    auto pos = std::lower_bound(image.begin(), image.end(), p) - image.begin();
    fibers[pos].push_back(q);
  }
  std::size_t total = 1;
  for (const auto& fiber : fibers) {
    if (total > cap / fiber.size()) {
      throw Error(Errc::enumeration_limit,
                  "more than " + std::to_string(cap) + " splittings");
    }
    total *= fiber.size();
  }
  std::vector<Splitting> out;
  out.reserve(total);
  std::vector<std::size_t> choice(fibers.size(), 0);
  while (true) {
    Splitting s;
    for (std::size_t i = 0; i < fibers.size(); ++i) s.emplace(image[i], fibers[i][choice[i]]);
    out.push_back(std::move(s));
    std::size_t i = 0;
    for (; i < fibers.size(); ++i) {
      if (++choice[i] < fibers[i].size()) break;
      choice[i] = 0;
    }
    if (i == fibers.size()) break;
  }
  return out;
}

}  // namespace nervus
