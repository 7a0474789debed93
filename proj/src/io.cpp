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

#include "nervus/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>

#include "nervus/error.hpp"

namespace nervus::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::malformed_input, std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

[[noreturn]] void shape_error(const std::string& what) {
  throw Error(Errc::malformed_input, what);
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) shape_error("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) shape_error(std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) shape_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) shape_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

std::vector<std::pair<std::string, std::string>> label_pairs(const json& j,
                                                             const char* what) {
  if (!j.is_array()) shape_error(std::string(what) + " must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      shape_error(std::string(what) + " entries must be 2-element arrays");
    }
    out.emplace_back(as_string(e[0], what), as_string(e[1], what));
  }
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index,
                   const std::string& label, const char* what) {
  auto it = index.find(label);
  if (it == index.end()) {
    throw Error(Errc::unknown_label, std::string("unknown ") + what + " '" + label + "'");
  }
  return it->second;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  return index;
}

json names(const SimplicialComplex& k, const Simplex& s) {
  json out = json::array();
  for (auto v : s) out.push_back(k.vertex_name(v));
  return out;
}

json int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json scalar_matrix(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json chain_labels(const Poset& k, const Chain& c) {
  json out = json::array();
  for (auto x : c) out.push_back(k.label(x));
  return out;
}

json verdict(const PropertyVerdict& v) {
  return {{"holds", v.holds}, {"counterexample", v.counterexample}};
}

std::string read_number(std::string_view cell, double& out) {
  while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
  while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) {
    cell.remove_suffix(1);
  }
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::string(cell);
  return {};
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text, VertexOrder order) {
  const json j = parse_json(text);
  const auto vertices = string_list(member(j, "vertices"), "vertices");
  const auto& maximal = member(j, "maximal");
  if (!maximal.is_array()) shape_error("maximal must be an array");
  std::vector<std::vector<std::string>> simplices;
  for (const auto& s : maximal) simplices.push_back(string_list(s, "simplex"));
  return SimplicialComplex::from_maximal(vertices, simplices, order);
}

std::string complex_json(const SimplicialComplex& k) {
  json maximal = json::array();
  for (const auto& s : k.maximal_simplices()) maximal.push_back(names(k, s));
  return dump({{"vertices", k.vertex_names()}, {"maximal", maximal}});
}

std::string betti_json(Field field, const std::vector<std::size_t>& betti) {
  return dump({{"field", field_name(field)}, {"betti", betti}});
}

ChuSpace parse_context(std::string_view text) {
  const json j = parse_json(text);
  return ChuSpace::from_pairs(string_list(member(j, "objects"), "objects"),
                              string_list(member(j, "attributes"), "attributes"),
                              label_pairs(member(j, "pairs"), "pairs"));
}

std::string context_json(const ChuSpace& p) {
  json pairs = json::array();
  for (std::size_t x = 0; x < p.num_objects(); ++x) {
    for (std::size_t a = 0; a < p.num_attributes(); ++a) {
      if (p.satisfies(x, a)) pairs.push_back({p.objects()[x], p.attributes()[a]});
    }
  }
  return dump({{"objects", p.objects()}, {"attributes", p.attributes()}, {"pairs", pairs}});
}

Poset parse_poset(std::string_view text) {
  const json j = parse_json(text);
  return Poset::from_labels(string_list(member(j, "elements"), "elements"),
                            label_pairs(member(j, "le"), "le"));
}

std::string poset_json(const Poset& k) {
  json le = json::array();
  for (const auto& [a, b] : k.strict_pairs()) le.push_back({k.label(a), k.label(b)});
  return dump({{"elements", k.labels()}, {"le", le}});
}

RefinementInput parse_refinement(std::string_view text, const ChuSpace& p,
                                 const ChuSpace& q) {
  const json j = parse_json(text);
  const auto p_obj = index_of(p.objects()), q_obj = index_of(q.objects());
  const auto p_att = index_of(p.attributes()), q_att = index_of(q.attributes());
  RefinementInput in;
  const std::size_t unset = p.num_objects() + q.num_objects() + 1;
  in.carrier.assign(p.num_objects(), unset);
  for (const auto& [x, y] : label_pairs(member(j, "carrier"), "carrier")) {
    const auto i = lookup(p_obj, x, "source object");
    if (in.carrier[i] != unset) shape_error("carrier assigns object '" + x + "' twice");
    in.carrier[i] = lookup(q_obj, y, "target object");
  }
  for (std::size_t i = 0; i < in.carrier.size(); ++i) {
    if (in.carrier[i] == unset) {
      shape_error("carrier is not defined on object '" + p.objects()[i] + "'");
    }
  }
  for (const auto& [a, b] : label_pairs(member(j, "pairs"), "pairs")) {
    in.pairs.emplace_back(lookup(p_att, a, "source attribute"),
                          lookup(q_att, b, "target attribute"));
  }
  return in;
}

std::string refinement_json(const RefinementRelation& r, const ChuSpace& p,
                            const ChuSpace& q) {
  json carrier = json::array(), pairs = json::array();
  for (std::size_t x = 0; x < r.carrier.size(); ++x) {
    carrier.push_back({p.objects()[x], q.objects()[r.carrier[x]]});
  }
  for (const auto& [a, b] : r.pairs) pairs.push_back({p.attributes()[a], q.attributes()[b]});
  return dump({{"carrier", carrier}, {"pairs", pairs}});
}

ChainElement parse_chain_element(std::string_view text, const PosetPtr& k, Field field) {
  const json j = parse_json(text);
  if (!j.is_array()) shape_error("chain element must be an array of terms");
  ChainElement out(k, field);
  for (const auto& term : j) {
    Chain c;
    for (const auto& label : string_list(member(term, "chain"), "chain")) {
      c.push_back(k->index(label));
    }
    out += ChainElement::basis(k, std::move(c), field) *
           Scalar::parse(field, as_string(member(term, "coeff"), "coeff"));
  }
  return out;
}

std::string chain_element_json(const ChainElement& c) {
  json terms = json::array();
  for (const auto& [chain, coeff] : c.terms()) {
    terms.push_back({{"chain", chain_labels(c.poset(), chain)}, {"coeff", coeff.str()}});
  }
  return dump(terms);
}

IncidenceElement parse_incidence_element(std::string_view text, const PosetPtr& k,
                                         Field field) {
  const json j = parse_json(text);
  if (!j.is_array()) shape_error("incidence element must be an array of terms");
  IncidenceElement out(k, field);
  for (const auto& term : j) {
    const auto interval = string_list(member(term, "interval"), "interval");
    if (interval.size() != 2) shape_error("interval must have two elements");
    const auto p = k->index(interval[0]), q = k->index(interval[1]);
    if (!k->le(p, q)) {
      throw Error(Errc::invalid_argument,
                  "'" + interval[0] + "' <= '" + interval[1] + "' is not an interval");
    }
    out.add_term({p, q}, Scalar::parse(field, as_string(member(term, "coeff"), "coeff")));
  }
  return out;
}

std::string incidence_element_json(const IncidenceElement& u) {
  json terms = json::array();
  for (const auto& [iv, coeff] : u.terms()) {
    terms.push_back({{"coeff", coeff.str()},
                     {"interval", {u.poset().label(iv.first), u.poset().label(iv.second)}}});
  }
  return dump(terms);
}

std::string zapatrin_report_json(const PosetPtr& k, Field field) {
  const auto basis = chain_basis(*k);
  json chains = json::array();
  for (const auto& degree : basis) {
    json list = json::array();
    for (const auto& c : degree) list.push_back(chain_labels(*k, c));
    chains.push_back(std::move(list));
  }
  json matrices = json::array();
  for (const auto& m : zapatrin_matrices(*k)) matrices.push_back(int_matrix(m));
  return dump({
      {"field", field_name(field)},
      {"size", k->size()},
      {"chains", chains},
      {"d", matrices},
      {"cohomology", zapatrin_cohomology(*k, field)},
      {"order_complex_betti", betti_numbers(order_complex(*k), field)},
      {"dd_zero", verdict(check_dd_zero(k, field))},
      {"leibniz", verdict(check_leibniz(k, field))},
      {"matches_coboundary", matches_order_complex_coboundary(*k)},
  });
}

std::string vertex_map_json(const SimplicialMap& f) {
  json pairs = json::array();
  for (std::uint32_t v = 0; v < f.vertex_map().size(); ++v) {
    pairs.push_back({f.source().vertex_name(v), f.target().vertex_name(f(v))});
  }
  return dump({{"pairs", pairs}});
}

std::string tower_homology_json(const Tower& t, const TowerHomology& h) {
  json levels = json::array(), bonds = json::array();
  for (std::size_t j = 0; j < t.levels.size(); ++j) {
    const auto& k = *t.levels[j];
    json counts = json::array();
    for (int d = 0; d <= k.dimension(); ++d) counts.push_back(k.count(d));
    levels.push_back({{"level", t.first_level + static_cast<int>(j)},
                      {"betti", h.betti[j]},
                      {"simplices", counts},
                      {"euler_characteristic", k.euler_characteristic()}});
  }
  for (std::size_t j = 0; j < t.bonds.size(); ++j) {
    json per_degree = json::array();
    for (const auto& m : h.bond_matrices[j]) per_degree.push_back(scalar_matrix(m));
    const int source = t.first_level + static_cast<int>(j) + 1;
    bonds.push_back({{"source", source}, {"target", source - 1}, {"homology", per_degree}});
  }
  return dump({{"field", field_name(h.field)}, {"levels", levels}, {"bonds", bonds}});
}

void write_tower(const Tower& t, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(Errc::invalid_argument, "cannot create '" + directory + "': " + ec.message());
  auto write = [&](const std::string& name, const std::string& text) {
    const fs::path path = fs::path(directory) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error(Errc::invalid_argument, "cannot write '" + path.string() + "'");
  };
  for (std::size_t j = 0; j < t.levels.size(); ++j) {
    const int level = t.first_level + static_cast<int>(j);
    write("level-" + std::to_string(level) + ".complex.json", complex_json(*t.levels[j]));
    if (j > 0) write("bond-" + std::to_string(level) + ".map.json", vertex_map_json(t.bonds[j - 1]));
  }
}

PointCloud parse_cloud_csv(std::string_view csv) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      double v = 0;
      const auto bad = read_number(line.substr(0, comma), v);
      if (!bad.empty() || line.substr(0, comma).find_first_not_of(" \t\r") == std::string_view::npos) {
        shape_error("line " + std::to_string(line_no) + ": '" + bad + "' is not a number");
      }
      row.push_back(v);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      shape_error("line " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                  " columns, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return PointCloud::from_rows(rows);
}

std::string cloud_csv(const PointCloud& s) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto p = s.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out += ',';
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p[c]);
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

}  // namespace nervus::io
