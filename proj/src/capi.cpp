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

#include "nervus/nervus.h"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <string>

#include "nervus/error.hpp"
#include "nervus/fractafold.hpp"
#include "nervus/io.hpp"

struct nv_context {
  nervus::ChuSpace value;
};
struct nv_complex {
  nervus::SimplicialComplex value;
};
struct nv_poset {
  nervus::PosetPtr value;
};
struct nv_tower {
  nervus::Tower value;
};
struct nv_cloud {
  nervus::PointCloud value;
};

namespace {

thread_local std::string last_error;

nv_status fail(nv_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
nv_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return NV_OK;
  } catch (const nervus::Error& e) {
    return fail(static_cast<nv_status>(nervus::classify(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NV_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(NV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NV_ERR_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw nervus::Error(nervus::Errc::invalid_argument, std::string(what) + " is null");
}

nervus::Field field_of(nv_field f) {
  switch (f) {
    case NV_FIELD_Q:
      return nervus::Field::rational;
    case NV_FIELD_GF2:
      return nervus::Field::gf2;
  }
  throw nervus::Error(nervus::Errc::invalid_argument, "unknown field");
}

template <class Handle, class Value>
void emit(Handle** out, Value&& v) {
  require(out, "output pointer");
  *out = new Handle{std::forward<Value>(v)};
}

void emit_string(char** out, const std::string& s) {
  require(out, "output pointer");
  *out = copy_string(s);
}

}  // namespace

extern "C" {

const char* nv_version(void) { return "0.1.0"; }

const char* nv_last_error(void) { return last_error.c_str(); }

void nv_string_free(char* s) { std::free(s); }

nv_status nv_field_parse(const char* name, nv_field* out) {
  return guard([&] {
    require(name, "field name");
    require(out, "output pointer");
    *out = nervus::parse_field(name) == nervus::Field::gf2 ? NV_FIELD_GF2 : NV_FIELD_Q;
  });
}

nv_status nv_context_from_json(const char* json, nv_context** out) {
  return guard([&] {
    require(json, "context text");
    emit(out, nervus::io::parse_context(json));
  });
}

void nv_context_free(nv_context* p) { delete p; }

nv_status nv_context_to_json(const nv_context* p, char** out) {
  return guard([&] {
    require(p, "context");
    emit_string(out, nervus::io::context_json(p->value));
  });
}

nv_status nv_context_dual(const nv_context* p, nv_context** out) {
  return guard([&] {
    require(p, "context");
    emit(out, nervus::dual(p->value));
  });
}

nv_status nv_context_cech_nerve(const nv_context* p, nv_complex** out) {
  return guard([&] {
    require(p, "context");
    emit(out, nervus::cech_nerve(p->value));
  });
}

nv_status nv_context_vietoris_nerve(const nv_context* p, nv_complex** out) {
  return guard([&] {
    require(p, "context");
    emit(out, nervus::vietoris_nerve(p->value));
  });
}

nv_status nv_context_sorkin(const nv_context* p, nv_poset** out) {
  return guard([&] {
    require(p, "context");
    emit(out, nervus::share(nervus::sorkin_quotient(p->value).poset));
  });
}

nv_status nv_refinement_check(const nv_context* p, const nv_context* q,
                              const char* relation_json, char** report) {
  return guard([&] {
    require(p, "source context");
    require(q, "target context");
    require(relation_json, "relation text");
    require(report, "output pointer");
    auto in = nervus::io::parse_refinement(relation_json, p->value, q->value);
    const auto rel = nervus::check_refinement_relation(in.pairs, in.carrier, p->value, q->value);
    const auto max = nervus::maximal_refinement_relation(in.carrier, p->value, q->value);
    // A relation admits a refinement map when every source attribute is related.
    bool total = true;
    for (std::size_t a = 0; a < p->value.num_attributes(); ++a) {
      bool hit = false;
      for (std::size_t b = 0; b < q->value.num_attributes() && !hit; ++b) hit = rel.related(a, b);
      total = total && hit;
    }
    nlohmann::json j = {
        {"relation", nlohmann::json::parse(nervus::io::refinement_json(rel, p->value, q->value))},
        {"maximal", nlohmann::json::parse(nervus::io::refinement_json(max, p->value, q->value))},
        {"sound", true},
        {"total", total},
    };
    emit_string(report, j.dump() + "\n");
  });
}

nv_status nv_complex_from_json(const char* json, nv_complex** out) {
  return guard([&] {
    require(json, "complex text");
    emit(out, nervus::io::parse_complex(json));
  });
}

void nv_complex_free(nv_complex* k) { delete k; }

nv_status nv_complex_to_json(const nv_complex* k, char** out) {
  return guard([&] {
    require(k, "complex");
    emit_string(out, nervus::io::complex_json(k->value));
  });
}

int nv_complex_dimension(const nv_complex* k) { return k ? k->value.dimension() : -1; }

size_t nv_complex_count(const nv_complex* k, int dim) {
  if (k == nullptr || dim < 0 || dim > k->value.dimension()) return 0;
  return k->value.count(dim);
}

nv_status nv_complex_betti(const nv_complex* k, nv_field field, size_t* betti,
                           size_t capacity, size_t* length) {
  return guard([&] {
    require(k, "complex");
    require(length, "length pointer");
    const auto b = nervus::betti_numbers(k->value, field_of(field));
    if (capacity > 0) require(betti, "Betti buffer");
    for (std::size_t i = 0; i < b.size() && i < capacity; ++i) betti[i] = b[i];
    *length = b.size();
  });
}

nv_status nv_complex_betti_json(const nv_complex* k, nv_field field, char** out) {
  return guard([&] {
    require(k, "complex");
    const auto f = field_of(field);
    emit_string(out, nervus::io::betti_json(f, nervus::betti_numbers(k->value, f)));
  });
}

nv_status nv_poset_from_json(const char* json, nv_poset** out) {
  return guard([&] {
    require(json, "poset text");
    emit(out, nervus::share(nervus::io::parse_poset(json)));
  });
}

void nv_poset_free(nv_poset* k) { delete k; }

size_t nv_poset_size(const nv_poset* k) { return k ? k->value->size() : 0; }

nv_status nv_poset_to_json(const nv_poset* k, char** out) {
  return guard([&] {
    require(k, "poset");
    emit_string(out, nervus::io::poset_json(*k->value));
  });
}

nv_status nv_poset_to_dot(const nv_poset* k, char** out) {
  return guard([&] {
    require(k, "poset");
    emit_string(out, nervus::to_dot(*k->value));
  });
}

nv_status nv_poset_order_complex(const nv_poset* k, nv_complex** out) {
  return guard([&] {
    require(k, "poset");
    emit(out, nervus::order_complex(*k->value));
  });
}

nv_status nv_poset_zapatrin_report(const nv_poset* k, nv_field field, char** out) {
  return guard([&] {
    require(k, "poset");
    emit_string(out, nervus::io::zapatrin_report_json(k->value, field_of(field)));
  });
}

nv_status nv_poset_apply_d(const nv_poset* k, nv_field field, const char* chain_json,
                           char** out) {
  return guard([&] {
    require(k, "poset");
    require(chain_json, "chain text");
    const auto c = nervus::io::parse_chain_element(chain_json, k->value, field_of(field));
    emit_string(out, nervus::io::chain_element_json(nervus::zapatrin_d(c)));
  });
}

nv_status nv_tower_build(nv_family family, int level, int base, long cap, nv_tower** out) {
  return guard([&] {
    if (cap < 0) throw nervus::Error(nervus::Errc::invalid_argument, "negative cap");
    const int level_cap = static_cast<int>(std::min<long>(cap, 1 << 20));
    switch (family) {
      case NV_CANTOR:
        emit(out, nervus::cantor_tower(level, cap ? level_cap : nervus::cantor_cap).tower);
        return;
      case NV_CARPET:
        emit(out, nervus::carpet_tower(level, cap ? level_cap : nervus::carpet_cap));
        return;
      case NV_SPONGE:
        emit(out, nervus::sponge_tower(level, cap ? level_cap : nervus::sponge_cap));
        return;
      case NV_SOLENOID:
        emit(out, nervus::solenoid_tower(base, level,
                                         cap ? static_cast<std::size_t>(cap)
                                             : nervus::solenoid_vertex_cap));
        return;
    }
    throw nervus::Error(nervus::Errc::invalid_argument, "unknown family");
  });
}

void nv_tower_free(nv_tower* t) { delete t; }

size_t nv_tower_levels(const nv_tower* t) { return t ? t->value.levels.size() : 0; }

nv_status nv_tower_write(const nv_tower* t, const char* directory) {
  return guard([&] {
    require(t, "tower");
    require(directory, "directory");
    nervus::io::write_tower(t->value, directory);
  });
}

nv_status nv_tower_homology_json(const nv_tower* t, nv_field field, char** out) {
  return guard([&] {
    require(t, "tower");
    const auto h = nervus::tower_homology(t->value, field_of(field));
    emit_string(out, nervus::io::tower_homology_json(t->value, h));
  });
}

nv_status nv_cloud_from_csv(const char* csv, nv_cloud** out) {
  return guard([&] {
    require(csv, "CSV text");
    emit(out, nervus::io::parse_cloud_csv(csv));
  });
}

void nv_cloud_free(nv_cloud* s) { delete s; }

size_t nv_cloud_size(const nv_cloud* s) { return s ? s->value.size() : 0; }

size_t nv_cloud_dim(const nv_cloud* s) { return s ? s->value.dim() : 0; }

nv_status nv_cloud_to_csv(const nv_cloud* s, char** out) {
  return guard([&] {
    require(s, "point cloud");
    emit_string(out, nervus::io::cloud_csv(s->value));
  });
}

nv_status nv_cloud_rips(const nv_cloud* s, double eps, int maxdim, nv_complex** out) {
  return guard([&] {
    require(s, "point cloud");
    emit(out, nervus::rips_complex(s->value, eps, maxdim));
  });
}

nv_status nv_cloud_cech_ball(const nv_cloud* s, double eps, int maxdim, nv_complex** out) {
  return guard([&] {
    require(s, "point cloud");
    emit(out, nervus::cech_ball_complex(s->value, eps, maxdim));
  });
}

nv_status nv_cloud_connectivity_threshold(const nv_cloud* s, double* out) {
  return guard([&] {
    require(s, "point cloud");
    require(out, "output pointer");
    *out = nervus::connectivity_threshold(s->value);
  });
}

void nv_ode_params_default(nv_ode_params* p) {
  if (p == nullptr) return;
  const nervus::OdeParams d;
  *p = {d.a, d.b, d.c, d.step, d.total_steps, d.transient_steps,
        {d.start[0], d.start[1], d.start[2]}};
}

nv_status nv_rossler(const nv_ode_params* p, size_t count, nv_cloud** out) {
  return guard([&] {
    require(p, "parameters");
    nervus::OdeParams q;
    q.a = p->a;
    q.b = p->b;
    q.c = p->c;
    q.step = p->step;
    q.total_steps = p->total_steps;
    q.transient_steps = p->transient_steps;
    q.start = {p->start[0], p->start[1], p->start[2]};
    emit(out, nervus::rossler_cloud(q, count));
  });
}

nv_status nv_sha256_hex(const void* data, size_t size, char** out) {
  return guard([&] {
    if (size > 0) require(data, "data");
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data, size, md, &len, EVP_sha256(), nullptr) != 1) {
      throw nervus::Error(nervus::Errc::internal, "SHA-256 failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
      std::snprintf(buf, sizeof buf, "%02x", md[i]);
      hex += buf;
    }
    emit_string(out, hex);
  });
}

}  // extern "C"
