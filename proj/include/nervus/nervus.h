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

/* C interface to libnervus.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an nv_status; on failure the message is
 * available from nv_last_error() on the calling thread until the next call.
 * Strings handed out through char** parameters are owned by the caller and
 * released with nv_string_free(). Text results in JSON have sorted keys and
 * end with a newline.
 */
#ifndef NERVUS_NERVUS_H_
#define NERVUS_NERVUS_H_

#include <stddef.h>

#if defined(_WIN32)
#define NV_API __declspec(dllexport)
#else
#define NV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nv_status {
  NV_OK = 0,
  NV_ERR_INTERNAL = 1,
  NV_ERR_INPUT = 2,    /* malformed input or argument */
  NV_ERR_SEMANTIC = 3, /* validation failed */
  NV_ERR_LIMIT = 4,    /* size cap or enumeration limit */
} nv_status;

typedef enum nv_field { NV_FIELD_Q = 0, NV_FIELD_GF2 = 1 } nv_field;

typedef enum nv_family {
  NV_CANTOR = 0,
  NV_CARPET = 1,
  NV_SPONGE = 2,
  NV_SOLENOID = 3,
} nv_family;

typedef struct nv_context nv_context;
typedef struct nv_complex nv_complex;
typedef struct nv_poset nv_poset;
typedef struct nv_tower nv_tower;
typedef struct nv_cloud nv_cloud;

NV_API const char* nv_version(void);
NV_API const char* nv_last_error(void);
NV_API void nv_string_free(char* s);

/* Parses "Q" or "GF2". */
NV_API nv_status nv_field_parse(const char* name, nv_field* out);

/* Formal contexts. */
NV_API nv_status nv_context_from_json(const char* json, nv_context** out);
NV_API void nv_context_free(nv_context* p);
NV_API nv_status nv_context_to_json(const nv_context* p, char** out);
NV_API nv_status nv_context_dual(const nv_context* p, nv_context** out);
NV_API nv_status nv_context_cech_nerve(const nv_context* p, nv_complex** out);
NV_API nv_status nv_context_vietoris_nerve(const nv_context* p, nv_complex** out);
/* Specialization poset of the context; elements are labelled by the objects
 * of each class, e.g. "{x,y}". */
NV_API nv_status nv_context_sorkin(const nv_context* p, nv_poset** out);
/* Validates a refinement relation file against contexts p and q and reports
 * the relation together with the maximal relation for its carrier. */
NV_API nv_status nv_refinement_check(const nv_context* p, const nv_context* q,
                                     const char* relation_json, char** report);

/* Simplicial complexes. */
NV_API nv_status nv_complex_from_json(const char* json, nv_complex** out);
NV_API void nv_complex_free(nv_complex* k);
NV_API nv_status nv_complex_to_json(const nv_complex* k, char** out);
/* -1 for the empty complex. */
NV_API int nv_complex_dimension(const nv_complex* k);
NV_API size_t nv_complex_count(const nv_complex* k, int dim);
/* Writes up to `capacity` Betti numbers to `betti` and their total number to
 * `length`. */
NV_API nv_status nv_complex_betti(const nv_complex* k, nv_field field, size_t* betti,
                                  size_t capacity, size_t* length);
NV_API nv_status nv_complex_betti_json(const nv_complex* k, nv_field field, char** out);

/* Posets. */
NV_API nv_status nv_poset_from_json(const char* json, nv_poset** out);
NV_API void nv_poset_free(nv_poset* k);
NV_API size_t nv_poset_size(const nv_poset* k);
NV_API nv_status nv_poset_to_json(const nv_poset* k, char** out);
NV_API nv_status nv_poset_to_dot(const nv_poset* k, char** out);
NV_API nv_status nv_poset_order_complex(const nv_poset* k, nv_complex** out);
/* Zapatrin differential matrices, cohomology and the dd = 0, Leibniz and
 * coboundary verdicts. */
NV_API nv_status nv_poset_zapatrin_report(const nv_poset* k, nv_field field, char** out);
/* d applied to a chain element given as JSON terms. */
NV_API nv_status nv_poset_apply_d(const nv_poset* k, nv_field field, const char* chain_json,
                                  char** out);

/* Towers. `level` is the finest level (the number of bonding maps for the
 * solenoid), `base` the solenoid base cycle length (ignored otherwise) and
 * `cap` the size cap (0 selects the family default: a level cap, or a vertex
 * cap for the solenoid). */
NV_API nv_status nv_tower_build(nv_family family, int level, int base, long cap,
                                nv_tower** out);
NV_API void nv_tower_free(nv_tower* t);
NV_API size_t nv_tower_levels(const nv_tower* t);
NV_API nv_status nv_tower_write(const nv_tower* t, const char* directory);
NV_API nv_status nv_tower_homology_json(const nv_tower* t, nv_field field, char** out);

/* Point clouds. */
NV_API nv_status nv_cloud_from_csv(const char* csv, nv_cloud** out);
NV_API void nv_cloud_free(nv_cloud* s);
NV_API size_t nv_cloud_size(const nv_cloud* s);
NV_API size_t nv_cloud_dim(const nv_cloud* s);
NV_API nv_status nv_cloud_to_csv(const nv_cloud* s, char** out);
NV_API nv_status nv_cloud_rips(const nv_cloud* s, double eps, int maxdim, nv_complex** out);
NV_API nv_status nv_cloud_cech_ball(const nv_cloud* s, double eps, int maxdim,
                                    nv_complex** out);
/* Smallest eps at which the Rips 1-skeleton is connected. */
NV_API nv_status nv_cloud_connectivity_threshold(const nv_cloud* s, double* out);

typedef struct nv_ode_params {
  double a, b, c;
  double step;
  long total_steps;
  long transient_steps;
  double start[3];
} nv_ode_params;

NV_API void nv_ode_params_default(nv_ode_params* p);
NV_API nv_status nv_rossler(const nv_ode_params* p, size_t count, nv_cloud** out);

/* Lowercase hex SHA-256 of a byte buffer. */
NV_API nv_status nv_sha256_hex(const void* data, size_t size, char** out);

#ifdef __cplusplus
}
#endif

#endif  // NERVUS_NERVUS_H_
