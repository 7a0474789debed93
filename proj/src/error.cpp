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

#include "nervus/error.hpp"

namespace nervus {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::malformed_input: return "malformed input";
    case Errc::unknown_label: return "unknown label";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::not_simplicial: return "not simplicial";
    case Errc::not_adjoint: return "adjointness violated";
    case Errc::not_splitting: return "not a splitting";
    case Errc::not_a_poset: return "not a partial order";
    case Errc::not_sound: return "unsound refinement";
    case Errc::not_refinement: return "not a refinement";
    case Errc::poset_mismatch: return "poset mismatch";
    case Errc::cyclic_digraph: return "cyclic digraph";
    case Errc::divergence: return "divergence";
    case Errc::enumeration_limit: return "enumeration limit";
    case Errc::cap_exceeded: return "size cap exceeded";
    case Errc::internal: return "internal invariant";
  }
  return "unknown";
}

}  // namespace nervus
