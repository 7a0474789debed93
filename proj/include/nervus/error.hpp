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

#include <stdexcept>
#include <string>

namespace nervus {

enum class Errc {
  malformed_input,
  unknown_label,
  invalid_argument,
  not_simplicial,
  not_adjoint,
  not_splitting,
  not_a_poset,
  not_sound,
  not_refinement,
  poset_mismatch,
  cyclic_digraph,
  divergence,
  enumeration_limit,
  cap_exceeded,
  internal,
};

// Coarse classification used by the C API and the command line exit codes.
enum class ErrorClass { input = 2, semantic = 3, limit = 4 };

constexpr ErrorClass classify(Errc code) {
  switch (code) {
    case Errc::malformed_input:
    case Errc::invalid_argument:
      return ErrorClass::input;
    case Errc::enumeration_limit:
    case Errc::cap_exceeded:
      return ErrorClass::limit;
    default:
      return ErrorClass::semantic;
  }
}

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nervus
