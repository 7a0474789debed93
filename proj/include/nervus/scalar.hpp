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

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace nervus {

/// Coefficient field for chains and homology.
enum class Field { rational, gf2 };

const char* field_name(Field field);  // "Q" or "GF2"
Field parse_field(std::string_view name);

/// Exact element of either the rationals or GF(2).
///
/// Rationals are kept canonical (lowest terms, positive denominator); GF(2)
/// values are stored as 0 or 1. Mixing fields in arithmetic is an error.
class Scalar {
 public:
  explicit Scalar(Field field = Field::rational) : field_(field) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const { return sgn(value_) == 0; }
  const mpq_class& value() const noexcept { return value_; }

  /// Serialized as "num/den", always with a denominator.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void check_same(const Scalar& rhs) const;
  void normalize();

  Field field_;
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nervus
