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

#include "nervus/scalar.hpp"

#include <ostream>

#include "nervus/error.hpp"

namespace nervus {

const char* field_name(Field field) {
  return field == Field::rational ? "Q" : "GF2";
}

Field parse_field(std::string_view name) {
  if (name == "Q" || name == "q") return Field::rational;
  if (name == "GF2" || name == "gf2") return Field::gf2;
  throw Error(Errc::invalid_argument,
              "unknown field '" + std::string(name) + "' (expected Q or GF2)");
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value) {
  normalize();
}

Scalar::Scalar(Field field, const mpq_class& value)
    : field_(field), value_(value) {
  normalize();
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::malformed_input, "empty scalar");
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
      throw Error(Errc::malformed_input, "bad scalar '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(Errc::malformed_input, "bad scalar '" + std::string(text) + "'");
  }
  q.canonicalize();
  if (field == Field::gf2 && mpz_even_p(q.get_den().get_mpz_t())) {
    throw Error(Errc::malformed_input,
                "'" + std::string(text) + "' has no value in GF2");
  }
  return Scalar(field, q);
}

void Scalar::normalize() {
  value_.canonicalize();
  if (field_ == Field::gf2) {
    // Odd denominators are units mod 2, so only the numerator parity matters.
    const bool odd = mpz_odd_p(value_.get_num().get_mpz_t()) != 0;
    value_ = odd ? 1 : 0;
  }
}

void Scalar::check_same(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(Errc::invalid_argument, "mixed coefficient fields");
  }
}

std::string Scalar::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_ == Field::rational) r.value_ = -value_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  if (field_ == Field::gf2) normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same(rhs);
  value_ -= rhs.value_;
  if (field_ == Field::gf2) normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same(rhs);
  if (rhs.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace nervus
