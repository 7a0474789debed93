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

// Sparse column reduction over an exact field. Internal to the library.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "nervus/homology.hpp"
#include "nervus/scalar.hpp"

namespace nervus::detail {

struct RationalField {
  using value = mpq_class;
  static constexpr Field tag = Field::rational;
  static value from_int(int i) { return value(i); }
  static bool is_zero(const value& v) { return sgn(v) == 0; }
  static Scalar to_scalar(const value& v) { return Scalar(tag, v); }
  static value from_scalar(const Scalar& s) { return s.value(); }
};

struct Gf2Field {
  using value = std::uint8_t;
  static constexpr Field tag = Field::gf2;
  static value from_int(int i) { return static_cast<value>(i & 1); }
  static bool is_zero(value v) { return v == 0; }
  static Scalar to_scalar(value v) { return Scalar(tag, static_cast<long>(v)); }
  static value from_scalar(const Scalar& s) { return s.is_zero() ? 0 : 1; }
};

template <class F>
using SparseColumn = std::vector<std::pair<std::uint32_t, typename F::value>>;

template <class F>
SparseColumn<F> convert(const IntMatrix::Column& c) {
  SparseColumn<F> out;
  out.reserve(c.size());
  for (const auto& [row, v] : c) {
    auto x = F::from_int(v);
    if (!F::is_zero(x)) out.emplace_back(row, std::move(x));
  }
  return out;
}

/// target <- target - factor * source.
template <class F>
void subtract_multiple(SparseColumn<F>& target, const SparseColumn<F>& source,
                       const typename F::value& factor) {
  SparseColumn<F> out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      if constexpr (std::is_same_v<F, Gf2Field>) {
        out.emplace_back(b->first, b->second);
      } else {
        out.emplace_back(b->first, -factor * b->second);
      }
      ++b;
    } else {
      typename F::value v;
      if constexpr (std::is_same_v<F, Gf2Field>) {
        v = a->second ^ b->second;
      } else {
        v = a->second - factor * b->second;
      }
      if (!F::is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class F>
typename F::value pivot_factor(const typename F::value& num,
                               const typename F::value& den) {
  if constexpr (std::is_same_v<F, Gf2Field>) {
    return 1;
  } else {
    return num / den;
  }
}

/// Left-to-right column reduction keyed on the lowest (largest-row) entry.
/// Optionally tracks the change-of-basis columns V with R = D V.
template <class F>
class ColumnReducer {
 public:
  static constexpr std::int64_t none = -1;

  ColumnReducer(std::size_t rows, bool track_v)
      : pivot_col_(rows, none), track_v_(track_v) {}

  /// Reduces `col` (column index `index`) against stored pivots. Returns true
  /// if it became a new pivot column.
  bool add_column(std::uint32_t index, SparseColumn<F> col) {
    SparseColumn<F> v;
    if (track_v_) v.emplace_back(index, F::from_int(1));
    while (!col.empty()) {
      const auto low = col.back().first;
      const auto p = pivot_col_[low];
      if (p == none) break;
      const auto& pivot = reduced_[p];
      auto factor = pivot_factor<F>(col.back().second, pivot.back().second);
      subtract_multiple<F>(col, pivot, factor);
      if (track_v_) subtract_multiple<F>(v, v_[p], factor);
    }
    if (col.empty()) {
      if (track_v_) zero_v_.emplace_back(index, std::move(v));
      return false;
    }
    pivot_col_[col.back().first] = static_cast<std::int64_t>(reduced_.size());
    pivot_source_.push_back(index);
    reduced_.push_back(std::move(col));
    if (track_v_) v_.push_back(std::move(v));
    return true;
  }

  std::size_t rank() const { return reduced_.size(); }
  const std::vector<SparseColumn<F>>& reduced() const { return reduced_; }
  /// Pivot rows (lows) of the reduced columns.
  std::vector<std::uint32_t> lows() const {
    std::vector<std::uint32_t> out;
    out.reserve(reduced_.size());
    for (const auto& c : reduced_) out.push_back(c.back().first);
    return out;
  }
  std::int64_t pivot_for_row(std::uint32_t row) const { return pivot_col_[row]; }
  /// Kernel vectors for columns that reduced to zero (requires track_v).
  const std::vector<std::pair<std::uint32_t, SparseColumn<F>>>& kernel() const {
    return zero_v_;
  }

 private:
  std::vector<std::int64_t> pivot_col_;
  std::vector<SparseColumn<F>> reduced_;
  std::vector<std::uint32_t> pivot_source_;
  std::vector<SparseColumn<F>> v_;
  std::vector<std::pair<std::uint32_t, SparseColumn<F>>> zero_v_;
  bool track_v_;
};

}  // namespace nervus::detail
