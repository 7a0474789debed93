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

#include "nervus/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "nervus/error.hpp"
#include "reduction.hpp"

namespace nervus {

using detail::ColumnReducer;
using detail::Gf2Field;
using detail::RationalField;
using detail::SparseColumn;

int IntMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns[c];
  auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(static_cast<std::uint32_t>(r), INT32_MIN));
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (std::uint32_t c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c]) t.columns[r].emplace_back(c, v);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(),
                     [](const Column& c) { return c.empty(); });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::map<std::uint32_t, long> acc;
    for (const auto& [k, bv] : b.columns[c]) {
      for (const auto& [r, av] : a.columns[k]) acc[r] += static_cast<long>(av) * bv;
    }
    for (const auto& [r, v] : acc) {
      if (v != 0) out.columns[c].emplace_back(r, static_cast<int>(v));
    }
  }
  return out;
}

ScalarMatrix ScalarMatrix::identity(std::size_t n, Field f) {
  ScalarMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols != b.rows) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  ScalarMatrix out(a.rows, b.cols, a.field);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

template <class F>
std::size_t rank_impl(const IntMatrix& m, const std::vector<char>* skip) {
  ColumnReducer<F> red(m.rows, false);
  for (std::uint32_t c = 0; c < m.cols; ++c) {
    if (skip && (*skip)[c]) continue;
    red.add_column(c, detail::convert<F>(m.columns[c]));
  }
  return red.rank();
}

std::size_t rank_dispatch(const IntMatrix& m, Field field,
                          const std::vector<char>* skip = nullptr) {
  return field == Field::rational ? rank_impl<RationalField>(m, skip)
                                  : rank_impl<Gf2Field>(m, skip);
}

// Boundary ranks from the top degree down; columns whose simplex is already
// a pivot row of the degree above are cycles and are skipped (clearing).
template <class F>
std::vector<std::size_t> boundary_ranks(const GradedChainComplex& c) {
  const int top = c.top_degree();
  std::vector<std::size_t> ranks(top + 2, 0);
  std::vector<char> skip;
  for (int n = top; n >= 1; --n) {
    const auto& m = c.map(n);
    ColumnReducer<F> red(m.rows, false);
    for (std::uint32_t col = 0; col < m.cols; ++col) {
      if (!skip.empty() && skip[col]) continue;
      red.add_column(col, detail::convert<F>(m.columns[col]));
    }
    ranks[n] = red.rank();
    skip.assign(m.rows, 0);
    for (auto low : red.lows()) skip[low] = 1;
  }
  return ranks;
}

}  // namespace

std::size_t rank(const IntMatrix& m, Field field) { return rank_dispatch(m, field); }

Scalar GradedChainComplex::entry(int n, std::size_t r, std::size_t c) const {
  return Scalar(field_, static_cast<long>(maps_[n].at(r, c)));
}

bool GradedChainComplex::squares_to_zero() const {
  for (std::size_t n = 0; n + 1 < maps_.size(); ++n) {
    const IntMatrix prod = dir_ == Direction::boundary
                               ? multiply(maps_[n], maps_[n + 1])
                               : multiply(maps_[n + 1], maps_[n]);
    for (const auto& col : prod.columns) {
      for (const auto& [r, v] : col) {
        if (!Scalar(field_, static_cast<long>(v)).is_zero()) return false;
      }
    }
  }
  return true;
}

GradedChainComplex boundary_complex(const SimplicialComplex& k, Field field) {
  const int top = k.dimension();
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> maps;
  for (int n = 0; n <= top; ++n) {
    dims.push_back(k.count(n));
    IntMatrix m(n == 0 ? 0 : k.count(n - 1), k.count(n));
    if (n > 0) {
      const auto& simplices = k.simplices(n);
      for (std::size_t c = 0; c < simplices.size(); ++c) {
        const auto& s = simplices[c];
        auto& col = m.columns[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex facet;
          facet.reserve(s.size() - 1);
          for (std::size_t j = 0; j < s.size(); ++j) {
            if (j != i) facet.push_back(s[j]);
          }
          col.emplace_back(static_cast<std::uint32_t>(*k.index_of(facet)),
                           i % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
      }
    }
    maps.push_back(std::move(m));
  }
  return GradedChainComplex(field, GradedChainComplex::Direction::boundary,
                            std::move(dims), std::move(maps));
}

GradedChainComplex coboundary_complex(const SimplicialComplex& k, Field field) {
  auto b = boundary_complex(k, field);
  const int top = b.top_degree();
  std::vector<IntMatrix> maps;
  for (int n = 0; n <= top; ++n) {
    if (n < top) {
      maps.push_back(b.map(n + 1).transpose());
    } else {
      maps.push_back(IntMatrix(0, b.dim(n)));
    }
  }
  return GradedChainComplex(field, GradedChainComplex::Direction::coboundary,
                            b.dims(), std::move(maps));
}

std::vector<std::size_t> betti_numbers(const GradedChainComplex& c) {
  const int top = c.top_degree();
  if (top < 0) return {};
  std::vector<std::size_t> rk(top + 2, 0);  // rank of the map out of degree n
  if (c.direction() == GradedChainComplex::Direction::boundary) {
    rk = c.field() == Field::rational ? boundary_ranks<RationalField>(c)
                                      : boundary_ranks<Gf2Field>(c);
    std::vector<std::size_t> betti(top + 1);
    for (int n = 0; n <= top; ++n) betti[n] = c.dim(n) - rk[n] - rk[n + 1];
    return betti;
  }
  for (int n = 0; n <= top; ++n) rk[n] = rank_dispatch(c.map(n), c.field());
  std::vector<std::size_t> betti(top + 1);
  for (int n = 0; n <= top; ++n) {
    betti[n] = c.dim(n) - rk[n] - (n > 0 ? rk[n - 1] : 0);
  }
  return betti;
}

namespace {

// Sign of the permutation sorting `v`; 0 if `v` has a repeat.
int sort_sign(std::vector<std::uint32_t>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  return sign;
}

IntMatrix chain_map_degree(const SimplicialMap& f, int n) {
  const auto& src = f.source().simplices(n);
  IntMatrix m(f.target().count(n), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::vector<std::uint32_t> img;
    img.reserve(src[c].size());
    for (auto v : src[c]) img.push_back(f(v));
    const int sign = sort_sign(img);
    if (sign == 0) continue;
    auto idx = f.target().index_of(img);
    if (!idx) {
      throw Error(Errc::internal, "chain map: image of " + f.source().describe(src[c]) +
                                      " missing from target");
    }
    m.columns[c].emplace_back(static_cast<std::uint32_t>(*idx), sign);
  }
  return m;
}

// Deterministic homology basis in one degree: killers are the reduced
// boundary columns of degree n+1 keyed by their low, and essential cycles
// are the kernel vectors of positive n-simplices that are never killed.
template <class F>
struct DegreeBasis {
  std::vector<SparseColumn<F>> killers;
  std::vector<std::int64_t> killer_for_row;
  std::vector<std::uint32_t> essential;            // n-simplex indices
  std::vector<SparseColumn<F>> representatives;    // parallel to essential
  std::vector<std::int64_t> essential_for_row;

  std::vector<typename F::value> coordinates(SparseColumn<F> z) const {
    std::vector<typename F::value> coords(essential.size(), F::from_int(0));
    while (!z.empty()) {
      const auto low = z.back().first;
      if (killer_for_row[low] >= 0) {
        const auto& k = killers[killer_for_row[low]];
        auto factor = detail::pivot_factor<F>(z.back().second, k.back().second);
        detail::subtract_multiple<F>(z, k, factor);
      } else if (essential_for_row[low] >= 0) {
        const auto e = essential_for_row[low];
        auto factor = z.back().second;  // representative has 1 at its top
        coords[e] = factor;
        detail::subtract_multiple<F>(z, representatives[e], factor);
      } else {
        throw Error(Errc::internal, "chain is not a cycle");
      }
    }
    return coords;
  }
};

template <class F>
DegreeBasis<F> degree_basis(const SimplicialComplex& k, int n) {
  DegreeBasis<F> basis;
  const std::size_t cn = k.count(n);
  basis.killer_for_row.assign(cn, -1);
  basis.essential_for_row.assign(cn, -1);
  if (n < 0 || n > k.dimension()) return basis;
  const auto chain = boundary_complex(k, F::tag);

  if (n + 1 <= chain.top_degree()) {
    const auto& up = chain.map(n + 1);
    ColumnReducer<F> red(up.rows, false);
    for (std::uint32_t c = 0; c < up.cols; ++c) {
      red.add_column(c, detail::convert<F>(up.columns[c]));
    }
    basis.killers = red.reduced();
    for (std::size_t i = 0; i < basis.killers.size(); ++i) {
      basis.killer_for_row[basis.killers[i].back().first] = static_cast<std::int64_t>(i);
    }
  }

  const auto& down = chain.map(n);
  ColumnReducer<F> red(down.rows, true);
  for (std::uint32_t c = 0; c < down.cols; ++c) {
    if (basis.killer_for_row[c] >= 0) continue;  // a cycle, already accounted for
    red.add_column(c, detail::convert<F>(down.columns[c]));
  }
  for (const auto& [index, v] : red.kernel()) {
    basis.essential_for_row[index] = static_cast<std::int64_t>(basis.essential.size());
    basis.essential.push_back(index);
    basis.representatives.push_back(v);
  }
  return basis;
}

template <class F>
ScalarMatrix homology_map_impl(const SimplicialMap& f, int n) {
  const auto src = degree_basis<F>(f.source(), n);
  const auto dst = degree_basis<F>(f.target(), n);
  ScalarMatrix out(dst.essential.size(), src.essential.size(), F::tag);
  if (src.essential.empty() || dst.essential.empty()) return out;
  const IntMatrix fsharp = chain_map_degree(f, n);
  for (std::size_t j = 0; j < src.essential.size(); ++j) {
    std::map<std::uint32_t, typename F::value> acc;
    for (const auto& [row, coeff] : src.representatives[j]) {
      for (const auto& [trow, sign] : fsharp.columns[row]) {
        if constexpr (std::is_same_v<F, Gf2Field>) {
          acc[trow] ^= coeff;
        } else {
          acc[trow] += coeff * sign;
        }
      }
    }
    SparseColumn<F> image;
    for (auto& [row, v] : acc) {
      if (!F::is_zero(v)) image.emplace_back(row, std::move(v));
    }
    auto coords = dst.coordinates(std::move(image));
    for (std::size_t i = 0; i < coords.size(); ++i) out(i, j) = F::to_scalar(coords[i]);
  }
  return out;
}

template <class F>
std::vector<std::vector<Scalar>> basis_impl(const SimplicialComplex& k, int n) {
  const auto b = degree_basis<F>(k, n);
  std::vector<std::vector<Scalar>> out;
  for (const auto& rep : b.representatives) {
    std::vector<Scalar> dense(k.count(n), Scalar(F::tag));
    for (const auto& [row, v] : rep) dense[row] = F::to_scalar(v);
    out.push_back(std::move(dense));
  }
  return out;
}

}  // namespace

std::vector<IntMatrix> induced_chain_map(const SimplicialMap& f) {
  std::vector<IntMatrix> out;
  for (int n = 0; n <= f.source().dimension(); ++n) out.push_back(chain_map_degree(f, n));
  return out;
}

ScalarMatrix homology_map(const SimplicialMap& f, int degree, Field field) {
  if (degree < 0 ||
      degree > std::max(f.source().dimension(), f.target().dimension())) {
    return ScalarMatrix(0, 0, field);
  }
  return field == Field::rational ? homology_map_impl<RationalField>(f, degree)
                                  : homology_map_impl<Gf2Field>(f, degree);
}

std::vector<std::vector<Scalar>> homology_basis(const SimplicialComplex& k,
                                                int degree, Field field) {
  return field == Field::rational ? basis_impl<RationalField>(k, degree)
                                  : basis_impl<Gf2Field>(k, degree);
}

}  // namespace nervus
