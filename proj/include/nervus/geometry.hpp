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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nervus/complex.hpp"

namespace nervus {

/// Finite sample of points in R^d (d <= 16), stored row-major.
class PointCloud {
 public:
  static constexpr std::size_t max_dimension = 16;

  PointCloud() = default;
  /// Throws Error(malformed_input) on ragged, non-finite or too-wide input.
  PointCloud(std::size_t dim, std::vector<double> coords,
             std::vector<std::string> labels = {});
  static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const { return coords_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<std::string> labels_;
};

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

using Metric = std::function<double(std::span<const double>, std::span<const double>)>;

double euclidean(std::span<const double> a, std::span<const double> b);

/// Flag complex of the eps-neighbourhood graph (pairwise distance <= eps),
/// simplices of at most maxdim+1 vertices. Vertices are all points.
SimplicialComplex rips_complex(const PointCloud& s, double eps, int maxdim = 3,
                               const Metric& metric = euclidean);

/// Smallest enclosing ball; Welzl's recursion over the points in the order
/// given, without shuffling.
Ball min_enclosing_ball(const PointCloud& s, std::span<const std::size_t> indices);
Ball min_enclosing_ball(const std::vector<std::vector<double>>& points);

inline constexpr double ball_slack = 1e-9;

/// Nerve of the closed eps-balls: a set is a simplex iff its smallest
/// enclosing ball has radius <= eps (+ ball_slack).
SimplicialComplex cech_ball_complex(const PointCloud& s, double eps, int maxdim = 3);

/// Smallest eps at which the Rips 1-skeleton is connected (longest minimum
/// spanning tree edge); 0 for fewer than two points.
double connectivity_threshold(const PointCloud& s, const Metric& metric = euclidean);

}  // namespace nervus
