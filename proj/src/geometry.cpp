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

#include "nervus/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "nervus/error.hpp"

namespace nervus {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords,
                       std::vector<std::string> labels)
    : dim_(dim), coords_(std::move(coords)), labels_(std::move(labels)) {
  if (dim_ > max_dimension) {
    throw Error(Errc::malformed_input, "point dimension above " +
                                           std::to_string(max_dimension));
  }
  if (dim_ == 0 && !coords_.empty()) throw Error(Errc::malformed_input, "zero-dimensional points");
  if (dim_ != 0 && coords_.size() % dim_ != 0) {
    throw Error(Errc::malformed_input, "ragged point coordinates");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(Errc::malformed_input, "non-finite coordinate");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < size(); ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != size()) {
    throw Error(Errc::malformed_input, "label count differs from point count");
  }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return PointCloud();
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw Error(Errc::malformed_input, "ragged point coordinates");
    coords.insert(coords.end(), r.begin(), r.end());
  }
  return PointCloud(d, std::move(coords));
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

namespace {

// Higher-indexed neighbours of each point within eps.
std::vector<std::vector<std::uint32_t>> neighbours(const PointCloud& s, double eps,
                                                   const Metric& metric) {
  std::vector<std::vector<std::uint32_t>> out(s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    for (std::uint32_t j = i + 1; j < s.size(); ++j) {
      if (metric(s.point(i), s.point(j)) <= eps) out[i].push_back(j);
    }
  }
  return out;
}

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Expands simplices vertex by vertex through common higher neighbours;
// `accept` can veto a candidate coface. Emits the simplices that were not
// extended further, whose closure is the whole complex.
SimplicialComplex expand(const PointCloud& s,
                         const std::vector<std::vector<std::uint32_t>>& nbrs, int maxdim,
                         const std::function<bool(const Simplex&)>& accept) {
  std::vector<Simplex> faces;
  Simplex simplex;
  std::function<void(const std::vector<std::uint32_t>&)> grow =
      [&](const std::vector<std::uint32_t>& candidates) {
        bool extended = false;
        if (static_cast<int>(simplex.size()) <= maxdim) {
          for (auto u : candidates) {
            simplex.push_back(u);
            if (accept(simplex)) {
              extended = true;
              grow(intersect(candidates, nbrs[u]));
            }
            simplex.pop_back();
          }
        }
        if (!extended) faces.push_back(simplex);
      };
  for (std::uint32_t v = 0; v < s.size(); ++v) {
    simplex = {v};
    grow(nbrs[v]);
  }
  return SimplicialComplex::from_faces(s.labels(), std::move(faces));
}

Ball ball_from_support(const PointCloud& s, const std::vector<std::size_t>& support) {
  Ball b;
  if (support.empty()) {
    b.radius = -1.0;  // contains nothing
    return b;
  }
  const std::size_t d = s.dim();
  const auto p0 = s.point(support[0]);
  Eigen::VectorXd origin = Eigen::Map<const Eigen::VectorXd>(p0.data(), d);
  if (support.size() == 1) {
    b.center.assign(p0.begin(), p0.end());
    return b;
  }
  const std::size_t k = support.size() - 1;
  Eigen::MatrixXd v(d, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto pi = s.point(support[i + 1]);
    v.col(i) = Eigen::Map<const Eigen::VectorXd>(pi.data(), d) - origin;
  }
  // Circumcentre in the affine hull: c = p0 + V l with 2 (V^T V) l = |v_i|^2.
  const Eigen::MatrixXd gram = v.transpose() * v;
  const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  const Eigen::VectorXd l = gram.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::VectorXd c = origin + v * l;
  b.center.assign(c.data(), c.data() + d);
  for (auto i : support) b.radius = std::max(b.radius, euclidean(b.center, s.point(i)));
  return b;
}

bool contains(const Ball& b, std::span<const double> p) {
  if (b.radius < 0) return false;
  return euclidean(b.center, p) <= b.radius * (1 + 1e-12) + 1e-12;
}

Ball welzl(const PointCloud& s, std::span<const std::size_t> pts, std::size_t n,
           std::vector<std::size_t>& support) {
  if (n == 0 || support.size() == s.dim() + 1) return ball_from_support(s, support);
  const std::size_t p = pts[n - 1];
  Ball d = welzl(s, pts, n - 1, support);
  if (contains(d, s.point(p))) return d;
  support.push_back(p);
  Ball with_p = welzl(s, pts, n - 1, support);
  support.pop_back();
  return with_p;
}

}  // namespace

SimplicialComplex rips_complex(const PointCloud& s, double eps, int maxdim,
                               const Metric& metric) {
  if (!(eps >= 0)) throw Error(Errc::invalid_argument, "eps must be non-negative");
  if (maxdim < 0) throw Error(Errc::invalid_argument, "maxdim must be non-negative");
  const auto nbrs = neighbours(s, eps, metric);
  return expand(s, nbrs, maxdim, [](const Simplex&) { return true; });
}

Ball min_enclosing_ball(const PointCloud& s, std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(Errc::invalid_argument, "no points to enclose");
  std::vector<std::size_t> support;
  return welzl(s, indices, indices.size(), support);
}

Ball min_enclosing_ball(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw Error(Errc::invalid_argument, "no points to enclose");
  const auto cloud = PointCloud::from_rows(points);
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return min_enclosing_ball(cloud, idx);
}

SimplicialComplex cech_ball_complex(const PointCloud& s, double eps, int maxdim) {
  if (!(eps >= 0)) throw Error(Errc::invalid_argument, "eps must be non-negative");
  if (maxdim < 0) throw Error(Errc::invalid_argument, "maxdim must be non-negative");
  // Pairs in a common ball of radius eps are within 2 eps of each other.
  const auto nbrs = neighbours(s, 2 * eps + 2 * ball_slack, euclidean);
  std::vector<std::size_t> idx;
  return expand(s, nbrs, maxdim, [&](const Simplex& simplex) {
    idx.assign(simplex.begin(), simplex.end());
    return min_enclosing_ball(s, idx).radius <= eps + ball_slack;
  });
}

double connectivity_threshold(const PointCloud& s, const Metric& metric) {
  const std::size_t n = s.size();
  if (n < 2) return 0.0;
  // Prim on the complete graph.
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<char> in_tree(n, 0);
  best[0] = 0.0;
  double longest = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i] && (u == n || best[i] < best[u])) u = i;
    }
    in_tree[u] = 1;
    longest = std::max(longest, best[u]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i]) best[i] = std::min(best[i], metric(s.point(u), s.point(i)));
    }
  }
  return longest;
}

}  // namespace nervus
