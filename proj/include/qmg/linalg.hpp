// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qmg/common.hpp"

namespace qmg {

using Vec = std::vector<double>;

// Dense row-major matrix. Deliberately minimal: the trainable networks in
// this project are small enough that explicit loops with exact, auditable
// arithmetic beat a BLAS dependency.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  std::size_t size() const { return data.size(); }
};

// y = A^T x when treating A as (in x out), i.e. y_j = sum_i x_i A(i,j) + b_j.
inline Vec affine_in_out(const Mat& a, const Vec& b, const Vec& x) {
  if (x.size() != a.rows || b.size() != a.cols)
    throw ShapeMismatch("affine: input/weight shape mismatch");
  Vec y(b);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const double* row = &a.data[i * a.cols];
    for (std::size_t j = 0; j < a.cols; ++j) y[j] += xi * row[j];
  }
  return y;
}

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double mean(const Vec& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Uniform init in [-1/sqrt(fan_in), 1/sqrt(fan_in)].
inline void init_uniform_fanin(Mat& m, std::size_t fan_in,
                               std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in == 0 ? 1 : fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& x : m.data) x = dist(rng);
}

inline void init_uniform_fanin(Vec& v, std::size_t fan_in,
                               std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in == 0 ? 1 : fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& x : v) x = dist(rng);
}

}  // namespace qmg
