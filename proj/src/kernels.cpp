// Copyright 2026 The Tactiplot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "tactiplot/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tactiplot::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integer threshold so the comparison is exact: d <= tol  <=>  d^2 <= floor(tol^2).
long long tolerance_sq(double tolerance) {
  if (tolerance < 0.0) return -1;
  return static_cast<long long>(std::floor(tolerance * tolerance + 1e-9));
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

double frechet(std::span<const PixelPoint> p, std::span<const PixelPoint> q) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  std::vector<double> prev(m, kInf);
  std::vector<double> cur(m, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distance(p[i], q[j]);
      double best;
      if (i == 0 && j == 0) {
        best = d;
      } else {
        double reach = kInf;
        if (i > 0) reach = std::min(reach, prev[j]);
        if (j > 0) reach = std::min(reach, cur[j - 1]);
        if (i > 0 && j > 0) reach = std::min(reach, prev[j - 1]);
        best = std::max(d, reach);
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

std::vector<std::uint8_t> color_match(const RasterImage& image, Rgba color, double tolerance) {
  const long long tol2 = tolerance_sq(tolerance);
  const int w = image.width();
  const int h = image.height();
  std::vector<std::uint8_t> match(static_cast<std::size_t>(w) * h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      match[static_cast<std::size_t>(y) * w + x] = rgb_distance_sq(image.at(x, y), color) <= tol2;
    }
  }
  return match;
}

std::vector<ColumnSum> column_sums(const MaskImage& mask) {
  std::vector<ColumnSum> out(static_cast<std::size_t>(mask.width()));
  for (int x = 0; x < mask.width(); ++x) {
    ColumnSum s;
    for (int y = 0; y < mask.height(); ++y) {
      if (mask.at(x, y)) {
        ++s.count;
        s.sum_center_y += y + 0.5;
      }
    }
    out[x] = s;
  }
  return out;
}

}  // namespace serial

namespace parallel {

double frechet(std::span<const PixelPoint> p, std::span<const PixelPoint> q) {
  const long n = static_cast<long>(p.size());
  const long m = static_cast<long>(q.size());
  // Diagonals indexed by row i; d2 = diagonal k-2, d1 = k-1, d0 = k.
  std::vector<double> d2(n, kInf), d1(n, kInf), d0(n, kInf);
  for (long k = 0; k <= n + m - 2; ++k) {
    const long lo = std::max(0L, k - (m - 1));
    const long hi = std::min(n - 1, k);
#pragma omp parallel for schedule(static) if (hi - lo > 256)
    for (long i = lo; i <= hi; ++i) {
      const long j = k - i;
      const double d = distance(p[i], q[j]);
      if (i == 0 && j == 0) {
        d0[i] = d;
        continue;
      }
      double reach = kInf;
      if (i > 0) reach = std::min(reach, d1[i - 1]);      // (i-1, j)
      if (j > 0) reach = std::min(reach, d1[i]);          // (i, j-1)
      if (i > 0 && j > 0) reach = std::min(reach, d2[i - 1]);  // (i-1, j-1)
      d0[i] = std::max(d, reach);
    }
    std::swap(d2, d1);
    std::swap(d1, d0);
  }
  return d1[n - 1];
}

std::vector<std::uint8_t> color_match(const RasterImage& image, Rgba color, double tolerance) {
  const long long tol2 = tolerance_sq(tolerance);
  const int w = image.width();
  const int h = image.height();
  std::vector<std::uint8_t> match(static_cast<std::size_t>(w) * h, 0);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      match[static_cast<std::size_t>(y) * w + x] = rgb_distance_sq(image.at(x, y), color) <= tol2;
    }
  }
  return match;
}

std::vector<ColumnSum> column_sums(const MaskImage& mask) {
  std::vector<ColumnSum> out(static_cast<std::size_t>(mask.width()));
  const int w = mask.width();
  const int h = mask.height();
#pragma omp parallel for schedule(static)
  for (int x = 0; x < w; ++x) {
    ColumnSum s;
    for (int y = 0; y < h; ++y) {
      if (mask.at(x, y)) {
        ++s.count;
        s.sum_center_y += y + 0.5;
      }
    }
    out[x] = s;
  }
  return out;
}

}  // namespace parallel

}  // namespace tactiplot::kernels
