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


#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant computing bit-identical results; the public operations
// call the parallel form, tests compare both, bench/ times them.

#include <cstdint>
#include <span>
#include <vector>

#include "tactiplot/geometry.hpp"
#include "tactiplot/image.hpp"

namespace tactiplot::kernels {

struct ColumnSum {
  std::uint32_t count = 0;
  double sum_center_y = 0.0;
};

namespace serial {

// Row-by-row coupling table.
double frechet(std::span<const PixelPoint> p, std::span<const PixelPoint> q);

// match[i] = 1 iff RGB distance of pixel i to `color` <= tolerance.
std::vector<std::uint8_t> color_match(const RasterImage& image, Rgba color, double tolerance);

std::vector<ColumnSum> column_sums(const MaskImage& mask);

}  // namespace serial

namespace parallel {

// Anti-diagonal wavefront over the coupling table.
double frechet(std::span<const PixelPoint> p, std::span<const PixelPoint> q);

std::vector<std::uint8_t> color_match(const RasterImage& image, Rgba color, double tolerance);

std::vector<ColumnSum> column_sums(const MaskImage& mask);

}  // namespace parallel

// Squared RGB distance; alpha is ignored.
inline int rgb_distance_sq(Rgba a, Rgba b) {
  const int dr = int(a.r) - int(b.r);
  const int dg = int(a.g) - int(b.g);
  const int db = int(a.b) - int(b.b);
  return dr * dr + dg * dg + db * db;
}

int max_threads();

}  // namespace tactiplot::kernels
