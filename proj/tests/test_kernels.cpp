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


#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tactiplot/kernels.hpp"

using namespace tactiplot;
namespace k = tactiplot::kernels;

TEST_CASE("parallel Frechet equals the serial table") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto p = testing::random_polyline(rng, 1, 120);
    const auto q = testing::random_polyline(rng, 1, 120);
    CHECK(k::parallel::frechet(p, q) == k::serial::frechet(p, q));
  }
}

TEST_CASE("parallel color match and column sums equal the serial forms") {
  std::mt19937_64 rng(9);
  RasterImage image(97, 61);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      image.set(x, y, {std::uint8_t(rng() % 4 * 60), std::uint8_t(rng() % 4 * 60), 0, 255});
    }
  }
  for (double tol : {0.0, 60.0, 120.0}) {
    const auto s = k::serial::color_match(image, {60, 60, 0, 255}, tol);
    CHECK(k::parallel::color_match(image, {60, 60, 0, 255}, tol) == s);

    MaskImage mask(image.width(), image.height());
    for (int y = 0; y < mask.height(); ++y) {
      for (int x = 0; x < mask.width(); ++x) mask.set(x, y, s[std::size_t(y) * mask.width() + x] != 0);
    }
    const auto a = k::serial::column_sums(mask);
    const auto b = k::parallel::column_sums(mask);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].count == b[i].count);
      CHECK(a[i].sum_center_y == b[i].sum_center_y);
    }
  }
}

TEST_CASE("color distance ignores alpha") {
  CHECK(k::rgb_distance_sq({1, 2, 3, 0}, {4, 6, 3, 255}) == 25);
}
