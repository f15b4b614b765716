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


// Times the serial and OpenMP kernels on the same inputs and checks that
// they agree.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "tactiplot/kernels.hpp"

using namespace tactiplot;
namespace k = tactiplot::kernels;

namespace {

double best_of(int reps, const std::function<void()>& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

std::vector<PixelPoint> walk(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> step(0.0, 2.0);
  std::vector<PixelPoint> out;
  PixelPoint p{0, 300};
  for (std::size_t i = 0; i < n; ++i) {
    p = {p.x + 1.0, p.y + step(rng)};
    out.push_back(p);
  }
  return out;
}

void report(const char* name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-14s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::printf("threads: %d\n", k::max_threads());

  const auto p = walk(rng, 2000);
  const auto q = walk(rng, 2000);
  double fs = 0, fp = 0;
  const double ts = best_of(3, [&] { fs = k::serial::frechet(p, q); });
  const double tp = best_of(3, [&] { fp = k::parallel::frechet(p, q); });
  report("frechet", ts, tp, fs == fp);

  RasterImage image(1600, 1200);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      image.set(x, y, {std::uint8_t(byte(rng)), std::uint8_t(byte(rng)), std::uint8_t(byte(rng)), 255});
    }
  }
  std::vector<std::uint8_t> ms, mp;
  const Rgba target{128, 64, 200, 255};
  const double cs = best_of(5, [&] { ms = k::serial::color_match(image, target, 90.0); });
  const double cp = best_of(5, [&] { mp = k::parallel::color_match(image, target, 90.0); });
  report("color_match", cs, cp, ms == mp);

  MaskImage mask(image.width(), image.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) mask.set(x, y, ms[std::size_t(y) * mask.width() + x] != 0);
  }
  std::vector<k::ColumnSum> ss, sp;
  const double ks = best_of(5, [&] { ss = k::serial::column_sums(mask); });
  const double kp = best_of(5, [&] { sp = k::parallel::column_sums(mask); });
  bool same = ss.size() == sp.size();
  for (std::size_t i = 0; same && i < ss.size(); ++i) {
    same = ss[i].count == sp[i].count && ss[i].sum_center_y == sp[i].sum_center_y;
  }
  report("column_sums", ks, kp, same);
  return 0;
}
