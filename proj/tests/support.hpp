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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tactiplot/calibration.hpp"
#include "tactiplot/image.hpp"
#include "tactiplot/line_extraction.hpp"
#include "tactiplot/session.hpp"

namespace tactiplot::testing {

// Paints pixels whose centre lies within width/2 of the polyline, clipped
// to the polyline's x-range (butt ends).
void draw_polyline(RasterImage& image, const PixelPolyline& line, double width, Rgba color);

void fill_rect(RasterImage& image, int x0, int y0, int x1, int y1, Rgba color);

struct SyntheticChart {
  RasterImage image;
  CalibrationSet calibration;
  PixelPolyline truth;  // the drawn centre line
  Rgba color;
  double line_width = 3.0;
  PixelPoint seed;      // a pixel on the line
};

// 800x600 line chart with axes, grid and one polyline of random shape.
SyntheticChart random_chart(std::mt19937_64& rng, int width = 800, int height = 600);

// Linear y at pixel x along a polyline sorted by x.
double interpolate_y(const PixelPolyline& line, double x);

std::vector<std::uint8_t> png_bytes(const RasterImage& image);

// Minimum over all monotone couplings, by enumeration.
double brute_force_frechet(const PixelPolyline& p, const PixelPolyline& q);

struct SessionShape {
  int series = 1;
  AxisScaleKind x_kind = AxisScaleKind::Linear;
  AxisScaleKind y_kind = AxisScaleKind::Linear;
  bool labels = true;
  bool titles = true;
  std::string title;  // empty: generated
};

// A complete session over a blank 800x600 image with random keypoints.
ChartSession random_session(std::mt19937_64& rng, const SessionShape& shape);

// The worked example: "Sales" by "Year", one increasing series.
ChartSession sales_session();

PixelPolyline random_polyline(std::mt19937_64& rng, int min_points, int max_points,
                              double extent = 500.0);

std::string temp_dir(const std::string& prefix);

}  // namespace tactiplot::testing
