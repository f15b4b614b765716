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


#include "tactiplot/rendering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "tactiplot/braille.hpp"
#include "tactiplot/csv.hpp"
#include "tactiplot/description.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/numfmt.hpp"

namespace tactiplot {

std::string_view to_string(StrokePattern pattern) {
  switch (pattern) {
    case StrokePattern::Solid: return "solid";
    case StrokePattern::Dashed: return "dashed";
    case StrokePattern::Dotted: return "dotted";
  }
  return "solid";
}

std::string TactileStyle::dasharray() const {
  switch (pattern) {
    case StrokePattern::Solid: return "";
    case StrokePattern::Dashed: return "8 4";
    case StrokePattern::Dotted: return "0.8 3";
  }
  return "";
}

StyleAssignment assign_line_styles(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "no series to style");
  static constexpr StrokePattern kPatterns[] = {StrokePattern::Solid, StrokePattern::Dashed,
                                                StrokePattern::Dotted};
  static constexpr double kWidths[] = {1.0, 1.6};
  StyleAssignment out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i % 6;
    out.styles.push_back({kPatterns[k % 3], kWidths[k / 3]});
  }
  out.repeats = n > 6;
  return out;
}

std::vector<std::string> reduce_axis_labels(const std::vector<std::string>& labels,
                                            double available_axis_length_mm, double cell_width_mm) {
  const std::size_t n = labels.size();
  if (n <= 3) return labels;
  std::size_t max_cells = 0;
  for (const auto& l : labels) max_cells = std::max(max_cells, braille_cell_count(braille_safe(l)));
  const double per_label = static_cast<double>(max_cells) * cell_width_mm + 2.0 * kMinBrailleClearanceMm;
  const double fit = std::floor(available_axis_length_mm / per_label);
  const auto k = static_cast<std::size_t>(std::clamp(fit, 3.0, 5.0));
  std::vector<std::string> out;
  std::size_t last = n;  // sentinel: nothing taken yet
  for (std::size_t i = 0; i < k; ++i) {
    // round_half_up(i * (n - 1) / (k - 1)) in exact integer arithmetic
    const std::size_t num = i * (n - 1);
    const std::size_t den = k - 1;
    const std::size_t idx = (2 * num + den) / (2 * den);
    if (idx != last) out.push_back(labels[idx]);
    last = idx;
  }
  return out;
}

std::vector<std::string> reduce_axis_labels(const std::vector<std::string>& labels,
                                            const PageSpec& page, Axis axis) {
  const double extent = axis == Axis::X ? page.width_mm : page.height_mm;
  return reduce_axis_labels(labels, extent - 2.0 * page.margin_mm, page.cell_width_mm);
}

namespace {

// Fixed three-decimal output with trailing zeros trimmed.
std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;

  void include(double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
};

// Pixel position of a label along `axis`, when the label is a value.
std::optional<double> label_pixel(const AxisCalibration& axis, const std::string& label) {
  std::optional<double> value;
  if (axis.kind == AxisScaleKind::Time) {
    try {
      value = parse_iso8601(label).epoch_seconds;
    } catch (const Error&) {
      value = parse_number(label);
    }
  } else {
    value = parse_number(label);
  }
  if (!value) return std::nullopt;
  if (axis.kind == AxisScaleKind::Log10 && !(*value > 0.0)) return std::nullopt;
  return axis_value_to_pixel(axis, *value);
}

struct AxisLabel {
  std::string text;
  double pixel = 0.0;  // along the axis, image pixels
};

// Labels from metadata, placed by value when every label is one; otherwise
// spread evenly over the frame. Empty metadata yields five values read off
// the calibration.
std::vector<AxisLabel> axis_labels(const ChartSession& s, Axis which, const Frame& frame,
                                   std::vector<std::string>& warnings) {
  const bool is_x = which == Axis::X;
  const AxisCalibration& axis = is_x ? s.calibration->x_axis : s.calibration->y_axis;
  const auto& texts = s.metadata.labels(is_x ? TextFieldKind::XAxisLabels : TextFieldKind::YAxisLabels);
  // Pixel extent along the axis; y labels run bottom (high px_y) to top.
  const double a = is_x ? frame.x0 : frame.y1;
  const double b = is_x ? frame.x1 : frame.y0;
  std::vector<AxisLabel> out;
  if (texts.size() < 3) {
    warnings.push_back(std::string(is_x ? "x" : "y") + "-axis labels generated from calibration");
    for (int i = 0; i < 5; ++i) {
      const double px = a + (b - a) * i / 4.0;
      out.push_back({format_axis_value(axis, axis_pixel_to_value(axis, px), 4), px});
    }
    return out;
  }
  std::vector<std::optional<double>> positions;
  for (const auto& t : texts) positions.push_back(label_pixel(axis, t));
  const bool by_value = std::all_of(positions.begin(), positions.end(),
                                    [](const auto& p) { return p.has_value(); });
  for (std::size_t i = 0; i < texts.size(); ++i) {
    double px;
    if (by_value) {
      px = *positions[i];
    } else {
      px = texts.size() == 1 ? 0.5 * (a + b) : a + (b - a) * i / double(texts.size() - 1);
    }
    out.push_back({texts[i], px});
  }
  return out;
}

Frame data_frame(const ChartSession& s) {
  const auto& cal = *s.calibration;
  const PixelPoint first = cal.x_axis.p1.pixel;
  Frame f{first.x, first.x, first.y, first.y};
  for (const auto* a : {&cal.x_axis, &cal.y_axis}) {
    f.include(a->p1.pixel.x, a->p1.pixel.y);
    f.include(a->p2.pixel.x, a->p2.pixel.y);
  }
  for (const auto& series : s.series) {
    // Through the data domain and back, as exported.
    for (const auto& d : series_to_data(series.line, cal)) {
      const PixelPoint p = data_to_pixel(cal, d);
      f.include(p.x, p.y);
    }
  }
  for (Axis which : {Axis::X, Axis::Y}) {
    const bool is_x = which == Axis::X;
    const AxisCalibration& axis = is_x ? cal.x_axis : cal.y_axis;
    const auto& texts =
        s.metadata.labels(is_x ? TextFieldKind::XAxisLabels : TextFieldKind::YAxisLabels);
    std::vector<double> px;
    for (const auto& t : texts) {
      if (auto p = label_pixel(axis, t)) px.push_back(*p);
    }
    if (texts.size() < 3 || px.size() != texts.size()) continue;
    for (double p : px) {
      if (is_x) {
        f.x0 = std::min(f.x0, p);
        f.x1 = std::max(f.x1, p);
      } else {
        f.y0 = std::min(f.y0, p);
        f.y1 = std::max(f.y1, p);
      }
    }
  }
  if (f.x1 - f.x0 < 1.0) {
    f.x0 -= 1.0;
    f.x1 += 1.0;
  }
  if (f.y1 - f.y0 < 1.0) {
    f.y0 -= 1.0;
    f.y1 += 1.0;
  }
  return f;
}

// Linear map from frame pixels into a page rectangle.
struct Placement {
  Frame frame;
  double left, top, width, height;

  double x(double px) const { return left + (px - frame.x0) / (frame.x1 - frame.x0) * width; }
  double y(double py) const { return top + (py - frame.y0) / (frame.y1 - frame.y0) * height; }
};

std::vector<std::vector<PixelPoint>> series_geometry(const ChartSession& s) {
  std::vector<std::vector<PixelPoint>> out;
  for (const auto& series : s.series) {
    std::vector<PixelPoint> pts;
    for (const auto& d : series_to_data(series.line, *s.calibration)) {
      pts.push_back(data_to_pixel(*s.calibration, d));
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::string points_attr(const std::vector<PixelPoint>& pts, const Placement& place) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(place.x(pts[i].x)) + "," + num(place.y(pts[i].y));
  }
  return out;
}

// Splits a Braille string into lines of at most `budget` cells, breaking at
// blank cells where possible.
std::vector<std::string> wrap_braille(const std::string& braille, std::size_t budget) {
  std::vector<std::string> lines;
  if (braille.empty()) return lines;
  const auto cells = decode_utf8(braille);
  std::vector<std::u32string> words(1);
  for (char32_t c : cells) {
    if (c == 0x2800) {
      words.emplace_back();
    } else {
      words.back() += c;
    }
  }
  std::u32string line;
  auto flush = [&] {
    if (line.empty()) return;
    std::string utf8;
    for (char32_t c : line) utf8 += encode_utf8(c);
    lines.push_back(std::move(utf8));
    line.clear();
  };
  for (auto word : words) {
    if (word.empty()) continue;
    while (word.size() > budget) {
      flush();
      line = word.substr(0, budget);
      flush();
      word = word.substr(budget);
    }
    if (!line.empty() && line.size() + 1 + word.size() > budget) flush();
    if (!line.empty()) line += char32_t{0x2800};
    line += word;
  }
  flush();
  return lines;
}

struct BrailleText {
  std::string text;
  double x = 0;  // anchor
  double baseline = 0;
  const char* anchor = "start";
  std::string cls;
};

std::string text_element(const BrailleText& t, const PageSpec& page) {
  const std::size_t cells = braille_cell_count(t.text);
  return "<text class=\"" + t.cls + "\" x=\"" + num(t.x) + "\" y=\"" + num(t.baseline) +
         "\" text-anchor=\"" + t.anchor + "\" font-size=\"" + num(page.cell_height_mm) +
         "\" textLength=\"" + num(static_cast<double>(cells) * page.cell_width_mm) +
         "\" lengthAdjust=\"spacingAndGlyphs\">" + t.text + "</text>\n";
}

std::string line_element(double x1, double y1, double x2, double y2, double width,
                         const std::string& cls) {
  return "<line class=\"" + cls + "\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"#000000\" stroke-width=\"" + num(width) +
         "\"/>\n";
}

void require_renderable(const ChartSession& s) {
  require_complete(s);
}

RenderResult render_print(const ChartSession& s, const PageSpec& page) {
  if (!(page.width_mm > 40.0 && page.height_mm > 40.0)) {
    throw Error(ErrorCode::InvalidInput, "page must exceed 40 mm per side");
  }
  if (page.margin_mm < kMinBrailleClearanceMm || page.braille_clearance_mm < kMinBrailleClearanceMm) {
    throw Error(ErrorCode::InvalidInput, "print margin and Braille clearance must be at least 3.0 mm");
  }
  RenderResult result;
  auto& warnings = result.warnings;
  const auto& md = s.metadata;
  const double W = page.width_mm;
  const double H = page.height_mm;
  const double m = page.margin_mm;
  const double c = page.braille_clearance_mm;
  const double cw = page.cell_width_mm;
  const double ch = page.cell_height_mm;
  const double gap = c + 1.5;  // Braille box to nearest stroke centre line
  const double tick = 3.0;
  const double axis_width = 1.0;
  const double tick_width = 0.8;

  auto braille = [&](const std::string& text, const std::string& what) {
    bool dropped = false;
    std::string b = braille_safe(text, &dropped);
    if (dropped) warnings.push_back(what + ": characters without a Braille mapping were dropped");
    return b;
  };
  const auto budget = static_cast<std::size_t>(std::max(1.0, std::floor((W - 2 * m - 2 * c) / cw)));
  auto wrapped = [&](TextFieldKind kind, const std::string& what) {
    auto lines = wrap_braille(braille(md.text(kind), what), budget);
    if (lines.size() > 1) warnings.push_back(what + " wrapped over " + std::to_string(lines.size()) + " Braille lines");
    return lines;
  };
  const auto title_lines = wrapped(TextFieldKind::PlotTitle, "plot title");
  const auto ytitle_lines = wrapped(TextFieldKind::YAxisTitle, "y-axis title");
  const auto xtitle_lines = wrapped(TextFieldKind::XAxisTitle, "x-axis title");

  const Frame frame = data_frame(s);
  auto xlabels = axis_labels(s, Axis::X, frame, warnings);
  auto ylabels = axis_labels(s, Axis::Y, frame, warnings);
  std::vector<std::string> xl_braille, yl_braille;
  std::size_t x_cells = 0, y_cells = 0;
  for (const auto& l : xlabels) x_cells = std::max(x_cells, braille_cell_count(braille(l.text, "x-axis label")));
  for (const auto& l : ylabels) y_cells = std::max(y_cells, braille_cell_count(braille(l.text, "y-axis label")));

  // Legend entries: a style sample followed by the series name.
  const std::size_t legend_cap = 14;
  std::vector<std::string> legend_names;
  std::size_t legend_cells = 0;
  for (const auto& series : s.series) {
    std::string name = braille(series.line.name, "series name");
    auto cells = decode_utf8(name);
    if (cells.size() > legend_cap) {
      warnings.push_back("series name truncated in legend");
      cells.resize(legend_cap);
      name.clear();
      for (char32_t cp : cells) name += encode_utf8(cp);
    }
    legend_cells = std::max(legend_cells, cells.size());
    legend_names.push_back(std::move(name));
  }
  const bool legend = legend_cells > 0;
  const double sample_len = 12.0;

  // Vertical bands, top down.
  std::vector<BrailleText> texts;
  double top = m + c;
  double text_bottom = m;
  for (const auto& line : title_lines) {
    texts.push_back({line, W / 2, top + ch, "middle", "braille title"});
    text_bottom = top + ch;
    top += ch + c;
  }
  for (const auto& line : ytitle_lines) {
    texts.push_back({line, m + c, top + ch, "start", "braille y-title"});
    text_bottom = top + ch;
    top += ch + c;
  }
  double bottom = H - m - c;
  for (auto it = xtitle_lines.rbegin(); it != xtitle_lines.rend(); ++it) {
    texts.push_back({*it, W / 2, bottom, "middle", "braille x-title"});
    bottom -= ch + c;
  }
  const double xlabel_offset = std::max(tick + gap, ch / 2 + c + 0.5);
  const double plot_top = text_bottom + gap + ch / 2;
  const double half_x = static_cast<double>(x_cells) * cw / 2;
  const double plot_left = std::max(m + c + static_cast<double>(y_cells) * cw + gap + tick, m + c + half_x);
  const double legend_w = legend ? sample_len + gap + static_cast<double>(legend_cells) * cw : 0.0;
  const double legend_left = W - m - c - legend_w;
  double plot_right = W - m - c - half_x;
  if (legend) plot_right = std::min(plot_right, legend_left - 8.0);
  const double row_step = ch + c + 0.5;

  struct Layout {
    double xlabel_top = 0, plot_bottom = 0;
    Placement place{};
    std::vector<AxisLabel> x_kept, y_kept;
    std::vector<int> x_row;
    bool x_thinned = false, y_thinned = false;
  };

  // Axis labels: reduce to the budget, then drop interior labels whose
  // boxes would crowd a neighbour. X labels may use a second, lower row.
  auto place_axis = [&](const Placement& place, const std::vector<AxisLabel>& labels, Axis which,
                        int rows, std::vector<int>& row_of, bool& thinned) {
    const bool is_x = which == Axis::X;
    const double axis_len = is_x ? place.width : place.height;
    std::vector<std::string> texts_in;
    for (const auto& l : labels) texts_in.push_back(l.text);
    const auto kept_texts = reduce_axis_labels(texts_in, axis_len, cw);
    std::vector<AxisLabel> kept;
    std::size_t from = 0;
    for (const auto& t : kept_texts) {
      for (; from < labels.size(); ++from) {
        if (labels[from].text == t) {
          kept.push_back(labels[from++]);
          break;
        }
      }
    }
    struct Box { double lo, hi; };
    auto box_of = [&](const AxisLabel& l) {
      const double cells = static_cast<double>(braille_cell_count(braille_safe(l.text)));
      if (is_x) {
        const double cx = place.x(l.pixel);
        return Box{cx - cells * cw / 2, cx + cells * cw / 2};
      }
      const double cy = place.y(l.pixel);
      return Box{cy - ch / 2, cy + ch / 2};
    };
    auto clear = [&](const AxisLabel& a, const AxisLabel& b) {
      Box ba = box_of(a), bb = box_of(b);
      if (ba.lo > bb.lo) std::swap(ba, bb);
      return bb.lo - ba.hi >= c;
    };
    std::vector<AxisLabel> spaced;
    row_of.clear();
    std::vector<const AxisLabel*> row_last(static_cast<std::size_t>(rows), nullptr);
    auto fits = [&](const AxisLabel& l) -> int {
      for (int r = 0; r < rows; ++r) {
        if (!row_last[r] || clear(*row_last[r], l)) return r;
      }
      return -1;
    };
    for (std::size_t i = 0; i < kept.size(); ++i) {
      int r = fits(kept[i]);
      if (r < 0 && i + 1 == kept.size()) {
        // Keep the last label; drop earlier interior ones until it fits.
        while (spaced.size() > 1 && r < 0) {
          spaced.pop_back();
          row_of.pop_back();
          std::fill(row_last.begin(), row_last.end(), nullptr);
          for (std::size_t j = 0; j < spaced.size(); ++j) row_last[row_of[j]] = &spaced[j];
          r = fits(kept[i]);
        }
      }
      if (r < 0) continue;
      spaced.push_back(kept[i]);
      row_of.push_back(r);
      std::fill(row_last.begin(), row_last.end(), nullptr);
      for (std::size_t j = 0; j < spaced.size(); ++j) row_last[row_of[j]] = &spaced[j];
    }
    thinned = spaced.size() < kept.size();
    return spaced;
  };

  auto layout = [&](int rows) {
    Layout out;
    out.xlabel_top = bottom - ch - (rows - 1) * row_step;
    out.plot_bottom = out.xlabel_top - xlabel_offset;
    if (plot_right - plot_left < 20.0 || out.plot_bottom - plot_top < 20.0) {
      throw Error(ErrorCode::InvalidInput, "page too small for the chart layout");
    }
    out.place = Placement{frame, plot_left, plot_top, plot_right - plot_left, out.plot_bottom - plot_top};
    out.x_kept = place_axis(out.place, xlabels, Axis::X, rows, out.x_row, out.x_thinned);
    std::vector<int> unused;
    out.y_kept = place_axis(out.place, ylabels, Axis::Y, 1, unused, out.y_thinned);
    return out;
  };
  Layout lay = layout(1);
  if (lay.x_thinned && lay.x_kept.size() < 3) {
    try {
      Layout two = layout(2);
      if (two.x_kept.size() > lay.x_kept.size()) lay = std::move(two);
    } catch (const Error&) {
    }
  }
  if (lay.x_thinned) warnings.push_back("x-axis labels thinned to keep Braille clearance");
  if (lay.y_thinned) warnings.push_back("y-axis labels thinned to keep Braille clearance");
  const double xlabel_top = lay.xlabel_top;
  const double plot_bottom = lay.plot_bottom;
  const Placement& place = lay.place;
  const auto& x_kept = lay.x_kept;
  const auto& y_kept = lay.y_kept;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W)
      << "mm\" height=\"" << num(H) << "mm\" viewBox=\"0 0 " << num(W) << " " << num(H) << "\">\n";

  svg << "<g class=\"axes\" fill=\"none\">\n";
  svg << line_element(plot_left, plot_bottom, plot_right, plot_bottom, axis_width, "axis x-axis");
  svg << line_element(plot_left, plot_top, plot_left, plot_bottom, axis_width, "axis y-axis");
  for (const auto& l : x_kept) {
    const double x = place.x(l.pixel);
    svg << line_element(x, plot_bottom, x, plot_bottom + tick, tick_width, "tick x-tick");
  }
  for (const auto& l : y_kept) {
    const double y = place.y(l.pixel);
    svg << line_element(plot_left - tick, y, plot_left, y, tick_width, "tick y-tick");
  }
  svg << "</g>\n";

  const auto styles = assign_line_styles(s.series.size());
  if (styles.repeats) warnings.push_back("more than 6 series; tactile line styles repeat");
  const auto geometry = series_geometry(s);
  svg << "<g class=\"series\" fill=\"none\" stroke=\"#000000\" stroke-linejoin=\"round\">\n";
  for (std::size_t i = 0; i < s.series.size(); ++i) {
    const auto& style = styles.styles[i];
    svg << "<polyline class=\"series-line\" data-series=\"" << xml_escape(s.series[i].line.id)
        << "\" stroke-width=\"" << num(style.stroke_width_mm) << "\"";
    if (!style.dasharray().empty()) svg << " stroke-dasharray=\"" << style.dasharray() << "\"";
    svg << " points=\"" << points_attr(geometry[i], place) << "\"/>\n";
  }
  svg << "</g>\n";

  if (legend) {
    svg << "<g class=\"legend\" fill=\"none\">\n";
    double row_top = plot_top - ch / 2;
    for (std::size_t i = 0; i < s.series.size(); ++i) {
      if (row_top + ch > plot_bottom + ch / 2) {
        warnings.push_back("legend truncated; not every series fits beside the plot");
        break;
      }
      const auto& style = styles.styles[i];
      const double y = row_top + ch / 2;
      svg << "<line class=\"legend-sample\" x1=\"" << num(legend_left) << "\" y1=\"" << num(y)
          << "\" x2=\"" << num(legend_left + sample_len) << "\" y2=\"" << num(y)
          << "\" stroke=\"#000000\" stroke-width=\"" << num(style.stroke_width_mm) << "\"";
      if (!style.dasharray().empty()) svg << " stroke-dasharray=\"" << style.dasharray() << "\"";
      svg << "/>\n";
      if (!legend_names[i].empty()) {
        texts.push_back({legend_names[i], legend_left + sample_len + gap, row_top + ch, "start",
                         "braille legend-label"});
      }
      row_top += ch + c;
    }
    svg << "</g>\n";
  }

  for (std::size_t i = 0; i < x_kept.size(); ++i) {
    const auto& l = x_kept[i];
    texts.push_back({braille_safe(l.text), place.x(l.pixel), xlabel_top + ch + lay.x_row[i] * row_step,
                     "middle", "braille x-label"});
  }
  for (const auto& l : y_kept) {
    texts.push_back({braille_safe(l.text), plot_left - tick - gap, place.y(l.pixel) + ch / 2, "end",
                     "braille y-label"});
  }
  svg << "<g class=\"braille-text\" fill=\"#000000\" font-family=\"'Braille', 'DejaVu Sans', sans-serif\">\n";
  for (const auto& t : texts) {
    if (!t.text.empty()) svg << text_element(t, page);
  }
  svg << "</g>\n</svg>\n";
  result.svg = svg.str();
  return result;
}

const char* kPalette[] = {"#1b5e9e", "#c2401c", "#2e7d32", "#6a3d9a", "#8c6d00", "#00796b"};

RenderResult render_digital(const ChartSession& s) {
  RenderResult result;
  auto& warnings = result.warnings;
  const auto& md = s.metadata;
  const Frame frame = data_frame(s);
  const double L = 90, T = 60, R = 40, B = 80;
  const double pw = frame.x1 - frame.x0;
  const double ph = frame.y1 - frame.y0;
  const double W = L + pw + R;
  const double H = T + ph + B;
  const Placement place{frame, L, T, pw, ph};
  const double marker_r = 0.003 * std::min(W, H);

  const std::string title = md.text(TextFieldKind::PlotTitle);
  const std::string description = generate_description(s);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(W)
      << "\" height=\"" << num(H) << "\" viewBox=\"0 0 " << num(W) << " " << num(H)
      << "\" role=\"img\" aria-labelledby=\"chart-title chart-desc\">\n";
  svg << "<title id=\"chart-title\">" << xml_escape(title.empty() ? "Line chart (untitled)" : title)
      << "</title>\n";
  svg << "<desc id=\"chart-desc\">" << xml_escape(description) << "</desc>\n";

  svg << "<g class=\"axes\" stroke=\"#333333\" stroke-width=\"1.5\" fill=\"none\" aria-hidden=\"true\">\n";
  svg << "<line class=\"axis x-axis\" x1=\"" << num(L) << "\" y1=\"" << num(T + ph) << "\" x2=\""
      << num(L + pw) << "\" y2=\"" << num(T + ph) << "\"/>\n";
  svg << "<line class=\"axis y-axis\" x1=\"" << num(L) << "\" y1=\"" << num(T) << "\" x2=\""
      << num(L) << "\" y2=\"" << num(T + ph) << "\"/>\n";
  const auto xlabels = axis_labels(s, Axis::X, frame, warnings);
  const auto ylabels = axis_labels(s, Axis::Y, frame, warnings);
  for (const auto& l : xlabels) {
    const double x = place.x(l.pixel);
    svg << "<line class=\"tick\" x1=\"" << num(x) << "\" y1=\"" << num(T + ph) << "\" x2=\""
        << num(x) << "\" y2=\"" << num(T + ph + 6) << "\"/>\n";
  }
  for (const auto& l : ylabels) {
    const double y = place.y(l.pixel);
    svg << "<line class=\"tick\" x1=\"" << num(L - 6) << "\" y1=\"" << num(y) << "\" x2=\""
        << num(L) << "\" y2=\"" << num(y) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#111111\">\n";
  if (!title.empty()) {
    svg << "<text class=\"title\" x=\"" << num(W / 2) << "\" y=\"30\" text-anchor=\"middle\" font-size=\"18\">"
        << xml_escape(title) << "</text>\n";
  }
  const std::string& ytitle = md.text(TextFieldKind::YAxisTitle);
  if (!ytitle.empty()) {
    svg << "<text class=\"y-title\" x=\"" << num(L) << "\" y=\"" << num(T - 14)
        << "\" text-anchor=\"start\">" << xml_escape(ytitle) << "</text>\n";
  }
  const std::string& xtitle = md.text(TextFieldKind::XAxisTitle);
  if (!xtitle.empty()) {
    svg << "<text class=\"x-title\" x=\"" << num(L + pw / 2) << "\" y=\"" << num(H - 18)
        << "\" text-anchor=\"middle\">" << xml_escape(xtitle) << "</text>\n";
  }
  for (const auto& l : xlabels) {
    svg << "<text class=\"x-label\" x=\"" << num(place.x(l.pixel)) << "\" y=\"" << num(T + ph + 24)
        << "\" text-anchor=\"middle\">" << xml_escape(l.text) << "</text>\n";
  }
  for (const auto& l : ylabels) {
    svg << "<text class=\"y-label\" x=\"" << num(L - 10) << "\" y=\"" << num(place.y(l.pixel) + 5)
        << "\" text-anchor=\"end\">" << xml_escape(l.text) << "</text>\n";
  }
  svg << "</g>\n";

  const auto geometry = series_geometry(s);
  for (std::size_t i = 0; i < s.series.size(); ++i) {
    const auto& line = s.series[i].line;
    const char* color = kPalette[i % std::size(kPalette)];
    const std::string gid = "series-" + line.id;
    svg << "<g id=\"" << xml_escape(gid) << "\" class=\"series\" role=\"graphics-object\" aria-labelledby=\""
        << xml_escape(gid) << "-title " << xml_escape(gid) << "-desc\">\n";
    svg << "<title id=\"" << xml_escape(gid) << "-title\">"
        << xml_escape(line.name.empty() ? "Unnamed line" : line.name) << "</title>\n";
    svg << "<desc id=\"" << xml_escape(gid) << "-desc\">" << xml_escape(describe_series(s, i))
        << "</desc>\n";
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
        << points_attr(geometry[i], place) << "\"/>\n";
    for (const auto& p : geometry[i]) {
      svg << "<circle cx=\"" << num(place.x(p.x)) << "\" cy=\"" << num(place.y(p.y)) << "\" r=\""
          << num(marker_r) << "\" fill=\"" << color << "\"/>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  result.svg = svg.str();
  return result;
}

}  // namespace

RenderResult render_svg(const ChartSession& session, RenderMode mode, const PageSpec& page) {
  require_renderable(session);
  return mode == RenderMode::PrintAccessible ? render_print(session, page) : render_digital(session);
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string csv_value(const AxisCalibration& axis, double v) {
  if (axis.kind == AxisScaleKind::Time) return format_iso8601(v, axis.time_precision);
  return format_significant(v, 10);
}

}  // namespace

std::string export_csv(const ChartSession& s) {
  if (s.series.empty()) throw Error(ErrorCode::IncompleteSession, "session incomplete; missing: series");
  require_complete(s);
  const auto& md = s.metadata;
  std::string description = md.text(TextFieldKind::ChartDescription);
  if (description.empty()) description = generate_description(s);

  std::string out;
  auto meta = [&out](const char* key, const std::string& value) {
    out += "# ";
    out += key;
    out += ": " + csv::quote_field(value) + "\n";
  };
  meta("title", md.text(TextFieldKind::PlotTitle));
  meta("x_axis", md.text(TextFieldKind::XAxisTitle));
  meta("y_axis", md.text(TextFieldKind::YAxisTitle));
  meta("description", description);
  out += "series,x,y\n";
  const auto& cal = *s.calibration;
  for (const auto& series : s.series) {
    auto data = series_to_data(series.line, cal);
    std::stable_sort(data.begin(), data.end(),
                     [](const DataPoint& a, const DataPoint& b) { return a.x < b.x; });
    for (const auto& d : data) {
      out += csv::format_row({series.line.name, csv_value(cal.x_axis, d.x), csv_value(cal.y_axis, d.y)});
    }
  }
  return out;
}

CsvDocument parse_export_csv(std::string_view text) {
  CsvDocument doc;
  csv::Reader reader(text);
  while (reader.consume("# ")) {
    const std::string_view rest = reader.peek_rest_of_line();
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::Format, "metadata line without ':'");
    const std::string key(rest.substr(0, colon));
    reader.consume(rest.substr(0, colon + 1));
    reader.consume(" ");
    doc.metadata[key] = reader.read_field();
    if (!reader.at_record_end()) throw Error(ErrorCode::Format, "trailing data after metadata value");
    reader.skip_record_end();
  }
  const auto header = reader.read_record();
  if (header != std::vector<std::string>{"series", "x", "y"}) {
    throw Error(ErrorCode::Format, "expected header 'series,x,y'");
  }
  while (!reader.at_end()) {
    auto fields = reader.read_record();
    if (fields.size() != 3) throw Error(ErrorCode::Format, "data rows need exactly 3 fields");
    doc.rows.push_back({std::move(fields[0]), std::move(fields[1]), std::move(fields[2])});
  }
  return doc;
}

double parse_csv_value(std::string_view text) {
  if (auto v = parse_number(text)) return *v;
  return parse_iso8601(text).epoch_seconds;
}

ExportBundle export_bundle(const ChartSession& session) {
  ExportBundle bundle;
  auto digital = render_svg(session, RenderMode::DigitalAccessible);
  auto print = render_svg(session, RenderMode::PrintAccessible);
  bundle.svg_digital = std::move(digital.svg);
  bundle.svg_print = std::move(print.svg);
  bundle.csv = export_csv(session);
  bundle.description = generate_description(session);
  bundle.warnings = std::move(digital.warnings);
  for (auto& w : print.warnings) {
    if (std::find(bundle.warnings.begin(), bundle.warnings.end(), w) == bundle.warnings.end()) {
      bundle.warnings.push_back(std::move(w));
    }
  }
  return bundle;
}

}  // namespace tactiplot
