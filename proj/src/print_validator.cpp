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


#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "tactiplot/braille.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/numfmt.hpp"
#include "tactiplot/rendering.hpp"

namespace tactiplot {

namespace {

namespace pt = boost::property_tree;

constexpr double kEps = 1e-6;

struct Rect {
  double x0, y0, x1, y1;
};

struct Segment {
  PixelPoint a, b;
  double half_width;  // mm
};

struct Style {
  std::string stroke = "none";
  double stroke_width = 1.0;  // user units
  std::string fill = "#000000";
  std::string anchor = "start";
};

struct Scene {
  std::vector<Segment> segments;
  std::vector<Rect> areas;       // filled shapes
  std::vector<Rect> braille;     // text boxes
  std::vector<std::string> violations;
  int x_labels = 0;
  int y_labels = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// "12.5mm" and friends, in millimetres; bare numbers are CSS px.
std::optional<double> length_mm(std::string_view text) {
  static const std::pair<std::string_view, double> kUnits[] = {
      {"mm", 1.0}, {"cm", 10.0}, {"in", 25.4}, {"pt", 25.4 / 72.0}, {"px", 25.4 / 96.0}};
  std::string t = trim(text);
  double factor = 25.4 / 96.0;
  for (const auto& [suffix, f] : kUnits) {
    if (t.size() > suffix.size() && t.ends_with(suffix)) {
      t.resize(t.size() - suffix.size());
      factor = f;
      break;
    }
  }
  auto v = parse_number(trim(t));
  if (!v) return std::nullopt;
  return *v * factor;
}

std::vector<double> number_list(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    auto v = parse_number(token);
    if (!v) throw Error(ErrorCode::Format, "bad number '" + token + "' in SVG");
    out.push_back(*v);
  }
  return out;
}

double point_rect_distance(PixelPoint p, const Rect& r) {
  const double dx = std::max({r.x0 - p.x, 0.0, p.x - r.x1});
  const double dy = std::max({r.y0 - p.y, 0.0, p.y - r.y1});
  return std::sqrt(dx * dx + dy * dy);
}

double point_segment_distance(PixelPoint p, PixelPoint a, PixelPoint b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, {a.x + t * vx, a.y + t * vy});
}

bool segments_cross(PixelPoint a, PixelPoint b, PixelPoint c, PixelPoint d) {
  auto orient = [](PixelPoint p, PixelPoint q, PixelPoint r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  };
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
         o4 != 0;
}

double segment_rect_distance(const Segment& s, const Rect& r) {
  if (point_rect_distance(s.a, r) == 0.0 || point_rect_distance(s.b, r) == 0.0) return 0.0;
  const PixelPoint corners[] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
  double best = std::min(point_rect_distance(s.a, r), point_rect_distance(s.b, r));
  for (int i = 0; i < 4; ++i) {
    const PixelPoint c = corners[i], d = corners[(i + 1) % 4];
    if (segments_cross(s.a, s.b, c, d)) return 0.0;
    best = std::min(best, point_segment_distance(c, s.a, s.b));
  }
  return best;
}

double rect_rect_distance(const Rect& a, const Rect& b) {
  const double dx = std::max({b.x0 - a.x1, 0.0, a.x0 - b.x1});
  const double dy = std::max({b.y0 - a.y1, 0.0, a.y0 - b.y1});
  return std::sqrt(dx * dx + dy * dy);
}

class Walker {
 public:
  Walker(const PageSpec& page, double sx, double sy) : page_(page), sx_(sx), sy_(sy) {}

  Scene scene;

  void element(const std::string& tag, const pt::ptree& node, Style style) {
    const auto attrs = node.get_child_optional("<xmlattr>");
    auto attr = [&](const char* name) -> std::optional<std::string> {
      if (!attrs) return std::nullopt;
      if (auto v = attrs->get_optional<std::string>(name)) return *v;
      return std::nullopt;
    };
    if (attr("transform")) add("transform attribute not supported on <" + tag + ">");
    apply_style(style, attr);

    if (tag == "text") {
      text(node, style, attr);
      return;
    }
    if (tag == "line") {
      stroke_check(tag, style);
      const PixelPoint a = pt_of(num(attr("x1")), num(attr("y1")));
      const PixelPoint b = pt_of(num(attr("x2")), num(attr("y2")));
      stroke(a, b, style);
    } else if (tag == "polyline" || tag == "polygon") {
      const auto v = number_list(attr("points").value_or(""));
      if (v.size() % 2 != 0) throw Error(ErrorCode::Format, "odd coordinate count in points");
      std::vector<PixelPoint> pts;
      for (std::size_t i = 0; i + 1 < v.size(); i += 2) pts.push_back(pt_of(v[i], v[i + 1]));
      if (tag == "polygon" && !pts.empty()) pts.push_back(pts.front());
      shape(tag, pts, style);
    } else if (tag == "path") {
      path(attr("d").value_or(""), style);
    } else if (tag == "rect") {
      const double x = num(attr("x")), y = num(attr("y"));
      const double w = num(attr("width")), h = num(attr("height"));
      const PixelPoint a = pt_of(x, y), b = pt_of(x + w, y), c = pt_of(x + w, y + h),
                       d = pt_of(x, y + h);
      shape(tag, {a, b, c, d, a}, style);
      if (filled(style)) scene.areas.push_back({a.x, a.y, c.x, c.y});
    } else if (tag == "circle" || tag == "ellipse") {
      const double cx = num(attr("cx")), cy = num(attr("cy"));
      const double rx = tag == "circle" ? num(attr("r")) : num(attr("rx"));
      const double ry = tag == "circle" ? rx : num(attr("ry"));
      const PixelPoint lo = pt_of(cx - rx, cy - ry), hi = pt_of(cx + rx, cy + ry);
      const double hw = has_stroke(style) ? style.stroke_width * sx_ / 2 : 0.0;
      if (has_stroke(style)) stroke_check(tag, style);
      scene.areas.push_back({lo.x - hw, lo.y - hw, hi.x + hw, hi.y + hw});
    }
    for (const auto& [child_tag, child] : node) {
      if (child_tag == "<xmlattr>" || child_tag == "<xmlcomment>" || child_tag == "title" ||
          child_tag == "desc" || child_tag == "metadata" || child_tag == "defs") {
        continue;
      }
      element(child_tag, child, style);
    }
  }

  void add(std::string v) {
    if (std::find(scene.violations.begin(), scene.violations.end(), v) == scene.violations.end()) {
      scene.violations.push_back(std::move(v));
    }
  }

 private:
  const PageSpec& page_;
  double sx_, sy_;

  template <class Attr>
  void apply_style(Style& style, Attr& attr) {
    auto set = [&style](const std::string& key, const std::string& value) {
      if (key == "stroke") style.stroke = value;
      if (key == "fill") style.fill = value;
      if (key == "text-anchor") style.anchor = value;
      if (key == "stroke-width") {
        if (auto v = parse_number(value)) {
          style.stroke_width = *v;
        } else if (auto mm = length_mm(value)) {
          style.stroke_width = *mm * 96.0 / 25.4;
        }
      }
    };
    for (const char* key : {"stroke", "fill", "text-anchor", "stroke-width"}) {
      if (auto v = attr(key)) set(key, trim(*v));
    }
    if (auto css = attr("style")) {
      std::istringstream in(*css);
      std::string decl;
      while (std::getline(in, decl, ';')) {
        const auto colon = decl.find(':');
        if (colon == std::string::npos) continue;
        set(trim(decl.substr(0, colon)), trim(decl.substr(colon + 1)));
      }
    }
  }

  static bool has_stroke(const Style& s) { return !s.stroke.empty() && s.stroke != "none"; }
  static bool filled(const Style& s) { return !s.fill.empty() && s.fill != "none"; }

  static double num(const std::optional<std::string>& text) {
    if (!text) return 0.0;
    auto v = length_mm(*text);
    if (!v) throw Error(ErrorCode::Format, "bad coordinate '" + *text + "'");
    // length_mm treats bare numbers as px; undo that for user units.
    if (parse_number(trim(*text))) return *parse_number(trim(*text));
    return *v;
  }

  PixelPoint pt_of(double x, double y) const { return {x * sx_, y * sy_}; }

  void stroke_check(const std::string& tag, const Style& style) {
    if (!has_stroke(style)) return;
    const double mm = style.stroke_width * std::min(sx_, sy_);
    if (mm < kMinStrokeMm - kEps) add("stroke below 0.4 mm on <" + tag + ">");
  }

  void stroke(PixelPoint a, PixelPoint b, const Style& style) {
    const double hw = has_stroke(style) ? style.stroke_width * std::min(sx_, sy_) / 2 : 0.0;
    scene.segments.push_back({a, b, hw});
  }

  void shape(const std::string& tag, const std::vector<PixelPoint>& pts, const Style& style) {
    if (has_stroke(style)) {
      stroke_check(tag, style);
      for (std::size_t i = 1; i < pts.size(); ++i) stroke(pts[i - 1], pts[i], style);
      if (pts.size() == 1) stroke(pts[0], pts[0], style);
    } else if (filled(style) && !pts.empty()) {
      Rect r{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
      for (const auto& p : pts) {
        r = {std::min(r.x0, p.x), std::min(r.y0, p.y), std::max(r.x1, p.x), std::max(r.y1, p.y)};
      }
      if (tag != "rect") scene.areas.push_back(r);
    }
  }

  void path(const std::string& d, const Style& style) {
    std::vector<PixelPoint> pts;
    PixelPoint cur{0, 0}, start{0, 0};
    std::size_t i = 0;
    char command = 0;
    auto flush = [&] {
      shape("path", pts, style);
      pts.clear();
    };
    auto next_number = [&]() -> double {
      while (i < d.size() && (std::isspace(static_cast<unsigned char>(d[i])) || d[i] == ',')) ++i;
      std::size_t j = i;
      if (j < d.size() && (d[j] == '-' || d[j] == '+')) ++j;
      while (j < d.size() && (std::isdigit(static_cast<unsigned char>(d[j])) || d[j] == '.' ||
                              d[j] == 'e' || d[j] == 'E' ||
                              ((d[j] == '-' || d[j] == '+') && (d[j - 1] == 'e' || d[j - 1] == 'E')))) {
        ++j;
      }
      auto v = parse_number(std::string_view(d).substr(i, j - i));
      if (!v) throw Error(ErrorCode::Format, "bad path data");
      i = j;
      return *v;
    };
    while (true) {
      while (i < d.size() && (std::isspace(static_cast<unsigned char>(d[i])) || d[i] == ',')) ++i;
      if (i >= d.size()) break;
      if (std::isalpha(static_cast<unsigned char>(d[i]))) command = d[i++];
      const bool rel = std::islower(static_cast<unsigned char>(command));
      switch (std::toupper(static_cast<unsigned char>(command))) {
        case 'M': {
          const double x = next_number(), y = next_number();
          flush();
          cur = rel ? PixelPoint{cur.x + x, cur.y + y} : PixelPoint{x, y};
          start = cur;
          pts.push_back(pt_of(cur.x, cur.y));
          command = rel ? 'l' : 'L';
          break;
        }
        case 'L': {
          const double x = next_number(), y = next_number();
          cur = rel ? PixelPoint{cur.x + x, cur.y + y} : PixelPoint{x, y};
          pts.push_back(pt_of(cur.x, cur.y));
          break;
        }
        case 'H': {
          const double x = next_number();
          cur.x = rel ? cur.x + x : x;
          pts.push_back(pt_of(cur.x, cur.y));
          break;
        }
        case 'V': {
          const double y = next_number();
          cur.y = rel ? cur.y + y : y;
          pts.push_back(pt_of(cur.x, cur.y));
          break;
        }
        case 'Z':
          cur = start;
          pts.push_back(pt_of(cur.x, cur.y));
          flush();
          pts.push_back(pt_of(cur.x, cur.y));
          break;
        default:
          add("unsupported path command '" + std::string(1, command) + "'");
          return;
      }
    }
    flush();
  }

  template <class Attr>
  void text(const pt::ptree& node, const Style& style, Attr& attr) {
    std::string content = node.data();
    for (const auto& [tag, child] : node) {
      if (tag == "tspan") content += child.data();
    }
    const auto cps = decode_utf8(trim(content));
    if (cps.empty()) return;
    for (char32_t cp : cps) {
      if (!is_braille_cell(cp)) {
        add("non-Braille text");
        break;
      }
    }
    const std::string cls = attr("class").value_or("");
    std::istringstream classes(cls);
    std::string c;
    while (classes >> c) {
      if (c == "x-label") ++scene.x_labels;
      if (c == "y-label") ++scene.y_labels;
    }
    const PixelPoint at = pt_of(num(attr("x")), num(attr("y")));
    double width = static_cast<double>(cps.size()) * page_.cell_width_mm;
    if (auto len = attr("textLength")) width = num(len) * sx_;
    double x0 = at.x;
    if (style.anchor == "middle") x0 -= width / 2;
    if (style.anchor == "end") x0 -= width;
    scene.braille.push_back({x0, at.y - page_.cell_height_mm, x0 + width, at.y});
  }
};

}  // namespace

std::vector<std::string> validate_print_constraints(std::string_view svg_print, const PageSpec& page) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(svg_print)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw Error(ErrorCode::Format, std::string("SVG is not well-formed XML: ") + e.message());
  }
  const auto root = doc.get_child_optional("svg");
  if (!root) throw Error(ErrorCode::Format, "missing <svg> root element");

  std::vector<std::string> violations;
  const auto width = length_mm(root->get<std::string>("<xmlattr>.width", ""));
  const auto height = length_mm(root->get<std::string>("<xmlattr>.height", ""));
  if (!width || !height) throw Error(ErrorCode::Format, "root <svg> needs width and height");
  double sx = 25.4 / 96.0, sy = 25.4 / 96.0;
  if (auto vb = root->get_optional<std::string>("<xmlattr>.viewBox")) {
    const auto v = number_list(*vb);
    if (v.size() != 4 || v[2] <= 0 || v[3] <= 0) throw Error(ErrorCode::Format, "bad viewBox");
    if (std::abs(v[0]) > kEps || std::abs(v[1]) > kEps) violations.push_back("viewBox origin must be 0 0");
    sx = *width / v[2];
    sy = *height / v[3];
  }
  if (std::abs(*width - page.width_mm) > 0.01 || std::abs(*height - page.height_mm) > 0.01) {
    violations.push_back("page size does not match the print page");
  }

  Walker walker(page, sx, sy);
  walker.scene.violations = violations;
  walker.element("svg", *root, Style{});
  Scene& scene = walker.scene;

  // Everything on the page.
  const Rect paper{0, 0, page.width_mm, page.height_mm};
  auto inside = [&](const Rect& r, const Rect& bounds) {
    return r.x0 >= bounds.x0 - kEps && r.y0 >= bounds.y0 - kEps && r.x1 <= bounds.x1 + kEps &&
           r.y1 <= bounds.y1 + kEps;
  };
  for (const auto& s : scene.segments) {
    const Rect r{std::min(s.a.x, s.b.x) - s.half_width, std::min(s.a.y, s.b.y) - s.half_width,
                 std::max(s.a.x, s.b.x) + s.half_width, std::max(s.a.y, s.b.y) + s.half_width};
    if (!inside(r, paper)) {
      walker.add("drawing exceeds page");
      break;
    }
  }
  for (const auto& r : scene.areas) {
    if (!inside(r, paper)) {
      walker.add("drawing exceeds page");
      break;
    }
  }
  const Rect printable{page.margin_mm, page.margin_mm, page.width_mm - page.margin_mm,
                       page.height_mm - page.margin_mm};
  for (const auto& b : scene.braille) {
    if (!inside(b, printable)) {
      walker.add("Braille text outside page margins");
      break;
    }
  }

  // Clearance around every Braille box.
  const double need = kMinBrailleClearanceMm - kEps;
  bool crowded = false;
  for (std::size_t i = 0; i < scene.braille.size() && !crowded; ++i) {
    const Rect& box = scene.braille[i];
    for (const auto& s : scene.segments) {
      if (segment_rect_distance(s, box) - s.half_width < need) {
        crowded = true;
        break;
      }
    }
    for (const auto& a : scene.areas) {
      if (!crowded && rect_rect_distance(a, box) < need) crowded = true;
    }
    for (std::size_t j = 0; j < scene.braille.size() && !crowded; ++j) {
      if (j != i && rect_rect_distance(scene.braille[j], box) < need) crowded = true;
    }
  }
  if (crowded) walker.add("Braille clearance below 3.0 mm");

  if (scene.x_labels < 3 || scene.x_labels > 5) walker.add("x-axis label count outside 3..5");
  if (scene.y_labels < 3 || scene.y_labels > 5) walker.add("y-axis label count outside 3..5");
  return scene.violations;
}

}  // namespace tactiplot
