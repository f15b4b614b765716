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
#include <regex>

#include "doctest.h"
#include "support.hpp"
#include "tactiplot/braille.hpp"
#include "tactiplot/description.hpp"
#include "tactiplot/error.hpp"
#include "tactiplot/rendering.hpp"

using namespace tactiplot;
using tactiplot::testing::sales_session;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

std::vector<std::string> numbers(int lo, int hi, int step) {
  std::vector<std::string> out;
  for (int v = lo; v <= hi; v += step) out.push_back(std::to_string(v));
  return out;
}

}  // namespace

TEST_CASE("line styles cycle through patterns, then widths") {
  const auto one = assign_line_styles(1);
  REQUIRE(one.styles.size() == 1);
  CHECK(one.styles[0] == TactileStyle{StrokePattern::Solid, 1.0});
  CHECK_FALSE(one.repeats);

  const auto three = assign_line_styles(3);
  CHECK(three.styles[1] == TactileStyle{StrokePattern::Dashed, 1.0});
  CHECK(three.styles[2] == TactileStyle{StrokePattern::Dotted, 1.0});

  const auto seven = assign_line_styles(7);
  CHECK(seven.styles[3] == TactileStyle{StrokePattern::Solid, 1.6});
  CHECK(seven.styles[6] == seven.styles[0]);
  CHECK(seven.repeats);
  CHECK_THROWS_AS(assign_line_styles(0), Error);
  CHECK(TactileStyle{}.dasharray().empty());
}

TEST_CASE("axis label reduction") {
  const auto eleven = numbers(0, 100, 10);
  // 3-cell labels at 6 mm: budget 5 needs 5 * 24 mm, budget 3 fits in 72 mm.
  CHECK(reduce_axis_labels(eleven, 200.0) == std::vector<std::string>{"0", "30", "50", "80", "100"});
  CHECK(reduce_axis_labels(eleven, 80.0) == std::vector<std::string>{"0", "50", "100"});
  CHECK(reduce_axis_labels({"a", "b"}, 10.0) == std::vector<std::string>{"a", "b"});

  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + static_cast<int>(rng() % 30);
    const auto labels = numbers(0, n - 1, 1);
    const auto kept = reduce_axis_labels(labels, 20.0 + static_cast<double>(rng() % 400));
    CHECK(kept.size() >= 3);
    CHECK(kept.size() <= 5);
    CHECK(kept.front() == labels.front());
    CHECK(kept.back() == labels.back());
    CHECK(std::is_sorted(kept.begin(), kept.end(), [](auto& a, auto& b) { return std::stoi(a) < std::stoi(b); }));
  }
}

TEST_CASE("digital SVG carries one root description and one per series") {
  auto s = sales_session();
  const auto svg = render_svg(s, RenderMode::DigitalAccessible).svg;
  CHECK(count(svg, "<desc") == 2);
  CHECK(count(svg, "<title") == 2);
  CHECK(svg.find("role=\"img\"") != std::string::npos);
  std::string desc = generate_description(s);
  for (auto at = desc.find('\''); at != std::string::npos; at = desc.find('\'', at)) desc.replace(at, 1, "&apos;");
  CHECK(svg.find("<desc id=\"chart-desc\">" + desc + "</desc>") != std::string::npos);
  CHECK(count(svg, "<circle") == s.series[0].line.keypoints.size());

  auto two = s;
  two.series.push_back(s.series[0]);
  two.series[1].line.id = "s2";
  two.series[1].line.name = "Copy";
  CHECK(count(render_svg(two, RenderMode::DigitalAccessible).svg, "<desc") == 3);
}

TEST_CASE("print SVG passes the tactile rules and uses Braille only") {
  const auto s = sales_session();
  const auto result = render_svg(s, RenderMode::PrintAccessible);
  CHECK(validate_print_constraints(result.svg, s.options.page).empty());
  CHECK(result.svg.find("width=\"297mm\"") != std::string::npos);
  const std::regex text_node(R"(<text[^>]*>([^<]*)</text>)");
  int texts = 0;
  for (std::sregex_iterator it(result.svg.begin(), result.svg.end(), text_node), end; it != end; ++it) {
    ++texts;
    for (char32_t cp : decode_utf8((*it)[1].str())) CHECK((is_braille_cell(cp) || cp == ' '));
  }
  CHECK(texts > 0);
}

TEST_CASE("print layout fits smaller pages or refuses") {
  const auto s = sales_session();
  PageSpec a4_portrait;
  a4_portrait.width_mm = 210;
  a4_portrait.height_mm = 297;
  CHECK(validate_print_constraints(render_svg(s, RenderMode::PrintAccessible, a4_portrait).svg, a4_portrait).empty());
  PageSpec postcard;
  postcard.width_mm = 60;
  postcard.height_mm = 40;
  CHECK_THROWS_AS(render_svg(s, RenderMode::PrintAccessible, postcard), Error);
}

TEST_CASE("long titles wrap with a warning") {
  auto s = sales_session();
  s.metadata.set_text(TextFieldKind::PlotTitle,
                      "Annual unit sales across all regional stores and online channels combined",
                      Provenance::Manual);
  const auto result = render_svg(s, RenderMode::PrintAccessible);
  CHECK(validate_print_constraints(result.svg, s.options.page).empty());
  CHECK(std::any_of(result.warnings.begin(), result.warnings.end(),
                    [](const std::string& w) { return w.find("wrapped") != std::string::npos; }));
}

TEST_CASE("missing labels are generated from the calibration") {
  auto s = sales_session();
  s.metadata.set(TextFieldKind::XAxisLabels, {}, Provenance::Manual);
  const auto result = render_svg(s, RenderMode::PrintAccessible);
  CHECK(validate_print_constraints(result.svg, s.options.page).empty());
  CHECK_FALSE(result.warnings.empty());
}

TEST_CASE("rendering is deterministic") {
  const auto s = sales_session();
  CHECK(render_svg(s, RenderMode::PrintAccessible).svg == render_svg(s, RenderMode::PrintAccessible).svg);
  CHECK(render_svg(s, RenderMode::DigitalAccessible).svg == render_svg(s, RenderMode::DigitalAccessible).svg);
  CHECK(export_csv(s) == export_csv(s));
}

TEST_CASE("incomplete sessions name what is missing") {
  auto s = sales_session();
  s.calibration.reset();
  try {
    render_svg(s, RenderMode::PrintAccessible);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompleteSession);
    CHECK(std::string(e.what()).find("calibration") != std::string::npos);
  }
  auto t = sales_session();
  t.series.clear();
  CHECK_THROWS_AS(render_svg(t, RenderMode::DigitalAccessible), Error);
}

TEST_CASE("markup in names is escaped") {
  auto s = sales_session();
  s.series[0].line.name = "A<B & \"C\"";
  s.metadata.set_text(TextFieldKind::PlotTitle, "x < y", Provenance::Manual);
  const auto svg = render_svg(s, RenderMode::DigitalAccessible).svg;
  CHECK(svg.find("A&lt;B &amp; &quot;C&quot;") != std::string::npos);
  CHECK(svg.find("x < y") == std::string::npos);
}

TEST_CASE("export bundle holds all four documents") {
  const auto bundle = export_bundle(sales_session());
  CHECK_FALSE(bundle.svg_digital.empty());
  CHECK_FALSE(bundle.svg_print.empty());
  CHECK(bundle.csv.find("series,x,y") != std::string::npos);
  CHECK(bundle.description.rfind("Line chart titled 'Sales'.", 0) == 0);
}
