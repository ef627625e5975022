#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <regex>
#include <sstream>

#include "predomain/svg.hpp"
#include "predomain/synth.hpp"

using namespace predomain;

namespace {

bool well_formed(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_xml(in, tree);
  } catch (const boost::property_tree::xml_parser_error&) {
    return false;
  }
  return tree.count("svg") == 1;
}

struct Circle {
  double cx = 0, cy = 0, r = 0;
};

std::vector<Circle> domain_circles(const std::string& svg) {
  static const std::regex re(R"re(<circle class="domain-circle" cx="([-0-9.]+)" cy="([-0-9.]+)" r="([-0-9.]+)")re");
  std::vector<Circle> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3])});
  }
  return out;
}

DomainLayer layer(double center, double r, std::vector<double> scores = {}) {
  DomainLayer d;
  d.summary.center.value = center;
  d.summary.radius = r;
  d.summary.n = scores.size();
  d.scores = std::move(scores);
  d.style = default_class_style(ScoreClass::lower, "live");
  return d;
}

}  // namespace

TEST(Render, EmptySpecIsWellFormed) {
  const auto svg = render(RenderSpec{});
  EXPECT_TRUE(well_formed(svg));
  EXPECT_NE(svg.find("class=\"axis\""), std::string::npos);
  EXPECT_TRUE(domain_circles(svg).empty());
}

TEST(Render, CircleMapsToPixels) {
  RenderSpec spec;
  spec.domains.push_back(layer(0.5, 0.25));
  const auto svg = render(spec);
  const auto circles = domain_circles(svg);
  ASSERT_EQ(circles.size(), 1u);
  EXPECT_EQ(circles[0].cx, 400.0);
  EXPECT_EQ(circles[0].r, 200.0);
  EXPECT_TRUE(well_formed(svg));
  // Canvas grows to fit: 2 * (200 + 40).
  EXPECT_NE(svg.find("height=\"480.0000\""), std::string::npos);
}

TEST(Render, HorizontalLinearity) {
  RenderSpec spec;
  spec.viewport = {-1.0, 3.0};
  spec.width = 1000;
  for (double c : {-0.5, 0.7, 2.2}) spec.domains.push_back(layer(c, 0.1));
  const auto circles = domain_circles(render(spec));
  ASSERT_EQ(circles.size(), 3u);
  // Pixel x is affine in the score: equal score steps give proportional pixel steps.
  const double slope = (circles[1].cx - circles[0].cx) / 1.2;
  EXPECT_NEAR(slope, 250.0, 1e-3);
  EXPECT_NEAR((circles[2].cx - circles[1].cx) / 1.5, slope, 1e-3);
  EXPECT_NEAR(circles[0].cx, 125.0, 1e-4);
  for (const auto& c : circles) EXPECT_NEAR(c.r, 25.0, 1e-4);
}

TEST(Render, Deterministic) {
  RenderSpec spec;
  const auto scores = generate(SynthSpec{});
  auto d = layer(0.5, 0.15, {scores.values().begin(), scores.values().end()});
  spec.domains.push_back(d);
  ThresholdLayer t;
  t.candidate.strategy = Strategy::balance_point;
  t.candidate.value = 0.6;
  t.color = default_threshold_color(Strategy::balance_point);
  t.dashed = true;
  spec.thresholds.push_back(t);
  spec.title = "a <title> & more";
  spec.comments = {"config -- echo", "trailing-"};
  const auto a = render(spec);
  EXPECT_EQ(a, render(spec));
  EXPECT_TRUE(well_formed(a));
  EXPECT_NE(a.find("data-strategy=\"balance-point\""), std::string::npos);
  EXPECT_EQ(a.find("nan"), std::string::npos);
  EXPECT_EQ(a.find("inf"), std::string::npos);
}

TEST(Render, CenterOutsideViewportWarns) {
  RenderSpec spec;
  spec.domains.push_back(layer(1.5, 0.1));
  const auto svg = render(spec);
  EXPECT_NE(svg.find("class=\"warning\""), std::string::npos);
  EXPECT_TRUE(well_formed(svg));
}

TEST(Render, RejectsBadSpecs) {
  RenderSpec spec;
  spec.viewport = {1.0, 1.0};
  EXPECT_THROW(render(spec), std::invalid_argument);
  spec.viewport = {0.0, 1.0};
  spec.width = 0;
  EXPECT_THROW(render(spec), std::invalid_argument);
}

TEST(RingRadius, NearestRankHalved) {
  const std::vector<double> s{0.1, 0.2, 0.3, 0.4, 0.9};
  // |s - 0.3| sorted: 0, 0.1, 0.1, 0.2, 0.6
  EXPECT_NEAR(ring_radius(s, 0.3, 1.0), 0.3, 1e-15);
  EXPECT_NEAR(ring_radius(s, 0.3, 0.5), 0.05, 1e-15);
  EXPECT_NEAR(ring_radius(s, 0.3, 0.2), 0.0, 1e-15);
}

TEST(RenderComparison, LargerRadiusDrawsLargerCircle) {
  RenderSpec before;
  before.domains.push_back(layer(0.4, 0.1));
  RenderSpec after;
  after.domains.push_back(layer(0.4, 0.2));
  const auto svg = render_comparison(before, after);
  EXPECT_TRUE(well_formed(svg));
  const auto circles = domain_circles(svg);
  ASSERT_EQ(circles.size(), 2u);
  EXPECT_GT(circles[1].r, circles[0].r);
  EXPECT_EQ(circles[0].cy, circles[1].cy);

  after.viewport = {0.0, 2.0};
  EXPECT_THROW(render_comparison(before, after), std::invalid_argument);
}
