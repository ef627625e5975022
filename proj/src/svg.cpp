#include "predomain/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace predomain {

namespace {

constexpr double kPad = 40.0;
constexpr double kRugHalf = 6.0;
constexpr int kAxisTicks = 10;

// Fixed four decimals; negative zero is printed as zero.
std::string num(double v) {
  if (std::abs(v) < 0.00005) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string short_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
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

std::string comment_text(std::string text) {
  // "--" is illegal inside XML comments.
  for (auto pos = text.find("--"); pos != std::string::npos; pos = text.find("--", pos)) {
    text.replace(pos, 2, "- -");
  }
  if (!text.empty() && text.back() == '-') text += ' ';
  return text;
}

void validate(const RenderSpec& spec) {
  if (!(std::isfinite(spec.viewport.lo) && std::isfinite(spec.viewport.hi) &&
        spec.viewport.lo < spec.viewport.hi)) {
    throw std::invalid_argument("render: viewport must satisfy lo < hi");
  }
  if (spec.width <= 0 || spec.height <= 0) {
    throw std::invalid_argument("render: width and height must be positive");
  }
}

double pixel_scale(const RenderSpec& spec, int width) {
  return static_cast<double>(width) / (spec.viewport.hi - spec.viewport.lo);
}

double required_height(const RenderSpec& spec, int width) {
  double largest = 0.0;
  for (const auto& d : spec.domains) largest = std::max(largest, d.summary.radius);
  const double needed = 2.0 * (largest * pixel_scale(spec, width) + kPad);
  return std::max(static_cast<double>(spec.height), std::ceil(needed));
}

// Body of one panel, in the panel's own coordinates.
std::string panel(const RenderSpec& spec, int width, double height) {
  const double scale = pixel_scale(spec, width);
  const auto x_of = [&](double s) { return (s - spec.viewport.lo) * scale; };
  const double axis_y = height / 2.0;
  std::ostringstream out;

  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << num(height)
      << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
  out << "<line class=\"axis\" x1=\"0.0000\" y1=\"" << num(axis_y) << "\" x2=\"" << num(width)
      << "\" y2=\"" << num(axis_y) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= kAxisTicks; ++i) {
    const double s = spec.viewport.lo + (spec.viewport.hi - spec.viewport.lo) * i / kAxisTicks;
    const double x = x_of(s);
    out << "<line class=\"tick\" x1=\"" << num(x) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(axis_y + 4.0) << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(axis_y + 16.0)
        << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << short_num(s)
        << "</text>\n";
  }

  for (const auto& d : spec.domains) {
    const auto& color = d.style.color;
    double center = d.summary.center.value;
    const bool outside = center < spec.viewport.lo || center > spec.viewport.hi;
    center = std::clamp(center, spec.viewport.lo, spec.viewport.hi);
    const double cx = x_of(center);

    out << "<g class=\"domain\" data-class=\"" << escape(d.style.name) << "\">\n";
    out << "<circle class=\"domain-circle\" cx=\"" << num(cx) << "\" cy=\"" << num(axis_y) << "\" r=\""
        << num(d.summary.radius * scale) << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\""
        << color << "\" stroke-width=\"2\"/>\n";
    if (!d.scores.empty()) {
      for (double q : spec.rings) {
        const double r = ring_radius(d.scores, d.summary.center.value, q) * scale;
        out << "<circle class=\"ring\" data-fraction=\"" << num(q) << "\" cx=\"" << num(cx) << "\" cy=\""
            << num(axis_y) << "\" r=\"" << num(r) << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n";
      }
    }
    out << "<line class=\"center\" x1=\"" << num(cx) << "\" y1=\"" << num(axis_y - 8.0) << "\" x2=\""
        << num(cx) << "\" y2=\"" << num(axis_y + 8.0) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    if (outside) {
      out << "<text class=\"warning\" x=\"" << num(cx) << "\" y=\"" << num(axis_y - 12.0)
          << "\" font-family=\"monospace\" font-size=\"14\" fill=\"#ff0000\" text-anchor=\"middle\">!</text>\n";
    }
    if (spec.rug) {
      for (double s : d.scores) {
        if (s < spec.viewport.lo || s > spec.viewport.hi) continue;
        const double x = x_of(s);
        out << "<line class=\"rug\" x1=\"" << num(x) << "\" y1=\"" << num(axis_y - kRugHalf) << "\" x2=\""
            << num(x) << "\" y2=\"" << num(axis_y + kRugHalf) << "\" stroke=\"" << color
            << "\" stroke-opacity=\"0.4\"/>\n";
      }
    }
    out << "</g>\n";
  }

  for (const auto& t : spec.thresholds) {
    const double value = std::clamp(t.candidate.value, spec.viewport.lo, spec.viewport.hi);
    const double x = x_of(value);
    out << "<line class=\"threshold\" data-strategy=\"" << to_string(t.candidate.strategy) << "\" x1=\""
        << num(x) << "\" y1=\"0.0000\" x2=\"" << num(x) << "\" y2=\"" << num(height) << "\" stroke=\""
        << t.color << "\" stroke-width=\"1.5\"" << (t.dashed ? " stroke-dasharray=\"6,4\"" : "")
        << "/>\n";
    out << "<text x=\"" << num(x + 3.0) << "\" y=\"" << num(height - 6.0)
        << "\" font-family=\"monospace\" font-size=\"10\" fill=\"" << t.color << "\" transform=\"rotate(-90 "
        << num(x + 3.0) << ' ' << num(height - 6.0) << ")\">" << to_string(t.candidate.strategy) << ' '
        << short_num(t.candidate.value) << "</text>\n";
  }

  double text_y = 16.0;
  if (!spec.title.empty()) {
    out << "<text class=\"title\" x=\"" << num(width / 2.0) << "\" y=\"" << num(text_y)
        << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" << escape(spec.title)
        << "</text>\n";
    text_y += 16.0;
  }
  if (spec.legend) {
    for (const auto& d : spec.domains) {
      const auto& s = d.summary;
      out << "<text class=\"legend\" x=\"8.0000\" y=\"" << num(text_y)
          << "\" font-family=\"monospace\" font-size=\"11\" fill=\"" << d.style.color << "\">"
          << escape(d.style.name) << " [" << to_string(s.center.method) << "] n=" << s.n
          << " C=" << short_num(s.center.value) << " R=" << short_num(s.radius)
          << " N=" << (s.normalize ? short_num(*s.normalize) : std::string("n/a"))
          << " D=" << short_num(s.density) << "</text>\n";
      text_y += 14.0;
    }
  }
  return out.str();
}

std::string document(const std::vector<std::string>& comments, int width, double height,
                     const std::string& body) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << width << ' ' << num(height) << "\">\n";
  for (const auto& c : comments) out << "<!-- " << comment_text(c) << " -->\n";
  out << body;
  out << "</svg>\n";
  return out.str();
}

}  // namespace

ClassStyle default_class_style(ScoreClass cls, const std::string& name) {
  return {name, cls == ScoreClass::lower ? "#1f77b4" : "#d62728"};
}

std::string default_threshold_color(Strategy strategy) {
  switch (strategy) {
    case Strategy::fake_border:
    case Strategy::live_border: return "#2ca02c";
    case Strategy::cross_point: return "#9467bd";
    case Strategy::balance_point: return "#ff7f0e";
    case Strategy::acer_left:
    case Strategy::acer_right:
    case Strategy::acer_mid: return "#7f7f7f";
  }
  return "#000000";
}

double ring_radius(std::span<const double> scores, double center, double fraction) {
  if (scores.empty()) return 0.0;
  std::vector<double> deviations;
  deviations.reserve(scores.size());
  for (double s : scores) deviations.push_back(std::abs(s - center));
  std::sort(deviations.begin(), deviations.end());
  const double q = std::clamp(fraction, 0.0, 1.0);
  auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(deviations.size())));
  rank = std::clamp<std::size_t>(rank, 1, deviations.size());
  return deviations[rank - 1] / 2.0;
}

std::string render(const RenderSpec& spec) {
  validate(spec);
  const double height = required_height(spec, spec.width);
  return document(spec.comments, spec.width, height, panel(spec, spec.width, height));
}

std::string render_comparison(const RenderSpec& before, const RenderSpec& after) {
  validate(before);
  validate(after);
  if (before.viewport.lo != after.viewport.lo || before.viewport.hi != after.viewport.hi) {
    throw std::invalid_argument("render_comparison: panels must share a viewport");
  }
  const int width = std::max(before.width, after.width);
  const double height = std::max(required_height(before, width), required_height(after, width));
  std::ostringstream body;
  body << "<g class=\"panel\" data-panel=\"before\">\n" << panel(before, width, height) << "</g>\n";
  body << "<g class=\"panel\" data-panel=\"after\" transform=\"translate(" << width << ",0)\">\n"
       << panel(after, width, height) << "</g>\n";
  auto comments = before.comments;
  comments.insert(comments.end(), after.comments.begin(), after.comments.end());
  return document(comments, 2 * width, height, body.str());
}

}  // namespace predomain
