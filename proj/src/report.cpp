#include "predomain/report.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace predomain {

namespace {

using nlohmann::ordered_json;

std::string sig6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sig6(const std::optional<double>& v) { return v ? sig6(*v) : std::string("n/a"); }

ordered_json optional_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); }

struct Table {
  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}

  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Columns at or past this index are right-aligned in text output.
  std::size_t first_numeric = 1;

  std::string text() const {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      width[c] = columns[c].size();
      for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& cells) {
      std::string line;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) line += "  ";
        const std::string pad(width[c] - cells[c].size(), ' ');
        line += c >= first_numeric ? pad + cells[c] : cells[c] + pad;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    };
    emit(columns);
    for (const auto& r : rows) emit(r);
    return out.str();
  }

  std::string csv() const {
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
      out << '\n';
    };
    emit(columns);
    for (const auto& r : rows) emit(r);
    return out.str();
  }
};

std::string with_header(const ReportHeader& header, const std::string& body) {
  std::string out;
  for (const auto& line : header_lines(header)) out += line + "\n";
  return out + body;
}

ordered_json json_envelope(const ReportHeader& header) {
  ordered_json doc;
  doc["tool"] = "predomain";
  doc["version"] = std::string(kVersion);
  doc["command"] = header.command;
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : header.config) config[k] = v;
  doc["config"] = config;
  return doc;
}

ordered_json summary_json(const DomainSummary& s) {
  ordered_json j;
  j["center_method"] = std::string(to_string(s.center.method));
  j["center"] = s.center.value;
  j["selected_index"] = s.center.selected_index ? ordered_json(*s.center.selected_index) : ordered_json();
  j["imbalance"] = s.center.imbalance;
  j["radius"] = s.radius;
  j["normalize"] = optional_json(s.normalize);
  j["density"] = s.density;
  j["min"] = s.min;
  j["max"] = s.max;
  j["n"] = s.n;
  return j;
}

ordered_json evaluation_json(const ThresholdEvaluation& e) {
  ordered_json j;
  j["tp"] = e.tp;
  j["fp"] = e.fp;
  j["tn"] = e.tn;
  j["fn"] = e.fn;
  j["apcer"] = e.apcer;
  j["bpcer"] = e.bpcer;
  j["acer"] = e.acer;
  j["fpr"] = e.fpr;
  j["tpr"] = e.tpr;
  return j;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + std::string(text) + "'");
}

std::vector<std::string> header_lines(const ReportHeader& header) {
  std::vector<std::string> lines;
  lines.push_back("# predomain " + std::string(kVersion) + " " + header.command);
  for (const auto& [k, v] : header.config) lines.push_back("# " + k + ": " + v);
  return lines;
}

std::string format_summaries(const ReportHeader& header, std::span<const SummaryRow> rows,
                             ReportFormat format) {
  if (format == ReportFormat::json) {
    auto doc = json_envelope(header);
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["class"] = r.class_name;
      j["variant"] = r.variant;
      j.update(summary_json(r.summary));
      doc["rows"].push_back(j);
    }
    return doc.dump(2) + "\n";
  }
  Table t({"class", "variant", "radius", "normalize", "density", "center", "method", "min", "max", "n"});
  t.first_numeric = 2;
  for (const auto& r : rows) {
    const auto& s = r.summary;
    t.rows.push_back({r.class_name, r.variant, sig6(s.radius), sig6(s.normalize), sig6(s.density),
                      sig6(s.center.value), std::string(to_string(s.center.method)), sig6(s.min),
                      sig6(s.max), std::to_string(s.n)});
  }
  return with_header(header, format == ReportFormat::csv ? t.csv() : t.text());
}

std::string format_comparison(const ReportHeader& header, std::span<const ComparisonEntry> rows,
                              ReportFormat format) {
  const auto flags = [](const ComparisonRow& row) {
    std::string f;
    if (row.domain_expanded) f += "domain-expanded";
    if (row.more_cohesive) f += std::string(f.empty() ? "" : ";") + "more-cohesive";
    return f;
  };
  if (format == ReportFormat::json) {
    auto doc = json_envelope(header);
    doc["rows"] = ordered_json::array();
    for (const auto& e : rows) {
      ordered_json j;
      j["class"] = e.class_name;
      j["before"] = summary_json(e.row.before);
      j["after"] = summary_json(e.row.after);
      j["radius_delta"] = e.row.radius_delta;
      j["normalize_delta"] = optional_json(e.row.normalize_delta);
      j["density_delta"] = e.row.density_delta;
      j["domain_expanded"] = e.row.domain_expanded;
      j["more_cohesive"] = e.row.more_cohesive;
      doc["rows"].push_back(j);
    }
    return doc.dump(2) + "\n";
  }
  Table t({"class", "variant", "radius", "normalize", "density", "flags"});
  t.first_numeric = 2;
  for (const auto& e : rows) {
    const auto& b = e.row.before;
    const auto& a = e.row.after;
    t.rows.push_back({e.class_name, "before", sig6(b.radius), sig6(b.normalize), sig6(b.density), ""});
    t.rows.push_back({e.class_name, "after", sig6(a.radius), sig6(a.normalize), sig6(a.density), ""});
    t.rows.push_back({e.class_name, "delta", sig6(e.row.radius_delta), sig6(e.row.normalize_delta),
                      sig6(e.row.density_delta), flags(e.row)});
  }
  return with_header(header, format == ReportFormat::csv ? t.csv() : t.text());
}

std::string format_thresholds(const ReportHeader& header, const ThresholdReport& report,
                              ReportFormat format) {
  if (format == ReportFormat::json) {
    auto doc = json_envelope(header);
    doc["rows"] = ordered_json::array();
    for (const auto& r : report.rows) {
      ordered_json j;
      j["strategy"] = std::string(to_string(r.candidate.strategy));
      j["threshold"] = r.candidate.value;
      j["valid"] = r.candidate.valid;
      j["note"] = std::string(to_string(r.candidate.note));
      j["train"] = evaluation_json(r.train);
      if (r.dev) j["dev"] = evaluation_json(*r.dev);
      doc["rows"].push_back(j);
    }
    return doc.dump(2) + "\n";
  }
  Table t({"strategy", "threshold", "train_fpr", "train_tpr", "train_acer"});
  if (report.has_dev) {
    for (const char* c : {"dev_fpr", "dev_tpr", "dev_acer"}) t.columns.emplace_back(c);
  }
  t.columns.emplace_back("valid");
  t.columns.emplace_back("note");
  for (const auto& r : report.rows) {
    std::vector<std::string> cells{std::string(to_string(r.candidate.strategy)), sig6(r.candidate.value),
                                   sig6(r.train.fpr), sig6(r.train.tpr), sig6(r.train.acer)};
    if (report.has_dev) {
      cells.push_back(sig6(r.dev->fpr));
      cells.push_back(sig6(r.dev->tpr));
      cells.push_back(sig6(r.dev->acer));
    }
    cells.emplace_back(r.candidate.valid ? "yes" : "no");
    cells.emplace_back(to_string(r.candidate.note));
    t.rows.push_back(std::move(cells));
  }
  return with_header(header, format == ReportFormat::csv ? t.csv() : t.text());
}

std::string format_roc(const ReportHeader& header, const RocCurve& curve, ReportFormat format) {
  if (format == ReportFormat::json) {
    auto doc = json_envelope(header);
    doc["auc"] = curve.auc;
    doc["points"] = ordered_json::array();
    for (const auto& p : curve.points) {
      doc["points"].push_back({{"threshold", p.threshold}, {"fpr", p.fpr}, {"tpr", p.tpr}});
    }
    return doc.dump(2) + "\n";
  }
  Table t({"threshold", "fpr", "tpr"});
  t.first_numeric = 0;
  for (const auto& p : curve.points) t.rows.push_back({sig6(p.threshold), sig6(p.fpr), sig6(p.tpr)});
  auto h = header;
  h.config.emplace_back("auc", sig6(curve.auc));
  return with_header(h, format == ReportFormat::csv ? t.csv() : t.text());
}

}  // namespace predomain
