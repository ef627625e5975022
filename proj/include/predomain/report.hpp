#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "predomain/geometry.hpp"
#include "predomain/thresholds.hpp"

namespace predomain {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ReportFormat { text, csv, json };

ReportFormat parse_report_format(std::string_view text);

// Resolved run configuration echoed at the top of every report.
struct ReportHeader {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
};

struct SummaryRow {
  std::string class_name;
  std::string variant;
  DomainSummary summary;
};

struct ComparisonEntry {
  std::string class_name;
  ComparisonRow row;
};

// Text reports use 6 significant digits, JSON keeps full precision.
// Sentinel values print as n/a (text, csv) or null (json).
std::string format_summaries(const ReportHeader& header, std::span<const SummaryRow> rows,
                             ReportFormat format);
std::string format_comparison(const ReportHeader& header, std::span<const ComparisonEntry> rows,
                              ReportFormat format);
std::string format_thresholds(const ReportHeader& header, const ThresholdReport& report,
                              ReportFormat format);
std::string format_roc(const ReportHeader& header, const RocCurve& curve, ReportFormat format);

// "# predomain <version> <command>" followed by one "# key: value" line per
// config entry.
std::vector<std::string> header_lines(const ReportHeader& header);

}  // namespace predomain
