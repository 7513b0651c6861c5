#pragma once

#include <string>
#include <vector>

#include "scenebias/labels.hpp"
#include "scenebias/ranking.hpp"
#include "scenebias/repeatability.hpp"

namespace scenebias {

/// Six trait percentages for one detector at one transformation amount.
struct ReportRow {
  std::string detector;
  int step = 0;
  double param = 0.0;
  TraitIndices top;
  TraitIndices lowest;
};

/// Figure-style grid: detector rows x selected amounts, top and lowest trait
/// indices side by side.
struct ReportTable {
  TransformKind kind = TransformKind::Blur;
  int j = 0;
  std::vector<ReportRow> rows;  // grouped by detector, steps in selection order
};

/// Display label for an amount: sigma for blur ("0.5"), percent light
/// reduction for light ("10%").
std::string amount_label(TransformKind kind, double param);

ReportTable build_report_table(const std::vector<RepeatabilityRecord>& records,
                               const LabelMap& labels, TransformKind kind,
                               const std::vector<std::string>& detectors,
                               const std::vector<int>& steps, int j);

std::string report_table_csv(const ReportTable& table);
std::string report_table_text(const ReportTable& table);

/// Grouped-bar chart, one group of six bars (top F,G,H then lowest F,G,H)
/// per detector and amount. Plain deterministic SVG.
std::string report_chart_svg(const ReportTable& table);

}  // namespace scenebias
