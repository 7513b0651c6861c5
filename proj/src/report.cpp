#include "scenebias/report.hpp"

#include <algorithm>
#include <cmath>

#include "scenebias/errors.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

std::string amount_label(TransformKind kind, double param) {
  if (kind == TransformKind::Blur) return format_fixed(param, 1);
  const long pct = std::lround((1.0 - param) * 100.0);
  return std::to_string(pct) + "%";
}

namespace {

std::string percent_text(const TraitIndices& t, int which) {
  const int count = which == 0 ? t.outdoor_count : which == 1 ? t.human_made_count : t.simple_count;
  const double pct = 100.0 * count / t.j;
  // Integer when exact, one decimal otherwise.
  if ((100 * count) % t.j == 0) return std::to_string((100 * count) / t.j);
  return format_fixed(pct, 1);
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string kind_title(TransformKind kind) {
  return kind == TransformKind::Blur ? "Blur" : "Light reduction";
}

}  // namespace

ReportTable build_report_table(const std::vector<RepeatabilityRecord>& records,
                               const LabelMap& labels, TransformKind kind,
                               const std::vector<std::string>& detectors,
                               const std::vector<int>& steps, int j) {
  ReportTable table;
  table.kind = kind;
  table.j = j;
  for (const std::string& detector : detectors) {
    for (int step : steps) {
      const RepeatabilitySeries series = build_series(records, detector, kind, step);
      ReportRow row;
      row.detector = detector;
      row.step = step;
      row.param = series.param;
      row.top = trait_indices(top_ranking(series, j), labels);
      row.lowest = trait_indices(lowest_ranking(series, j), labels);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string report_table_csv(const ReportTable& table) {
  std::string out = "detector,kind,step,param,top_f,top_g,top_h,lowest_f,lowest_g,lowest_h\n";
  for (const ReportRow& row : table.rows) {
    out += row.detector + "," + to_string(table.kind) + "," + std::to_string(row.step) + "," +
           format_fixed(row.param, 2);
    for (const TraitIndices* t : {&row.top, &row.lowest}) {
      out += "," + format_fixed(100.0 * t->f(), 6);
      out += "," + format_fixed(100.0 * t->g(), 6);
      out += "," + format_fixed(100.0 * t->h(), 6);
    }
    out += "\n";
  }
  return out;
}

std::string report_table_text(const ReportTable& table) {
  const std::size_t name_w = 10, amt_w = 7, val_w = 6;
  const std::string js = std::to_string(table.j);

  std::string out;
  out += pad(kind_title(table.kind), name_w + amt_w);
  out += pad("TOP " + js, 3 * val_w + 2);
  out += "LOWEST " + js + "\n";
  out += std::string(name_w + amt_w, ' ');
  for (int rep = 0; rep < 2; ++rep) {
    for (const char* h : {"F", "G", "H"}) out += pad(h, val_w);
    if (rep == 0) out += "  ";
  }
  out += "\n";

  std::string last_detector;
  for (const ReportRow& row : table.rows) {
    out += pad(row.detector == last_detector ? "" : row.detector, name_w);
    last_detector = row.detector;
    out += pad(amount_label(table.kind, row.param), amt_w);
    for (const TraitIndices* t : {&row.top, &row.lowest}) {
      for (int which = 0; which < 3; ++which) out += pad(percent_text(*t, which), val_w);
      if (t == &row.top) out += "  ";
    }
    out += "\n";
  }
  return out;
}

std::string report_chart_svg(const ReportTable& table) {
  // Layout: one cluster of six bars per table row, clusters grouped by
  // detector with a wider gap between detectors.
  const double bar_w = 9.0, bar_gap = 2.0, cluster_gap = 14.0, detector_gap = 26.0;
  const double left = 50.0, top = 36.0, plot_h = 220.0, bottom_h = 56.0;

  const double cluster_w = 6 * bar_w + 5 * bar_gap;
  double width = left + 20.0;
  std::string last_detector;
  for (const ReportRow& row : table.rows) {
    width += (row.detector == last_detector || last_detector.empty() ? cluster_gap : detector_gap);
    width += cluster_w;
    last_detector = row.detector;
  }

  const double height = top + plot_h + bottom_h;
  const char* colors[6] = {"#1b7837", "#5aae61", "#a6dba0", "#c2161b", "#e66a5b", "#f4b6a8"};

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_fixed(width, 0) +
         "\" height=\"" + format_fixed(height, 0) + "\" font-family=\"sans-serif\">\n";
  svg += "<text x=\"" + format_fixed(left, 2) + "\" y=\"20\" font-size=\"14\">" +
         kind_title(table.kind) + " - trait indices (top " + std::to_string(table.j) +
         " green, lowest " + std::to_string(table.j) + " red; F, G, H per group)</text>\n";

  for (int grid = 0; grid <= 100; grid += 20) {
    const double y = top + plot_h * (1.0 - grid / 100.0);
    svg += "<line x1=\"" + format_fixed(left, 2) + "\" y1=\"" + format_fixed(y, 2) + "\" x2=\"" +
           format_fixed(width - 10.0, 2) + "\" y2=\"" + format_fixed(y, 2) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + format_fixed(left - 8.0, 2) + "\" y=\"" + format_fixed(y + 4.0, 2) +
           "\" font-size=\"10\" text-anchor=\"end\">" + std::to_string(grid) + "</text>\n";
  }

  double x = left;
  last_detector.clear();
  for (const ReportRow& row : table.rows) {
    x += (row.detector == last_detector || last_detector.empty() ? cluster_gap : detector_gap);
    const bool new_detector = row.detector != last_detector;
    last_detector = row.detector;

    const double values[6] = {100.0 * row.top.f(),    100.0 * row.top.g(),
                              100.0 * row.top.h(),    100.0 * row.lowest.f(),
                              100.0 * row.lowest.g(), 100.0 * row.lowest.h()};
    for (int i = 0; i < 6; ++i) {
      const double bh = plot_h * values[i] / 100.0;
      svg += "<rect x=\"" + format_fixed(x + i * (bar_w + bar_gap), 2) + "\" y=\"" +
             format_fixed(top + plot_h - bh, 2) + "\" width=\"" + format_fixed(bar_w, 2) +
             "\" height=\"" + format_fixed(bh, 2) + "\" fill=\"" + colors[i] + "\"/>\n";
    }
    svg += "<text x=\"" + format_fixed(x + cluster_w / 2.0, 2) + "\" y=\"" +
           format_fixed(top + plot_h + 14.0, 2) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + amount_label(table.kind, row.param) +
           "</text>\n";
    if (new_detector) {
      svg += "<text x=\"" + format_fixed(x + cluster_w / 2.0, 2) + "\" y=\"" +
             format_fixed(top + plot_h + 30.0, 2) +
             "\" font-size=\"11\" text-anchor=\"middle\">" + row.detector + "</text>\n";
    }
    x += cluster_w;
  }

  svg += "<line x1=\"" + format_fixed(left, 2) + "\" y1=\"" + format_fixed(top, 2) + "\" x2=\"" +
         format_fixed(left, 2) + "\" y2=\"" + format_fixed(top + plot_h, 2) +
         "\" stroke=\"#333333\"/>\n";
  svg += "<line x1=\"" + format_fixed(left, 2) + "\" y1=\"" + format_fixed(top + plot_h, 2) +
         "\" x2=\"" + format_fixed(width - 10.0, 2) + "\" y2=\"" + format_fixed(top + plot_h, 2) +
         "\" stroke=\"#333333\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace scenebias
