#include <doctest.h>

#include <random>

#include "scenebias/report.hpp"

using namespace scenebias;

namespace {

// Synthetic records: 8 scenes, one detector, two blur steps, ratios chosen so
// the rankings are fully predictable.
std::vector<RepeatabilityRecord> fixture_records() {
  std::vector<RepeatabilityRecord> records;
  for (int step : {2, 3}) {
    for (int scene = 1; scene <= 8; ++scene) {
      const double ratio = (step == 2 ? 1.0 : 0.5) - scene * 0.05;
      records.push_back(
          {"HARLAP", TransformKind::Blur, scene, step, step == 2 ? 0.5 : 1.0, 20, 10, ratio});
    }
  }
  return records;
}

LabelMap fixture_labels() {
  LabelMap labels;
  for (int scene = 1; scene <= 8; ++scene)
    labels[scene] = {scene % 2, scene <= 4 ? 1 : 0, scene == 1 ? 1 : 0};
  return labels;
}

}  // namespace

TEST_CASE("amount labels: sigma for blur, reduction percent for light") {
  CHECK(amount_label(TransformKind::Blur, 0.5) == "0.5");
  CHECK(amount_label(TransformKind::Blur, 2.0) == "2.0");
  CHECK(amount_label(TransformKind::Light, 0.90) == "10%");
  CHECK(amount_label(TransformKind::Light, 0.60) == "40%");
  CHECK(amount_label(TransformKind::Light, 0.40) == "60%");
}

TEST_CASE("report table entries are exact trait ratios") {
  const auto table = build_report_table(fixture_records(), fixture_labels(), TransformKind::Blur,
                                        {"HARLAP"}, {2, 3}, 4);
  REQUIRE(table.rows.size() == 2);
  // Top 4 at step 2: scenes 1..4 (ratios descend with scene id).
  CHECK(table.rows[0].top.outdoor_count == 2);      // scenes 1, 3
  CHECK(table.rows[0].top.human_made_count == 4);   // scenes 1-4
  CHECK(table.rows[0].top.simple_count == 1);       // scene 1
  // Lowest 4: scenes 8..5.
  CHECK(table.rows[0].lowest.outdoor_count == 2);   // 5, 7
  CHECK(table.rows[0].lowest.human_made_count == 0);
  CHECK(table.rows[0].lowest.simple_count == 0);
}

TEST_CASE("CSV percentages are multiples of 100/j") {
  const auto table = build_report_table(fixture_records(), fixture_labels(), TransformKind::Blur,
                                        {"HARLAP"}, {2, 3}, 4);
  const std::string csv = report_table_csv(table);
  CHECK(csv.find("detector,kind,step,param,top_f,top_g,top_h,lowest_f,lowest_g,lowest_h\n") == 0);
  CHECK(csv.find("HARLAP,blur,2,0.50,50.000000,100.000000,25.000000") != std::string::npos);

  for (const ReportRow& row : table.rows) {
    for (const TraitIndices* t : {&row.top, &row.lowest}) {
      for (double v : {t->f(), t->g(), t->h()}) {
        const double scaled = v * table.j;  // count; must be integral
        CHECK(scaled == doctest::Approx(std::round(scaled)));
      }
    }
  }
}

TEST_CASE("text table mirrors the figure layout") {
  const auto table = build_report_table(fixture_records(), fixture_labels(), TransformKind::Blur,
                                        {"HARLAP"}, {2, 3}, 4);
  const std::string text = report_table_text(table);
  CHECK(text.find("Blur") == 0);
  CHECK(text.find("TOP 4") != std::string::npos);
  CHECK(text.find("LOWEST 4") != std::string::npos);
  CHECK(text.find("HARLAP") != std::string::npos);
  CHECK(text.find("0.5") != std::string::npos);
  // Detector name printed once per group.
  CHECK(text.find("HARLAP") == text.rfind("HARLAP"));
}

TEST_CASE("emitters are deterministic") {
  const auto table = build_report_table(fixture_records(), fixture_labels(), TransformKind::Blur,
                                        {"HARLAP"}, {2, 3}, 4);
  CHECK(report_table_csv(table) == report_table_csv(table));
  CHECK(report_table_text(table) == report_table_text(table));
  const std::string svg = report_chart_svg(table);
  CHECK(svg == report_chart_svg(table));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // One bar per index per row: 2 rows x 6 bars.
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1))
    ++rects;
  CHECK(rects == 12);
}
