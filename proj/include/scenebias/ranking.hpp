#pragma once

#include <string>
#include <vector>

#include "scenebias/labels.hpp"
#include "scenebias/repeatability.hpp"

namespace scenebias {

/// The repeatability ratios of one (detector, kind, step) across scenes.
struct RepeatabilitySeries {
  std::string detector;
  TransformKind kind = TransformKind::Blur;
  int step = 0;
  double param = 0.0;
  std::vector<std::pair<int, double>> ratios;  // (scene, ratio), sorted by scene

  std::size_t size() const { return ratios.size(); }
};

/// Collects the series for (detector, kind, step) from evaluation records.
/// Throws ConfigError when no record matches and ValidationError on
/// duplicate scenes.
RepeatabilitySeries build_series(const std::vector<RepeatabilityRecord>& records,
                                 const std::string& detector, TransformKind kind, int step);

/// Same, but also reports which of the expected scenes are missing from the
/// records (scenes excluded upstream for undefined repeatability).
struct SeriesWithExclusions {
  RepeatabilitySeries series;
  std::vector<int> excluded;
};
SeriesWithExclusions build_series(const std::vector<RepeatabilityRecord>& records,
                                  const std::string& detector, TransformKind kind, int step,
                                  const std::vector<int>& expected_scenes);

enum class Polarity { Top, Lowest };

std::string to_string(Polarity polarity);

/// j scenes read off one total order (ratio descending, ties by ascending
/// scene index): the top ranking takes the first j positions, the lowest
/// ranking the last j in reverse. For 2j <= n the two are disjoint.
struct Ranking {
  std::string detector;
  TransformKind kind = TransformKind::Blur;
  int step = 0;
  double param = 0.0;
  Polarity polarity = Polarity::Top;
  std::vector<std::pair<int, double>> entries;  // (scene, ratio) in rank order

  int j() const { return static_cast<int>(entries.size()); }
};

Ranking top_ranking(const RepeatabilitySeries& series, int j);
Ranking lowest_ranking(const RepeatabilitySeries& series, int j);

/// Share of ranked scenes labeled outdoor / human-made / simple. Exact
/// multiples of 1/j by construction.
struct TraitIndices {
  int outdoor_count = 0;
  int human_made_count = 0;
  int simple_count = 0;
  int j = 0;

  double f() const { return static_cast<double>(outdoor_count) / j; }
  double g() const { return static_cast<double>(human_made_count) / j; }
  double h() const { return static_cast<double>(simple_count) / j; }
};

TraitIndices trait_indices(const Ranking& ranking, const LabelMap& labels);

/// Export format: detector,kind,step,polarity,rank_position,scene_id,ratio.
std::string rankings_to_csv(const std::vector<Ranking>& rankings);

}  // namespace scenebias
