#include "scenebias/ranking.hpp"

#include <algorithm>

#include "scenebias/errors.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

RepeatabilitySeries build_series(const std::vector<RepeatabilityRecord>& records,
                                 const std::string& detector, TransformKind kind, int step) {
  RepeatabilitySeries series;
  series.detector = detector;
  series.kind = kind;
  series.step = step;
  for (const RepeatabilityRecord& r : records) {
    if (r.detector != detector || r.kind != kind || r.step != step) continue;
    series.param = r.param;
    series.ratios.emplace_back(r.scene, r.ratio);
  }
  if (series.ratios.empty())
    throw ConfigError("no repeatability records for " + detector + "/" + to_string(kind) +
                      "/step " + std::to_string(step));
  std::sort(series.ratios.begin(), series.ratios.end());
  for (std::size_t i = 1; i < series.ratios.size(); ++i)
    if (series.ratios[i].first == series.ratios[i - 1].first)
      throw ValidationError("duplicate record for scene " +
                            std::to_string(series.ratios[i].first) + " in " + detector + "/" +
                            to_string(kind) + "/step " + std::to_string(step));
  return series;
}

SeriesWithExclusions build_series(const std::vector<RepeatabilityRecord>& records,
                                  const std::string& detector, TransformKind kind, int step,
                                  const std::vector<int>& expected_scenes) {
  SeriesWithExclusions out;
  out.series = build_series(records, detector, kind, step);
  for (int scene : expected_scenes) {
    const auto it = std::lower_bound(out.series.ratios.begin(), out.series.ratios.end(),
                                     std::pair<int, double>{scene, -1.0});
    if (it == out.series.ratios.end() || it->first != scene) out.excluded.push_back(scene);
  }
  return out;
}

std::string to_string(Polarity polarity) { return polarity == Polarity::Top ? "top" : "lowest"; }

namespace {

// One total order for both rankings: ratio descending, scene ascending.
std::vector<std::pair<int, double>> sorted_by_rank(const RepeatabilitySeries& series) {
  std::vector<std::pair<int, double>> order = series.ratios;
  std::sort(order.begin(), order.end(), [](const auto& p, const auto& q) {
    if (p.second != q.second) return p.second > q.second;
    return p.first < q.first;
  });
  return order;
}

Ranking make_ranking(const RepeatabilitySeries& series, int j, Polarity polarity) {
  if (j < 1 || j > static_cast<int>(series.size()))
    throw ArgumentError("ranking size j = " + std::to_string(j) +
                        " outside [1, n]; series has n = " + std::to_string(series.size()));
  const auto order = sorted_by_rank(series);
  Ranking ranking;
  ranking.detector = series.detector;
  ranking.kind = series.kind;
  ranking.step = series.step;
  ranking.param = series.param;
  ranking.polarity = polarity;
  if (polarity == Polarity::Top) {
    ranking.entries.assign(order.begin(), order.begin() + j);
  } else {
    ranking.entries.assign(order.rbegin(), order.rbegin() + j);
  }
  return ranking;
}

}  // namespace

Ranking top_ranking(const RepeatabilitySeries& series, int j) {
  return make_ranking(series, j, Polarity::Top);
}

Ranking lowest_ranking(const RepeatabilitySeries& series, int j) {
  return make_ranking(series, j, Polarity::Lowest);
}

TraitIndices trait_indices(const Ranking& ranking, const LabelMap& labels) {
  TraitIndices indices;
  indices.j = ranking.j();
  for (const auto& [scene, ratio] : ranking.entries) {
    const auto it = labels.find(scene);
    if (it == labels.end())
      throw ValidationError("scene " + std::to_string(scene) + " in the " +
                            to_string(ranking.polarity) + " ranking has no labels");
    indices.outdoor_count += it->second.f;
    indices.human_made_count += it->second.g;
    indices.simple_count += it->second.h;
  }
  return indices;
}

std::string rankings_to_csv(const std::vector<Ranking>& rankings) {
  std::string out = "detector,kind,step,polarity,rank_position,scene_id,ratio\n";
  for (const Ranking& ranking : rankings) {
    for (std::size_t pos = 0; pos < ranking.entries.size(); ++pos) {
      out += ranking.detector + "," + to_string(ranking.kind) + "," +
             std::to_string(ranking.step) + "," + to_string(ranking.polarity) + "," +
             std::to_string(pos + 1) + "," + std::to_string(ranking.entries[pos].first) + "," +
             format_fixed(ranking.entries[pos].second, 6) + "\n";
    }
  }
  return out;
}

}  // namespace scenebias
