#include "scenebias/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scenebias/errors.hpp"
#include "scenebias/image_io.hpp"
#include "scenebias/parallel.hpp"
#include "scenebias/ranking.hpp"
#include "scenebias/report.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

std::vector<DetectorId> default_roster() {
  return {DetectorId::parse("HARLAP"), DetectorId::parse("HESLAP"), DetectorId::parse("MSER"),
          DetectorId::parse("FASTHESS")};
}

namespace {

std::string detector_dir_name(const DetectorId& id) {
  if (id.is_native()) return id.name();
  return "EXT_" + id.tag;  // ':' is not filesystem-friendly
}

void write_text_report(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  if (lines.empty()) {
    std::error_code ec;
    std::filesystem::remove(path, ec);  // drop stale reports
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const std::string& line : lines) out << line << "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

DatasetManifest load_db_manifest(const RunConfig& config) {
  const std::filesystem::path manifest_path = config.db_root / "manifest.json";
  std::error_code ec;
  if (!std::filesystem::exists(manifest_path, ec))
    throw ConfigError("no manifest at " + manifest_path.string() + "; run gen first");
  return load_manifest(manifest_path);
}

std::string eval_settings_json(const RunConfig& config) {
  std::string detectors;
  for (const DetectorId& d : config.detectors)
    detectors += (detectors.empty() ? "\"" : ", \"") + d.name() + "\"";
  return std::string("{\n") +
         "  \"criterion\": \"n_rep/n_ref, maximum-cardinality matching\",\n" +
         "  \"eps_overlap\": " + format_general(config.eps_overlap) + ",\n" +
         "  \"normalize_radius\": " + format_general(config.normalize_radius) + ",\n" +
         "  \"detectors\": [" + detectors + "]\n}\n";
}

void validate_roster(const std::vector<DetectorId>& detectors) {
  if (detectors.empty()) throw ConfigError("detector roster is empty");
  for (std::size_t i = 0; i < detectors.size(); ++i)
    for (std::size_t j = i + 1; j < detectors.size(); ++j)
      if (detectors[i] == detectors[j])
        throw ConfigError("duplicate detector in roster: " + detectors[i].name());
}

struct WorkItem {
  DetectorId detector;
  int scene = 0;
  TransformKind kind = TransformKind::Blur;
  int step = 0;
  double param = 0.0;
  std::string image_rel;
};

std::vector<WorkItem> detection_items(const RunConfig& config, const DatasetManifest& manifest) {
  std::vector<WorkItem> items;
  for (const DetectorId& detector : config.detectors) {
    if (!detector.is_native()) continue;  // external regions are dropped in by the user
    for (const SceneEntry& scene : manifest.scenes) {
      for (TransformKind kind : {TransformKind::Blur, TransformKind::Light}) {
        const auto& schedule = manifest.schedule(kind);
        const auto& images = scene.images(kind);
        for (std::size_t i = 0; i < images.size(); ++i)
          items.push_back({detector, scene.id, kind, static_cast<int>(i) + 1, schedule[i],
                           images[i]});
      }
    }
  }
  return items;
}

}  // namespace

std::filesystem::path region_file_path(const std::filesystem::path& out_dir,
                                       const DetectorId& detector, int scene, TransformKind kind,
                                       int step, double param) {
  const std::string file = std::to_string(step) + "_" + format_fixed(param, 2) + ".regions";
  return out_dir / "regions" / detector_dir_name(detector) / scene_dir_name(scene) /
         to_string(kind) / file;
}

DatasetManifest cmd_gen(const RunConfig& config) {
  GenerateOptions options;
  options.blur_sigmas = config.blur_sigmas;
  options.light_factors = config.light_factors;
  options.jobs = config.jobs;
  options.force = config.force;
  return generate_database(config.refs_dir, config.db_root, options);
}

StageSummary cmd_detect(const RunConfig& config) {
  validate_roster(config.detectors);
  const DatasetManifest manifest = load_db_manifest(config);
  const std::vector<WorkItem> items = detection_items(config, manifest);

  StageSummary summary;
  std::vector<bool> skipped(items.size(), false);
  std::filesystem::create_directories(config.out_dir);

  auto run_item = [&](std::size_t i) {
    const WorkItem& item = items[i];
    const std::filesystem::path target = region_file_path(
        config.out_dir, item.detector, item.scene, item.kind, item.step, item.param);
    std::error_code ec;
    if (!config.force && std::filesystem::exists(target, ec)) {
      skipped[i] = true;
      return;
    }
    const GrayImage img = load_image(config.db_root / item.image_rel);
    std::vector<InterestRegion> regions = detect(item.detector, img, config.detector_settings);
    std::filesystem::create_directories(target.parent_path());
    write_region_file(regions, target);
  };

  const auto errors = parallel_for(items.size(), config.jobs, run_item);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) {
      summary.gaps.push_back(items[i].detector.name() + " " + items[i].image_rel + ": " +
                             *errors[i]);
    } else if (skipped[i]) {
      ++summary.skipped;
    } else {
      ++summary.processed;
    }
  }
  write_text_report(config.out_dir / "detect_gaps.txt", summary.gaps);
  return summary;
}

StageSummary cmd_eval(const RunConfig& config) {
  validate_roster(config.detectors);
  const DatasetManifest manifest = load_db_manifest(config);

  struct Dataset {
    DetectorId detector;
    const SceneEntry* scene = nullptr;
    TransformKind kind = TransformKind::Blur;
  };
  std::vector<Dataset> datasets;
  for (const DetectorId& detector : config.detectors)
    for (const SceneEntry& scene : manifest.scenes)
      for (TransformKind kind : {TransformKind::Blur, TransformKind::Light})
        datasets.push_back({detector, &scene, kind});

  struct DatasetOutcome {
    std::vector<RepeatabilityRecord> records;
    std::vector<std::string> gaps;
    std::vector<std::string> exclusions;
  };
  std::vector<DatasetOutcome> outcomes(datasets.size());

  auto evaluate_dataset = [&](std::size_t i) {
    const Dataset& ds = datasets[i];
    DatasetOutcome& outcome = outcomes[i];
    const auto& schedule = manifest.schedule(ds.kind);
    const std::string dataset_name =
        ds.detector.name() + " scene " + std::to_string(ds.scene->id) + " " + to_string(ds.kind);

    const std::filesystem::path ref_path = region_file_path(
        config.out_dir, ds.detector, ds.scene->id, ds.kind, 1, schedule.front());
    std::error_code ec;
    if (!std::filesystem::exists(ref_path, ec)) {
      outcome.gaps.push_back(dataset_name + ": missing reference regions " + ref_path.string());
      return;
    }
    const std::vector<InterestRegion> ref = read_region_file(ref_path);
    if (ref.empty()) {
      outcome.exclusions.push_back(dataset_name + ": undefined repeatability (N_ref = 0)");
      return;
    }

    // Transforms preserve dimensions, so the reference image bounds serve as
    // the common-part frame for every step.
    const GrayImage ref_img = load_image(config.db_root / ds.scene->images(ds.kind).front());
    const FrameBounds frame{ref_img.width, ref_img.height};
    const Homography identity = Homography::identity();

    for (std::size_t s = 0; s < schedule.size(); ++s) {
      const int step = static_cast<int>(s) + 1;
      const std::filesystem::path test_path = region_file_path(
          config.out_dir, ds.detector, ds.scene->id, ds.kind, step, schedule[s]);
      if (!std::filesystem::exists(test_path, ec)) {
        outcome.gaps.push_back(dataset_name + " step " + std::to_string(step) +
                               ": missing regions " + test_path.string());
        continue;
      }
      const std::vector<InterestRegion> test = read_region_file(test_path);
      const RepeatabilityResult r =
          repeatability(ref, test, identity, frame, config.eps_overlap, config.normalize_radius);
      outcomes[i].records.push_back({ds.detector.name(), ds.kind, ds.scene->id, step, schedule[s],
                                     r.n_ref, r.n_rep, r.ratio});
    }
  };

  const auto errors = parallel_for(datasets.size(), config.jobs, evaluate_dataset);

  StageSummary summary;
  std::vector<RepeatabilityRecord> records;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    if (errors[i]) {
      summary.gaps.push_back(datasets[i].detector.name() + " scene " +
                             std::to_string(datasets[i].scene->id) + " " +
                             to_string(datasets[i].kind) + ": " + *errors[i]);
      continue;
    }
    const DatasetOutcome& outcome = outcomes[i];
    records.insert(records.end(), outcome.records.begin(), outcome.records.end());
    summary.gaps.insert(summary.gaps.end(), outcome.gaps.begin(), outcome.gaps.end());
    summary.exclusions.insert(summary.exclusions.end(), outcome.exclusions.begin(),
                              outcome.exclusions.end());
    summary.processed += static_cast<int>(outcome.records.size());
  }

  sort_records(records);
  std::filesystem::create_directories(config.out_dir);
  save_records(records, config.out_dir / "repeatability.csv");
  write_file(config.out_dir / "eval_settings.json", eval_settings_json(config));
  write_text_report(config.out_dir / "eval_gaps.txt", summary.gaps);
  write_text_report(config.out_dir / "exclusions.txt", summary.exclusions);
  return summary;
}

namespace {

int step_for_amount(const std::vector<double>& schedule, TransformKind kind, double amount) {
  const double param = kind == TransformKind::Blur ? amount : 1.0 - amount / 100.0;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (std::abs(schedule[i] - param) < 1e-9) {
      if (i == 0)
        throw ConfigError("report amount " + format_general(amount) + " for " + to_string(kind) +
                          " selects the untransformed reference step");
      return static_cast<int>(i) + 1;
    }
  }
  throw ConfigError("report amount " + format_general(amount) + " for " + to_string(kind) +
                    " is not in the database schedule");
}

}  // namespace

StageSummary cmd_report(const RunConfig& config) {
  validate_roster(config.detectors);
  const DatasetManifest manifest = load_db_manifest(config);
  const std::vector<RepeatabilityRecord> records =
      load_records(config.out_dir / "repeatability.csv");
  if (config.labels_path.empty()) throw ConfigError("report requires --labels");
  const LabelMap labels = parse_labels(config.labels_path);

  std::vector<std::string> detector_names;
  for (const DetectorId& d : config.detectors) detector_names.push_back(d.name());

  StageSummary summary;
  const std::filesystem::path report_dir = config.out_dir / "report";
  std::filesystem::create_directories(report_dir);

  for (TransformKind kind : {TransformKind::Blur, TransformKind::Light}) {
    const auto& amounts = kind == TransformKind::Blur ? config.report_blur : config.report_light;
    std::vector<int> steps;
    for (double amount : amounts)
      steps.push_back(step_for_amount(manifest.schedule(kind), kind, amount));

    // Build everything (and hit any validation error) before writing bytes.
    const ReportTable table =
        build_report_table(records, labels, kind, detector_names, steps, config.j);
    std::vector<Ranking> rankings;
    for (const std::string& detector : detector_names) {
      for (int step : steps) {
        const RepeatabilitySeries series = build_series(records, detector, kind, step);
        rankings.push_back(top_ranking(series, config.j));
        rankings.push_back(lowest_ranking(series, config.j));
      }
    }

    const std::string suffix = to_string(kind);
    write_file(report_dir / ("trait_indices_" + suffix + ".csv"), report_table_csv(table));
    write_file(report_dir / ("trait_indices_" + suffix + ".txt"), report_table_text(table));
    write_file(report_dir / ("rankings_" + suffix + ".csv"), rankings_to_csv(rankings));
    write_file(report_dir / ("chart_" + suffix + ".svg"), report_chart_svg(table));
    summary.processed += static_cast<int>(table.rows.size());
  }
  return summary;
}

}  // namespace scenebias
