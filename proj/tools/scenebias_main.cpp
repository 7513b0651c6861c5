// Command-line front end: gen -> detect -> eval -> report, with plain files
// between stages so externally produced region files can be dropped in.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "scenebias/errors.hpp"
#include "scenebias/pipeline.hpp"
#include "scenebias/strutil.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

struct CliOptions {
  std::string refs, db, out, labels;
  std::vector<std::string> detectors;
  std::vector<double> blur_schedule, light_schedule;
  std::vector<double> steps_blur, steps_light;
  double eps_overlap = 0.4;
  double norm_radius = 0.0;
  int j = 20;
  int jobs = 0;
  bool force = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--db", opt.db, "Database root directory");
  cmd->add_option("--out", opt.out, "Output directory for stage results");
  cmd->add_option("--detectors", opt.detectors,
                  "Detector roster (HARLAP, HESLAP, MSER, FASTHESS, EXT:<tag>)")
      ->delimiter(',');
  cmd->add_option("--jobs", opt.jobs, "Worker threads (0 = all hardware threads)");
}

scenebias::RunConfig make_config(const CliOptions& opt) {
  scenebias::RunConfig config;
  config.refs_dir = opt.refs;
  config.db_root = opt.db;
  config.out_dir = opt.out;
  config.labels_path = opt.labels;
  if (!opt.detectors.empty()) {
    config.detectors.clear();
    for (const std::string& name : opt.detectors)
      config.detectors.push_back(scenebias::DetectorId::parse(name));
  }
  config.eps_overlap = opt.eps_overlap;
  config.normalize_radius = opt.norm_radius;
  config.j = opt.j;
  config.blur_sigmas = opt.blur_schedule;
  config.light_factors = opt.light_schedule;
  if (!opt.steps_blur.empty()) config.report_blur = opt.steps_blur;
  if (!opt.steps_light.empty()) config.report_light = opt.steps_light;
  config.jobs = opt.jobs;
  config.force = opt.force;
  return config;
}

int run_gen(const scenebias::RunConfig& config) {
  const scenebias::DatasetManifest manifest = scenebias::cmd_gen(config);
  std::size_t images = 0;
  for (const auto& scene : manifest.scenes)
    images += scene.blur_images.size() + scene.light_images.size();
  std::printf("gen: %zu scenes, %zu images, manifest at %s\n", manifest.scenes.size(), images,
              (config.db_root / "manifest.json").string().c_str());
  return kExitOk;
}

int run_detect(const scenebias::RunConfig& config) {
  const scenebias::StageSummary summary = scenebias::cmd_detect(config);
  std::printf("detect: %d region files written, %d cached, %zu gaps\n", summary.processed,
              summary.skipped, summary.gaps.size());
  for (const std::string& gap : summary.gaps) std::fprintf(stderr, "gap: %s\n", gap.c_str());
  return summary.gaps.empty() ? kExitOk : kExitPartial;
}

int run_eval(const scenebias::RunConfig& config) {
  const scenebias::StageSummary summary = scenebias::cmd_eval(config);
  std::printf("eval: %d records, %zu exclusions, %zu gaps -> %s\n", summary.processed,
              summary.exclusions.size(), summary.gaps.size(),
              (config.out_dir / "repeatability.csv").string().c_str());
  for (const std::string& gap : summary.gaps) std::fprintf(stderr, "gap: %s\n", gap.c_str());
  for (const std::string& ex : summary.exclusions)
    std::fprintf(stderr, "excluded: %s\n", ex.c_str());
  return summary.gaps.empty() ? kExitOk : kExitPartial;
}

int run_report(const scenebias::RunConfig& config) {
  const scenebias::StageSummary summary = scenebias::cmd_report(config);
  std::printf("report: %d table rows -> %s\n", summary.processed,
              (config.out_dir / "report").string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scene-content bias benchmark for local feature detectors"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file (flags override it)");

  CliOptions opt;

  CLI::App* gen = app.add_subcommand("gen", "Synthesize the transformation database");
  gen->configurable();
  gen->add_option("--refs", opt.refs, "Directory of reference images")->required();
  add_common_flags(gen, opt);
  gen->add_option("--blur-schedule", opt.blur_schedule, "Blur sigmas (starts at 0)")
      ->delimiter(',');
  gen->add_option("--light-schedule", opt.light_schedule, "Light factors (starts at 1)")
      ->delimiter(',');
  gen->add_flag("--force", opt.force, "Rewrite images that already exist");

  CLI::App* det = app.add_subcommand("detect", "Run detectors over the database");
  det->configurable();
  add_common_flags(det, opt);
  det->add_flag("--force", opt.force, "Recompute region files that already exist");

  CLI::App* eval = app.add_subcommand("eval", "Compute repeatability records");
  eval->configurable();
  add_common_flags(eval, opt);
  eval->add_option("--eps-overlap", opt.eps_overlap, "Overlap-error threshold in (0, 1)");
  eval->add_option("--norm-radius", opt.norm_radius,
                   "Rescale each pair to this reference radius before the overlap test (0 = off)");

  CLI::App* rep = app.add_subcommand("report", "Emit trait-index tables and charts");
  rep->configurable();
  add_common_flags(rep, opt);
  rep->add_option("--labels", opt.labels, "Scene labels CSV (scene_id,f,g,h)");
  rep->add_option("--j", opt.j, "Ranking size");
  rep->add_option("--steps-blur", opt.steps_blur, "Reported blur sigmas")->delimiter(',');
  rep->add_option("--steps-light", opt.steps_light, "Reported light reductions in percent")
      ->delimiter(',');

  CLI::App* all = app.add_subcommand("all", "gen + detect + eval + report");
  all->configurable();
  all->add_option("--refs", opt.refs, "Directory of reference images");
  add_common_flags(all, opt);
  all->add_option("--labels", opt.labels, "Scene labels CSV (scene_id,f,g,h)");
  all->add_option("--eps-overlap", opt.eps_overlap, "Overlap-error threshold in (0, 1)");
  all->add_option("--norm-radius", opt.norm_radius,
                  "Rescale each pair to this reference radius before the overlap test (0 = off)");
  all->add_option("--j", opt.j, "Ranking size");
  all->add_option("--steps-blur", opt.steps_blur, "Reported blur sigmas")->delimiter(',');
  all->add_option("--steps-light", opt.steps_light, "Reported light reductions in percent")
      ->delimiter(',');
  all->add_option("--blur-schedule", opt.blur_schedule, "Blur sigmas (starts at 0)")
      ->delimiter(',');
  all->add_option("--light-schedule", opt.light_schedule, "Light factors (starts at 1)")
      ->delimiter(',');
  all->add_flag("--force", opt.force, "Recompute cached stage outputs");

  CLI11_PARSE(app, argc, argv);

  try {
    const scenebias::RunConfig config = make_config(opt);
    if (gen->parsed()) return run_gen(config);
    if (det->parsed()) return run_detect(config);
    if (eval->parsed()) return run_eval(config);
    if (rep->parsed()) return run_report(config);

    // all
    int worst = kExitOk;
    if (!config.refs_dir.empty()) run_gen(config);
    worst = std::max(worst, run_detect(config));
    worst = std::max(worst, run_eval(config));
    worst = std::max(worst, run_report(config));
    return worst;
  } catch (const scenebias::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitConfig;
  }
}
