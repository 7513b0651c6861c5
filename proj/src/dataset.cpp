#include "scenebias/dataset.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "scenebias/errors.hpp"
#include "scenebias/image_io.hpp"
#include "scenebias/parallel.hpp"
#include "scenebias/strutil.hpp"

namespace scenebias {

using ordered_json = nlohmann::ordered_json;

std::string scene_dir_name(int scene_id) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", scene_id);
  return buf;
}

std::string step_file_name(int k, double param) {
  return std::to_string(k) + "_" + format_fixed(param, 2) + ".pgm";
}

std::string manifest_to_json(const DatasetManifest& m) {
  ordered_json j;
  j["version"] = m.version;
  j["schedules"]["blur"] = m.blur_sigmas;
  j["schedules"]["light"] = m.light_factors;
  j["settings"]["kernel_truncation"] = m.kernel_truncation;
  j["settings"]["rounding"] = m.rounding;
  j["settings"]["border"] = m.border;
  j["settings"]["light_transfer"] = m.light_transfer;
  j["scenes"] = ordered_json::array();
  for (const SceneEntry& scene : m.scenes) {
    ordered_json s;
    s["id"] = scene.id;
    s["source"] = scene.source;
    s["images"]["blur"] = scene.blur_images;
    s["images"]["light"] = scene.light_images;
    j["scenes"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

DatasetManifest manifest_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: bad JSON: ") + e.what());
  }
  try {
    DatasetManifest m;
    m.version = j.at("version").get<int>();
    m.blur_sigmas = j.at("schedules").at("blur").get<std::vector<double>>();
    m.light_factors = j.at("schedules").at("light").get<std::vector<double>>();
    const auto& settings = j.at("settings");
    m.kernel_truncation = settings.at("kernel_truncation").get<std::string>();
    m.rounding = settings.at("rounding").get<std::string>();
    m.border = settings.at("border").get<std::string>();
    m.light_transfer = settings.at("light_transfer").get<std::string>();
    for (const auto& s : j.at("scenes")) {
      SceneEntry scene;
      scene.id = s.at("id").get<int>();
      scene.source = s.at("source").get<std::string>();
      scene.blur_images = s.at("images").at("blur").get<std::vector<std::string>>();
      scene.light_images = s.at("images").at("light").get<std::vector<std::string>>();
      m.scenes.push_back(std::move(scene));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: missing or mistyped field: ") + e.what());
  }
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << manifest_to_json(manifest);
  if (!out) throw IoError("write failed for " + path.string());
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  DatasetManifest m = manifest_from_json(text);
  m.root = path.parent_path();
  return m;
}

namespace {

bool is_image_file(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(ch));
  return ext == ".pgm" || ext == ".png";
}

void write_step_image(const GrayImage& img, const std::filesystem::path& path, bool force) {
  std::error_code ec;
  if (!force && std::filesystem::exists(path, ec)) return;
  save_image(img, path);
}

}  // namespace

DatasetManifest generate_database(const std::filesystem::path& refs_dir,
                                  const std::filesystem::path& out_dir,
                                  const GenerateOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(refs_dir, ec))
    throw ConfigError("reference directory does not exist: " + refs_dir.string());

  std::vector<std::filesystem::path> refs;
  for (const auto& entry : std::filesystem::directory_iterator(refs_dir)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) refs.push_back(entry.path());
  }
  std::sort(refs.begin(), refs.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  if (refs.empty())
    throw ConfigError("no reference images (.pgm, .png) found in " + refs_dir.string());

  DatasetManifest manifest;
  manifest.blur_sigmas = options.blur_sigmas.empty() ? blur_schedule() : options.blur_sigmas;
  manifest.light_factors = options.light_factors.empty() ? light_schedule() : options.light_factors;
  manifest.root = out_dir;

  const auto blur_steps = steps_for(TransformKind::Blur, manifest.blur_sigmas);
  const auto light_steps = steps_for(TransformKind::Light, manifest.light_factors);

  manifest.scenes.resize(refs.size());
  std::filesystem::create_directories(out_dir);

  auto synthesize_scene = [&](std::size_t i) {
    const int scene_id = static_cast<int>(i) + 1;
    SceneEntry& scene = manifest.scenes[i];
    scene.id = scene_id;
    scene.source = refs[i].filename().string();

    const GrayImage ref = load_image(refs[i]);
    const std::filesystem::path scene_dir = out_dir / scene_dir_name(scene_id);
    for (const auto* steps : {&blur_steps, &light_steps}) {
      const std::filesystem::path kind_dir = scene_dir / to_string(steps->front().kind);
      std::filesystem::create_directories(kind_dir);
      for (const TransformStep& step : *steps) {
        const std::string rel = scene_dir_name(scene_id) + "/" + to_string(step.kind) + "/" +
                                step_file_name(step.k, step.param);
        write_step_image(apply_step(ref, step), out_dir / rel, options.force);
        if (step.kind == TransformKind::Blur)
          scene.blur_images.push_back(rel);
        else
          scene.light_images.push_back(rel);
      }
    }
  };

  const auto errors = parallel_for(refs.size(), options.jobs, synthesize_scene);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) throw IoError("scene " + refs[i].filename().string() + ": " + *errors[i]);
  }

  save_manifest(manifest, out_dir / "manifest.json");
  return manifest;
}

}  // namespace scenebias
