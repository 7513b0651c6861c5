#include <doctest.h>

#include <fstream>

#include "scenebias/dataset.hpp"
#include "scenebias/errors.hpp"
#include "scenebias/image_io.hpp"
#include "testutil.hpp"

using namespace scenebias;

namespace {

std::size_t count_images(const std::filesystem::path& root) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") ++n;
  return n;
}

void write_refs(const std::filesystem::path& dir, int count, int w = 24, int h = 18) {
  std::filesystem::create_directories(dir);
  for (int i = 0; i < count; ++i)
    save_image(testutil::random_image(w, h, 100 + i),
               dir / ("scene_" + std::to_string(i) + ".pgm"));
}

}  // namespace

TEST_CASE("one scene yields 10 + 14 images") {
  testutil::TempDir tmp("gen1");
  write_refs(tmp.path() / "refs", 1);
  const DatasetManifest manifest = generate_database(tmp.path() / "refs", tmp.path() / "db");
  REQUIRE(manifest.scenes.size() == 1);
  CHECK(manifest.scenes[0].blur_images.size() == 10);
  CHECK(manifest.scenes[0].light_images.size() == 14);
  CHECK(count_images(tmp.path() / "db") == 24);
}

TEST_CASE("three scenes yield 72 images and a manifest with 3 scene ids") {
  testutil::TempDir tmp("gen3");
  write_refs(tmp.path() / "refs", 3);
  const DatasetManifest manifest = generate_database(tmp.path() / "refs", tmp.path() / "db");
  REQUIRE(manifest.scenes.size() == 3);
  CHECK(count_images(tmp.path() / "db") == 72);
  for (int i = 0; i < 3; ++i) CHECK(manifest.scenes[i].id == i + 1);

  // Every manifest path exists and follows <scene>/<kind>/<k>_<param>.pgm.
  for (const SceneEntry& scene : manifest.scenes) {
    for (const auto& rel : scene.blur_images)
      CHECK(std::filesystem::exists(tmp.path() / "db" / rel));
    CHECK(scene.blur_images.front() ==
          scene_dir_name(scene.id) + "/blur/1_0.00.pgm");
    CHECK(scene.blur_images.back() ==
          scene_dir_name(scene.id) + "/blur/10_4.50.pgm");
    CHECK(scene.light_images.front() ==
          scene_dir_name(scene.id) + "/light/1_1.00.pgm");
    CHECK(scene.light_images.back() ==
          scene_dir_name(scene.id) + "/light/14_0.30.pgm");
  }
}

TEST_CASE("the k=1 images are the untransformed references") {
  testutil::TempDir tmp("genref");
  write_refs(tmp.path() / "refs", 1);
  const DatasetManifest manifest = generate_database(tmp.path() / "refs", tmp.path() / "db");
  const GrayImage ref = load_image(tmp.path() / "refs" / "scene_0.pgm");
  CHECK(load_image(tmp.path() / "db" / manifest.scenes[0].blur_images[0]) == ref);
  CHECK(load_image(tmp.path() / "db" / manifest.scenes[0].light_images[0]) == ref);
}

TEST_CASE("rerun is idempotent: identical manifest bytes, images untouched") {
  testutil::TempDir tmp("genidem");
  write_refs(tmp.path() / "refs", 2);
  generate_database(tmp.path() / "refs", tmp.path() / "db");

  const auto manifest_path = tmp.path() / "db" / "manifest.json";
  std::ifstream first_in(manifest_path, std::ios::binary);
  const std::string first((std::istreambuf_iterator<char>(first_in)),
                          std::istreambuf_iterator<char>());

  const auto probe = tmp.path() / "db" / "0001" / "blur" / "5_2.00.pgm";
  const auto stamp = std::filesystem::last_write_time(probe);

  generate_database(tmp.path() / "refs", tmp.path() / "db");
  std::ifstream second_in(manifest_path, std::ios::binary);
  const std::string second((std::istreambuf_iterator<char>(second_in)),
                           std::istreambuf_iterator<char>());
  CHECK(first == second);
  CHECK(std::filesystem::last_write_time(probe) == stamp);
}

TEST_CASE("custom schedules flow through to layout and counts") {
  testutil::TempDir tmp("gencustom");
  write_refs(tmp.path() / "refs", 1);
  GenerateOptions options;
  options.blur_sigmas = {0.0, 1.5};
  options.light_factors = {1.0, 0.5, 0.25};
  const DatasetManifest manifest =
      generate_database(tmp.path() / "refs", tmp.path() / "db", options);
  CHECK(count_images(tmp.path() / "db") == 5);
  CHECK(manifest.scenes[0].blur_images.back() == "0001/blur/2_1.50.pgm");
  CHECK(manifest.scenes[0].light_images.back() == "0001/light/3_0.25.pgm");
}

TEST_CASE("empty reference directory is a configuration error") {
  testutil::TempDir tmp("genempty");
  std::filesystem::create_directories(tmp.path() / "refs");
  CHECK_THROWS_AS(generate_database(tmp.path() / "refs", tmp.path() / "db"), ConfigError);
  CHECK_THROWS_AS(generate_database(tmp.path() / "missing", tmp.path() / "db"), ConfigError);
}

TEST_CASE("manifest round-trips through JSON") {
  testutil::TempDir tmp("genrt");
  write_refs(tmp.path() / "refs", 2);
  const DatasetManifest manifest = generate_database(tmp.path() / "refs", tmp.path() / "db");
  const DatasetManifest reloaded = load_manifest(tmp.path() / "db" / "manifest.json");

  CHECK(manifest_to_json(reloaded) == manifest_to_json(manifest));
  CHECK(reloaded.blur_sigmas == manifest.blur_sigmas);
  CHECK(reloaded.light_factors == manifest.light_factors);
  REQUIRE(reloaded.scenes.size() == manifest.scenes.size());
  for (std::size_t i = 0; i < manifest.scenes.size(); ++i) {
    CHECK(reloaded.scenes[i].id == manifest.scenes[i].id);
    CHECK(reloaded.scenes[i].blur_images == manifest.scenes[i].blur_images);
    CHECK(reloaded.scenes[i].light_images == manifest.scenes[i].light_images);
  }

  CHECK_THROWS_AS(manifest_from_json("{ not json"), FormatError);
  CHECK_THROWS_AS(manifest_from_json("{\"version\": 1}"), FormatError);
}
