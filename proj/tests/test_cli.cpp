// Exercises the CLI surface through the actual binary: exit codes, gap
// handling and the config file. The binary path arrives via the
// SCENEBIAS_CLI environment variable set by CTest.

#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fixtures.hpp"
#include "scenebias/image_io.hpp"
#include "scenebias/pipeline.hpp"
#include "testutil.hpp"

using namespace scenebias;

namespace {

std::string cli_path() {
  const char* env = std::getenv("SCENEBIAS_CLI");
  REQUIRE_MESSAGE(env != nullptr, "SCENEBIAS_CLI must point at the binary");
  return env;
}

int run(const std::string& args, const std::filesystem::path& log) {
  const std::string command =
      "\"" + cli_path() + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct CliFixture {
  testutil::TempDir tmp{"cli"};
  std::filesystem::path refs, db, out, labels, log;

  CliFixture() {
    refs = tmp.path() / "refs";
    db = tmp.path() / "db";
    out = tmp.path() / "out";
    labels = tmp.path() / "labels.csv";
    log = tmp.path() / "run.log";
    std::filesystem::create_directories(refs);
    for (int i = 0; i < 2; ++i)
      save_image(fixtures::synthetic_scene(64, 64, 40 + i),
                 refs / ("r" + std::to_string(i) + ".pgm"));
    std::ofstream(labels) << "scene_id,f,g,h\n1,1,1,0\n2,0,1,1\n";
  }

  std::string common() const {
    return "--db \"" + db.string() + "\" --out \"" + out.string() + "\"";
  }
};

}  // namespace

TEST_CASE("pipeline subcommands succeed with exit code 0") {
  CliFixture fx;
  CHECK(run("gen --refs \"" + fx.refs.string() +
                "\" --db \"" + fx.db.string() + "\" --blur-schedule 0,1.5 --light-schedule 1,0.5",
            fx.log) == 0);
  CHECK(run("detect " + fx.common() + " --detectors MSER,FASTHESS --jobs 2", fx.log) == 0);
  CHECK(run("eval " + fx.common() + " --detectors MSER,FASTHESS", fx.log) == 0);
  CHECK(run("report " + fx.common() + " --detectors MSER,FASTHESS --labels \"" +
                fx.labels.string() + "\" --j 1 --steps-blur 1.5 --steps-light 50",
            fx.log) == 0);
  CHECK(std::filesystem::exists(fx.out / "report" / "trait_indices_blur.txt"));
}

TEST_CASE("configuration problems exit with code 2") {
  CliFixture fx;
  CHECK(run("gen --refs \"" + (fx.tmp.path() / "nowhere").string() + "\" --db \"" +
                fx.db.string() + "\"",
            fx.log) == 2);
  CHECK(run("detect " + fx.common(), fx.log) == 2);  // no manifest yet
  CHECK(run("detect " + fx.common() + " --detectors TURBO", fx.log) == 2);
}

TEST_CASE("missing inputs produce a gap report and exit code 3") {
  CliFixture fx;
  REQUIRE(run("gen --refs \"" + fx.refs.string() + "\" --db \"" + fx.db.string() +
                  "\" --blur-schedule 0,1.5 --light-schedule 1,0.5",
              fx.log) == 0);
  // Remove one database image: detect can no longer process that item.
  REQUIRE(std::filesystem::remove(fx.db / "0002" / "light" / "2_0.50.pgm"));
  CHECK(run("detect " + fx.common() + " --detectors MSER --jobs 1", fx.log) == 3);
  CHECK(std::filesystem::exists(fx.out / "detect_gaps.txt"));
  CHECK(run("eval " + fx.common() + " --detectors MSER", fx.log) == 3);
  CHECK(std::filesystem::exists(fx.out / "eval_gaps.txt"));
}

TEST_CASE("options load from a config file, flags override it") {
  CliFixture fx;
  const auto config_path = fx.tmp.path() / "run.ini";
  std::ofstream(config_path) << "[gen]\n"
                             << "refs = \"" << fx.refs.string() << "\"\n"
                             << "db = \"" << fx.db.string() << "\"\n"
                             << "blur-schedule = 0, 1.5\n"
                             << "light-schedule = 1, 0.5\n";
  CHECK(run("--config \"" + config_path.string() + "\" gen", fx.log) == 0);
  CHECK(std::filesystem::exists(fx.db / "manifest.json"));
  const DatasetManifest manifest = load_manifest(fx.db / "manifest.json");
  CHECK(manifest.blur_sigmas == std::vector<double>{0.0, 1.5});

  // A flag wins over the file: point --db somewhere else.
  const auto other_db = fx.tmp.path() / "db2";
  CHECK(run("--config \"" + config_path.string() + "\" gen --db \"" + other_db.string() + "\"",
            fx.log) == 0);
  CHECK(std::filesystem::exists(other_db / "manifest.json"));
}
