#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wgshift/analyzer.hpp"
#include "wgshift/gallery.hpp"
#include "wgshift/presentation.hpp"
#include "wgshift/presentation_io.hpp"

using namespace wgs;

namespace {

// Runs the command line tool, captures stdout, returns the exit status.
struct RunResult {
  int status = -1;
  std::string out;
};

std::string temp_path(const std::string& stem) {
  static int counter = 0;
  return "gallery_test_" + stem + "_" + std::to_string(counter++) + ".tmp";
}

RunResult run_cli(const std::string& args) {
  std::string out_file = temp_path("out");
  std::string cmd = std::string(WGSHIFT_CLI_PATH) + " " + args + " > " +
                    out_file + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.status = raw;
#else
  r.status = WEXITSTATUS(raw);
#endif
  std::ifstream in(out_file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_file.c_str());
  return r;
}

std::string write_temp(const std::string& stem, const std::string& content) {
  std::string path = temp_path(stem);
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string write_entry(const std::string& name) {
  const GalleryEntry* e = find_entry(name);
  REQUIRE(e != nullptr);
  return write_temp(name, save_presentation(e->presentation));
}

} // namespace

TEST_CASE("gallery names are unique and entries validate") {
  const std::vector<GalleryEntry>& g = gallery();
  REQUIRE(g.size() >= 8);
  std::vector<std::string> names;
  for (const GalleryEntry& e : g) {
    CAPTURE(e.name);
    names.push_back(e.name);
    CHECK_FALSE(e.summary.empty());
    CHECK(validate(e.presentation).empty());
  }
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("entry lookup") {
  CHECK(find_entry("theta2") != nullptr);
  CHECK(find_entry("nope") == nullptr);
}

TEST_CASE("every entry reproduces its pinned classification") {
  for (const GalleryEntry& e : gallery()) {
    CAPTURE(e.name);
    CHECK(fragment_mismatches(e.expected, predicate_vector(e.presentation))
              .empty());
  }
}

TEST_CASE("serialized entries are byte stable") {
  for (const GalleryEntry& e : gallery()) {
    CAPTURE(e.name);
    std::string once = save_presentation(e.presentation);
    Presentation reloaded = load_presentation(once);
    CHECK(save_presentation(reloaded) == once);
  }
}

TEST_CASE("generated presentations are deterministic and valid") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    Presentation a = random_presentation(seed, 3);
    CHECK(validate(a).empty());
    Presentation b = random_presentation(seed, 3);
    CHECK(save_presentation(a) == save_presentation(b));
  }
}

TEST_CASE("generator seeds differ") {
  CHECK(save_presentation(random_presentation(1, 3)) !=
        save_presentation(random_presentation(2, 3)));
}

TEST_CASE("generator yields enough finite-fibre instances") {
  int ff = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    if (predicate_vector(random_presentation(seed, 4)).finite_fibre_weighted)
      ++ff;
  CHECK(ff >= 30);
}

TEST_CASE("command line: generated presentations classify cleanly") {
  std::string path =
      write_temp("gen", save_presentation(random_presentation(1, 3)));
  RunResult r = run_cli("classify --format json " + path);
  CHECK(r.status == 0);
  nlohmann::json parsed;
  CHECK_NOTHROW(parsed = nlohmann::json::parse(r.out));
  CHECK(parsed.is_object());
  std::remove(path.c_str());
}

TEST_CASE("command line: classification report") {
  std::string path = write_entry("theta2");
  RunResult r = run_cli("classify --format json " + path);
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("finiteFibreWeighted").get<bool>());
  CHECK(j.at("entSetWeighted").get<std::string>() == "infinite");
  CHECK(j.at("entCsetWeighted").get<std::string>() == "zero");
  CHECK(j.at("tauBound").at("unbounded").get<bool>());
  CHECK(j.at("predicates").contains("pi1"));
  std::remove(path.c_str());
}

TEST_CASE("command line: classify a presentation file") {
  std::string path = write_temp("swap", save_presentation(
      find_entry("finite_demo_swap")->presentation));
  RunResult r = run_cli("classify --format json " + path);
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("tauBound").at("value").get<int>() == 1);
  std::remove(path.c_str());
}

TEST_CASE("command line: missing file is an input error") {
  RunResult r = run_cli("classify does_not_exist.json");
  CHECK(r.status == 2);
}

TEST_CASE("command line: malformed input is an input error") {
  std::string path = write_temp("bad", "{\"field\": {\"p\": 9}}");
  RunResult r = run_cli("classify " + path);
  CHECK(r.status == 2);
  std::remove(path.c_str());
}

TEST_CASE("command line: gallery listing covers all entries") {
  RunResult r = run_cli("gallery list --format json");
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == gallery().size());
  bool found = false;
  for (const auto& row : j)
    if (row.at("name") == "theta1_v") {
      found = true;
      CHECK(row.at("report").at("entCsetWeighted") == "zero");
      CHECK(row.at("report").at("entCsetUnweighted") == "infinite");
    }
  CHECK(found);
}

TEST_CASE("command line: emitted entry reloads identically") {
  std::string path = temp_path("emit");
  RunResult r = run_cli("gallery emit theta3 --out " + path);
  REQUIRE(r.status == 0);
  Presentation p = load_presentation_file(path);
  CHECK(save_presentation(p) ==
        save_presentation(find_entry("theta3")->presentation));
  std::remove(path.c_str());
}

TEST_CASE("command line: unknown gallery entry") {
  RunResult r = run_cli("gallery emit nope");
  CHECK(r.status == 2);
}

TEST_CASE("command line: verification accepts the gallery") {
  for (const std::string name : {"theta3", "counterexample_3_4"}) {
    std::string path = write_entry(name);
    RunResult r = run_cli("verify " + path);
    CAPTURE(name);
    CAPTURE(r.out);
    CHECK(r.status == 0);
    std::remove(path.c_str());
  }
}

TEST_CASE("command line: brute force agrees on a finite instance") {
  std::string path = write_entry("finite_demo_collapse");
  RunResult r = run_cli("brute --format json " + path);
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("disagreements").get<int>() == 0);
  std::remove(path.c_str());
}

TEST_CASE("command line: brute force rejects infinite instances") {
  std::string path = write_entry("theta3");
  RunResult r = run_cli("brute " + path);
  CHECK(r.status == 2);
  std::remove(path.c_str());
}

TEST_CASE("command line: implication sweep passes quickly") {
  RunResult r = run_cli("table-a --samples 25 --format json");
  REQUIRE(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("violations").empty());
  CHECK(j.at("instancesChecked").get<int>() >= 25);
}
