#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "support/fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FALKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string example(const std::string& name) { return falkit::testing::diagram_path(name); }
std::string data(const std::string& name) { return std::string(FALKIT_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(run("validate " + example("borromean.fal")).code == 0);
  CHECK(run("validate " + data("unpaired_circle.fal")).code == 1);
  CHECK(run("validate " + data("bad_twist.fal")).code == 2);
  CHECK(run("validate /nonexistent.fal").code == 2);
}

TEST_CASE("report output") {
  const auto r = run("report " + example("torus_chain.fal") + " --dehn 8 --slopes 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("volume.upper_bound = 10.1494160641\n") != std::string::npos);
  CHECK(r.out.find("volume.dehn.m = 8\n") != std::string::npos);
  CHECK(r.out.find("slopes.3.length_lower_bound") != std::string::npos);
  CHECK(r.out.find("slopes.4.") == std::string::npos);
  CHECK(run("report " + data("unpaired_circle.fal")).code == 1);
  CHECK(run("report " + example("borromean.fal") + " --text").out.find("[cusps]") != std::string::npos);
}

TEST_CASE("cusp command") {
  const auto svg = (std::filesystem::temp_directory_path() / "falkit_cli_cusp.svg").string();
  const auto r = run("cusp " + example("borromean.fal") + " --component C1 --svg " + svg);
  CHECK(r.code == 0);
  CHECK(r.out.find("cusp.rectangles = 2\n") != std::string::npos);
  CHECK(slurp(svg).find("<rect class=\"tile") != std::string::npos);
  CHECK(run("cusp " + example("borromean.fal") + " --component nope").code == 1);
}

TEST_CASE("pack command") {
  const auto svg = (std::filesystem::temp_directory_path() / "falkit_cli_pack.svg").string();
  const auto r = run("pack " + example("borromean.fal") + " --tol 1e-10 --svg " + svg);
  CHECK(r.code == 0);
  CHECK(r.out.find("packing.vertices = 4\n") != std::string::npos);
  const auto first = slurp(svg);
  CHECK(run("pack " + example("borromean.fal") + " --tol 1e-10 --svg " + svg).code == 0);
  CHECK(slurp(svg) == first);
  CHECK(run("pack " + example("planar_c6.fal") + " --max-sweeps 2").code == 3);
  CHECK(run("pack " + example("torus_chain.fal")).code == 1);
  CHECK(run("pack " + data("split_regions.fal")).code == 1);
  CHECK(run("pack " + example("borromean.fal") + " --tol 0.5").code == 1);
}
