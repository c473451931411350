#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swsurg/manifold_file.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("swsurg_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string cat(const std::string& name) { return (fs::path(SWSURG_CATALOG) / name).string(); }

Run run(const std::string& args, const std::string& env = "") {
  const fs::path out = scratch() / "stdout";
  const fs::path err = scratch() / "stderr";
  const std::string cmd =
      env + " " + std::string(SWSURG_BIN) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("validate") {
  const Run ok = run("validate " + cat("k3.mfd"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("valid: K3") == 0);

  const fs::path broken = scratch() / "broken.mfd";
  std::ofstream(broken) << "{\"manifold\": [";
  CHECK(run("validate " + broken.string()).code == 3);
  CHECK(run("validate " + (scratch() / "missing.mfd").string()).code == 3);

  auto j = nlohmann::json::parse(slurp(cat("x0.mfd")));
  j["manifold"]["chi"] = 9;
  const fs::path wrong = scratch() / "wrong.mfd";
  std::ofstream(wrong) << j.dump();
  const Run bad = run("validate " + wrong.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("b2 mismatch") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 3);
  CHECK(run("frobnicate").code == 3);
  CHECK(run("fibersum " + cat("x0.mfd")).code == 3);
  CHECK(run("fibersum " + cat("x0.mfd") + " " + cat("x0.mfd") + ":S").code == 3);
  CHECK(run("dimension " + cat("x0.mfd") + " --class 2,x").code == 3);
}

TEST_CASE("blowup") {
  const fs::path out = scratch() / "k3b.mfd";
  const fs::path report = scratch() / "k3b.json";
  const Run r = run("blowup " + cat("k3.mfd") + " -o " + out.string() + " --report " + report.string());
  REQUIRE(r.code == 0);
  const swsurg::ManifoldFile f = swsurg::read_manifold_file(out);
  CHECK(f.manifold.chi == 25);
  CHECK(f.manifold.sigma == -17);
  CHECK(f.manifold.basic_classes.size() == 2);
  CHECK(f.surfaces.at("F").surface_class.size() == 23);
  const auto rep = nlohmann::json::parse(slurp(report));
  CHECK(rep["operation"] == "blowup");
  CHECK(rep["audit"].size() == 2);

  // Blowing up on a square-zero surface does nothing by default.
  const Run on = run("blowup " + cat("x0.mfd") + " --on S", "SWSURG_CANONICAL=1");
  CHECK(on.code == 0);
  CHECK(on.out == slurp(cat("x0.mfd")));
  CHECK(run("blowup " + cat("x0.mfd") + " --on nope").code == 1);
}

TEST_CASE("fibersum") {
  const fs::path out = scratch() / "sum.mfd";
  const fs::path report = scratch() / "sum.json";
  const std::string args =
      "fibersum " + cat("x0.mfd") + ":S " + cat("x0.mfd") + ":S -o " + out.string() + " --report " + report.string();
  REQUIRE(run(args).code == 0);
  const swsurg::ManifoldFile f = swsurg::read_manifold_file(out);
  CHECK(f.manifold.chi == 20);
  CHECK(f.manifold.sigma == 0);
  CHECK(f.manifold.basic_classes.size() == 2);
  CHECK(f.surfaces.count("S") == 1);
  const auto rep = nlohmann::json::parse(slurp(report));
  CHECK(rep["glued"].size() == 2);
  CHECK(rep["inputs"].size() == 2);
  CHECK(rep["undetermined"].empty());

  SUBCASE("deterministic") {
    const std::string first = slurp(out);
    const std::string first_report = slurp(report);
    REQUIRE(run(args).code == 0);
    CHECK(slurp(out) == first);
    CHECK(slurp(report) == first_report);
  }
  SUBCASE("canonical style via the environment") {
    const Run canon = run("fibersum " + cat("x0.mfd") + ":S " + cat("x0.mfd") + ":S", "SWSURG_CANONICAL=1");
    REQUIRE(canon.code == 0);
    CHECK(std::count(canon.out.begin(), canon.out.end(), '\n') == 1);
    CHECK(canon.out == swsurg::serialize(f, swsurg::Style::Canonical));
  }
  SUBCASE("unsupported and undetermined") {
    CHECK(run("fibersum " + cat("nonprimitive.mfd") + ":S2 " + cat("x0.mfd") + ":S").code == 2);
    const Run flat = run("fibersum " + cat("x0_flat.mfd") + ":S " + cat("x0_flat.mfd") + ":S --report " +
                            report.string());
    CHECK(flat.code == 2);
    const auto r = nlohmann::json::parse(slurp(report));
    CHECK(r["glued"].empty());
    CHECK(r["undetermined"].size() == 1);
  }
  SUBCASE("genus mismatch is a hypothesis failure") {
    CHECK(run("fibersum " + cat("k3.mfd") + ":F " + cat("x0.mfd") + ":S").code == 1);
  }
}

TEST_CASE("moduli, dimension and report") {
  const Run m = run("moduli --genus 2 --pairing 2");
  CHECK(m.code == 0);
  CHECK(m.out == "SymmetricProduct k=0 (point)\n");
  CHECK(run("moduli --genus 2 --pairing 4").out == "Empty k=-1\n");
  CHECK(run("moduli --genus 2 --pairing 3").code == 1);

  const Run d = run("dimension " + cat("x0.mfd") + " --class \"2,2,2,2,2,2\"");
  CHECK(d.code == 0);
  CHECK(d.out == "2\n");
  CHECK(run("dimension " + cat("x0.mfd") + " --class 1,0,0,0,0,0").code == 1);

  const Run rep = run("report " + cat("x0.mfd"));
  REQUIRE(rep.code == 0);
  const auto j = nlohmann::json::parse(rep.out);
  CHECK(j["b_plus"] == 3);
  CHECK(j["surfaces"]["S"]["primitive"] == true);
}
