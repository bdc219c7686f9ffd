#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tmdiff/cli.hpp"

using tmdiff::cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_file(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "tmdiff_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_SUITE("command line") {
  TEST_CASE("eta table") {
    const auto r = invoke({"eta", "--max", "9"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\n1,-1,3,") != std::string::npos);
    CHECK(r.out.find("\n9,1,6,") != std::string::npos);
    CHECK(r.err.empty());

    const auto j = nlohmann::json::parse(invoke({"eta", "-M", "4", "--format", "json"}).out);
    CHECK(j["values"].size() == 5);

    const auto f = invoke({"eta", "-M", "2", "--precision", "float"});
    CHECK(f.out.starts_with("m,value\n"));
  }

  TEST_CASE("output is deterministic") {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"volterra", "-n", "8", "--grid", "64"}, {"distfn", "-M", "256", "--grid", "100", "-f", "json"},
          {"periodogram", "-N", "64", "--grid", "256"}, {"figure", "-n", "10", "--grid", "512"}, {"wiener", "-M", "64"},
          {"riesz", "-n", "5", "--grid", "32"}}) {
      const auto a = invoke(args);
      REQUIRE(a.code == 0);
      CHECK(a.out == invoke(args).out);
    }
  }

  TEST_CASE("writing to a file") {
    const auto path = scratch_file("eta.csv");
    const auto r = invoke({"eta", "-M", "9", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == invoke({"eta", "-M", "9"}).out);
  }

  TEST_CASE("usage errors exit with 1") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"eta", "--max", "-3"}).code == 1);
    CHECK(invoke({"eta", "--max", "ten"}).code == 1);
    CHECK(invoke({"eta", "--format", "svg"}).code == 1);
    CHECK(invoke({"figure", "--format", "csv"}).code == 1);
    CHECK(invoke({"wiener", "--max", "4"}).code == 1);
    CHECK(invoke({"periodogram", "--length", "100"}).code == 1);
    CHECK(invoke({"distfn", "--grid", "1"}).code == 1);
    const auto r = invoke({"eta", "--format", "svg"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }

  TEST_CASE("resource caps exit with 3 and leave no file") {
    const auto path = scratch_file("capped.csv");
    const auto r = invoke({"volterra", "--level", "40", "--out", path.string()});
    CHECK(r.code == 3);
    CHECK_FALSE(std::filesystem::exists(path));
    CHECK(invoke({"eta", "--max", "100000000"}).code == 3);
    CHECK(invoke({"periodogram", "--length", "1073741824"}).code == 3);
    CHECK(invoke({"distfn", "--grid", "1000000000"}).code == 3);
  }

  TEST_CASE("figure is an svg document") {
    const auto r = invoke({"figure", "-n", "12", "--grid", "1024"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("<?xml"));
    CHECK(r.out.find("<path") != std::string::npos);
  }
}
