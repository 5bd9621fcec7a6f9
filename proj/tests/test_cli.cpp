#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat/cli.hpp"

using namespace bruhat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"bruhat"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze prints a JSON report") {
  const Run r = run({"analyze", "--perm", "4312"});
  REQUIRE(r.code == exit_ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("orbits"));
  const Run by_word = run({"analyze", "--word", "1,2,3,1,2"});
  REQUIRE(by_word.code == exit_ok);
  const auto k = nlohmann::json::parse(by_word.out);
  CHECK(k["permutation"] == j["permutation"]);
  CHECK(k["orbits"].size() == j["orbits"].size());
}

TEST_CASE("analyze writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "bruhat_cli_test.json";
  const std::string p = path.string();
  const Run r = run({"analyze", "--perm", "21", "--out", p.c_str()});
  CHECK(r.code == exit_ok);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in).contains("buckets"));
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == exit_parse_error);
  CHECK(run({"frobnicate"}).code == exit_parse_error);
  CHECK(run({"analyze"}).code == exit_parse_error);
  CHECK(run({"analyze", "--word", "1,2", "--perm", "321"}).code == exit_parse_error);
  CHECK(run({"analyze", "--word", "1,x"}).code == exit_parse_error);
  CHECK(run({"analyze", "--word", "1,1"}).code == exit_invalid_word);
  CHECK(run({"analyze", "--word", "3", "--rank", "2"}).code == exit_invalid_word);
  CHECK(run({"components-eta", "--n", "9"}).code == exit_parse_error);
  CHECK(run({"export", "--perm", "4312", "--z", "99"}).code == exit_unknown_selector);
  CHECK(run({"export", "--perm", "4312", "--z", "+-"}).code == exit_unknown_selector);
  CHECK(run({"export", "--perm", "4312", "--z", "what"}).code == exit_unknown_selector);
  CHECK(run({"export", "--perm", "4312", "--z", "0", "--format", "svg"}).code == exit_parse_error);
}

TEST_CASE("components-eta") {
  const Run r = run({"components-eta", "--n", "3"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "20\n");
}

TEST_CASE("export by orbit index and by sign vector") {
  const Run dot = run({"export", "--word", "1,2,3,1,2", "--z", "++-+-", "--format", "dot"});
  REQUIRE(dot.code == exit_ok);
  CHECK(dot.out.rfind("graph strata {", 0) == 0);
  const Run json = run({"export", "--word", "1,2,3,1,2", "--z", "0", "--format", "json"});
  REQUIRE(json.code == exit_ok);
  CHECK(nlohmann::json::parse(json.out).contains("vertices"));
  const Run empty = run({"export", "--perm", "12", "--z", "0", "--format", "json"});
  CHECK(empty.code == exit_ok);
}

TEST_CASE("check runs selected criteria") {
  const Run r = run({"check", "--level", "fast", "--criterion", "2"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("PASS  criterion  2") != std::string::npos);
  CHECK(run({"check", "--criterion", "12"}).code == exit_parse_error);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("analyze") != std::string::npos);
}
