#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "beltca/error.hpp"
#include "beltca/serialize.hpp"
#include "beltca_cli/cli.hpp"
#include "beltca_cli/report.hpp"
#include "beltca_cli/spacetime.hpp"
#include "beltca_cli/system.hpp"

using namespace beltca::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "beltca");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(BELTCA_SAMPLES_DIR) + "/" + name; }

std::string temp_config(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("beltca_test_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("apply") {
  auto r = run({"apply", "--config", sample("zz2z_scene.json"), "--word", "U", "--input", "x0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "period=5 cells=[>,>,>,101|000,<]\n");
  r = run({"apply", "--config", sample("zz2z_scene.json"), "--word", "", "--input", "x0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "period=5 cells=[>,>,101|000,<,<]\n");
  r = run({"apply", "--config", sample("zz2z_scene.json"), "--word", "DU", "--input", "scene"});
  CHECK(r.code == kExitOk);
  const auto s = load_system(sample("zz2z_scene.json"));
  CHECK(r.out == beltca::format_periodic(*s.configuration("scene")) + "\n");
  r = run({"apply", "--config", sample("afo_example.json"), "--word", "f", "--input", "period=5 cells=[0,0,0,1,0]"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "period=5 cells=[0,0,0,0,2]\n");
}

TEST_CASE("usage errors exit 2") {
  auto r = run({"apply", "--config", sample("zz2z_scene.json"), "--word", "Q", "--input", "x0"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("unknown generator 'Q'") != std::string::npos);
  CHECK(run({"apply", "--config", sample("zz2z_scene.json"), "--word", "U"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"apply", "--config", "/nonexistent.json", "--word", "U", "--input", "x0"}).code == kExitUsage);
  CHECK(run({"apply", "--config", sample("zz2z_scene.json"), "--word", "U", "--input", "period=2 cells=[>,zz]"}).code ==
        kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"spacetime", "--config", sample("zz2z_scene.json"), "--word", "U", "--input", "x0", "--format", "pdf"}).code ==
        kExitUsage);
}

TEST_CASE("unknown config keys are rejected") {
  const auto path = temp_config("unknown", R"({"action": "zz2z", "colour": "blue"})");
  const auto r = run({"list-generators", "--config", path});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("colour") != std::string::npos);
  const std::string bad[] = {
      R"j({"alphabet": "plain(2)", "verify": {"period": 3, "depth": 2}})j",
      R"j({"action": "zz2z", "alphabet": "plain(2)"})j",
      "{}",
      "{not json",
  };
  for (const auto& text : bad) CHECK_THROWS_AS(parse_system(text), beltca::ParseError);
}

TEST_CASE("list-generators") {
  const auto r = run({"list-generators", "--config", sample("zz2z_scene.json")});
  CHECK(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[1] == "L");
  CHECK(ls[3] == "F\tinvolution");
  CHECK(ls[5] == "D");
}

TEST_CASE("verify: records, summary and exit status") {
  auto r = run({"verify", "--config", sample("afo_example.json")});
  CHECK(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    CHECK(ls[i].rfind("suite=", 0) == 0);
    CHECK(ls[i].find(" check=") != std::string::npos);
    CHECK(ls[i].find(" status=") != std::string::npos);
    CHECK(ls[i].find(" witness=") != std::string::npos);
  }
  CHECK(ls.back().rfind("summary: ", 0) == 0);
  CHECK(r.out.find("check=f.expect1 status=pass") != std::string::npos);

  // Same input, same report.
  CHECK(run({"verify", "--config", sample("afo_example.json")}).out == r.out);

  r = run({"verify", "--config", sample("belt_corrupted.json"), "--suite", "belt", "--period", "3"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("status=fail witness=\"period=") != std::string::npos);
}

TEST_CASE("safety-check") {
  auto r = run({"safety-check", "--alphabet", "plain(2)", "--words", "1,0,1", "--n0", "4"});
  CHECK(r.code == kExitCheckFailed);
  CHECK(r.out.find("status=fail witness=\"period=4 cells=[1,0,1,0] word1@0 word1@2\"") != std::string::npos);
  CHECK(r.out.find("check=1,0,1.minimal_n0 status=pass witness=5") != std::string::npos);
  r = run({"safety-check", "--alphabet", "plain(2)", "--words", "1,0,1", "--n0", "5"});
  CHECK(r.code == kExitOk);
  CHECK(run({"safety-check", "--alphabet", "plain(3)", "--words", "0,1", "--n0", "3"}).code == kExitUsage);
  CHECK(run({"safety-check", "--alphabet", "plain(2)", "--words", "1,7", "--n0", "3"}).code == kExitUsage);
  CHECK(run({"safety-check", "--config", sample("afo_example.json")}).code == kExitOk);
}

TEST_CASE("spacetime") {
  auto r = run({"spacetime", "--config", sample("afo_example.json"), "--word", "ff",
                "--input", "period=8 cells=[0,0,0,1,0,0,0,0]"});
  CHECK(r.code == kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0].rfind("# word:", 0) == 0);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto cells = ls[i].substr(ls[i].rfind('\t') + 1);
    std::istringstream in(cells);
    std::size_t n = 0;
    for (std::string c; in >> c;) ++n;
    CHECK(n == 8);
  }
  CHECK(ls[1].find("0 0 0 1 0 0 0 0") != std::string::npos);
  CHECK(ls[2].find("0 0 0 0 2 0 0 0") != std::string::npos);

  r = run({"spacetime", "--config", sample("zz2z_scene.json"), "--word", "(FL)^3 ULUFRD^4LFR", "--input", "scene",
           "--format", "svg"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
  r = run({"spacetime", "--config", sample("zz2z_scene.json"), "--word", "UL", "--input", "x0", "--format", "tikz"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(r.out.find("\\end{document}") != std::string::npos);
}

TEST_CASE("spacetime rows follow the word") {
  const auto s = load_system(sample("zz2z_scene.json"));
  const auto w = beltca::GroupWord::parse("ULF", s.table);
  const auto d = build_spacetime(s.table, w, *s.configuration("scene"));
  REQUIRE(d.rows.size() == 4);
  const char* names[] = {"F", "L", "U"};
  for (std::size_t i = 0; i + 1 < d.rows.size(); ++i)
    CHECK(d.rows[i + 1] == beltca::apply_word(s.table, beltca::GroupWord::parse(names[i], s.table), d.rows[i]));
  CHECK(d.steps == std::vector<std::string>{"F", "L", "U"});
}

TEST_CASE("report quoting") {
  Report r;
  r.add("s", "c", Status::Pass, "");
  r.add("s", "c2", Status::Fail, "a b");
  r.add("s", "c3", Status::Inconclusive, "x=\"y\"");
  std::ostringstream out;
  r.write(out);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "suite=s check=c status=pass witness=-");
  CHECK(ls[1] == "suite=s check=c2 status=fail witness=\"a b\"");
  CHECK(ls[2] == "suite=s check=c3 status=inconclusive witness=\"x=\\\"y\\\"\"");
  CHECK(!r.ok());
  CHECK(r.summary() == "summary: 3 checks, 1 passed, 1 failed, 1 inconclusive, 0 skipped");
}
