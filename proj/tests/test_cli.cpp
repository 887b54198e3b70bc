// Integration tests driving the command line binary end to end against the
// bundled sample data.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>

#include "argmine/graph.hpp"
#include "support/testutil.hpp"
#include "test_paths.hpp"

namespace {

std::string cli_path() {
  if (const char* env = std::getenv("ARGMINE_CLI")) return env;
  return ARGMINE_CLI_DEFAULT;
}

std::string data_dir() {
  if (const char* env = std::getenv("ARGMINE_DATA_DIR")) return env;
  return ARGMINE_DATA_DIR;
}

int run(const std::string& args) {
  const int status = std::system((cli_path() + " " + args).c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("cli binary exists") {
  REQUIRE_MESSAGE(std::filesystem::exists(cli_path()),
                  "expected the argmine binary at ", cli_path());
}

TEST_CASE("mine then convert round trips through files") {
  argmine::test::TempDir dir;
  const std::string sample = data_dir() + "/sample";
  const auto graph_path = dir.path() / "out.json";
  const auto dot_path = dir.path() / "out.dot";

  CHECK(run("mine \"" + sample + "/essay.txt\" --config \"" + sample +
            "/config.txt\" --out \"" + graph_path.string() + "\" --dot \"" +
            dot_path.string() + "\" 2>/dev/null") == 0);

  const auto graph = argmine::ArgumentGraph::from_aif_json(slurp(graph_path));
  CHECK(graph.validate().empty());
  CHECK(graph.inodes().size() == 20);
  CHECK(slurp(dot_path).find("digraph") == 0);

  const auto converted = dir.path() / "converted.dot";
  CHECK(run("convert \"" + graph_path.string() + "\" --out \"" +
            converted.string() + "\" 2>/dev/null") == 0);
  CHECK(slurp(converted) == slurp(dot_path));
}

TEST_CASE("mine supports preset mode from a benchmark file") {
  argmine::test::TempDir dir;
  const std::string sample = data_dir() + "/sample";
  const auto out = dir.path() / "preset.json";
  CHECK(run("mine \"" + sample + "/corpus/case01.json\" --config \"" + sample +
            "/config.txt\" --preset-adus --out \"" + out.string() +
            "\" 2>/dev/null") == 0);
  const auto graph = argmine::ArgumentGraph::from_aif_json(slurp(out));
  CHECK(graph.validate().empty());
}

TEST_CASE("train twice produces byte-identical model files") {
  argmine::test::TempDir dir;
  const std::string sample = data_dir() + "/sample";
  const auto m1 = dir.path() / "m1.json";
  const auto m2 = dir.path() / "m2.json";
  const std::string base = "train relation \"" + sample +
                           "/train/relation.tsv\" --vectors \"" + sample +
                           "/vectors.txt\" --seed 7 --epochs 50 --out ";
  CHECK(run(base + "\"" + m1.string() + "\" 2>/dev/null") == 0);
  CHECK(run(base + "\"" + m2.string() + "\" 2>/dev/null") == 0);
  const std::string b1 = slurp(m1);
  CHECK_FALSE(b1.empty());
  CHECK(b1 == slurp(m2));
}

TEST_CASE("evaluate writes per-case rows and an aggregate") {
  argmine::test::TempDir dir;
  const std::string sample = data_dir() + "/sample";
  const auto csv = dir.path() / "cases.csv";
  const auto aggregate = dir.path() / "aggregate.json";
  CHECK(run("evaluate \"" + sample + "/corpus\" --config \"" + sample +
            "/config.txt\" --csv \"" + csv.string() + "\" --out \"" +
            aggregate.string() + "\" 2>/dev/null") == 0);

  const std::string rows = slurp(csv);
  CHECK(rows.find("case_id,mode,mc_method,constructor,threshold") == 0);
  CHECK(rows.find("case01") != std::string::npos);
  CHECK(rows.find("case02") != std::string::npos);
  CHECK(slurp(aggregate).find("\"snode_by_threshold\"") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage, data and success") {
  argmine::test::TempDir dir;
  const std::string sample = data_dir() + "/sample";
  CHECK(run("2>/dev/null") == 1);                       // no subcommand
  CHECK(run("mine 2>/dev/null") == 1);                  // missing argument
  CHECK(run("frobnicate x 2>/dev/null") == 1);          // unknown subcommand
  CHECK(run("mine x.txt --threshold 0.3 2>/dev/null") == 1);  // out of range
  CHECK(run("mine x.txt --mc magic 2>/dev/null") == 1);       // unknown name
  CHECK(run("train sorting data.tsv --out m.json 2>/dev/null") == 1);
  CHECK(run("mine /nonexistent.txt --config \"" + sample +
            "/config.txt\" 2>/dev/null") == 2);         // unreadable input

  // A text with nothing argumentative is a data outcome, not a crash.
  const auto trivial = dir.path() / "trivial.txt";
  std::ofstream(trivial) << "The bus is green. Water is wet.\n";
  CHECK(run("mine \"" + trivial.string() + "\" --config \"" + sample +
            "/config.txt\" 2>/dev/null") == 2);
}
