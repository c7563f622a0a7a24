#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "clumpstat/cli.hpp"

using clumpstat::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string current;
  while (std::getline(in, current))
    if (current == line) return true;
  return false;
}

}  // namespace

TEST_CASE("correlate prints the prefix code of the worked example") {
  Result r = run({"correlate", "--word", "abaabaaba"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "K\tabaabaaba\tabaabaaba\taba"));
  CHECK(has_line(r.out, "K\tabaabaaba\tabaabaaba\tbaabaaba"));
  CHECK(has_line(r.out, "C\tabaabaaba\tabaabaaba\t<eps>"));
}

TEST_CASE("distribution prints the frozen table") {
  Result r = run({"distribution", "--words", "aa", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "3\t0\t5/8\t0.625"));
  CHECK(has_line(r.out, "3\t1\t3/8\t0.375"));
}

TEST_CASE("verify exercises every view and exits 0") {
  Result r = run({"verify", "--words", "aa", "--n", "10"});
  CHECK(r.code == 0);
  for (const char* view : {"automaton-joint", "clump-joint", "clump-count",
                           "coverage", "1-clumps", "2-clumps", "occurrences"})
    CHECK(r.out.find(std::string("PASS ") + view) != std::string::npos);

  Result pair = run({"verify", "--words", "aba,bba", "--n", "8"});
  CHECK(pair.code == 0);
}

TEST_CASE("moments mirror the expected clump counts") {
  Result r = run({"moments", "--words", "aa", "--n-range", "2..5"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "2\t1/4\t3/16\t1/4\t3/16\t1/2\t3/4"));
  // clumps_mean column is Gamma_n = n/8.
  CHECK(r.out.find("3\t3/8") != std::string::npos);
  CHECK(r.out.find("4\t1/2") != std::string::npos);
}

TEST_CASE("json output mirrors the tsv tables") {
  Result r = run({"distribution", "--words", "aa", "--n", "3", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["table"] == "clumps");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0][2] == "5/8");
}

TEST_CASE("markov model file drives the automaton engine") {
  std::string path = "cli_markov_model.tmp";
  {
    std::ofstream model(path);
    model << "alphabet: ab\nmodel: markov1\n"
             "init a = 1/2\ninit b = 1/2\n"
             "trans a a = 3/4\ntrans a b = 1/4\n"
             "trans b a = 1/4\ntrans b b = 3/4\n";
  }
  Result r = run({"verify", "--words", "aa", "--model", path, "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS automaton-joint") != std::string::npos);
  Result dist = run({"distribution", "--words", "aa", "--model", path, "--n", "2"});
  CHECK(dist.code == 0);
  CHECK(has_line(dist.out, "2\t1\t3/8\t0.375"));  // P(aa) = 1/2 * 3/4
  std::remove(path.c_str());
}

TEST_CASE("exit codes: validation, parse, budget") {
  Result not_reduced = run({"distribution", "--words", "aba,ab", "--n", "3"});
  CHECK(not_reduced.code == 3);
  CHECK(not_reduced.err.find("NotReduced") != std::string::npos);

  Result short_word = run({"distribution", "--words", "a", "--n", "3"});
  CHECK(short_word.code == 3);

  std::string path = "cli_bad_model.tmp";
  {
    std::ofstream model(path);
    model << "alphabet: ab\nmodel: bernoulli\np a = oops\n";
  }
  Result bad_model = run({"distribution", "--words", "aa", "--model", path,
                          "--n", "3"});
  CHECK(bad_model.code == 2);
  CHECK(bad_model.err.find("line 3") != std::string::npos);
  std::remove(path.c_str());

  Result budget = run({"verify", "--words", "aa", "--n", "30", "--budget", "1000"});
  CHECK(budget.code == 3);

  Result unknown_flag = run({"distribution", "--wordz", "aa"});
  CHECK(unknown_flag.code == 2);
}

TEST_CASE("automaton subcommand writes DOT") {
  std::string path = "cli_automaton.tmp.dot";
  Result r = run({"automaton", "--words", "bababa", "--dot", path, "--gf"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "states\t11"));
  CHECK(has_line(r.out, "final_states\t1"));
  std::ifstream dot(path);
  std::stringstream content;
  content << dot.rdbuf();
  CHECK(content.str().find("digraph clump_automaton") == 0);
  CHECK(content.str().find("peripheries=2") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("simulate is reproducible for a fixed seed") {
  std::vector<std::string> args = {"simulate", "--words", "aa",   "--n", "6",
                                   "--samples", "5000",   "--seed", "99"};
  Result a = run(args);
  Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("asymptotics reports the root and the ratio") {
  Result r = run({"asymptotics", "--word", "abababab", "--n", "200", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho\t1.003") != std::string::npos);
  CHECK(r.out.find("ratio\t0.9") != std::string::npos);
  CHECK(r.out.find("mean_slope_exact") != std::string::npos);

  Result low = run({"asymptotics", "--word", "aa", "--n", "100", "--k", "0"});
  CHECK(low.code == 0);
  CHECK(low.out.find("below the rare-word regime") != std::string::npos);
}

TEST_CASE("help exits zero") {
  Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("clumpstat") != std::string::npos);
}
