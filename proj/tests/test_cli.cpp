#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cayley/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cayley");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cayley::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return Result{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exact symmetry check") {
  const auto r = run({"verify-symmetry", "--exact", "--n", "8"});
  CHECK(r.code == cayley::cli::kExitOk);
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json["tv"] == "0");
  CHECK(json["prob_E"] == "2109/8192");
  CHECK(json["cross_checked"] == true);
  CHECK(r.err.empty());
}

TEST_CASE("fluid output") {
  const auto r = run({"fluid"});
  CHECK(r.code == 0);
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json["varG"] == 0.0625);
  CHECK(json["M"][0][1] == -0.375);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cayley::cli::kExitBadUsage);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"greedy", "--n", "ten"}).code == 2);
  CHECK(run({"clt", "--n", "100", "--format", "xml"}).code == 2);
  CHECK(run({"verify-symmetry", "--n", "5"}).code == 2);
  CHECK(run({"verify-symmetry", "--exact", "--mc", "--n", "5"}).code == 2);
  CHECK(run({"peel", "--n", "5"}).code == 2);
  CHECK(run({"exact-law", "--n", "1000"}).code == 2);
}

TEST_CASE("randomized commands report the seed and are reproducible") {
  const std::vector<std::string> args{"greedy", "--n", "200", "--replicates", "50", "--seed", "77"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.err == "seed: 77\n");

  auto threaded = args;
  threaded.insert(threaded.end(), {"--jobs", "3"});
  CHECK(run(threaded).out == first.out);

  const auto chain = run({"chain", "--n", "100", "--replicates", "20", "--seed", "1"});
  const auto chain_jobs = run({"chain", "--n", "100", "--replicates", "20", "--seed", "1", "--jobs", "4"});
  CHECK(chain.out == chain_jobs.out);
}

TEST_CASE("sample, enumerate and peel") {
  const auto sample = run({"sample-tree", "--n", "6", "--count", "3", "--method", "aldous-broder"});
  CHECK(sample.code == 0);
  std::istringstream lines(sample.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("6;", 0) == 0);
    ++count;
  }
  CHECK(count == 3);

  const auto listed = run({"enumerate", "--n", "3"});
  CHECK(listed.out == "3;3,1\n3;2,3\n3;3,3\n");
  CHECK(run({"enumerate", "--n", "3", "--prufer"}).out == "1\n2\n3\n");

  const std::string path = "cli_test_tree.txt";
  {
    std::ofstream file(path);
    file << "3;3,1\n";
  }
  const auto peel = run({"peel", "--alg", "ab", "--fixed-tree", path});
  std::remove(path.c_str());
  CHECK(peel.code == 0);
  CHECK(peel.out == "step,peeled,parent,recolored\n1,1,3,1\n2,2,1,1\n");
}

TEST_CASE("greedy on trees from a file") {
  const std::string path = "cli_test_trees.txt";
  {
    std::ofstream file(path);
    file << "3;3,1\n3;2,3\n";
  }
  const auto r = run({"greedy", "--tree-file", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out == "n,replicate,G,theta,E,M,maxIS\n3,0,1,2,0,,\n3,1,2,2,1,,\n");
}

TEST_CASE("exact law json") {
  const auto r = run({"exact-law", "--n", "4"});
  CHECK(r.code == 0);
  const auto json = nlohmann::json::parse(r.out);
  CHECK(json["prob_E"]["exact"] == "1/4");
  CHECK(json["tv"]["exact"] == "0");
}

TEST_CASE("output file") {
  const std::string path = "cli_test_fluid.json";
  CHECK(run({"fluid", "-o", path}).code == 0);
  std::ifstream in(path);
  const auto json = nlohmann::json::parse(in);
  std::remove(path.c_str());
  CHECK(json["varTheta"] == 0.75);
}
