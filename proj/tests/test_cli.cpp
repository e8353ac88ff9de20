#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cctri/io.hpp"
#include "cctri/oracle.hpp"
#include "support.hpp"

namespace cctri {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cctri_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string graph_file(const std::string& name, const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return file(name, ss.str());
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result run(const std::string& args) {
    std::string cmd = std::string(CCTRI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 512> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  fs::path dir_;
};

TEST_F(Cli, Examples) {
  std::string c4 = graph_file("c4.gr", test::c4());
  Result tw = run("treewidth --graph " + c4 + " --algo btdp");
  EXPECT_EQ(tw.code, 0);
  EXPECT_EQ(tw.out, "2\n");
  std::string empty = file("empty.txt", "");
  Result sw = run("sandwich --graph " + c4 + " --admissible " + empty);
  EXPECT_EQ(sw.code, 1);
  EXPECT_EQ(sw.out, "no\n");
  std::string bad = file("bad.gr", "p tw 3\n1 2\n");
  std::string cmd = std::string(CCTRI_BIN) + " treewidth --graph " + bad + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 512> buf{};
  std::string err;
  while (std::fgets(buf.data(), buf.size(), pipe)) err += buf.data();
  int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(err.find("line 1"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  std::string c4 = graph_file("c4.gr", test::c4());
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("treewidth").code, 2);
  EXPECT_EQ(run("treewidth --graph " + path("missing.gr")).code, 2);
  EXPECT_EQ(run("treewidth --graph " + c4 + " --algo conv").code, 2);
  EXPECT_EQ(run("treewidth --graph " + c4 + " --algo nope").code, 2);
  EXPECT_EQ(run("sandwich --graph " + c4 + " --algo polyspace").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, AlgorithmsAgree) {
  std::vector<Graph> graphs = {test::c4(), gen_grid(3, 3), gen_cycle(7), gen_kcc2(4).graph};
  for (const auto& cg : test::random_corpus(12, 10, 500)) graphs.push_back(cg.graph);
  int i = 0;
  for (const Graph& g : graphs) {
    std::string gf = graph_file("g" + std::to_string(i) + ".gr", g);
    std::ostringstream cs;
    write_cover(cs, greedy_cover(g));
    std::string cf = file("g" + std::to_string(i++) + ".cov", cs.str());
    std::string tw = std::to_string(oracle::brute_treewidth(g)) + "\n";
    std::string fill = std::to_string(oracle::brute_fill_in(g)) + "\n";
    for (std::string algo : {"btdp", "conv", "polyspace", "brute"}) {
      EXPECT_EQ(run("treewidth --graph " + gf + " --cover " + cf + " --algo " + algo).out, tw) << algo;
      EXPECT_EQ(run("fillin --graph " + gf + " --cover " + cf + " --algo " + algo).out, fill) << algo;
    }
    EXPECT_EQ(run("treewidth --graph " + gf + " --algo polyspace --cc " + std::to_string(greedy_cover(g).size())).out,
              tw);
    EXPECT_EQ(run("oracle treewidth --graph " + gf).out, tw);
  }
}

TEST_F(Cli, DecisionAndWitness) {
  Graph g = gen_grid(3, 3);
  std::string gf = graph_file("grid.gr", g);
  std::ostringstream cs;
  write_cover(cs, greedy_cover(g));
  std::string cf = file("grid.cov", cs.str());
  for (std::string algo : {"btdp", "conv", "polyspace"}) {
    std::string td = path("grid_" + algo + ".td");
    Result yes = run("treewidth --graph " + gf + " --cover " + cf + " --k 3 --algo " + algo + " --witness " + td);
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "yes\n");
    std::ifstream in(td);
    TreeDecomposition back = read_decomposition(in);
    EXPECT_TRUE(is_valid_decomposition(g, back));
    EXPECT_LE(back.width(), 3);
    Result no = run("treewidth --graph " + gf + " --cover " + cf + " --k 2 --algo " + algo);
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "no\n");
  }
}

TEST_F(Cli, WeightedFill) {
  std::string c4 = graph_file("c4.gr", test::c4());
  std::string w = file("w.txt", "1 3 0.25\n2 4 2\n");
  for (std::string algo : {"btdp", "polyspace", "brute"})
    EXPECT_EQ(run("fillin --graph " + c4 + " --weights " + w + " --algo " + algo).out, "0.25\n") << algo;
}

TEST_F(Cli, Json) {
  std::string c4 = graph_file("c4.gr", test::c4());
  std::string td = path("c4.td");
  Result r = run("treewidth --graph " + c4 + " --json --witness " + td);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["witness_path"], td);
  EXPECT_EQ(j["stats"]["n"], 4);
  EXPECT_EQ(j["stats"]["m"], 4);
  EXPECT_EQ(j["stats"]["num_minseps"], 2);
  EXPECT_EQ(j["stats"]["num_pmcs"], 4);
  EXPECT_TRUE(j["stats"].contains("elapsed_ms"));
  EXPECT_TRUE(j["stats"].contains("cover_size"));
}

TEST_F(Cli, Listings) {
  std::string c4 = graph_file("c4.gr", test::c4());
  for (std::string algo : {"dedup", "polyspace", "brute"}) {
    EXPECT_EQ(run("pmcs --graph " + c4 + " --algo " + algo).out, "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    EXPECT_EQ(run("minseps --graph " + c4 + " --algo " + algo).out, "1 3\n2 4\n");
  }
  EXPECT_EQ(run("pmcs --graph " + c4 + " --threads 2").out, "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
}

TEST_F(Cli, Cover) {
  std::string c4 = graph_file("c4.gr", test::c4());
  Result greedy = run("cover --graph " + c4);
  EXPECT_EQ(greedy.code, 0);
  std::string cf = file("c4.cov", greedy.out);
  EXPECT_EQ(run("cover --graph " + c4 + " --cover " + cf).out, "valid 4\n");
  std::string bad = file("bad.cov", "1 2\n2 3\n");
  EXPECT_EQ(run("cover --graph " + c4 + " --cover " + bad).code, 1);
  EXPECT_EQ(run("treewidth --graph " + c4 + " --cover " + bad).code, 2);
}

TEST_F(Cli, FhtwAndPhylogeny) {
  std::string tri = file("tri.hg", "a b\nb c\nc a\n");
  std::string td = path("tri.td");
  for (std::string algo : {"btdp", "polyspace", "brute"})
    EXPECT_EQ(run("fhtw --graph " + tri + " --algo " + algo + " --witness " + td).out, "3/2\n");
  std::ifstream in(td);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("c bag 1 fcov ", 0), 0u);

  std::string no = file("no.txt", "c1 c2\nt1 0 0\nt2 0 1\nt3 1 0\nt4 1 1\n");
  std::string yes = file("yes.txt", "c1 c2\nt1 0 0\nt2 0 1\nt3 1 1\n");
  for (std::string algo : {"btdp", "conv", "polyspace", "brute"}) {
    EXPECT_EQ(run("phylogeny --graph " + no + " --algo " + algo).code, 1) << algo;
    EXPECT_EQ(run("phylogeny --graph " + yes + " --algo " + algo).code, 0) << algo;
  }
  std::string ptd = path("yes.td");
  EXPECT_EQ(run("phylogeny --graph " + yes + " --witness " + ptd).code, 0);
  std::ifstream pin(ptd);
  TreeDecomposition back = read_decomposition(pin);
  EXPECT_FALSE(back.bags.empty());
}

TEST_F(Cli, Gen) {
  std::string gf = path("k3.gr"), cf = path("k3.cov");
  EXPECT_EQ(run("gen --family kcc2 --cc 3 --out " + gf + " --cover-out " + cf).code, 0);
  std::ifstream in(gf);
  EXPECT_EQ(read_graph(in), gen_kcc2(3).graph);
  EXPECT_EQ(run("cover --graph " + gf + " --cover " + cf).out, "valid 3\n");
  EXPECT_EQ(run("gen --family random --n 8 --p 0.4 --seed 3").out, run("gen --family random --n 8 --p 0.4 --seed 3").out);
  EXPECT_EQ(run("gen --family bogus").code, 2);
  EXPECT_EQ(run("gen --family matrix --taxa 4 --characters 3 --seed 2").code, 0);
  EXPECT_EQ(run("gen --family hypergraph --n 5 --edges 3 --seed 2").code, 0);
}

}  // namespace
}  // namespace cctri
