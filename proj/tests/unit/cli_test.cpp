#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "sftconj/sftconj.hpp"

using nlohmann::json;
using namespace sftconj;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(SFTCONJ_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SFTCONJ_TEST_DATA) + "/" + name; }

std::string pair_args(const std::string& name) {
  return "--source " + data(name + "_source.json") + " --target " + data(name + "_target.json");
}

std::vector<json> lines(const std::string& out) {
  std::vector<json> docs;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) docs.push_back(json::parse(line));
  return docs;
}

}  // namespace

TEST(CliVerify, GoldenMeanIsAConjugacy) {
  CliRun r = run("verify " + pair_args("golden") + " --map " + data("golden.map"));
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["is_conjugacy"], true);
  EXPECT_EQ(j["failure"], "none");
  EXPECT_EQ(parse_verdict(r.out), Verdict::conjugacy());
}

TEST(CliVerify, NotSurjective) {
  CliRun r = run("verify " + pair_args("nonsurj") + " --map " + data("nonsurj.map"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["failure"], "not_surjective");
}

TEST(CliVerify, NotInjective) {
  CliRun r = run("verify " + pair_args("diamond") + " --map " + data("diamond.map") + " --threads 2");
  EXPECT_EQ(r.code, 1);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["failure"], "not_injective");
  EXPECT_EQ(j["witness"]["kind"], "diamond");
}

TEST(CliVerify, MalformedInputExitsTwo) {
  CliRun missing = run("verify " + pair_args("golden") + " --map /nonexistent.map");
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(json::parse(missing.out)["witness"]["kind"], "input_error");
  CliRun bad_graph = run("verify --source " + data("golden.map") + " --target " + data("golden_target.json") +
                      " --map " + data("golden.map"));
  EXPECT_EQ(bad_graph.code, 2);
  EXPECT_EQ(run("verify --source x").code, 2);
}

TEST(CliVerify, ExitCodeFollowsVerdict) {
  for (const char* name : {"golden", "nonsurj", "diamond"}) {
    CliRun r = run(std::string("verify ") + pair_args(name) + " --map " + data(std::string(name) + ".map"));
    Verdict v = parse_verdict(r.out);
    EXPECT_EQ(r.code, v.is_conjugacy ? 0 : 1) << name;
  }
}

TEST(CliVerify, EdgeShift) {
  auto dir = std::filesystem::temp_directory_path() / "sftconj_cli_edge";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };
  std::string two = write("two.json", R"({"vertices": ["a"], "multi_edges": [["e", "a", "a"], ["f", "a", "a"]]})");
  std::string one = write("one.json", R"({"vertices": ["a"], "multi_edges": [["x", "a", "a"]]})");
  std::string map = write("collapse.map", "k=1 m=0\ne -> x\nf -> x\n");
  std::string id = write("id.map", "k=1 m=0\ne -> e\nf -> f\n");
  EXPECT_EQ(run("verify --edge-shift --source " + two + " --target " + one + " --map " + map).code, 1);
  EXPECT_EQ(run("verify --edge-shift --source " + two + " --target " + two + " --map " + id).code, 0);
}

TEST(CliDecide, ExitCodes) {
  CliRun found = run("decide " + pair_args("golden") + " --k 1");
  EXPECT_EQ(found.code, 0);
  auto j = json::parse(found.out);
  EXPECT_EQ(j["found"], true);
  EXPECT_EQ(j["map"]["k"], 1);

  CliRun none = run("decide --source " + data("two_cycle.json") + " --target " + data("golden_target.json") + " --k 1");
  EXPECT_EQ(none.code, 1);
  CliRun budget = run("decide " + pair_args("golden") + " --k 2 --budget 5");
  EXPECT_EQ(budget.code, 3);
  EXPECT_TRUE(json::parse(budget.out)["found"].is_null());
}

TEST(CliReduce, ExitCodes) {
  CliRun found = run("reduce --graph " + data("golden_source.json") + " --ell 3");
  EXPECT_EQ(found.code, 0);
  auto j = json::parse(found.out);
  EXPECT_EQ(j["image"]["vertices"], json({"a", "b+c+d+e"}));
  EXPECT_EQ(run("reduce --graph " + data("two_cycle.json") + " --ell 1").code, 1);
  EXPECT_EQ(run("reduce --graph " + data("nonsurj_source.json") + " --ell 2 --budget 3").code, 3);
}

TEST(CliGadget, HittingSetWithoutWidgets) {
  CliRun r = run("gadget hitting-set --instance " + data("two_sets.json") + " --no-widgets");
  EXPECT_EQ(r.code, 0);
  auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 2u);
  DirectedGraph g = parse_directed_graph(docs[0].dump());
  EXPECT_EQ(g.vertex_count(), 13u);
  EXPECT_EQ(docs[1]["with_widgets"], false);
  EXPECT_EQ(docs[1]["partition"]["alpha"], "alpha");
}

TEST(CliGadget, HittingSetToDirectory) {
  auto dir = std::filesystem::temp_directory_path() / "sftconj_cli_hs";
  std::filesystem::remove_all(dir);
  CliRun r = run("gadget hitting-set --instance " + data("two_sets.json") + " --K 4 --out-dir " + dir.string());
  EXPECT_EQ(r.code, 0);
  DirectedGraph g = load_directed_graph((dir / "graph.json").string());
  EXPECT_EQ(g.vertex_count(), 13u + 7u * 8u);
  auto meta = json::parse(read_file((dir / "metadata.json").string()));
  EXPECT_EQ(meta["test_scale"], true);
  EXPECT_EQ(meta["widgets"].size(), 7u);
}

TEST(CliGadget, WidgetK4) {
  CliRun r = run("gadget widget --K 4");
  EXPECT_EQ(r.code, 0);
  auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 2u);
  DirectedGraph g = parse_directed_graph(docs[0].dump());
  EXPECT_EQ(g.vertex_count(), 3u + 8u);
  EXPECT_TRUE(g.has_edge("a", "w1__b1"));
  EXPECT_TRUE(g.has_edge("a", "w1__b3"));
  EXPECT_TRUE(g.has_edge("w1__b4", "c"));
  EXPECT_EQ(docs[1]["K"], 4);
  EXPECT_EQ(run("gadget widget --K 3").code, 2);
}

TEST(CliGadget, VertexPairAndGiDouble) {
  CliRun r = run("gadget vertex-pair " + pair_args("golden") + " --k 2");
  EXPECT_EQ(r.code, 0);
  auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(parse_directed_graph(docs[0].dump()).vertex_count(), 25u);
  EXPECT_EQ(parse_directed_graph(docs[1].dump()).vertex_count(), 12u);
  EXPECT_EQ(run("gadget vertex-pair " + pair_args("golden") + " --k 1").code, 2);

  auto dir = std::filesystem::temp_directory_path() / "sftconj_cli_gi";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "tri.json") << R"({"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"], ["z", "x"]]})";
  std::string tri = (dir / "tri.json").string();
  CliRun gi = run("gadget gi-double --first " + tri + " --second " + tri);
  EXPECT_EQ(gi.code, 0);
  EXPECT_EQ(parse_directed_graph(lines(gi.out)[0].dump()).edge_count(), 6u);
}

TEST(CliGadget, EdgePair) {
  auto dir = std::filesystem::temp_directory_path() / "sftconj_cli_ep";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "loop.json") << R"({"vertices": ["a"], "multi_edges": [["e", "a", "a"]]})";
  std::string loop = (dir / "loop.json").string();
  CliRun r = run("gadget edge-pair --source " + loop + " --target " + loop + " --k 2");
  EXPECT_EQ(r.code, 0);
  auto docs = lines(r.out);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(parse_multigraph(docs[0].dump()).vertex_count(), 4u);
  EXPECT_EQ(parse_multigraph(docs[1].dump()).vertex_count(), 5u);
}

TEST(CliTools, TracesAndEntropy) {
  CliRun a = run("tools traces --graph " + data("golden_source.json"));
  CliRun b = run("tools traces --graph " + data("golden_target.json") + " --n 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(json::parse(a.out)["traces"], json({"1", "3", "4", "7", "11"}));
  EXPECT_EQ(json::parse(a.out), json::parse(b.out));
  CliRun e = run("tools entropy --graph " + data("nonsurj_source.json"));
  EXPECT_NEAR(json::parse(e.out)["entropy"].get<double>(), 0.25, 1e-6);
}

TEST(CliTools, HigherBlockTrimAndEdgeToVertex) {
  CliRun hb = run("tools higher-block --graph " + data("golden_source.json") + " --k 1");
  EXPECT_EQ(parse_directed_graph(hb.out), load_directed_graph(data("golden_source.json")));
  CliRun hb2 = run("tools higher-block --graph " + data("golden_target.json") + " --k 2");
  EXPECT_EQ(parse_directed_graph(hb2.out).vertex_count(), 3u);
  CliRun tr = run("tools trim --graph " + data("nonsurj_source.json"));
  EXPECT_EQ(parse_directed_graph(tr.out).vertex_count(), 7u);

  auto dir = std::filesystem::temp_directory_path() / "sftconj_cli_e2v";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "m.json") << R"({"vertices": ["a"], "multi_edges": [["e", "a", "a"], ["f", "a", "a"]]})";
  CliRun ev = run("tools edge-to-vertex --graph " + (dir / "m.json").string());
  EXPECT_EQ(parse_directed_graph(ev.out).edge_count(), 4u);
  EXPECT_EQ(run("tools entropy --graph /nonexistent.json").code, 2);
}

TEST(CliJson, EmittedGraphsRoundTrip) {
  for (const char* name : {"golden_source.json", "nonsurj_target.json", "diamond_source.json"}) {
    CliRun r = run(std::string("tools trim --graph ") + data(name));
    DirectedGraph g = parse_directed_graph(r.out);
    EXPECT_EQ(parse_directed_graph(to_json(g)), g);
  }
}
