// sftconj: command-line front end for the conjugacy library.
//
//   sftconj verify --source g.json --target h.json --map phi.map [--edge-shift]
//   sftconj decide --source g.json --target h.json --k 2 [--budget N]
//   sftconj reduce --graph g.json --ell 1 [--budget N]
//   sftconj gadget <gi-double|vertex-pair|edge-pair|hitting-set|widget> ...
//   sftconj tools <higher-block|edge-to-vertex|trim|entropy|traces> ...

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sftconj/sftconj.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sftconj;

namespace {

enum Exit : int { ok = 0, no = 1, bad_input = 2, budget = 3 };

struct Output {
  std::string name;
  std::string text;
};

// Writes each document to <dir>/<name>, or one per line to stdout.
void emit(const std::vector<Output>& docs, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& d : docs) std::cout << d.text << '\n';
    return;
  }
  fs::create_directories(out_dir);
  for (const auto& d : docs) {
    fs::path p = fs::path(out_dir) / d.name;
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    out << d.text << '\n';
    std::cout << p.string() << '\n';
  }
}

struct VerifyArgs {
  std::string source, target, map;
  bool edge_shift = false;
  unsigned threads = 1;
};

int cmd_verify(const VerifyArgs& a) {
  Verdict v;
  try {
    BlockMap phi = load_block_map(a.map);
    VerifyOptions opts{a.threads};
    if (a.edge_shift)
      v = verify_edge_shift(load_multigraph(a.source), load_multigraph(a.target), phi, opts);
    else
      v = verify(load_directed_graph(a.source), load_directed_graph(a.target), phi, opts);
  } catch (const ParseError& e) {
    std::cerr << "sftconj verify: " << e.what() << '\n';
    std::cout << input_error_json(e.what()) << '\n';
    return bad_input;
  } catch (const ContractError& e) {
    std::cerr << "sftconj verify: " << e.what() << '\n';
    std::cout << input_error_json(e.what()) << '\n';
    return bad_input;
  }
  std::cout << to_json(v) << '\n';
  return v.is_conjugacy ? ok : no;
}

struct SearchArgs {
  std::string source, target, graph;
  std::size_t k = 1, ell = 1;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

int cmd_decide(const SearchArgs& a) {
  auto g = load_directed_graph(a.source), h = load_directed_graph(a.target);
  try {
    auto phi = decide_k_block_conjugacy(g, h, a.k, {a.budget, a.threads});
    if (!phi) {
      std::cout << json{{"found", false}}.dump() << '\n';
      return no;
    }
    std::cout << json{{"found", true}, {"map", json::parse(to_json(*phi))}}.dump() << '\n';
    return ok;
  } catch (const BudgetExceeded& e) {
    std::cerr << "sftconj decide: " << e.what() << '\n';
    std::cout << json{{"found", nullptr}, {"reason", "budget_exceeded"}}.dump() << '\n';
    return budget;
  }
}

int cmd_reduce(const SearchArgs& a) {
  auto g = load_directed_graph(a.graph);
  try {
    auto q = search_one_block_reduction(g, a.ell, {a.budget, a.threads});
    if (!q) {
      std::cout << json{{"found", false}}.dump() << '\n';
      return no;
    }
    json doc = json::parse(to_json(*q));
    doc["found"] = true;
    std::cout << doc.dump() << '\n';
    return ok;
  } catch (const BudgetExceeded& e) {
    std::cerr << "sftconj reduce: " << e.what() << '\n';
    std::cout << json{{"found", nullptr}, {"reason", "budget_exceeded"}}.dump() << '\n';
    return budget;
  }
}

struct GadgetArgs {
  std::string source, target, instance, out_dir;
  std::size_t k = 2;
  std::optional<std::size_t> K;
  bool no_widgets = false;
};

int cmd_gi_double(const GadgetArgs& a) {
  auto [g, h] = gi_to_digraphs(load_undirected_graph(a.source), load_undirected_graph(a.target));
  emit({{"source.json", to_json(g)}, {"target.json", to_json(h)}}, a.out_dir);
  return ok;
}

int cmd_vertex_pair(const GadgetArgs& a) {
  auto [g, h] = vertex_gadget_pair(load_directed_graph(a.source), load_directed_graph(a.target), a.k);
  json meta{{"gadget", "vertex"}, {"k", a.k}};
  emit({{"source.json", to_json(g)}, {"target.json", to_json(h)}, {"metadata.json", meta.dump()}}, a.out_dir);
  return ok;
}

int cmd_edge_pair(const GadgetArgs& a) {
  auto [g, h] = edge_gadget_pair(load_multigraph(a.source), load_multigraph(a.target), a.k);
  json meta{{"gadget", "edge"}, {"k", a.k}};
  emit({{"source.json", to_json(g)}, {"target.json", to_json(h)}, {"metadata.json", meta.dump()}}, a.out_dir);
  return ok;
}

int cmd_hitting_set(const GadgetArgs& a) {
  auto r = hitting_set_reduction(load_hitting_set(a.instance), a.K, !a.no_widgets);
  emit({{"graph.json", to_json(r.graph)}, {"metadata.json", to_json(r.meta, r.partition)}}, a.out_dir);
  return ok;
}

// One widget on the smallest host with the structure property.
int cmd_widget(const GadgetArgs& a) {
  DirectedGraph host;
  for (const char* v : {"alpha", "a", "c"}) host.add_vertex(v);
  for (const char* v : {"alpha", "a", "c"}) host.add_edge(v, v);
  for (const char* v : {"a", "c"}) {
    host.add_edge("alpha", v);
    host.add_edge(v, "alpha");
  }
  StructurePartition p{"alpha", {"a"}, {}, {"c"}};
  auto att = attach_weight_widget(host, p, {"a"}, {"c"}, a.K.value_or(4), "1");
  json meta = json::parse(to_json(att.widget));
  meta["partition"] = json::parse(to_json(att.partition));
  emit({{"graph.json", to_json(att.graph)}, {"metadata.json", meta.dump()}}, a.out_dir);
  return ok;
}

struct ToolArgs {
  std::string graph;
  std::size_t k = 2;
  std::optional<std::size_t> n;
  double tolerance = 1e-9;
};

int cmd_higher_block(const ToolArgs& a) {
  std::cout << to_json(higher_block_graph(load_directed_graph(a.graph), a.k)) << '\n';
  return ok;
}

int cmd_edge_to_vertex(const ToolArgs& a) {
  std::cout << to_json(edge_to_vertex(load_multigraph(a.graph))) << '\n';
  return ok;
}

int cmd_trim(const ToolArgs& a) {
  std::cout << to_json(trim_to_essential(load_directed_graph(a.graph))) << '\n';
  return ok;
}

int cmd_entropy(const ToolArgs& a) {
  double h = entropy_estimate(load_directed_graph(a.graph), a.tolerance);
  std::cout << json{{"entropy", h}}.dump() << '\n';
  return ok;
}

int cmd_traces(const ToolArgs& a) {
  auto g = load_directed_graph(a.graph);
  json traces = json::array();
  for (const auto& t : trace_powers(g, a.n.value_or(g.vertex_count()))) traces.push_back(t.str());
  std::cout << json{{"traces", traces}}.dump() << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy verification and search for shifts of finite type"};
  app.require_subcommand(1);
  std::function<int()> action;

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a block map is a conjugacy");
  verify_cmd->add_option("--source", va.source, "Source graph JSON")->required();
  verify_cmd->add_option("--target", va.target, "Target graph JSON")->required();
  verify_cmd->add_option("--map", va.map, "Block map file")->required();
  verify_cmd->add_flag("--edge-shift", va.edge_shift, "Graphs are multigraphs; the map acts on edge labels");
  verify_cmd->add_option("--threads", va.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->callback([&] { action = [&] { return cmd_verify(va); }; });

  SearchArgs sa;
  auto* decide_cmd = app.add_subcommand("decide", "Search for a k-block conjugacy");
  decide_cmd->add_option("--source", sa.source, "Source graph JSON")->required();
  decide_cmd->add_option("--target", sa.target, "Target graph JSON")->required();
  decide_cmd->add_option("--k", sa.k, "Block size")->check(CLI::PositiveNumber);
  decide_cmd->add_option("--budget", sa.budget, "Maximum search nodes");
  decide_cmd->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
  decide_cmd->callback([&] { action = [&] { return cmd_decide(sa); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Search for a 1-block conjugacy onto a smaller graph");
  reduce_cmd->add_option("--graph", sa.graph, "Graph JSON")->required();
  reduce_cmd->add_option("--ell", sa.ell, "Number of vertices to remove")->required();
  reduce_cmd->add_option("--budget", sa.budget, "Maximum partitions tried");
  reduce_cmd->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
  reduce_cmd->callback([&] { action = [&] { return cmd_reduce(sa); }; });

  GadgetArgs ga;
  auto* gadget_cmd = app.add_subcommand("gadget", "Build reduction gadgets");
  gadget_cmd->require_subcommand(1);
  auto out_dir = [&](CLI::App* c) { c->add_option("--out-dir", ga.out_dir, "Write files here instead of stdout"); };
  auto* gi = gadget_cmd->add_subcommand("gi-double", "Undirected graphs to doubled digraphs");
  gi->add_option("--first", ga.source)->required();
  gi->add_option("--second", ga.target)->required();
  out_dir(gi);
  gi->callback([&] { action = [&] { return cmd_gi_double(ga); }; });
  auto* vp = gadget_cmd->add_subcommand("vertex-pair", "Vertex gadget pair");
  vp->add_option("--source", ga.source)->required();
  vp->add_option("--target", ga.target)->required();
  vp->add_option("--k", ga.k)->check(CLI::Range(2, 1 << 20));
  out_dir(vp);
  vp->callback([&] { action = [&] { return cmd_vertex_pair(ga); }; });
  auto* ep = gadget_cmd->add_subcommand("edge-pair", "Edge gadget pair");
  ep->add_option("--source", ga.source)->required();
  ep->add_option("--target", ga.target)->required();
  ep->add_option("--k", ga.k)->check(CLI::Range(2, 1 << 20));
  out_dir(ep);
  ep->callback([&] { action = [&] { return cmd_edge_pair(ga); }; });
  auto* hs = gadget_cmd->add_subcommand("hitting-set", "Hitting Set reduction graph");
  hs->add_option("--instance", ga.instance)->required();
  hs->add_option("--K", ga.K, "Widget size (default 5mn)");
  hs->add_flag("--no-widgets", ga.no_widgets);
  out_dir(hs);
  hs->callback([&] { action = [&] { return cmd_hitting_set(ga); }; });
  auto* wd = gadget_cmd->add_subcommand("widget", "A single weight widget on a minimal host");
  wd->add_option("--K", ga.K, "Widget size")->required();
  out_dir(wd);
  wd->callback([&] { action = [&] { return cmd_widget(ga); }; });

  ToolArgs ta;
  auto* tools_cmd = app.add_subcommand("tools", "Graph and shift utilities");
  tools_cmd->require_subcommand(1);
  auto* hb = tools_cmd->add_subcommand("higher-block", "Higher block presentation");
  hb->add_option("--graph", ta.graph)->required();
  hb->add_option("--k", ta.k)->check(CLI::PositiveNumber);
  hb->callback([&] { action = [&] { return cmd_higher_block(ta); }; });
  auto* ev = tools_cmd->add_subcommand("edge-to-vertex", "Vertex presentation of an edge shift");
  ev->add_option("--graph", ta.graph)->required();
  ev->callback([&] { action = [&] { return cmd_edge_to_vertex(ta); }; });
  auto* tr = tools_cmd->add_subcommand("trim", "Essential part of a graph");
  tr->add_option("--graph", ta.graph)->required();
  tr->callback([&] { action = [&] { return cmd_trim(ta); }; });
  auto* en = tools_cmd->add_subcommand("entropy", "Topological entropy (base 2)");
  en->add_option("--graph", ta.graph)->required();
  en->add_option("--tolerance", ta.tolerance);
  en->callback([&] { action = [&] { return cmd_entropy(ta); }; });
  auto* tc = tools_cmd->add_subcommand("traces", "tr(A^i) for i = 1..n");
  tc->add_option("--graph", ta.graph)->required();
  tc->add_option("--n", ta.n, "Number of powers (default |V|)");
  tc->callback([&] { action = [&] { return cmd_traces(ta); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "sftconj: " << e.what() << '\n';
    return bad_input;
  } catch (const std::exception& e) {
    std::cerr << "sftconj: " << e.what() << '\n';
    return bad_input;
  }
}
