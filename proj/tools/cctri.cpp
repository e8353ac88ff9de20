#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cctri/btdp.hpp"
#include "cctri/fastconv.hpp"
#include "cctri/graph.hpp"
#include "cctri/hyper.hpp"
#include "cctri/io.hpp"
#include "cctri/oracle.hpp"
#include "cctri/phylo.hpp"
#include "cctri/pmc.hpp"
#include "cctri/polyspace.hpp"
#include "cctri/separators.hpp"

namespace {

using namespace cctri;
using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string graph, cover, weights, admissible, witness, algo, out, cover_out, family;
  std::optional<int> cc, k;
  std::uint64_t seed = 1;
  int threads = 1;
  int n = 0, rows = 0, cols = 0, edges = 0, taxa = 0, characters = 0;
  double p = 0.5, missing = 0.0;
  bool json = false;
  std::string problem;
};

std::ifstream open_input(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing --") + what);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

// Parse errors carry the file name in front of the line number.
template <class F>
auto parse_file(const std::string& path, const char* what, F&& parse) {
  std::ifstream in = open_input(path, what);
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Graph load_graph(const Flags& f) {
  return parse_file(f.graph, "graph", [](std::istream& in) { return read_graph(in); });
}

std::optional<CliqueCover> load_cover(const Flags& f, const Graph& g) {
  if (f.cover.empty()) return std::nullopt;
  CliqueCover w = parse_file(f.cover, "cover", [&](std::istream& in) { return read_cover(in, g.n()); });
  if (auto bad = cover_violation(g, w)) throw UsageError(f.cover + ": invalid cover: " + *bad);
  return w;
}

const CliqueCover& require_cover(const std::optional<CliqueCover>& w, const std::string& algo) {
  if (!w) throw UsageError("--algo " + algo + " needs --cover FILE");
  return *w;
}

void write_witness(const Flags& f, const TreeDecomposition& td, int n, const std::vector<std::string>& notes = {}) {
  if (f.witness.empty()) return;
  std::ofstream out(f.witness);
  if (!out) throw UsageError("cannot write " + f.witness);
  for (const std::string& line : notes) out << "c " << line << '\n';
  write_decomposition(out, td, n);
}

struct Report {
  const Flags& flags;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  json stats = json::object();

  void graph(const Graph& g, const std::optional<CliqueCover>& w) {
    stats["n"] = g.n();
    stats["m"] = g.m();
    stats["cover_size"] = w ? json(w->size()) : json(nullptr);
  }
  void counts(const Graph& g, std::optional<std::size_t> pmcs) {
    if (!flags.json) return;
    stats["num_minseps"] = enumerate_minimal_separators(g).size();
    stats["num_pmcs"] = pmcs ? json(*pmcs) : json(nullptr);
  }
  // Prints the value (plain or JSON) and returns the exit code.
  int finish(const std::string& value, int code) {
    if (!flags.json) {
      std::cout << value << '\n';
      return code;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    stats["elapsed_ms"] = ms;
    for (const char* key : {"n", "m", "cover_size", "num_minseps", "num_pmcs"})
      if (!stats.contains(key)) stats[key] = nullptr;
    json out = {{"value", value},
                {"witness_path", flags.witness.empty() ? json(nullptr) : json(flags.witness)},
                {"stats", stats}};
    std::cout << out.dump() << '\n';
    return code;
  }
};

std::vector<VertexSet> pmcs_for(const Graph& g, const Flags& f) {
  PmcOptions opts;
  opts.threads = f.threads;
  return enumerate_pmcs(g, opts);
}

std::string algo_or(const Flags& f, const char* fallback) { return f.algo.empty() ? fallback : f.algo; }

int cmd_treewidth(const Flags& f) {
  Report rep{f};
  Graph g = load_graph(f);
  auto w = load_cover(f, g);
  rep.graph(g, w);
  const std::string algo = algo_or(f, "btdp");
  if (f.k && *f.k < 0) throw UsageError("--k must be non-negative");
  std::optional<std::int64_t> value;
  TreeDecomposition td;
  if (algo == "brute") {
    value = oracle::brute_treewidth(g);
    if (f.k && *value > *f.k) value.reset();
  } else if (algo == "btdp") {
    auto pmcs = pmcs_for(g, f);
    rep.counts(g, pmcs.size());
    Solution s = solve(g, w ? &*w : nullptr, TreewidthObjective{f.k}, pmcs);
    if (s.value) value = s.value->get_num().get_si();
    td = std::move(s.witness);
  } else if (algo == "conv") {
    const CliqueCover& cw = require_cover(w, algo);
    FastOptions opts;
    opts.witness = !f.witness.empty();
    FastResult r = f.k ? treewidth_fast_decide(g, cw, *f.k, opts) : treewidth_fast_optimize(g, cw, opts);
    value = r.value;
    td = std::move(r.witness);
  } else if (algo == "polyspace") {
    PolyspaceOptions opts;
    opts.witness = !f.witness.empty();
    Solution s;
    if (w) s = solve_polyspace(g, *w, TreewidthObjective{f.k}, opts);
    else if (f.cc) s = solve_polyspace_nocover(g, *f.cc, TreewidthObjective{f.k}, opts);
    else s = solve_polyspace(g, greedy_cover(g), TreewidthObjective{f.k}, opts);
    if (s.value) value = s.value->get_num().get_si();
    td = std::move(s.witness);
  } else {
    throw UsageError("treewidth supports --algo btdp, conv, polyspace, brute");
  }
  if (value) write_witness(f, td, g.n());
  if (f.k) return rep.finish(value ? "yes" : "no", value ? kYes : kNo);
  if (!value) throw UsageError("--cc " + std::to_string(f.cc.value_or(0)) + " is below the edge clique cover number");
  return rep.finish(std::to_string(*value), kYes);
}

int cmd_fillin(const Flags& f) {
  Report rep{f};
  Graph g = load_graph(f);
  auto w = load_cover(f, g);
  rep.graph(g, w);
  const std::string algo = algo_or(f, "btdp");
  WeightTable weights = f.weights.empty()
                            ? WeightTable::unit(g.n())
                            : parse_file(f.weights, "weights", [&](std::istream& in) { return read_weights(in, g); });
  std::int64_t scaled = 0;
  TreeDecomposition td;
  auto unscale = [&](const Rational& v) {
    Rational s = v * Rational(mpz_class(std::to_string(weights.scale())));
    return s.get_num().get_si();
  };
  if (algo == "brute") {
    scaled = oracle::brute_weighted_fill(g, [&](Vertex u, Vertex v) { return weights.at(u, v); });
  } else if (algo == "btdp") {
    auto pmcs = pmcs_for(g, f);
    rep.counts(g, pmcs.size());
    Solution s = solve(g, w ? &*w : nullptr, WeightedFillObjective{weights}, pmcs);
    scaled = unscale(*s.value);
    td = std::move(s.witness);
  } else if (algo == "conv") {
    const CliqueCover& cw = require_cover(w, algo);
    if (!f.weights.empty()) throw UsageError("--algo conv solves unweighted fill-in only");
    FastOptions opts;
    opts.witness = !f.witness.empty();
    FastResult r = fillin_fast_solve(g, cw, opts);
    scaled = *r.value;
    td = std::move(r.witness);
  } else if (algo == "polyspace") {
    PolyspaceOptions opts;
    opts.witness = !f.witness.empty();
    Solution s;
    if (w) s = solve_polyspace(g, *w, WeightedFillObjective{weights}, opts);
    else if (f.cc) s = solve_polyspace_nocover(g, *f.cc, WeightedFillObjective{weights}, opts);
    else s = solve_polyspace(g, greedy_cover(g), WeightedFillObjective{weights}, opts);
    if (!s.value) throw UsageError("--cc " + std::to_string(f.cc.value_or(0)) + " is below the edge clique cover number");
    scaled = unscale(*s.value);
    td = std::move(s.witness);
  } else {
    throw UsageError("fillin supports --algo btdp, conv, polyspace, brute");
  }
  write_witness(f, td, g.n());
  return rep.finish(weights.format(scaled), kYes);
}

int cmd_sandwich(const Flags& f) {
  Report rep{f};
  Graph g = load_graph(f);
  auto w = load_cover(f, g);
  rep.graph(g, w);
  const std::string algo = algo_or(f, "btdp");
  AdmissibleSet adm = f.admissible.empty() ? AdmissibleSet(g.n())
                                           : parse_file(f.admissible, "admissible",
                                                        [&](std::istream& in) { return read_admissible(in, g); });
  bool yes = false;
  TreeDecomposition td;
  if (algo == "brute") {
    yes = oracle::brute_sandwich(g, [&](Vertex u, Vertex v) { return adm.admissible(u, v); });
  } else if (algo == "btdp") {
    auto pmcs = pmcs_for(g, f);
    rep.counts(g, pmcs.size());
    Solution s = solve(g, w ? &*w : nullptr, SandwichObjective{adm}, pmcs);
    yes = s.value.has_value();
    td = std::move(s.witness);
  } else if (algo == "conv") {
    FastOptions opts;
    opts.witness = !f.witness.empty();
    FastResult r = sandwich_fast_solve(g, require_cover(w, algo), adm, opts);
    yes = r.value.has_value();
    td = std::move(r.witness);
  } else {
    throw UsageError("sandwich supports --algo btdp, conv, brute");
  }
  if (yes) write_witness(f, td, g.n());
  return rep.finish(yes ? "yes" : "no", yes ? kYes : kNo);
}

int cmd_fhtw(const Flags& f) {
  Report rep{f};
  Hypergraph h = parse_file(f.graph, "graph", [](std::istream& in) { return read_hypergraph(in); });
  PrimalGraph p = primal_graph(h);
  rep.graph(p.graph, p.cover);
  const std::string algo = algo_or(f, "btdp");
  if (algo == "brute") return rep.finish(to_string(oracle::brute_fhtw(h)), kYes);
  if (algo != "btdp" && algo != "polyspace") throw UsageError("fhtw supports --algo btdp, polyspace, brute");
  FhtwResult r = fhtw(h, algo == "btdp" ? FhtwAlgorithm::kBtdp : FhtwAlgorithm::kPolyspace);
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < r.bag_fcov.size(); ++i)
    notes.push_back("bag " + std::to_string(i + 1) + " fcov " + to_string(r.bag_fcov[i]));
  write_witness(f, r.witness, h.n(), notes);
  return rep.finish(to_string(r.value), kYes);
}

int cmd_phylogeny(const Flags& f) {
  Report rep{f};
  CharacterMatrix m = parse_file(f.graph, "graph", [](std::istream& in) { return read_matrix(in); });
  const std::string algo = algo_or(f, "conv");
  bool yes = false;
  if (algo == "brute") {
    yes = oracle::four_gamete(m);
  } else {
    PhyloAlgorithm a;
    if (algo == "btdp") a = PhyloAlgorithm::kBtdp;
    else if (algo == "conv") a = PhyloAlgorithm::kConv;
    else if (algo == "polyspace") a = PhyloAlgorithm::kPolyspace;
    else throw UsageError("phylogeny supports --algo btdp, conv, polyspace, brute");
    PhylogenyResult r = perfect_phylogeny(m, a);
    rep.graph(r.pig.graph, r.pig.taxon_cover);
    yes = r.compatible;
    if (yes) {
      std::vector<std::string> notes;
      for (std::size_t v = 0; v < r.pig.states.size(); ++v)
        notes.push_back("vertex " + std::to_string(v + 1) + " " + m.character_name(r.pig.states[v].first) + "=" +
                        r.pig.states[v].second);
      write_witness(f, r.witness, r.pig.graph.n(), notes);
    }
  }
  return rep.finish(yes ? "yes" : "no", yes ? kYes : kNo);
}

void print_sets(const std::vector<VertexSet>& sets) {
  for (const VertexSet& s : sets) {
    bool first = true;
    for (Vertex v : s) {
      std::cout << (first ? "" : " ") << v + 1;
      first = false;
    }
    std::cout << '\n';
  }
}

int cmd_pmcs(const Flags& f) {
  Graph g = load_graph(f);
  const std::string algo = algo_or(f, "dedup");
  std::vector<VertexSet> out;
  if (algo == "dedup") {
    out = pmcs_for(g, f);
  } else if (algo == "polyspace") {
    enumerate_pmcs_polyspace(g, [&](const VertexSet& s) { out.push_back(s); });
  } else if (algo == "brute") {
    out = oracle::brute_pmcs(g);
  } else {
    throw UsageError("pmcs supports --algo dedup, polyspace, brute");
  }
  std::sort(out.begin(), out.end());
  print_sets(out);
  return kYes;
}

int cmd_minseps(const Flags& f) {
  Graph g = load_graph(f);
  const std::string algo = algo_or(f, "dedup");
  std::vector<VertexSet> out;
  if (algo == "dedup") {
    out = enumerate_minimal_separators(g);
  } else if (algo == "polyspace") {
    for (const VertexSet& k : components(g, g.empty_set()))
      for_each_minimal_separator_polyspace(g, k, [&](const VertexSet& s) { out.push_back(s); });
  } else if (algo == "brute") {
    out = oracle::brute_minimal_separators(g);
  } else {
    throw UsageError("minseps supports --algo dedup, polyspace, brute");
  }
  std::sort(out.begin(), out.end());
  print_sets(out);
  return kYes;
}

int cmd_cover(const Flags& f) {
  Graph g = load_graph(f);
  if (!f.cover.empty()) {
    CliqueCover w = parse_file(f.cover, "cover", [&](std::istream& in) { return read_cover(in, g.n()); });
    if (auto bad = cover_violation(g, w)) {
      std::cout << "invalid: " << *bad << '\n';
      return kNo;
    }
    std::cout << "valid " << w.size() << '\n';
    return kYes;
  }
  write_cover(std::cout, greedy_cover(g));
  return kYes;
}

template <class Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

int cmd_gen(const Flags& f) {
  const std::string& fam = f.family;
  auto graph_out = [&](const Graph& g) { emit(f.out, [&](std::ostream& o) { write_graph(o, g); }); };
  if (fam == "kcc2") {
    GraphWithCover gc = gen_kcc2(f.cc.value_or(3));
    graph_out(gc.graph);
    if (!f.cover_out.empty()) emit(f.cover_out, [&](std::ostream& o) { write_cover(o, gc.cover); });
  } else if (fam == "matched") {
    graph_out(gen_matched_cliques(f.n));
  } else if (fam == "random") {
    graph_out(gen_random(f.n, f.p, f.seed));
  } else if (fam == "cycle") {
    graph_out(gen_cycle(f.n));
  } else if (fam == "path") {
    graph_out(gen_path(f.n));
  } else if (fam == "complete") {
    graph_out(gen_complete(f.n));
  } else if (fam == "grid") {
    graph_out(gen_grid(f.rows, f.cols));
  } else if (fam == "hypergraph") {
    Hypergraph h = gen_random_hypergraph(f.n, f.edges, f.seed);
    emit(f.out, [&](std::ostream& o) {
      for (const VertexSet& e : h.edges()) {
        bool first = true;
        for (Vertex v : e) {
          o << (first ? "" : " ") << h.name(v);
          first = false;
        }
        o << '\n';
      }
    });
  } else if (fam == "matrix") {
    CharacterMatrix m = gen_random_binary_matrix(f.taxa, f.characters, f.missing, f.seed);
    emit(f.out, [&](std::ostream& o) { write_matrix(o, m); });
  } else {
    throw UsageError("unknown --family " + fam);
  }
  if (!f.cover_out.empty() && fam != "kcc2") {
    throw UsageError("--cover-out is only produced by --family kcc2");
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal triangulations parameterized by edge clique cover"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--graph,--hypergraph,--matrix", f.graph, "Input file (graph, hypergraph or matrix)");
  app.add_option("--cover", f.cover, "Edge clique cover file");
  app.add_option("--cc", f.cc, "Cover size bound for the cover-free polynomial-space solver")->check(CLI::PositiveNumber);
  app.add_option("--k", f.k, "Treewidth bound (decision form)");
  app.add_option("--weights", f.weights, "Fill weights file");
  app.add_option("--admissible", f.admissible, "Admissible fill pairs file");
  app.add_option("--algo", f.algo, "btdp, conv, polyspace, brute (pmcs/minseps: dedup, polyspace, brute)");
  app.add_option("--witness", f.witness, "Write the witness decomposition (.td) here");
  app.add_option("--seed", f.seed, "Generator seed");
  app.add_option("--threads", f.threads, "Threads for PMC enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--json", f.json, "Machine-readable output");

  auto* treewidth = app.add_subcommand("treewidth", "Treewidth, or tw <= k with --k");
  auto* fillin = app.add_subcommand("fillin", "Minimum (weighted) fill-in");
  auto* sandwich = app.add_subcommand("sandwich", "Chordal sandwich with admissible pairs");
  auto* fh = app.add_subcommand("fhtw", "Fractional hypertreewidth");
  auto* phylo = app.add_subcommand("phylogeny", "Perfect phylogeny of a character matrix");
  auto* pmcs = app.add_subcommand("pmcs", "List potential maximal cliques");
  auto* minseps = app.add_subcommand("minseps", "List minimal separators");
  auto* cover = app.add_subcommand("cover", "Greedy cover, or validate --cover");
  auto* orc = app.add_subcommand("oracle", "Brute-force reference for a solver subcommand");
  orc->add_option("problem", f.problem, "treewidth, fillin, sandwich, fhtw, phylogeny, pmcs, minseps")
      ->required()
      ->check(CLI::IsMember({"treewidth", "fillin", "sandwich", "fhtw", "phylogeny", "pmcs", "minseps"}));
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--family", f.family, "kcc2, matched, random, cycle, path, complete, grid, hypergraph, matrix")
      ->required();
  gen->add_option("--n", f.n, "Vertex count");
  gen->add_option("--p", f.p, "Edge probability");
  gen->add_option("--rows", f.rows);
  gen->add_option("--cols", f.cols);
  gen->add_option("--edges", f.edges, "Hyperedge count");
  gen->add_option("--taxa", f.taxa);
  gen->add_option("--characters", f.characters);
  gen->add_option("--missing", f.missing, "Missing-cell probability");
  gen->add_option("--out", f.out, "Output file (default stdout)");
  gen->add_option("--cover-out", f.cover_out, "Cover output for kcc2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*treewidth) return cmd_treewidth(f);
    if (*fillin) return cmd_fillin(f);
    if (*sandwich) return cmd_sandwich(f);
    if (*fh) return cmd_fhtw(f);
    if (*phylo) return cmd_phylogeny(f);
    if (*pmcs) return cmd_pmcs(f);
    if (*minseps) return cmd_minseps(f);
    if (*cover) return cmd_cover(f);
    if (*gen) return cmd_gen(f);
    if (*orc) {
      f.algo = "brute";
      if (f.problem == "treewidth") return cmd_treewidth(f);
      if (f.problem == "fillin") return cmd_fillin(f);
      if (f.problem == "sandwich") return cmd_sandwich(f);
      if (f.problem == "fhtw") return cmd_fhtw(f);
      if (f.problem == "phylogeny") return cmd_phylogeny(f);
      if (f.problem == "pmcs") return cmd_pmcs(f);
      return cmd_minseps(f);
    }
  } catch (const UsageError& e) {
    std::cerr << "cctri: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "cctri: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cctri: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cctri: error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
