// Copyright 2026 The zol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: sampling, extension calculus, FO evaluation,
// Ehrenfeucht games, the bad-neighbourhood registry, profiles and probes.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zol/ef_game.hpp"
#include "zol/errors.hpp"
#include "zol/ext_calculus.hpp"
#include "zol/fo.hpp"
#include "zol/graph6.hpp"
#include "zol/gset.hpp"
#include "zol/probe.hpp"
#include "zol/profiles.hpp"

namespace {

using namespace zol;

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw Error("cannot open output file " + path);
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid vertex '" + item + "'", 1, 1);
    }
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<Graph> load_graphs(const std::string& g6, const std::string& file) {
  if (!g6.empty()) return {from_graph6(g6)};
  if (file.empty()) throw PreconditionError("give a graph with --g6 or --graph-file");
  std::ifstream in(file);
  if (!in) throw Error("cannot open graph file " + file);
  return read_graph6_lines(in);
}

Graph one_graph(const std::string& g6, const std::string& file) {
  auto gs = load_graphs(g6, file);
  if (gs.size() != 1) throw PreconditionError("expected exactly one graph");
  return gs.front();
}

VertexSet vertex_set(int n, const std::string& list) {
  const std::vector<int> v = parse_list(list);
  for (int x : v)
    if (x < 0 || x >= n) throw PreconditionError("vertex " + std::to_string(x) + " out of range");
  return VertexSet(n, std::span<const int>(v));
}

struct RegistryArgs {
  std::string dir;
  std::string params;
  int layers = 1;

  GSetRegistry build() const {
    if (!dir.empty()) return GSetRegistry::load(dir);
    const GSetParams p = params.empty() ? GSetParams{} : GSetParams::load(params);
    return enumerate_g(p, layers);
  }
};

void add_registry_flags(CLI::App* app, RegistryArgs& r) {
  app->add_option("--registry", r.dir, "Registry directory written by gset-enum");
  app->add_option("--gset-params", r.params, "key=value bounds file");
  app->add_option("--layers", r.layers, "Layers to enumerate when no registry is given")->check(CLI::Range(0, kMaxLayers));
}

LabeledPair named_template(const std::string& name) {
  if (name == "tick") return templates().kstar;
  if (name == "k1") return templates().k1;
  if (name == "k2") return templates().k2;
  throw PreconditionError("unknown template '" + name + "' (tick, k1, k2)");
}

std::vector<GridCell> grid_from(const std::string& grid, const std::string& alpha, int n, int m) {
  if (!grid.empty()) return load_grid(grid);
  if (alpha.empty() || n <= 0) throw PreconditionError("give --grid or both --alpha and --n");
  return {GridCell{Rational::parse(alpha), n, m}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extension calculus, FO games and random-graph probes"};
  app.require_subcommand(1);

  std::string out, g6, graph_file, alpha;
  int n = 0, m = 0, k = 2, samples = 100, threads = 0;
  uint64_t seed = 1;

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw G(n, n^-alpha) and print graph6");
  std::string mode = "auto";
  sample_cmd->add_option("--n", n, "Vertex count")->required();
  sample_cmd->add_option("--alpha", alpha, "Exponent p/q")->required();
  sample_cmd->add_option("--seed", seed, "Master seed");
  sample_cmd->add_option("--mode", mode, "auto, skip or bernoulli");
  sample_cmd->add_option("--out", out, "Output file");

  // classify-pair
  auto* classify_cmd = app.add_subcommand("classify-pair", "Classify (G, H) as safe, rigid or neutral");
  std::string roots, outer;
  classify_cmd->add_option("--g6", g6, "Host graph");
  classify_cmd->add_option("--graph-file", graph_file, "File holding the host graph");
  classify_cmd->add_option("--roots", roots, "Vertices of H, comma separated")->required();
  classify_cmd->add_option("--outer", outer, "Vertices of G (default: all)");
  classify_cmd->add_option("--alpha", alpha, "Exponent p/q")->required();
  classify_cmd->add_option("--out", out, "Output file");

  // rhomax
  auto* rho_cmd = app.add_subcommand("rhomax", "Maximum subgraph density of each graph");
  rho_cmd->add_option("--g6", g6, "Graph");
  rho_cmd->add_option("--graph-file", graph_file, "graph6 file, one graph per line");
  rho_cmd->add_option("--out", out, "Output file");

  // eval-fo
  auto* eval_cmd = app.add_subcommand("eval-fo", "Evaluate FO sentences on graphs");
  std::string formula, formula_file;
  eval_cmd->add_option("--formula", formula, "Inline sentence");
  eval_cmd->add_option("--formula-file", formula_file, "One sentence per line");
  eval_cmd->add_option("--g6", g6, "Graph");
  eval_cmd->add_option("--graph-file", graph_file, "graph6 file");
  eval_cmd->add_option("--out", out, "Output file");

  // ehr and synthesize
  std::string x6, y6;
  bool trace = false, orbits = false;
  auto* ehr_cmd = app.add_subcommand("ehr", "Solve the k-round Ehrenfeucht game");
  ehr_cmd->add_option("--x", x6, "First graph (graph6)")->required();
  ehr_cmd->add_option("--y", y6, "Second graph (graph6)")->required();
  ehr_cmd->add_option("--k", k, "Rounds");
  ehr_cmd->add_flag("--trace", trace, "Print the winning strategy");
  ehr_cmd->add_flag("--orbits", orbits, "Reduce moves by automorphism orbits");
  ehr_cmd->add_option("--out", out, "Output file");

  auto* synth_cmd = app.add_subcommand("synthesize", "Sentence of depth <= k separating two graphs");
  synth_cmd->add_option("--x", x6, "First graph (graph6)")->required();
  synth_cmd->add_option("--y", y6, "Second graph (graph6)")->required();
  synth_cmd->add_option("--k", k, "Rounds");
  synth_cmd->add_option("--out", out, "Output file");

  // gset-enum
  RegistryArgs reg_args;
  std::string save_dir;
  bool verify = false;
  auto* gset_cmd = app.add_subcommand("gset-enum", "Enumerate the layered bad-neighbourhood registry");
  gset_cmd->add_option("--gset-params", reg_args.params, "key=value bounds file");
  gset_cmd->add_option("--layers", reg_args.layers, "Highest layer")->check(CLI::Range(0, kMaxLayers));
  gset_cmd->add_option("--save", save_dir, "Write the registry to this directory");
  gset_cmd->add_flag("--verify", verify, "Check the structural properties of every member");
  gset_cmd->add_option("--out", out, "Summary file");

  // profile and witness
  int vertex = 0;
  auto* profile_cmd = app.add_subcommand("profile", "u-bad subgraphs and i-profiles of a vertex");
  add_registry_flags(profile_cmd, reg_args);
  profile_cmd->add_option("--g6", g6, "Graph");
  profile_cmd->add_option("--graph-file", graph_file, "File holding the graph");
  profile_cmd->add_option("--vertex", vertex, "The vertex u");
  profile_cmd->add_option("--out", out, "Output file");

  auto* witness_cmd = app.add_subcommand("witness", "Build the sparse graph matching a vertex's profiles");
  add_registry_flags(witness_cmd, reg_args);
  witness_cmd->add_option("--g6", g6, "Graph A");
  witness_cmd->add_option("--graph-file", graph_file, "File holding A");
  witness_cmd->add_option("--vertex", vertex, "The vertex x1");
  witness_cmd->add_option("--out", out, "Output file");

  // probe
  std::string kind = "triangle", grid, pair_g6 = "A_", pair_roots = "0", tmpl_name = "tick";
  int clique = 3;
  auto* probe_cmd = app.add_subcommand("probe", "Monte-Carlo probe over an alpha grid, CSV output");
  probe_cmd->add_option("--kind", kind, "triangle, k4, k5, clique, formula, ehr or maximal");
  probe_cmd->add_option("--clique", clique, "Clique size for --kind clique");
  probe_cmd->add_option("--formula", formula, "Sentence for --kind formula");
  probe_cmd->add_option("--grid", grid, "Grid file: alpha n [m] per line");
  probe_cmd->add_option("--alpha", alpha, "Single-cell exponent");
  probe_cmd->add_option("--n", n, "Single-cell order");
  probe_cmd->add_option("--m", m, "Second order for --kind ehr");
  probe_cmd->add_option("--k", k, "Rounds for --kind ehr");
  probe_cmd->add_option("--samples", samples, "Samples per cell");
  probe_cmd->add_option("--seed", seed, "Master seed");
  probe_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  probe_cmd->add_option("--pair", pair_g6, "Pair graph for --kind maximal (graph6)");
  probe_cmd->add_option("--roots", pair_roots, "H vertices of the pair");
  probe_cmd->add_option("--template", tmpl_name, "tick, k1 or k2");
  probe_cmd->add_option("--out", out, "CSV file");

  CLI11_PARSE(app, argc, argv);

  try {
    Sink sink(out);
    std::ostream& os = sink.os();

    if (*sample_cmd) {
      SampleMode sm = SampleMode::Auto;
      if (mode == "skip")
        sm = SampleMode::Skip;
      else if (mode == "bernoulli")
        sm = SampleMode::Bernoulli;
      else if (mode != "auto")
        throw PreconditionError("unknown mode '" + mode + "'");
      os << to_graph6(sample({n, Rational::parse(alpha), seed}, sm)) << "\n";
    } else if (*classify_cmd) {
      const Graph g = one_graph(g6, graph_file);
      const VertexSet h = vertex_set(g.order(), roots);
      const VertexSet gv = outer.empty() ? g.vertices() : vertex_set(g.order(), outer);
      const Classification c = classify_pair(g, gv, h, Rational::parse(alpha));
      os << "class=" << to_string(c.kind) << " f=" << c.f_total;
      if (c.witness) os << " witness=" << join(c.witness->to_vector());
      os << "\n";
    } else if (*rho_cmd) {
      for (const Graph& g : load_graphs(g6, graph_file)) {
        const DensestSubgraph d = densest_subgraph(g);
        os << to_graph6(g) << " rho=" << d.density << " vertices=" << join(d.vertices.to_vector()) << "\n";
      }
    } else if (*eval_cmd) {
      std::vector<Formula> fs;
      if (!formula.empty()) fs.push_back(parse_formula(formula));
      if (!formula_file.empty()) {
        std::ifstream in(formula_file);
        if (!in) throw Error("cannot open formula file " + formula_file);
        for (auto& f : read_formulas(in)) fs.push_back(f);
      }
      if (fs.empty()) throw PreconditionError("give --formula or --formula-file");
      for (const Graph& g : load_graphs(g6, graph_file))
        for (const Formula& f : fs)
          os << to_graph6(g) << "\t" << (evaluate(f, g) ? "true" : "false") << "\t" << to_string(f) << "\n";
    } else if (*ehr_cmd) {
      SolveOptions opts;
      opts.trace = trace;
      opts.orbit_reduction = orbits;
      const GameOutcome r = solve(from_graph6(x6), from_graph6(y6), k, opts);
      os << "winner=" << to_string(r.winner) << "\n";
      for (const auto& line : r.trace) os << line << "\n";
    } else if (*synth_cmd) {
      const auto f = synthesize_distinguisher(from_graph6(x6), from_graph6(y6), k);
      os << (f ? to_string(*f) : std::string("none")) << "\n";
    } else if (*gset_cmd) {
      const GSetParams p = reg_args.params.empty() ? GSetParams{} : GSetParams::load(reg_args.params);
      const GSetRegistry reg = enumerate_g(p, reg_args.layers);
      for (int i = 0; i <= reg.max_layer(); ++i) os << "layer=" << i << " size=" << reg.layer(i).size() << "\n";
      os << "kappa=" << reg.kappa() << "\n";
      if (verify) os << "failures=" << verify_g_properties(reg).failures() << "\n";
      if (!save_dir.empty()) reg.save(save_dir);
    } else if (*profile_cmd) {
      const GSetRegistry reg = reg_args.build();
      profile(one_graph(g6, graph_file), vertex, reg).write(os);
    } else if (*witness_cmd) {
      const GSetRegistry reg = reg_args.build();
      const WitnessResult w = build_witness(one_graph(g6, graph_file), vertex, reg);
      os << "z=" << to_graph6(w.z) << "\n"
         << "root=" << w.z1 << "\n"
         << "rho=" << w.rho << "\n"
         << "sparse=" << (w.sparse ? "yes" : "no") << "\n"
         << "same_bad_set=" << (w.same_bad_set ? "yes" : "no") << "\n"
         << "same_profiles=" << (w.same_profiles ? "yes" : "no") << "\n";
    } else if (*probe_cmd) {
      ProbeOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.threads = threads;
      const std::vector<GridCell> cells = grid_from(grid, alpha, n, m);
      std::vector<ProbeResult> results;
      if (kind == "ehr") {
        results = probe_ehr(cells, k, opts);
      } else if (kind == "maximal") {
        const Graph pg = from_graph6(pair_g6);
        results = probe_maximal_extension({pg, vertex_set(pg.order(), pair_roots)}, named_template(tmpl_name),
                                          cells, opts);
      } else {
        Detector d;
        if (kind == "triangle")
          d = Detector::clique_of(3);
        else if (kind == "k4")
          d = Detector::clique_of(4);
        else if (kind == "k5")
          d = Detector::clique_of(5);
        else if (kind == "clique")
          d = Detector::clique_of(clique);
        else if (kind == "formula")
          d = Detector::formula(parse_formula(formula));
        else
          throw PreconditionError("unknown probe kind '" + kind + "'");
        results = probe_sentence(d, cells, opts);
      }
      write_csv(os, results);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
