// reachsym: directed edge list in, weighted undirected edge list out.
//
//   reachsym symmetrize --method reach --l 2 -i graph.tsv -o undirected.tsv
//   reachsym hierarchy -i graph.tsv
//   reachsym stats --l 2 -i graph.tsv

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "reachsym/errors.hpp"
#include "reachsym/hierarchy.hpp"
#include "reachsym/io.hpp"
#include "reachsym/oracle.hpp"
#include "reachsym/reachability.hpp"
#include "reachsym/symmetrize.hpp"

namespace {

using namespace reachsym;

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2, kParse = 3 };

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string method = "reach";
  std::string depth = "2";
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 1.0;
  double delta = 1.0;
  std::string hierarchy = "none";
  double epsilon = 0.0;
  std::size_t top_t = 0;
  std::size_t hub_cap = 0;
  bool weighted = false;
  unsigned threads = 1;
  int precision = kDefaultPrecision;
  bool oracle = false;
};

DirectedGraph read_graph(const Options& o) {
  if (o.input == "-") return load_edge_list(std::cin, o.weighted);
  return load_edge_list_file(o.input, o.weighted);
}

// Runs `write` against the configured sink.
template <class Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
}

// "none", "auto" or "file:PATH".
struct HierarchyChoice {
  HierarchyMode mode = HierarchyMode::kNone;
  std::string path;
};

HierarchyChoice parse_hierarchy(const std::string& text) {
  if (text == "none") return {};
  if (text == "auto") return {HierarchyMode::kAuto, {}};
  if (text.rfind("file:", 0) == 0 && text.size() > 5) {
    return {HierarchyMode::kFile, text.substr(5)};
  }
  throw ValidationError("--hierarchy must be none, auto or file:PATH");
}

UndirectedWeightedGraph run_oracle(const DirectedGraph& g, const SymmetrizationConfig& cfg,
                                   const HierarchyScores* h) {
  oracle::DenseMatrix structure;
  double alpha = cfg.alpha, beta = cfg.beta;
  if (cfg.method == Method::kReach && !(cfg.depth == Depth::bounded(1))) {
    structure = oracle::dense_closure(g, cfg.depth);
  } else {
    structure = oracle::dense_adjacency(g, g.weighted());
  }
  if (cfg.method == Method::kBibliometric) alpha = beta = 0.0;
  const HierarchyScores* hs = cfg.hierarchy_enabled() ? h : nullptr;
  auto sim = oracle::dense_similarity(structure, alpha, beta, hs, cfg.delta);
  oracle::DenseMatrix total = hs ? oracle::dense_pair_discount(sim.total, *hs, cfg.gamma)
                                 : sim.total;
  UndirectedWeightedGraph out{g.labels(), {}};
  for (Eigen::Index i = 0; i < total.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < total.cols(); ++j) {
      if (total(i, j) > cfg.epsilon) {
        out.edges.push_back({static_cast<NodeIndex>(i), static_cast<NodeIndex>(j), total(i, j)});
      }
    }
  }
  if (cfg.top_t) out = sparsify_top_t(out, *cfg.top_t);
  return out;
}

int run_symmetrize(const Options& o, const CLI::App& cmd) {
  SymmetrizationConfig cfg;
  cfg.method = parse_method(o.method);
  if (cmd.count("--l") && cfg.method != Method::kReach) {
    throw ValidationError("--l requires --method reach");
  }
  cfg.depth = Depth::parse(o.depth);
  if (cfg.method != Method::kReach) cfg.depth = Depth::bounded(1);
  cfg.alpha = o.alpha;
  cfg.beta = o.beta;
  cfg.gamma = o.gamma;
  cfg.delta = o.delta;
  const HierarchyChoice hc = parse_hierarchy(o.hierarchy);
  cfg.hierarchy = hc.mode;
  if ((cmd.count("--gamma") || cmd.count("--delta")) && !cfg.hierarchy_enabled()) {
    throw ValidationError("--gamma/--delta require --hierarchy auto or file:PATH");
  }
  cfg.epsilon = o.epsilon;
  if (cmd.count("--top-t")) cfg.top_t = o.top_t;
  if (cmd.count("--hub-cap")) cfg.hub_cap = o.hub_cap;
  cfg.threads = o.threads;
  if (o.precision < 0 || o.precision > 17) throw ValidationError("--precision must be in [0, 17]");
  if (o.oracle && cfg.hub_cap) throw ValidationError("--oracle does not support --hub-cap");
  cfg.validate();

  const auto start = std::chrono::steady_clock::now();
  DirectedGraph g = read_graph(o);

  std::optional<HierarchyScores> h;
  if (hc.mode == HierarchyMode::kAuto) {
    h = auto_hierarchy(g);
  } else if (hc.mode == HierarchyMode::kFile) {
    std::ifstream in(hc.path);
    if (!in) throw IoError("cannot open hierarchy file '" + hc.path + "'");
    std::vector<std::string> unknown;
    h = load_hierarchy(in, g, &unknown);
    if (!unknown.empty()) {
      std::cerr << "warning: " << unknown.size()
                << " hierarchy label(s) not in the graph were ignored (first: '" << unknown.front()
                << "')\n";
    }
  }
  if (cfg.method == Method::kReach && cfg.depth.is_unbounded() && g.num_nodes() > 10000) {
    std::cerr << "warning: --l inf computes the full transitive closure; on large cyclic "
                 "graphs this may need O(n^2) memory\n";
  }

  SymmetrizeReport report;
  UndirectedWeightedGraph u = o.oracle ? run_oracle(g, cfg, h ? &*h : nullptr)
                                       : symmetrize(g, cfg, h ? &*h : nullptr, &report);
  with_output(o.output, [&](std::ostream& out) { write_undirected(u, out, o.precision); });

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.hubs_skipped > 0) {
    std::cerr << "warning: skipped " << report.hubs_skipped << " hub node(s) above --hub-cap\n";
  }
  std::cerr << "nodes=" << g.num_nodes() << " input_edges=" << g.num_edges()
            << " self_loops_dropped=" << g.self_loops_dropped()
            << " output_edges=" << u.edges.size() << " method=" << to_string(cfg.method)
            << " l=" << cfg.depth.to_string() << " wall_time_s=" << secs << '\n';
  return kOk;
}

int run_hierarchy(const Options& o) {
  if (o.precision < 0 || o.precision > 17) throw ValidationError("--precision must be in [0, 17]");
  DirectedGraph g = read_graph(o);
  HierarchyScores h = auto_hierarchy(g);
  with_output(o.output, [&](std::ostream& out) { write_hierarchy(h, g.labels(), out, o.precision); });
  return kOk;
}

void print_histogram(std::ostream& out, const char* name, std::size_t n,
                     const std::function<std::size_t(NodeIndex)>& degree) {
  std::map<std::size_t, std::size_t> hist;
  for (NodeIndex u = 0; u < n; ++u) ++hist[degree(u)];
  for (auto [d, count] : hist) out << name << '\t' << d << '\t' << count << '\n';
}

int run_stats(const Options& o) {
  const Depth depth = Depth::parse(o.depth);
  DirectedGraph g = read_graph(o);
  LocalClosure c = local_closure(g, depth, o.threads);
  const std::size_t n = g.num_nodes();
  with_output(o.output, [&](std::ostream& out) {
    out << "nodes\t" << n << '\n'
        << "edges\t" << g.num_edges() << '\n'
        << "self_loops_dropped\t" << g.self_loops_dropped() << '\n'
        << "depth\t" << depth.to_string() << '\n'
        << "closure_pairs\t" << c.size() << '\n';
    print_histogram(out, "out_degree", n, [&](NodeIndex u) { return g.out_degree(u); });
    print_histogram(out, "in_degree", n, [&](NodeIndex u) { return g.in_degree(u); });
    print_histogram(out, "closure_out_degree", n, [&](NodeIndex u) { return c.out_degree(u); });
    print_histogram(out, "closure_in_degree", n, [&](NodeIndex u) { return c.in_degree(u); });
    out.flush();
    if (!out) throw IoError("write failure on stats output");
  });
  return kOk;
}

void add_io_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("-i,--input", o.input, "Input TSV edge list ('-' for stdin)");
  cmd.add_option("-o,--output", o.output, "Output path ('-' for stdout)");
  cmd.add_flag("--weighted", o.weighted, "Read a third weight column");
  cmd.add_option("--precision", o.precision, "Decimal digits in written weights");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrize directed graphs into weighted undirected graphs"};
  app.require_subcommand(1);
  Options o;

  auto* sym = app.add_subcommand("symmetrize", "Write the symmetrized undirected graph");
  add_io_flags(*sym, o);
  sym->add_option("--method", o.method, "bibliometric | degree-discounted | reach")
      ->check(CLI::IsMember({"bibliometric", "degree-discounted", "reach"}));
  sym->add_option("--l", o.depth, "Reachability depth: positive integer or 'inf'");
  sym->add_option("--alpha", o.alpha, "Out-degree discount exponent");
  sym->add_option("--beta", o.beta, "In-degree discount exponent");
  sym->add_option("--gamma", o.gamma, "Pair hierarchy exponent");
  sym->add_option("--delta", o.delta, "Common-neighbor hierarchy exponent");
  sym->add_option("--hierarchy", o.hierarchy, "none | auto | file:PATH");
  sym->add_option("--epsilon", o.epsilon, "Drop weights <= epsilon");
  sym->add_option("--top-t", o.top_t, "Keep each node's t strongest edges (union)");
  sym->add_option("--hub-cap", o.hub_cap, "Skip common neighbors with larger co-reach sets");
  sym->add_option("--threads", o.threads, "Worker threads");
  sym->add_flag("--oracle", o.oracle)->group("");

  auto* hier = app.add_subcommand("hierarchy", "Write auto-computed hierarchy scores");
  add_io_flags(*hier, o);

  auto* stats = app.add_subcommand("stats", "Print degree and closure-degree histograms");
  add_io_flags(*stats, o);
  stats->add_option("--l", o.depth, "Reachability depth: positive integer or 'inf'");
  stats->add_option("--threads", o.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (*sym) return run_symmetrize(o, *sym);
    if (*hier) return run_hierarchy(o);
    return run_stats(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
