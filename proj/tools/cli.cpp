#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bnscope/andnet.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/expr.hpp"
#include "bnscope/network.hpp"
#include "bnscope/report.hpp"
#include "bnscope/sweep.hpp"
#include "bnscope/transform.hpp"
#include "bnscope/verify.hpp"

namespace bnscope::cli {

namespace {

namespace fs = std::filesystem;

// Exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit 1.
class OperationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kAsyncDotLimit = 12;

std::string extension_of(const std::string& path) {
  std::string ext = fs::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

struct Loaded {
  BooleanNetwork network;
  std::optional<AndNet> andnet;
};

Loaded load(const std::string& path, bool force) {
  const std::string text = read_file(path);
  try {
    if (extension_of(path) == ".anet") {
      AndNet a = parse_andnet(text);
      BooleanNetwork f = andnet_to_network(a, force);
      return {std::move(f), std::move(a)};
    }
    return {parse_network(text, force), std::nullopt};
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const DimensionError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

AndNet as_andnet(const Loaded& in) {
  if (in.andnet) return *in.andnet;
  try {
    return network_to_andnet(in.network);
  } catch (const NotAnAndNet&) {
    throw OperationError("the network is not an and-net");
  }
}

// Format follows the output extension: .anet, .dot, otherwise .bn.
std::string render_for(const std::string& path, const BooleanNetwork& f, const std::optional<AndNet>& a) {
  const std::string ext = extension_of(path);
  if (ext == ".anet") {
    if (a) return render_andnet(*a);
    try {
      return render_andnet(network_to_andnet(f));
    } catch (const NotAnAndNet&) {
      throw OperationError("the network is not an and-net; write .bn or .dot instead");
    }
  }
  if (ext == ".dot") return to_dot(a ? a->graph() : global_graph(f), "G");
  return render_network(f);
}

int print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.claim;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  const bool ok = report.passed();
  out << report.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

Word parse_state_for(const std::string& text, int n) {
  State s;
  try {
    s = parse_bitstring(text);
  } catch (const std::exception& e) {
    throw UsageError("bad state '" + text + "': " + e.what());
  }
  if (s.n != n) {
    throw UsageError("state '" + text + "' has " + std::to_string(s.n) + " bits, the network has " +
                     std::to_string(n));
  }
  return s.bits;
}

struct Options {
  int threads = 0;
  bool force = false;

  std::string analyze_file;
  bool want_fixed = false;
  bool want_attractors = false;
  bool want_nonexpansive = false;
  std::string local_filter;
  bool json = false;
  bool timings = false;
  std::string dot_dir;

  std::vector<int> ns;
  int samples = 1000;
  std::uint64_t seed = 1;

  std::string output;
  int n = 0;
  std::string variant = "pure";
  std::string trace_path;

  std::string input;
  int var = -1;
  std::string what;
};

int do_analyze(const Options& o, std::ostream& out) {
  const Loaded in = load(o.analyze_file, o.force);
  AnalysisOptions ao;
  ao.source = o.analyze_file;
  const bool any = o.want_fixed || o.want_attractors || o.want_nonexpansive || !o.local_filter.empty();
  ao.fixed_points = !any || o.want_fixed;
  ao.attractors = !any || o.want_attractors;
  ao.nonexpansive = !any || o.want_nonexpansive;
  if (o.local_filter == "pos") {
    ao.local_cycles = SignFilter::Positive;
  } else if (o.local_filter == "neg") {
    ao.local_cycles = SignFilter::Negative;
  } else if (o.local_filter == "all" || !any) {
    ao.local_cycles = SignFilter::All;
  } else {
    ao.local_cycles.reset();
  }
  const AnalysisReport report = analyze(in.network, ao);
  out << (o.json ? report.to_json(o.timings) : report.to_text(o.timings));
  if (!o.dot_dir.empty()) {
    std::error_code ec;
    fs::create_directories(o.dot_dir, ec);
    if (ec) throw UsageError("cannot create " + o.dot_dir + ": " + ec.message());
    const fs::path dir(o.dot_dir);
    write_output((dir / "global.dot").string(), to_dot(report.global_graph, "global"), out);
    if (in.network.dimension() <= kAsyncDotLimit) {
      write_output((dir / "async.dot").string(), async_dot(in.network), out);
    }
  }
  return 0;
}

int do_construct(const std::string& what, const Options& o, std::ostream& out) {
  std::optional<AndNet> a;
  std::optional<BooleanNetwork> f;
  std::optional<ExpansionTrace> trace;
  if (what == "fig1") {
    a = cyclic_example_andnet();
  } else if (what == "thma-seed") {
    a = negative_seed_andnet();
  } else if (what == "thma") {
    auto [g, t] = fixed_point_free_expansion();
    a = std::move(g);
    trace = std::move(t);
  } else if (what == "antipodal") {
    f = o.variant == "padded" ? padded_antipodal_network(o.n) : pure_antipodal_network(o.n);
  } else {
    f = padded_cycle_network(o.n);
  }
  if (a) f = andnet_to_network(*a, o.force);
  write_output(o.output, render_for(o.output, *f, a), out);
  if (!o.trace_path.empty()) {
    if (!trace) throw UsageError("--trace is only available for thma");
    write_output(o.trace_path, trace->to_json(), out);
  }
  return 0;
}

int do_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o.input, o.force);
  const int n = in.network.dimension();
  if (o.var < 0 || o.var >= n) {
    throw UsageError("--var must be in [0, " + std::to_string(n) + ")");
  }
  Reduction r;
  try {
    r = reduce(in.network, o.var);
  } catch (const LoopError& e) {
    throw OperationError(e.what());
  }
  std::optional<AndNet> a;
  if (in.andnet) {
    try {
      a = network_to_andnet(r.network);
    } catch (const NotAnAndNet&) {
    }
  }
  write_output(o.output, render_for(o.output, r.network, a), out);
  std::ostream& info = (o.output.empty() || o.output == "-") ? err : out;
  info << "removed coordinate " << r.removed << "; renumbering:";
  for (int old = 0; old < n; ++old) {
    if (r.renumber[static_cast<std::size_t>(old)] >= 0) {
      info << ' ' << old << "->" << r.renumber[static_cast<std::size_t>(old)];
    }
  }
  info << "\n";
  return 0;
}

int do_expand(const Options& o, std::ostream& out, std::ostream& err) {
  const Loaded in = load(o.input, o.force);
  const AndNet a = as_andnet(in);
  if (!a.is_negative()) throw OperationError("expansion needs a negative and-net");
  std::vector<SignedCycle> negatives;
  for (auto& c : enumerate_cycles(a.graph())) {
    if (c.sign == Sign::Negative) negatives.push_back(std::move(c));
  }
  const auto chi = find_quasi_delocalizing(a, negatives);
  if (!chi) {
    throw OperationError("no quasi-delocalizing function exists for the " +
                         std::to_string(negatives.size()) + " negative cycles");
  }
  auto [g, trace] = expand_delocalize(a, *chi);
  const BooleanNetwork gn = andnet_to_network(g, o.force);
  write_output(o.output, render_for(o.output, gn, g), out);
  if (!o.trace_path.empty()) write_output(o.trace_path, trace.to_json(), out);
  std::ostream& info = (o.output.empty() || o.output == "-") ? err : out;
  info << "expanded " << a.n << " -> " << g.n << " coordinates over " << negatives.size()
       << " negative cycles\n";
  return 0;
}

int do_export(const Options& o, std::ostream& out) {
  const Loaded in = load(o.input, o.force);
  const BooleanNetwork& f = in.network;
  std::string dot;
  if (o.what == "async") {
    if (f.dimension() > kAsyncDotLimit && !o.force) {
      throw UsageError("the asynchronous graph has 2^" + std::to_string(f.dimension()) +
                       " nodes; pass --force to export it");
    }
    dot = async_dot(f);
  } else if (o.what == "global") {
    dot = to_dot(global_graph(f), "global");
  } else if (o.what.rfind("local:", 0) == 0) {
    const Word x = parse_state_for(o.what.substr(6), f.dimension());
    dot = to_dot(local_graph(f, x), "local");
  } else {
    throw UsageError("--what must be async, global or local:<state>");
  }
  write_output(o.output, dot, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean network analysis: dynamics, interaction graphs, local cycles", "bnscope"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for state-space sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--force", o.force, "Lift the dimension guard of 24");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a .bn or .anet network");
  analyze_cmd->add_option("file", o.analyze_file, "Network file")->required();
  analyze_cmd->add_flag("--fixed-points", o.want_fixed, "Report fixed points");
  analyze_cmd->add_flag("--attractors", o.want_attractors, "Report attractors");
  analyze_cmd->add_option("--local-cycles", o.local_filter, "Report local cycles of one sign")
      ->check(CLI::IsMember({"pos", "neg", "all"}));
  analyze_cmd->add_flag("--nonexpansive", o.want_nonexpansive, "Report non-expansiveness");
  analyze_cmd->add_flag("--json", o.json, "Emit a JSON report");
  analyze_cmd->add_flag("--timings", o.timings, "Include per-phase timings");
  analyze_cmd->add_option("--dot", o.dot_dir, "Write global.dot and async.dot into this directory");

  auto* verify_cmd = app.add_subcommand("verify", "Check the constructions and their stated properties");
  verify_cmd->require_subcommand(1);
  auto* v_a = verify_cmd->add_subcommand("theorem-a", "12-dimensional and-net: no fixed point, no local negative cycle");
  auto* v_ap = verify_cmd->add_subcommand("theorem-a-prime", "Kernel-free digraph with killing triples on every odd cycle");
  auto* v_b = verify_cmd->add_subcommand("theorem-b", "Antipodal attractive cycle without local negative cycle");
  v_b->add_option("--n", o.ns, "Dimensions (>= 7)")->check(CLI::Range(7, kDefaultDimensionGuard));
  auto* v_p1 = verify_cmd->add_subcommand("prop1", "And-net locality via delocalizing triples");
  auto* v_p2 = verify_cmd->add_subcommand("prop2", "Fixed points and attractive cycles under reduction");
  auto* v_p4 = verify_cmd->add_subcommand("prop4", "Jacobian of a reduced network");
  auto* v_par = verify_cmd->add_subcommand("parity", "Local cycle sign from the degrees of freedom");
  auto* v_iso = verify_cmd->add_subcommand("isometries", "Hypercube isometries and equivariance");
  auto* v_nl = verify_cmd->add_subcommand("neighbor-lists", "Radius-1 atlas neighbourhoods");
  v_nl->add_option("--n", o.ns, "Dimensions (>= 7)")->check(CLI::Range(7, kDefaultDimensionGuard));
  for (auto* sampled : {v_p1, v_p2, v_p4, v_par}) {
    sampled->add_option("--samples", o.samples, "Number of random networks")->check(CLI::PositiveNumber);
    sampled->add_option("--seed", o.seed, "Seed of the random corpus");
  }

  auto* construct_cmd = app.add_subcommand("construct", "Write one of the built-in networks");
  construct_cmd->require_subcommand(1);
  std::vector<CLI::App*> builders;
  for (const char* name : {"fig1", "thma-seed", "thma"}) {
    builders.push_back(construct_cmd->add_subcommand(name));
  }
  builders[0]->description("3-dimensional and-net with a cyclic attractor and no fixed point");
  builders[1]->description("4-dimensional negative and-net without fixed point");
  builders[2]->description("12-dimensional and-net without fixed point or local negative cycle");
  builders[2]->add_option("--trace", o.trace_path, "Write the expansion trace as JSON");
  auto* antipodal = construct_cmd->add_subcommand("antipodal", "Network with an antipodal attractive cycle");
  antipodal->add_option("--n", o.n, "Dimension")->required()->check(CLI::Range(2, kDefaultDimensionGuard));
  antipodal->add_option("--variant", o.variant, "pure: cycle states only move; padded: neighbours fall back")
      ->check(CLI::IsMember({"pure", "padded"}));
  builders.push_back(antipodal);
  auto* thmb = construct_cmd->add_subcommand("thmb", "Antipodal attractive cycle without local negative cycle");
  thmb->add_option("--n", o.n, "Dimension (>= 7)")->required()->check(CLI::Range(7, kDefaultDimensionGuard));
  builders.push_back(thmb);
  for (auto* b : builders) {
    b->add_option("-o,--output", o.output, "Output file (.bn, .anet or .dot); stdout when omitted");
  }

  auto* reduce_cmd = app.add_subcommand("reduce", "Eliminate a coordinate without a loop");
  reduce_cmd->add_option("file", o.input, "Network file")->required();
  reduce_cmd->add_option("--var", o.var, "Coordinate to eliminate")->required();
  reduce_cmd->add_option("-o,--output", o.output, "Output file; stdout when omitted");

  auto* expand_cmd = app.add_subcommand("expand-delocalize", "Expand a negative and-net so its negative cycles get delocalizing triples");
  expand_cmd->add_option("file", o.input, "And-net file")->required();
  expand_cmd->add_option("-o,--output", o.output, "Output file; stdout when omitted");
  expand_cmd->add_option("--trace", o.trace_path, "Write the expansion trace as JSON");

  auto* export_cmd = app.add_subcommand("export", "Export a graph as DOT");
  export_cmd->add_option("file", o.input, "Network file")->required();
  export_cmd->add_option("--what", o.what, "async, global or local:<state>")->required();
  export_cmd->add_option("--dot", o.output, "Output file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (o.threads > 0) set_thread_count(o.threads);

  try {
    if (analyze_cmd->parsed()) return do_analyze(o, out);
    if (verify_cmd->parsed()) {
      if (v_a->parsed()) return print_report(verify_fixed_point_free_construction(), out);
      if (v_ap->parsed()) return print_report(verify_kernel_free_digraph(), out);
      if (v_b->parsed()) return print_report(verify_padded_cycle(o.ns.empty() ? std::vector<int>{7, 8} : o.ns), out);
      if (v_p1->parsed()) return print_report(verify_andnet_locality(o.samples, o.seed), out);
      if (v_p2->parsed()) return print_report(verify_reduction_dynamics(o.samples, o.seed), out);
      if (v_p4->parsed()) return print_report(verify_reduction_jacobian(o.samples, o.seed), out);
      if (v_par->parsed()) return print_report(verify_sign_parity(o.samples, o.seed), out);
      if (v_iso->parsed()) return print_report(verify_isometries(), out);
      return print_report(
          verify_neighbor_list_claims(o.ns.empty() ? std::vector<int>{7, 8, 9, 10} : o.ns), out);
    }
    if (construct_cmd->parsed()) {
      for (auto* b : builders) {
        if (b->parsed()) return do_construct(b->get_name(), o, out);
      }
    }
    if (reduce_cmd->parsed()) return do_reduce(o, out, err);
    if (expand_cmd->parsed()) return do_expand(o, out, err);
    if (export_cmd->parsed()) return do_export(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bnscope"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bnscope::cli
