// Command-line front end for the quantum Bruhat graph library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qbg/diagrams.hpp"
#include "qbg/error.hpp"
#include "qbg/graph.hpp"
#include "qbg/membership.hpp"
#include "qbg/sampler.hpp"
#include "qbg/tilted_order.hpp"
#include "qbg/verify.hpp"

using namespace qbg;

namespace {

// "id" and "w0" take their size from the other argument, or from a ":n" suffix.
std::optional<Permutation> parse_named(const std::string& text, std::optional<int> n) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head != "id" && head != "w0") return parse_permutation(text);
  if (colon != std::string::npos) {
    try {
      n = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad size suffix in '" + text + "'");
    }
  }
  if (!n) return std::nullopt;
  if (*n < 1) throw ParseError("size must be positive in '" + text + "'");
  return head == "id" ? Permutation::identity(*n) : Permutation::longest(*n);
}

std::pair<Permutation, Permutation> parse_pair(const std::string& a, const std::string& b) {
  auto u = parse_named(a, std::nullopt);
  auto v = parse_named(b, u ? std::optional<int>(u->size()) : std::nullopt);
  if (!u && v) u = parse_named(a, v->size());
  if (!u || !v)
    throw ParseError("cannot infer n from '" + a + "' and '" + b + "'; write e.g. id:4 or w0:4");
  if (u->size() != v->size())
    throw PreconditionError("permutations " + u->to_string() + " and " + v->to_string() +
                            " have different sizes");
  return {*u, *v};
}

Permutation parse_single(const std::string& text, int n) {
  const Permutation w = *parse_named(text, n);
  if (w.size() != n)
    throw PreconditionError("permutation " + w.to_string() + " does not have size " +
                            std::to_string(n));
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

int geodesic_length(const Permutation& u, const Permutation& v) {
  return static_cast<int>(bfp_greedy_path(u, v).size());
}

// --- subcommands ---------------------------------------------------------------

struct DistArgs {
  std::string u, v;
  bool formula = false, oracle = false, both = false;
};

int cmd_dist(const DistArgs& args) {
  const auto [u, v] = parse_pair(args.u, args.v);
  const bool use_oracle = args.oracle || args.both;
  const bool use_formula = args.formula || args.both || !args.oracle;
  std::optional<Distance> by_formula, by_oracle;
  if (use_formula) by_formula = Distance{geodesic_length(u, v), formula_weight(u, v)};
  if (use_oracle) by_oracle = oracle_distance(build_graph(u.size()), u, v);
  const Distance& shown = by_formula ? *by_formula : *by_oracle;
  std::cout << "ell=" << shown.length << " weight=" << shown.weight.to_monomial();
  if (args.both) {
    const bool agree =
        by_formula->length == by_oracle->length && by_formula->weight == by_oracle->weight;
    std::cout << " agree=" << (agree ? "yes" : "no");
    if (!agree)
      std::cout << " oracle_ell=" << by_oracle->length
                << " oracle_weight=" << by_oracle->weight.to_monomial();
    std::cout << "\n";
    return agree ? 0 : 1;
  }
  std::cout << "\n";
  return 0;
}

struct GraphArgs {
  int n = 3;
  std::string format = "dot", out;
};

int cmd_graph(const GraphArgs& args) {
  const GraphFormat format = parse_graph_format(args.format);
  write_output(args.out, export_graph(build_graph(args.n), format));
  return 0;
}

struct IntervalArgs {
  std::string u, v, format = "dot", out;
  bool hasse = false;
};

int cmd_interval(const IntervalArgs& args) {
  const auto [u, v] = parse_pair(args.u, args.v);
  const TiltedInterval iv = interval(u, v, build_graph(u.size()));
  if (args.hasse) {
    write_output(args.out, hasse_export(iv, parse_graph_format(args.format)));
    if (args.out.empty() || args.out == "-") return 0;
  }
  std::cout << "interval [" << u.to_string() << ", " << v.to_string() << "]: "
            << iv.members.size() << " members, height " << iv.height() << "\n";
  for (int r = 0; r <= iv.height(); ++r) {
    std::cout << "rank " << r << ":";
    for (std::size_t m = 0; m < iv.members.size(); ++m)
      if (iv.ranks[m] == r) std::cout << " " << iv.members[m].to_string();
    std::cout << "\n";
  }
  return 0;
}

struct DiagramArgs {
  std::string u, v, a = "auto", x, json;
};

int cmd_diagram(const DiagramArgs& args) {
  const auto [u, v] = parse_pair(args.u, args.v);
  const int n = u.size();
  const ShiftSequence a = args.a == "auto" ? find_flat(u, v) : parse_shift_sequence(args.a, n);
  if (!shift_compatible(u, v, a))
    throw PreconditionError("a=" + a.to_string() + " is not a valid shift sequence for (" +
                            u.to_string() + ", " + v.to_string() + ")");
  const EquationSet eqs =
      args.x.empty() ? equations(u, v, a) : equations_with_x(u, v, a, parse_single(args.x, n));

  const TiltedDiagram down = tilted_rothe(u, a, DiagramKind::down);
  const TiltedDiagram up = tilted_rothe(v, a, DiagramKind::up);
  std::cout << "u=" << u.to_string() << " v=" << v.to_string() << " a=" << a.to_string()
            << (is_flat(u, v, a) ? " (flat)" : " (not flat)") << "\n\n";
  std::cout << "down diagram of u: " << down.to_string() << "\n" << render_diagram(u, a, down)
            << "\n";
  std::cout << "up diagram of v: " << up.to_string() << "\n" << render_diagram(v, a, up) << "\n";
  if (eqs.x) std::cout << "coatom x=" << eqs.x->to_string() << "\n";
  std::cout << "equations:\n";
  for (const auto& e : eqs.equations) std::cout << "  " << e.to_string() << "\n";
  for (const auto& c : eqs.unmatched)
    std::cout << "  unmatched cell (" << c.row << "," << c.column << ")\n";
  const int total = n * (n - 1) / 2;
  const int ell = geodesic_length(u, v);
  std::cout << "count: " << eqs.equations.size() << " equations, C(" << n << ",2) - ell = " << total
            << " - " << ell << " = " << total - ell << "\n";
  if (!args.json.empty()) write_output(args.json, eqs.to_json());
  return 0;
}

struct StratifyArgs {
  std::string matrix, u, v;
};

int cmd_stratify(const StratifyArgs& args) {
  const auto [u, v] = parse_pair(args.u, args.v);
  const Flag f = flag_from_matrix(parse_matrix(read_file(args.matrix)));
  if (f.n() != u.size())
    throw PreconditionError("matrix has size " + std::to_string(f.n()) + " but permutations have " +
                            std::to_string(u.size()));
  const auto g = build_graph(u.size());
  const TiltedInterval iv = interval(u, v, g);
  std::cout << "pair (" << u.to_string() << ", " << v.to_string() << ")\n";
  if (!member_T_plucker(iv, f, false)) {
    std::cout << "not a member: nonzero P_w for w outside the interval:";
    for (const auto& w : all_permutations(u.size()))
      if (!iv.contains(w) && f.plucker(w) != 0) std::cout << " " << w.to_string();
    std::cout << "\n";
    return 1;
  }
  const StratumLabel label = stratum(u, v, f);
  const bool open = member_T_plucker(label.x, label.y, f, true);
  std::cout << "a=" << label.a.to_string() << "\n";
  std::cout << "stratum (" << label.x.to_string() << ", " << label.y.to_string() << ")\n";
  std::cout << "open membership: " << (open ? "verified" : "FAILED") << "\n";
  return open ? 0 : 1;
}

struct SampleArgs {
  std::string u, v, out, plucker;
  std::uint64_t seed = 1;
};

int cmd_sample(const SampleArgs& args) {
  const auto [u, v] = parse_pair(args.u, args.v);
  const Flag f = sample_in_open_stratum(u, v, args.seed);
  write_output(args.out, f.matrix().to_text());
  if (!args.plucker.empty()) write_output(args.plucker, f.plucker_json());
  if (!args.out.empty() && args.out != "-")
    std::cout << "wrote " << args.out << ": flag in the open stratum of (" << u.to_string() << ", "
              << v.to_string() << "), seed " << args.seed << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
};

int cmd_verify(const VerifyArgs& args) {
  const SuiteReport report = run_suite(args.suite, args.options);
  std::cout << report.suite << " n=" << args.options.n << ": " << report.summary << "\n";
  for (const auto& f : report.failures) std::cout << "  failure: " << f << "\n";
  for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
  std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Bruhat graph and tilted Richardson variety toolkit"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Length and minimal weight of u -> v");
  dist_cmd->add_option("u", dist.u)->required();
  dist_cmd->add_option("v", dist.v)->required();
  auto* f_formula = dist_cmd->add_flag("--formula", dist.formula, "Closed formula (default)");
  auto* f_oracle = dist_cmd->add_flag("--oracle", dist.oracle, "Graph search");
  auto* f_both = dist_cmd->add_flag("--both", dist.both, "Both, with agreement status");
  f_formula->excludes(f_oracle)->excludes(f_both);
  f_oracle->excludes(f_both);

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "Export the graph on S_n");
  graph_cmd->add_option("--n", graph.n)->required();
  graph_cmd->add_option("--format", graph.format)->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--out", graph.out, "Output path (default stdout)");

  IntervalArgs iv;
  auto* iv_cmd = app.add_subcommand("interval", "Members and ranks of [u,v]");
  iv_cmd->add_option("u", iv.u)->required();
  iv_cmd->add_option("v", iv.v)->required();
  iv_cmd->add_flag("--hasse", iv.hasse, "Write the Hasse diagram");
  iv_cmd->add_option("--format", iv.format)->check(CLI::IsMember({"dot", "json"}));
  iv_cmd->add_option("--out", iv.out, "Hasse diagram path (default stdout)");

  DiagramArgs diag;
  auto* diag_cmd = app.add_subcommand("diagram", "Tilted Rothe diagrams and defining equations");
  diag_cmd->add_option("u", diag.u)->required();
  diag_cmd->add_option("v", diag.v)->required();
  diag_cmd->add_option("--a", diag.a, "auto or a comma list of n-1 cuts");
  diag_cmd->add_option("--x", diag.x, "Coatom x with an edge x -> v");
  diag_cmd->add_option("--json", diag.json, "Also write the equation set as JSON");

  StratifyArgs strat;
  auto* strat_cmd = app.add_subcommand("stratify", "Open stratum of a flag inside (u,v)");
  strat_cmd->add_option("--matrix", strat.matrix)->required();
  strat_cmd->add_option("--u", strat.u)->required();
  strat_cmd->add_option("--v", strat.v)->required();

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Random flag in the open stratum of (u,v)");
  sample_cmd->add_option("--u", sample.u)->required();
  sample_cmd->add_option("--v", sample.v)->required();
  sample_cmd->add_option("--seed", sample.seed);
  sample_cmd->add_option("--out", sample.out, "Matrix path (default stdout)");
  sample_cmd->add_option("--plucker", sample.plucker, "Also write Plucker coordinates as JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", verify.options.n);
  verify_cmd->add_option("--seed", verify.options.seed);
  verify_cmd->add_option("--samples", verify.options.samples, "Suite-specific sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*dist_cmd) return cmd_dist(dist);
    if (*graph_cmd) return cmd_graph(graph);
    if (*iv_cmd) return cmd_interval(iv);
    if (*diag_cmd) return cmd_diagram(diag);
    if (*strat_cmd) return cmd_stratify(strat);
    if (*sample_cmd) return cmd_sample(sample);
    if (*verify_cmd) return cmd_verify(verify);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
