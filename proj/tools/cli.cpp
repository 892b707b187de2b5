#include "cli.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "critgroup/error.hpp"
#include "critgroup/families.hpp"
#include "critgroup/graph_io.hpp"

namespace critgroup::cli {
namespace {

constexpr std::size_t kOracleMaxVertices = 12;
constexpr std::size_t kOracleMaxEdges = 20;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnected:
      return kDisconnectedGraph;
    case ErrorCode::kOrbitSize:
    case ErrorCode::kLabelingImpossible:
      return kHypothesisFails;
    case ErrorCode::kNonHarmonic:
      return kNotHarmonic;
    default:
      return kBadInput;
  }
}

// Spanning trees by trying every (|V|-1)-subset of the loopless edges.
Integer brute_force_tree_count(const Multigraph& g) {
  std::vector<Multigraph::Edge> edges;
  for (const auto& e : g.edges())
    if (!e.is_loop()) edges.push_back(e);
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  const std::size_t k = n - 1;
  if (edges.size() < k) return 0;
  std::vector<bool> pick(edges.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  Integer count = 0;
  do {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
      if (!pick[i]) continue;
      const std::size_t a = find(edges[i].u), b = find(edges[i].v);
      if (a == b) acyclic = false;
      else parent[a] = b;
    }
    if (acyclic) count += 1;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

bool oracle_allowed(const Multigraph& g, std::ostream& err) {
  if (g.vertex_count() > kOracleMaxVertices || g.edge_count() > kOracleMaxEdges) {
    err << "oracle checks refused: graph has " << g.vertex_count() << " vertices and "
        << g.edge_count() << " edges (limits: " << kOracleMaxVertices << " vertices, "
        << kOracleMaxEdges << " edges)\n";
    return false;
  }
  return true;
}

Divisor random_degree_zero(std::size_t size, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Divisor d(size);
  Integer sum = 0;
  for (std::size_t v = 1; v < size; ++v) {
    d[v] = dist(rng);
    sum += d[v];
  }
  if (size > 0) d[0] = -sum;
  return d;
}

Divisor random_combination(std::size_t size, const std::vector<Divisor>& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Divisor d(size);
  for (const auto& g : gens) d += Integer(dist(rng)) * g;
  return d;
}

Divisor random_principal(const Multigraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  FiringScript s;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) s.values.push_back(dist(rng));
  return apply_firing(g, Divisor(g.vertex_count()), s);
}

std::vector<std::size_t> parse_steps(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "bad step '" + item + "'");
    }
  }
  return out;
}

std::string mark(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_check(std::ostream& out, const TheoremCheck& c) {
  if (c.skipped) {
    out << "[SKIP] " << c.name;
    for (const auto& note : c.notes) out << " (" << note << ")";
    out << "\n";
    return;
  }
  out << "[" << mark(c.pass) << (c.flagged ? ", FLAGGED" : "") << "] " << c.name
      << ": predicted " << c.predicted << "; computed " << c.computed << "\n";
  for (const auto& note : c.notes) out << "    note: " << note << "\n";
  for (const auto& [name, d] : c.witnesses) out << "    witness " << name << ": " << to_string(d.values) << "\n";
}

struct OracleResult {
  bool pass = true;
  std::vector<std::string> lines;
};

OracleResult run_oracles(const DecompositionContext& ctx) {
  OracleResult r;
  auto check_graph = [&](const std::string& name, const Multigraph& g, const CriticalGroup& cg) {
    const Integer brute = brute_force_tree_count(g);
    const bool ok = brute == cg.group().order() && brute == spanning_tree_count(g);
    r.pass = r.pass && ok;
    std::ostringstream os;
    os << name << ": enumerated trees " << brute << ", |K| " << cg.group().order() << " " << mark(ok);
    r.lines.push_back(os.str());
  };
  check_graph("G", ctx.graph(), ctx.critical_group());
  for (int i = 1; i <= 3; ++i)
    check_graph("H" + std::to_string(i), ctx.quotient(i).quotient, ctx.quotient_group(i));
  check_graph("Ghat", ctx.ghat().quotient, ctx.ghat_group());
  return r;
}

Json sweep_to_json(const SweepResult& s) {
  return {{"trials", s.trials},
          {"seed", s.seed},
          {"labeled", s.labeled},
          {"membership_mismatches", s.membership_mismatches},
          {"split_failures", s.split_failures},
          {"principal_mismatches", s.principal_mismatches},
          {"injectivity_failures", s.injectivity_failures},
          {"positives_p12", s.positives_p12},
          {"positives_p", s.positives_p},
          {"pass", s.pass()}};
}

}  // namespace

SweepResult property_sweep(const DecompositionContext& ctx, std::size_t trials, std::uint64_t seed) {
  SweepResult r;
  r.trials = trials;
  r.seed = seed;
  r.labeled = ctx.has_labeling();
  std::mt19937_64 rng(seed);
  const Multigraph& g = ctx.graph();
  const CriticalGroup& cg = ctx.critical_group();
  const std::size_t size = g.vertex_count();

  std::vector<Divisor> p12 = p_generators(ctx, 1);
  for (auto& d : p_generators(ctx, 2)) p12.push_back(d);
  const std::vector<Divisor> p_all = p_generators_all(ctx);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Divisor delta;
    switch (trial % 3) {
      case 0: delta = random_degree_zero(size, rng, 4); break;
      case 1: delta = random_combination(size, p12, rng); break;
      default: delta = random_combination(size, p_all, rng); break;
    }
    if (is_principal(cg, delta) != is_zero(cg.project(delta))) ++r.principal_mismatches;

    if (r.labeled) {
      const bool p12_member = in_P12(ctx, delta);
      const bool p_member = in_P(ctx, delta);
      if (p12_member != lattice_in_P12(ctx, delta)) ++r.membership_mismatches;
      if (p_member != lattice_in_P(ctx, delta)) ++r.membership_mismatches;
      if (p12_member) {
        ++r.positives_p12;
        const auto [d1, d2] = split_P12(ctx, delta);
        if (d1 + d2 != delta || !in_P_i(ctx, d1, 1) || !in_P_i(ctx, d2, 2) ||
            !is_pullback(ctx.quotient(1), d1) || !is_pullback(ctx.quotient(2), d2)) {
          ++r.split_failures;
        }
      }
      if (p_member) {
        ++r.positives_p;
        const auto parts = split_P123(ctx, delta);
        bool ok = parts[0] + parts[1] + parts[2] == delta;
        for (int i = 1; i <= 3; ++i) {
          ok = ok && in_P_i(ctx, parts[i - 1], i) && is_pullback(ctx.quotient(i), parts[i - 1]);
        }
        if (!ok) ++r.split_failures;
      }
    }

    // Pullback injectivity on each quotient and on G/D_n.
    std::vector<std::pair<const QuotientResult*, const CriticalGroup*>> targets;
    for (int i = 1; i <= 3; ++i) targets.emplace_back(&ctx.quotient(i), &ctx.quotient_group(i));
    targets.emplace_back(&ctx.ghat(), &ctx.ghat_group());
    for (const auto& [q, qg] : targets) {
      const Multigraph& h = q->quotient;
      Divisor d = (trial % 2 == 0) ? random_degree_zero(h.vertex_count(), rng, 3) : random_principal(h, rng);
      if (is_principal(*qg, d) != is_principal(cg, pullback(*q, d))) ++r.injectivity_failures;
    }
  }
  return r;
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const GraphFile file = read_graph_file(config.input);
    const CriticalGroup cg(file.graph);
    const Integer trees = spanning_tree_count(file.graph);
    bool oracle_ok = true;
    Integer brute = 0;
    if (config.oracle) {
      if (!oracle_allowed(file.graph, err)) return kBadInput;
      brute = brute_force_tree_count(file.graph);
      oracle_ok = brute == trees;
    }
    if (config.json) {
      Json j = to_json(cg.group());
      j["order"] = integer_to_json(cg.group().order());
      j["spanning_trees"] = integer_to_json(trees);
      if (config.oracle) j["oracle_spanning_trees"] = integer_to_json(brute);
      out << j.dump(2) << "\n";
    } else {
      out << "invariant factors: " << to_string(cg.group().invariant_factors()) << "\n";
      out << "K(G) = " << cg.group().to_string() << "\n";
      out << "order: " << cg.group().order() << "\n";
      out << "spanning trees: " << trees << "\n";
      if (config.oracle) out << "oracle spanning trees: " << brute << " " << mark(oracle_ok) << "\n";
    }
    return oracle_ok ? kOk : kVerificationFailed;
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GraphFile file;
  try {
    file = read_graph_file(config.input);
    if (!file.has_actions()) {
      err << "PARSE: graph file has no sigma1/sigma2 actions\n";
      return kBadInput;
    }
    if (!file.graph.is_connected()) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }

  const Multigraph& g = file.graph;
  try {
    const DihedralAction action = make_dihedral_action(g, *file.sigma1, *file.sigma2);
    std::optional<DecompositionContext> ctx;
    try {
      ctx.emplace(g, action);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOrbitSize) throw;
      const EmbeddingCertificate cert = embedding_certificate(g, action);
      if (config.json) {
        Json j{{"error", std::string(error_code_name(e.code()))},
               {"message", e.what()},
               {"jacobian", to_json(cert.jac)},
               {"quotients",
                {{"H1", to_json(cert.jac_quotients[0])},
                 {"H2", to_json(cert.jac_quotients[1])},
                 {"H3", to_json(cert.jac_quotients[2])}}},
               {"direct_sum_order", integer_to_json(cert.direct_sum_order)},
               {"order", integer_to_json(cert.jac.order())},
               {"order_divides", cert.order_divides}};
        out << j.dump(2) << "\n";
      } else {
        out << "K(G) = " << cert.jac.to_string() << " (order " << cert.jac.order() << ")\n";
        for (int i = 0; i < 3; ++i)
          out << "K(H" << i + 1 << ") = " << cert.jac_quotients[i].to_string() << "\n";
        out << "direct sum order " << cert.direct_sum_order
            << (cert.order_divides ? " divides " : " does not divide ") << cert.jac.order() << "\n";
        if (!cert.order_divides) out << "the direct sum of the quotient critical groups is not a subgroup of K(G)\n";
      }
      err << error_code_name(e.code()) << ": " << e.what() << "\n";
      return kHypothesisFails;
    }

    const DecompositionReport report = build_report(*ctx);
    const SweepResult sweep = property_sweep(*ctx, config.trials, config.seed);
    OracleResult oracle;
    if (config.oracle) {
      if (!oracle_allowed(g, err)) return kBadInput;
      oracle = run_oracles(*ctx);
    }
    const bool pass = report.all_pass() && sweep.pass() && oracle.pass;

    if (config.json) {
      Json j = to_json(report, g);
      j["sweep"] = sweep_to_json(sweep);
      if (config.oracle) j["oracle"] = {{"pass", oracle.pass}, {"lines", oracle.lines}};
      if (!ctx->has_labeling()) j["labeling_error"] = ctx->labeling_error();
      j["pass"] = pass;
      out << j.dump(2) << "\n";
    } else {
      out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      out << "D_" << report.n << " action: s=" << report.s << " t=" << report.t;
      if (!report.labeled) out << " (no orbit labeling)";
      else if (report.swapped) out << " (labeling uses swapped generators)";
      out << "\n";
      out << "K(G) = " << report.jac.to_string() << " (order " << report.jac.order() << ")\n";
      for (int i = 0; i < 3; ++i)
        out << "K(H" << i + 1 << ") = " << report.jac_quotients[i].to_string() << "\n";
      out << "K(Ghat) = " << report.jac_ghat.to_string() << "\n";
      out << "J = " << report.sum_subgroup.to_string() << ", kernel = " << report.kernel.to_string()
          << ", K(G)/J = " << report.cokernel.to_string() << "\n";
      out << "exponent " << report.exponent << " vs " << report.split_exponent << " for J + K(G)/J";
      if (report.extension_not_split()) out << ": extension does not split";
      out << "\n";
      for (const auto& c : report.checks) print_check(out, c);
      out << "[" << mark(sweep.pass()) << "] sweep: seed " << sweep.seed << ", " << sweep.trials
          << " trials, " << sweep.membership_mismatches << " membership mismatches, "
          << sweep.split_failures << " split failures, " << sweep.principal_mismatches
          << " principality mismatches, " << sweep.injectivity_failures << " injectivity failures";
      if (!sweep.labeled) out << " (membership predicates skipped)";
      out << "\n";
      for (const auto& line : oracle.lines) out << "oracle " << line << "\n";
      out << (pass ? "all checks passed" : "verification FAILED") << "\n";
    }
    if (!ctx->has_labeling()) {
      err << "LABELING_IMPOSSIBLE: " << ctx->labeling_error() << "\n";
      return kHypothesisFails;
    }
    return pass ? kOk : kVerificationFailed;
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_family(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Json j;
    const std::string& name = config.family;
    if (name == "circulant") {
      j = to_json(circulant(config.n, config.steps));
    } else if (name == "concentric") {
      j = to_json(concentric_polygon(config.n));
    } else if (name == "klein") {
      j = to_json(klein_example());
    } else if (name == "intro") {
      j = to_json(intro_counterexample());
    } else if (name == "chained") {
      j = to_json(chained_preset(config.base, config.n));
    } else if (name == "hgraph") {
      j = to_json(h_graph(config.n));
      j["name"] = "hgraph";
    } else {
      err << "PARSE: unknown family '" << name
          << "' (expected circulant, concentric, klein, intro, chained or hgraph)\n";
      return kBadInput;
    }
    out << j.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    err << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::kNonHarmonic ? kNotHarmonic : kBadInput;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical groups of multigraphs and their dihedral decompositions"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* compute = app.add_subcommand("compute", "Critical group and spanning-tree count of a graph file");
  compute->add_option("file", config.input, "Graph JSON file")->required();
  compute->add_flag("--oracle", config.oracle, "Cross-check by spanning-tree enumeration");

  auto* verify = app.add_subcommand("verify", "Verify the dihedral decomposition theorems");
  verify->add_option("file", config.input, "Graph JSON file with sigma1/sigma2")->required();
  verify->add_option("--trials", config.trials, "Random divisors in the property sweep");
  verify->add_option("--seed", config.seed, "Seed of the property sweep");
  verify->add_flag("--oracle", config.oracle, "Brute-force cross-checks (small graphs only)");

  std::string steps;
  auto* family = app.add_subcommand("family", "Emit a named graph family as JSON");
  family->add_option("name", config.family, "circulant | concentric | klein | intro | chained | hgraph")
      ->required();
  family->add_option("--n", config.n, "Size parameter");
  family->add_option("--steps", steps, "Circulant steps, comma separated");
  family->add_option("--base", config.base, "Base graph for chained: edge | path | square");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  config.json = format == "json";
  if (compute->parsed()) {
    config.command = "compute";
    return cmd_compute(config, out, err);
  }
  if (verify->parsed()) {
    config.command = "verify";
    return cmd_verify(config, out, err);
  }
  config.command = "family";
  try {
    if (!steps.empty()) config.steps = parse_steps(steps);
  } catch (const Error& e) {
    err << "PARSE: " << e.what() << "\n";
    return kBadInput;
  }
  return cmd_family(config, out, err);
}

}  // namespace critgroup::cli
