#include "ksplit/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "ksplit/bounds.hpp"
#include "ksplit/constructions.hpp"
#include "ksplit/error.hpp"
#include "ksplit/freeness.hpp"
#include "ksplit/json_io.hpp"
#include "ksplit/probabilistic.hpp"

namespace ksplit::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string forbidden;
  std::string mode;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::size_t t = 0;
  std::optional<std::size_t> k_cap;
  std::size_t trials = 1000;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool no_verify = false;
  bool certify = false;
  // trim
  double a = 0;
  double b = 1.5;
  double C = 0.5;
  double C_prime = 1.0;
  std::optional<std::size_t> q;
  std::optional<double> ex;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned worker_count(const RunConfig& c) {
  if (c.threads > 0) return c.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::optional<ForbiddenGraph> forbidden_or(const RunConfig& c, const std::string& fallback) {
  const std::string& spec = c.forbidden.empty() ? fallback : c.forbidden;
  if (spec.empty()) return std::nullopt;
  return parse_forbidden_spec(spec);
}

SplitMode mode_or(const RunConfig& c, SplitMode fallback) {
  return c.mode.empty() ? fallback : parse_split_mode(c.mode);
}

void require_input(const RunConfig& c) {
  if (c.input.empty()) throw Usage("--input is required");
  if (!std::filesystem::exists(c.input)) throw Usage("input file not found: " + c.input);
}

// Structure plus freeness. Returns whether both passed.
bool check_split(const SplitGraph& s, SplitMode mode, const std::optional<ForbiddenGraph>& h, Json& out) {
  const auto report = verify_split(s, mode);
  out["verification"] = to_json(report);
  bool ok = report.passed;
  if (h) {
    const auto witness = find_forbidden(s.graph(), *h);
    out["forbidden"] = h->descriptor;
    out["witness"] = witness_json(witness);
    ok = ok && !witness;
  } else {
    out["forbidden"] = nullptr;
  }
  return ok;
}

void describe_split(const SplitGraph& s, Json& out) {
  out["n"] = s.n();
  out["k"] = s.k();
  out["vertices"] = s.graph().vertex_count();
  out["edges"] = s.graph().edge_count();
}

void write_output(const RunConfig& c, const SplitGraph& s, Json& out) {
  if (c.output.empty()) {
    out["output"] = nullptr;
    return;
  }
  write_split_file(s, c.output);
  out["output"] = c.output;
}

// Shared tail for every construct subcommand.
int finish_construct(const RunConfig& c, const SplitGraph& s, SplitMode mode,
                     const std::optional<ForbiddenGraph>& h, Json& out) {
  describe_split(s, out);
  bool ok = true;
  if (c.no_verify) {
    out["verified"] = false;
  } else {
    ok = check_split(s, mode, h, out);
    out["verified"] = ok;
  }
  write_output(c, s, out);
  return ok ? 0 : 1;
}

int cmd_affine(const RunConfig& c, Json& out) {
  const SplitGraph s = build_affine_split(c.p);
  out["p"] = c.p;
  const std::size_t q2 = std::size_t{c.p} * c.p;
  const auto degrees = s.graph().degrees();
  const bool regular = std::all_of(degrees.begin(), degrees.end(), [&](std::size_t d) { return d == q2; });
  out["degree"] = q2;
  out["regular"] = regular;
  const int code = finish_construct(c, s, mode_or(c, SplitMode::lax), forbidden_or(c, "C4"), out);
  return c.no_verify || regular ? code : 1;
}

int cmd_c4pipeline(const RunConfig& c, Json& out) {
  const auto params = c4_pipeline_parameters(c.n);
  out["N"] = params.big_n;
  out["k0"] = params.k0;
  out["p"] = params.p;
  out["within_gap"] = params.within_gap;
  out["retries"] = params.retries;
  out["ratio"] = static_cast<double>(params.blob_size()) / std::cbrt(static_cast<double>(c.n));
  const SplitGraph s = construct_c4_free_split(c.n);
  return finish_construct(c, s, mode_or(c, SplitMode::strict), forbidden_or(c, "C4"), out);
}

int cmd_bipartite(const RunConfig& c, Json& out) {
  return finish_construct(c, build_bipartite_split(c.n), mode_or(c, SplitMode::strict), forbidden_or(c, "C3"), out);
}

int cmd_star(const RunConfig& c, Json& out) {
  const SplitGraph s = build_star_free_split(c.n, c.t);
  out["t"] = c.t;
  out["max_degree"] = s.graph().max_degree();
  return finish_construct(c, s, mode_or(c, SplitMode::strict), forbidden_or(c, "S" + std::to_string(c.t)), out);
}

int cmd_from_coloring(const RunConfig& c, Json& out) {
  require_input(c);
  const EdgeColoring coloring = read_coloring_file(c.input);
  const SplitGraph s = build_split_from_coloring(coloring);
  out["colors"] = coloring.colors();
  out["components"] = count_components(s.graph());
  return finish_construct(c, s, mode_or(c, SplitMode::strict), forbidden_or(c, ""), out);
}

int cmd_random_split(const RunConfig& c, Json& out) {
  require_input(c);
  const Graph host = read_any_graph_file(c.input);
  const std::size_t k_cap = c.k_cap ? *c.k_cap
                                    : static_cast<std::size_t>(
                                          std::floor(concentration_report(host.vertex_count(), c.n).size_cap));
  out["n"] = c.n;
  out["k_cap"] = k_cap;
  out["trials"] = c.trials;
  const auto result = random_split(host, c.n, k_cap, c.trials, c.seed, worker_count(c));
  if (const auto* failure = std::get_if<FailureStats>(&result)) {
    out["accepted"] = false;
    out["failure"] = to_json(*failure);
    return 1;
  }
  const auto& success = std::get<RandomSplitSuccess>(result);
  out["accepted"] = true;
  out["trial"] = success.trial;
  describe_split(success.split, out);
  const bool ok = check_split(success.split, SplitMode::strict, forbidden_or(c, ""), out);
  out["verified"] = ok;
  write_output(c, success.split, out);
  return ok ? 0 : 1;
}

int cmd_verify(const RunConfig& c, Json& out) {
  require_input(c);
  const SplitGraph s = read_split_file(c.input);
  describe_split(s, out);
  const bool ok = check_split(s, mode_or(c, SplitMode::strict), forbidden_or(c, ""), out);
  out["passed"] = ok;
  return ok ? 0 : 1;
}

int cmd_prune(const RunConfig& c, Json& out) {
  require_input(c);
  const SplitGraph s = prune_to_split(read_split_file(c.input));
  describe_split(s, out);
  write_output(c, s, out);
  return 0;
}

int cmd_restrict(const RunConfig& c, Json& out) {
  require_input(c);
  const SplitGraph s = restrict_blobs(read_split_file(c.input), c.n);
  describe_split(s, out);
  write_output(c, s, out);
  return 0;
}

int cmd_trim(const RunConfig& c, Json& out) {
  require_input(c);
  const Graph g = read_any_graph_file(c.input);
  const double a = c.a > 0 ? c.a : c.b;
  TuranProfile profile = a == c.b ? TuranProfile::single(c.b, c.C, c.C_prime)
                                  : TuranProfile{a, c.b, c.C, c.C_prime, std::nullopt};
  TrimOptions options;
  options.forced_q = c.q;
  options.ex = c.ex;
  const TrimResult result = trim_max_degree(g, profile, options);
  out["result"] = to_json(result);
  out["gap_condition"] = profile.gap_condition();
  if (result.trimmed && !c.output.empty()) {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw Error(Errc::IoError, "cannot write " + c.output);
    write_graph(*result.trimmed, file);
    out["output"] = c.output;
  } else {
    out["output"] = nullptr;
  }
  return 0;
}

int cmd_diagnose(const RunConfig& c, Json& out) {
  require_input(c);
  const Graph host = read_any_graph_file(c.input);
  out["janson"] = to_json(janson_diagnostics(host, c.n));
  out["concentration"] = to_json(concentration_report(host.vertex_count(), c.n));
  return 0;
}

int cmd_estimate(const RunConfig& c, Json& out) {
  require_input(c);
  const Graph host = read_any_graph_file(c.input);
  out["estimate"] = to_json(estimate_pair_failure(host, c.n, c.samples, c.seed, worker_count(c)));
  out["bound_pair"] = static_cast<double>(janson_diagnostics(host, c.n).bound_pair);
  return 0;
}

int cmd_bounds(const RunConfig& c, Json& out) {
  if (c.forbidden.empty()) throw Usage("--forbidden is required");
  const ForbiddenGraph h = parse_forbidden_spec(c.forbidden);
  SplitBoundsOptions options;
  options.certify = c.certify;
  const BoundReport report = split_bounds(h, c.n, options);
  out["report"] = to_json(report);
  if (report.construction && !c.output.empty()) {
    write_split_file(*report.construction, c.output);
    out["output"] = c.output;
  } else {
    out["output"] = nullptr;
  }
  const auto& notes = report.notes;
  const bool failed = std::find(notes.begin(), notes.end(), "construction failed verification") != notes.end();
  return failed ? 1 : 0;
}

int exit_code_for(Errc kind) {
  switch (kind) {
    case Errc::GrammarError:
    case Errc::ParameterError:
    case Errc::CompositeCharacteristic:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::function<int(const RunConfig&, Json&)> handler;

  CLI::App app{"Build and verify splits of complete graphs that avoid a forbidden subgraph", "ksplit"};
  app.require_subcommand(1);

  const auto bind = [&](CLI::App* sub, std::string name, int (*fn)(const RunConfig&, Json&)) {
    sub->callback([&c, &handler, name = std::move(name), fn] {
      c.command = name;
      handler = fn;
    });
  };
  const auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", c.output, "output file"); };
  const auto add_input = [&](CLI::App* sub) { sub->add_option("--input", c.input, "input file")->required(); };
  const auto add_forbidden = [&](CLI::App* sub) {
    sub->add_option("--forbidden", c.forbidden, "C<k> | K<s>,<t> | K<n> | S<t> | P<k> | file:<path>");
  };
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode, "strict|lax")->check(CLI::IsMember({"strict", "lax"}));
  };
  const auto add_construct_common = [&](CLI::App* sub) {
    add_output(sub);
    add_forbidden(sub);
    add_mode(sub);
    sub->add_flag("--no-verify", c.no_verify, "skip re-verification");
    sub->add_option("--seed", c.seed, "random seed (unused by deterministic constructions)");
  };

  auto* construct = app.add_subcommand("construct", "deterministic constructions");
  construct->require_subcommand(1);

  auto* affine = construct->add_subcommand("affine", "lax (p^3, 2p)-graph from the affine plane over GF(p^2)");
  affine->add_option("--p", c.p, "prime")->required();
  add_construct_common(affine);
  bind(affine, "construct affine", cmd_affine);

  auto* pipeline = construct->add_subcommand("c4pipeline", "strict C4-free (n, 2p)-graph");
  pipeline->add_option("--n", c.n, "blobs")->required();
  add_construct_common(pipeline);
  bind(pipeline, "construct c4pipeline", cmd_c4pipeline);

  auto* bipartite = construct->add_subcommand("bipartite", "strict bipartite (n, 2)-graph");
  bipartite->add_option("--n", c.n, "blobs")->required()->check(CLI::PositiveNumber);
  add_construct_common(bipartite);
  bind(bipartite, "construct bipartite", cmd_bipartite);

  auto* star = construct->add_subcommand("star", "strict K_{1,t}-free split from a round-robin coloring");
  star->add_option("--n", c.n, "blobs")->required();
  star->add_option("--t", c.t, "star size")->required();
  add_construct_common(star);
  bind(star, "construct star", cmd_star);

  auto* from_coloring = construct->add_subcommand("from-coloring", "split from a complete edge coloring");
  add_input(from_coloring);
  add_construct_common(from_coloring);
  bind(from_coloring, "construct from-coloring", cmd_from_coloring);

  auto* random = app.add_subcommand("random-split", "random vertex coloring of a host graph");
  add_input(random);
  random->add_option("--n", c.n, "blobs")->required();
  random->add_option("--k-cap", c.k_cap, "largest allowed blob (default: floor of the concentration cap)");
  random->add_option("--trials", c.trials, "trial budget")->check(CLI::PositiveNumber);
  random->add_option("--seed", c.seed, "random seed");
  random->add_option("--threads", c.threads, "worker threads (default: all cores)");
  add_forbidden(random);
  add_output(random);
  bind(random, "random-split", cmd_random_split);

  auto* verify = app.add_subcommand("verify", "verify a split graph");
  add_input(verify);
  add_forbidden(verify);
  add_mode(verify);
  bind(verify, "verify", cmd_verify);

  auto* prune = app.add_subcommand("prune", "reduce a lax split to a strict one");
  add_input(prune);
  add_output(prune);
  bind(prune, "prune", cmd_prune);

  auto* restrict_cmd = app.add_subcommand("restrict", "keep the first n blobs");
  add_input(restrict_cmd);
  restrict_cmd->add_option("--n", c.n, "blobs to keep")->required();
  add_output(restrict_cmd);
  bind(restrict_cmd, "restrict", cmd_restrict);

  auto* trim = app.add_subcommand("trim", "max-degree trimming of a dense H-free graph");
  add_input(trim);
  trim->add_option("--a", c.a, "lower Turan exponent (default: b)");
  trim->add_option("--b", c.b, "upper Turan exponent");
  trim->add_option("--c", c.C, "lower Turan constant");
  trim->add_option("--c-prime", c.C_prime, "upper Turan constant");
  trim->add_option("--q", c.q, "force the number of parts");
  trim->add_option("--ex", c.ex, "value used for ex(ell, H) (default: 2m)");
  add_output(trim);
  bind(trim, "trim", cmd_trim);

  auto* diagnose = app.add_subcommand("diagnose", "Janson and concentration quantities for a host");
  add_input(diagnose);
  diagnose->add_option("--n", c.n, "colors")->required();
  diagnose->add_option("--seed", c.seed, "random seed (unused)");
  bind(diagnose, "diagnose", cmd_diagnose);

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo pair-failure probability");
  add_input(estimate);
  estimate->add_option("--n", c.n, "colors")->required();
  estimate->add_option("--samples", c.samples, "samples")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", c.seed, "random seed");
  estimate->add_option("--threads", c.threads, "worker threads (default: all cores)");
  bind(estimate, "estimate", cmd_estimate);

  auto* bounds = app.add_subcommand("bounds", "lower and upper bounds on f(n, H)");
  bounds->add_option("--n", c.n, "blobs")->required();
  bounds->add_option("--forbidden", c.forbidden, "forbidden graph")->required();
  bounds->add_flag("--certify", c.certify, "build and verify the upper-bound construction");
  add_output(bounds);
  bind(bounds, "bounds", cmd_bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Json result;
  result["command"] = c.command;
  result["seed"] = c.seed;
  try {
    const int code = handler(c, result);
    out << result.dump(2) << '\n';
    return code;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    const int code = exit_code_for(e.code());
    if (code == 1) {
      result["error"] = Json{{"kind", errc_name(e.code())}, {"message", e.what()}};
      out << result.dump(2) << '\n';
    }
    return code;
  }
}

}  // namespace ksplit::cli
