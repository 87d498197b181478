// Command-line front end. One command per process; see README for the exit
// code matrix.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oddsign/balanced.hpp"
#include "oddsign/detect.hpp"
#include "oddsign/errors.hpp"
#include "oddsign/io.hpp"
#include "oddsign/laminar.hpp"
#include "oddsign/oracle.hpp"
#include "oddsign/pipeline.hpp"
#include "oddsign/separation.hpp"
#include "oddsign/twojoin.hpp"
#include "oddsign/wheel.hpp"

using namespace oddsign;

namespace {

struct Globals {
  std::uint64_t work_budget = kDefaultWorkBudget;
  int treewidth_cap = 20;
  std::uint64_t seed = 1;
  std::string output = "-";
  std::string format = "json";
};

void write_out(const Globals& gl, const std::string& text) {
  if (gl.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(gl.output);
  if (!out) throw Error(ExitCode::no_input, "cannot write " + gl.output);
  out << text;
}

void write_json(const Globals& gl, const Json& j) { write_out(gl, j.dump(2) + "\n"); }

int exit_code(ExitCode c) { return static_cast<int>(c); }

int run_check(const Globals& gl, const std::string& path) {
  GraphDocument doc = read_graph(path);
  WorkBudget budget(gl.work_budget);
  MembershipResult m = is_c4free_odd_signable(doc.g, budget);
  write_json(gl, membership_to_json(m));
  if (m.capped()) return exit_code(ExitCode::capped);
  return m.member() ? 0 : exit_code(ExitCode::non_member);
}

int run_forcers(const Globals& gl, const std::string& path, const std::string& kind) {
  GraphDocument doc = read_graph(path);
  WorkBudget budget(gl.work_budget);
  ForcerFamily family = kind == "twin" ? ForcerFamily::twin : ForcerFamily::strong;
  Json list = Json::array();
  for (const auto& f : enumerate_forcers(doc.g, doc.g.vertices(), family, budget)) {
    CutsetCertificate cert = forcer_cutset(doc.g, doc.g.vertices(), f);
    Json fj = forcer_to_json(f, cert);
    fj["verified"] = verify_certificate(doc.g, doc.g.vertices(), cert);
    list.push_back(fj);
  }
  write_json(gl, Json{{"family", kind}, {"count", list.size()}, {"forcers", list}});
  return 0;
}

struct SeparatorArgs {
  std::string c = "1/2";
  int d = 0;
  bool paper = false;
  int delta = 0;
  bool ignore_wmax = false;
  bool tight = false;
  std::string mode = "eager";
};

int run_separator(const Globals& gl, const std::string& path, const SeparatorArgs& a) {
  GraphDocument doc = read_graph(path);
  WeightAssignment w = doc.weights();
  PipelineOptions opts;
  opts.mode = a.mode == "lazy" ? PipelineMode::lazy : PipelineMode::eager;
  opts.treewidth_cap = gl.treewidth_cap;
  opts.work_budget = gl.work_budget;
  RunMetadata meta{gl.seed, a.mode, gl.work_budget, gl.treewidth_cap, "explicit"};
  Rational c = parse_rational(a.c);
  int d = a.d;
  PipelineResult r;
  if (a.tight) {
    meta.parameters = "tight";
    TightResult t = compute_tight(doc.g, w, c, opts);
    r = t.result;
    d = t.d;
  } else {
    if (a.paper) {
      if (a.delta < 1) throw UsageError("--paper-params needs --delta");
      if (doc.g.max_degree() > a.delta) throw DataError("maximum degree exceeds --delta");
      PipelineParams p = params_for(a.delta, a.ignore_wmax ? Rational(0) : w.max());
      if (!p.satisfiable)
        throw DataError("weights too concentrated for the parameter bound (wmax " + format_rational(w.max()) +
                        " >= " + format_rational(p.wmax_ceiling) + "); pass --ignore-wmax to evaluate at wmax = 0");
      c = p.c;
      d = p.d;
      meta.parameters = a.ignore_wmax ? "paper, wmax taken as 0" : "paper";
    } else if (d < 1) {
      throw UsageError("give --d, --paper-params, or --tight");
    }
    r = compute_balanced_separator(doc.g, w, c, d, opts);
  }
  write_json(gl, certificate_document(doc, c, d, r, meta));
  switch (r.status) {
    case RunStatus::certified: return 0;
    case RunStatus::budget_exhausted: return exit_code(ExitCode::non_member);
    case RunStatus::capped: return exit_code(ExitCode::capped);
    case RunStatus::assertion_failed: return exit_code(ExitCode::software);
  }
  return exit_code(ExitCode::software);
}

int run_treedec(const Globals& gl, const std::string& path, const std::string& laminar, bool heuristic) {
  GraphDocument doc = read_graph(path);
  if (!laminar.empty()) {
    Json j = Json::parse(read_text(laminar), nullptr, false);
    if (j.is_discarded()) throw DataError("separation file is not valid JSON");
    auto seps = separations_from_json(j, doc.g.order());
    LaminarDecomposition dec;
    try {
      dec = build_tree_decomposition(doc.g, doc.g.vertices(), seps);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
    Json out = tree_decomposition_to_json(dec.td);
    out["source"] = "laminar";
    write_json(gl, out);
    return 0;
  }
  TreewidthResult t = heuristic && doc.g.order() > gl.treewidth_cap ? treewidth_min_fill(doc.g, doc.g.vertices())
                                                                    : treewidth_exact(doc.g, gl.treewidth_cap);
  Json out = tree_decomposition_to_json(t.td);
  out["exact"] = t.exact;
  out["source"] = t.exact ? "exact" : "min-fill";
  write_json(gl, out);
  return 0;
}

int run_twojoin(const Globals& gl, const std::string& path, bool tree) {
  GraphDocument doc = read_graph(path);
  WorkBudget budget(gl.work_budget);
  if (tree) {
    write_json(gl, twojoin_tree_to_json(build_2join_tree(doc.g, budget)));
    return 0;
  }
  auto split = find_2join(doc.g, doc.g.vertices(), {}, budget);
  Json out{{"found", split.has_value()}, {"bstar", to_string(bstar_tag(doc.g).kind)}};
  if (split) out["split"] = twojoin_split_to_json(*split);
  write_json(gl, out);
  return split ? 0 : exit_code(ExitCode::non_member);
}

int run_oracle(const Globals& gl, const std::string& task, const std::string& path, const std::string& c_text, int d) {
  GraphDocument doc = read_graph(path);
  Rational c = parse_rational(c_text);
  if (task == "treewidth") {
    TreewidthResult t = treewidth_exact(doc.g, gl.treewidth_cap);
    Json out = tree_decomposition_to_json(t.td);
    out["treewidth"] = t.width;
    write_json(gl, out);
    return 0;
  }
  if (task == "sep-star") {
    write_json(gl, Json{{"c", format_rational(c)}, {"sep_star", sep_star_exact(doc.g, c)}});
    return 0;
  }
  if (d < 1) throw UsageError("oracle balanced needs --d");
  WorkBudget budget(gl.work_budget);
  auto sep = balanced_separator_exact(doc.g, doc.g.vertices(), doc.weights(), c, d, budget);
  Json out{{"c", format_rational(c)}, {"d", d}, {"found", sep.has_value()}};
  if (sep) {
    out["y"] = vertex_list(sep->y);
    Json cs = Json::array();
    for (int v : sep->centers) cs.push_back(v + 1);
    out["centers"] = cs;
  }
  write_json(gl, out);
  return sep ? 0 : exit_code(ExitCode::non_member);
}

int run_gen(const Globals& gl, int delta, int n, const std::string& strategy) {
  GenStrategy s = strategy == "rejection" ? GenStrategy::rejection : GenStrategy::constructive;
  GeneratedMember m = generate_class_member(delta, n, gl.seed, s);
  GraphDocument doc{m.g, std::nullopt};
  if (gl.format == "edges") {
    write_out(gl, "c seed " + std::to_string(gl.seed) + " strategy " + strategy + " recipe " + m.recipe + "\n" +
                      emit_edge_list(doc));
  } else {
    Json out{{"graph", graph_to_json(doc)}, {"seed", gl.seed}, {"strategy", strategy}, {"recipe", m.recipe}};
    write_json(gl, out);
  }
  return 0;
}

int run_params(const Globals& gl, int delta, const std::string& wmax_text) {
  if (delta < 1) throw UsageError("--delta must be positive");
  Rational wmax = parse_rational(wmax_text);
  PipelineParams p = params_for(delta, wmax);
  WidthBounds wb = width_bounds(delta, 2, 3);
  std::string big = p.big_delta.str();
  Json out{{"delta", delta},
           {"wmax", format_rational(wmax)},
           {"f2", p.f2.str()},
           {"d", p.d},
           {"d_clean", p.d_clean},
           {"satisfiable", p.satisfiable},
           {"wmax_ceiling", format_rational(p.wmax_ceiling)},
           {"no_star_cutset_tw_bound", wb.corollary},
           {"gw_bound_r2_rw3", wb.gw.str()},
           {"big_delta_digits", big.size()}};
  if (p.satisfiable) {
    out["c"] = format_rational(p.c);
    out["ladder_exponent"] = p.ladder_exponent;
  }
  write_json(gl, out);
  return 0;
}

int run_verify(const Globals& gl, const std::string& path) {
  Json doc = Json::parse(read_text(path), nullptr, false);
  if (doc.is_discarded()) throw DataError("certificate is not valid JSON");
  VerifyReport rep = verify_certificate_document(doc);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  write_json(gl, Json{{"ok", rep.ok}, {"status", rep.status}, {"checks", checks}});
  return rep.ok ? 0 : exit_code(ExitCode::non_member);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition tools for C4-free odd-signable graphs of bounded degree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags");
  Globals gl;
  app.add_option("--budget", gl.work_budget, "work budget for exponential searches")->envname("ODDSIGN_WORK_BUDGET");
  app.add_option("--treewidth-cap", gl.treewidth_cap, "largest bag handled by exact treewidth")
      ->envname("ODDSIGN_TREEWIDTH_CAP");
  app.add_option("--seed", gl.seed, "seed for every random choice")->envname("ODDSIGN_SEED");
  app.add_option("-o,--output", gl.output, "output file, - for stdout");
  app.add_option("--format", gl.format, "graph output format")->check(CLI::IsMember({"json", "edges"}));

  std::string graph, task, kind = "strong", laminar, strategy = "constructive", wmax = "0", oracle_c = "1/2";
  bool tree = false, heuristic = false;
  int delta = 0, n = 0, oracle_d = 0;
  SeparatorArgs sa;

  auto* check = app.add_subcommand("check", "class membership with a witness");
  check->add_option("graph", graph)->required();

  auto* forcers = app.add_subcommand("forcers", "forcers with cutset certificates");
  forcers->add_option("graph", graph)->required();
  forcers->add_option("--kind", kind)->check(CLI::IsMember({"strong", "twin"}));

  auto* separator = app.add_subcommand("separator", "balanced separator with a certificate document");
  separator->add_option("graph", graph)->required();
  separator->add_option("--c", sa.c, "balance threshold p/q");
  separator->add_option("--d", sa.d, "boundedness budget");
  separator->add_flag("--paper-params", sa.paper, "take c and d from the parameter bound");
  separator->add_option("--delta", sa.delta, "degree bound for --paper-params");
  separator->add_flag("--ignore-wmax", sa.ignore_wmax, "evaluate the parameter bound at wmax = 0");
  separator->add_flag("--tight", sa.tight, "least d that certifies");
  separator->add_option("--mode", sa.mode)->check(CLI::IsMember({"eager", "lazy"}));

  auto* treedec = app.add_subcommand("treedec", "tree decomposition");
  treedec->add_option("graph", graph)->required();
  treedec->add_option("--from-laminar", laminar, "JSON file of separations");
  treedec->add_flag("--heuristic", heuristic, "min-fill above the treewidth cap");

  auto* twojoin = app.add_subcommand("twojoin", "2-join split or decomposition tree");
  twojoin->add_option("graph", graph)->required();
  twojoin->add_flag("--tree", tree);

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle->add_option("task", task)->required()->check(CLI::IsMember({"treewidth", "sep-star", "balanced"}));
  oracle->add_option("graph", graph)->required();
  oracle->add_option("--c", oracle_c);
  oracle->add_option("--d", oracle_d);

  auto* gen = app.add_subcommand("gen", "generate a class member");
  gen->add_option("--delta", delta)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--strategy", strategy)->check(CLI::IsMember({"constructive", "rejection"}));

  auto* params = app.add_subcommand("params", "parameter table");
  params->add_option("--delta", delta)->required();
  params->add_option("--wmax", wmax);

  auto* verify = app.add_subcommand("verify", "re-check a certificate document offline");
  verify->add_option("certificate", graph)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_code(ExitCode::usage);
  }

  try {
    if (*check) return run_check(gl, graph);
    if (*forcers) return run_forcers(gl, graph, kind);
    if (*separator) return run_separator(gl, graph, sa);
    if (*treedec) return run_treedec(gl, graph, laminar, heuristic);
    if (*twojoin) return run_twojoin(gl, graph, tree);
    if (*oracle) return run_oracle(gl, task, graph, oracle_c, oracle_d);
    if (*gen) return run_gen(gl, delta, n, strategy);
    if (*params) return run_params(gl, delta, wmax);
    if (*verify) return run_verify(gl, graph);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what();
    if (!e.detail().empty()) std::cerr << " (" << e.detail() << ")";
    std::cerr << '\n';
    return exit_code(e.code());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_code(ExitCode::software);
  }
  return exit_code(ExitCode::usage);
}
