#include "lgc/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "lgc/connectivity.hpp"
#include "lgc/errors.hpp"
#include "lgc/eval.hpp"
#include "lgc/generators.hpp"
#include "lgc/io.hpp"
#include "lgc/nibble.hpp"
#include "lgc/oracles.hpp"
#include "lgc/sweep.hpp"

namespace lgc {
namespace {

using nlohmann::json;

// A verify-* check ran and did not pass.
struct VerificationFailed {
  std::string what;
};

struct Flags {
  // shared
  std::string graph;
  std::string out;
  std::string format = "json";
  std::uint64_t rng_seed = 1;
  // nibble
  std::uint64_t seed_vertex = 0;
  double conn = 0.1;
  double vol0 = 0.0;
  double alpha_scale = 1.0 / 9.0;
  std::optional<double> alpha;
  std::optional<double> eps;
  double c_min = 1.0 / 16.0;
  double c_max = 0.5;
  std::optional<double> phi_accept;
  double vol0_max = 0.0;
  double phi_target = 0.0;
  double classic_scale = 1.0;
  // sets
  std::string set;
  std::string truth;
  std::string definition = "mix";
  // generators
  std::size_t n = 300;
  std::size_t k = 60;
  double beta = 1.0;
  std::size_t ell = 100;
  double phi_ell2 = 0.25;
  double gamma = 1.0;
  std::optional<double> hard_n;
  std::optional<double> hard_phi;
  std::optional<double> c0;
  std::string points;
  bool label_column = false;
  double sigma_factor = 0.2;
  // verification
  std::string lemma = "all";
  std::vector<std::size_t> ells;
  std::vector<double> gammas;
  double slack = 10.0;
  double anchor = 0.05;
  bool grid = false;
  // experiments
  std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::size_t runs = 50;
  std::string log;
  double t_vol_out = 0.2;
  double t_vol_miss = 0.2;
  std::optional<double> t_phi;
};

std::string ResolveOut(const std::string& path) {
  if (path.empty() || path == "-") return path;
  const char* dir = std::getenv(kOutDirEnv);
  const std::filesystem::path p(path);
  if (dir && *dir && p.is_relative()) return (std::filesystem::path(dir) / p).string();
  return path;
}

void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  const std::string path = ResolveOut(out_path);
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot open '" + path + "' for writing");
  f << text;
}

std::string OptionName(const CLI::Option* opt) {
  std::string name = opt->get_name();
  while (!name.empty() && name.front() == '-') name.erase(name.begin());
  return name;
}

// Every option of the subcommand with its given or default value.
json Echo(const CLI::App* sub, const std::string& command) {
  json params = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = OptionName(opt);
    if (name.empty() || name == "help") continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_expected_max() > 1 || res.size() > 1) {
        params[name] = res;
      } else if (opt->get_type_size() == 0) {
        params[name] = true;
      } else {
        params[name] = res.empty() ? "" : res.front();
      }
    } else if (!opt->get_default_str().empty()) {
      params[name] = opt->get_default_str();
    } else {
      params[name] = nullptr;
    }
  }
  return {{"command", command}, {"params", params}};
}

std::string CsvEcho(const json& echo) {
  std::ostringstream os;
  os << "# command: " << echo["command"].get<std::string>() << '\n';
  for (const auto& [key, value] : echo["params"].items()) {
    os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
       << '\n';
  }
  return os.str();
}

std::string Json(json body, const json& echo) {
  body["command"] = echo["command"];
  body["params"] = echo["params"];
  return body.dump(2) + "\n";
}

LoadedGraph RequireGraph(const Flags& f) {
  if (f.graph.empty()) throw InputError("--graph is required");
  return LoadGraph(f.graph);
}

NibbleParams NibbleFrom(const Flags& f, const LoadedGraph& g) {
  NibbleParams p;
  p.seed = g.ToInternal(f.seed_vertex);
  p.conn = f.conn;
  p.vol0 = f.vol0;
  p.alpha_scale = f.alpha_scale;
  p.c_min = f.c_min;
  p.c_max = f.c_max;
  p.alpha_override = f.alpha;
  p.epsilon_override = f.eps;
  return p;
}

// Internal ids back to file ids.
json FileIds(const VertexSet& s, const LoadedGraph& g) {
  json arr = json::array();
  for (VertexId u : s) {
    if (g.compacted()) {
      arr.push_back(g.original_ids[u]);
    } else {
      arr.push_back(u);
    }
  }
  return arr;
}

json NibbleJson(const NibbleResult& r, const LoadedGraph& g) {
  json j = ToJson(r);
  j["set"] = FileIds(r.output_set, g);
  return j;
}

std::string ClusterCsv(const NibbleResult& r, const LoadedGraph& g, const json& echo) {
  std::ostringstream os;
  os << CsvEcho(echo);
  os << "# phi: " << std::setprecision(17) << r.conductance << "\n# mode: " << ToString(r.mode)
     << "\nvertex\n";
  for (const auto& id : FileIds(r.output_set, g)) os << id.dump() << '\n';
  return os.str();
}

void WriteSidecars(const Flags& f, const LabeledGraph& lg) {
  if (f.out.empty() || f.out == "-") return;
  const std::string base = ResolveOut(f.out);
  SaveLabels(base + ".labels.csv", lg.labels);
  if (!lg.ground_truth.empty()) SaveVertexSet(base + ".truth", lg.ground_truth);
}

std::string GraphText(const WeightedGraph& g, const json& echo) {
  std::ostringstream os;
  os << CsvEcho(echo);
  WriteEdgeList(os, g);
  return os.str();
}

int RunGenerate(const std::string& kind, const Flags& f, const json& echo, std::ostream& out) {
  LabeledGraph lg;
  if (kind == "ws") {
    lg.graph = WattsStrogatz(f.n, f.k, f.beta, f.rng_seed);
  } else if (kind == "exp1") {
    Experiment1Config c;
    c.beta = f.beta;
    c.seed = f.rng_seed;
    lg = Experiment1Graph(c);
  } else if (kind == "hard") {
    HardInstanceSpec spec = HardSpecFor(f.ell, f.phi_ell2, f.gamma);
    if (f.hard_n) spec.n = *f.hard_n;
    if (f.hard_phi) spec.phi = *f.hard_phi;
    if (f.c0) spec.c0 = *f.c0;
    lg = MakeHardInstance(spec).labeled;
  } else if (kind == "chain") {
    lg.graph = Chain(f.ell);
  } else if (kind == "knn") {
    if (f.points.empty()) throw InputError("--points is required");
    const Points pts = LoadPoints(f.points, f.label_column);
    lg.graph = KnnGraph(pts.rows, f.k, f.sigma_factor).graph;
    for (int lab : pts.labels) lg.labels.push_back(std::to_string(lab));
  }
  Emit(GraphText(lg.graph, echo), f.out, out);
  if (!lg.labels.empty()) WriteSidecars(f, lg);
  return kExitOk;
}

int RunCluster(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  NibbleParams p = NibbleFrom(f, g);
  if (f.phi_accept) {
    const double cap = f.vol0_max > 0.0 ? f.vol0_max : g.graph.total_volume() / 2.0;
    p.vol0 = 1.0;
    const Vol0SearchResult r = Vol0Search(g.graph, p, *f.phi_accept, cap);
    if (f.format == "csv") {
      Emit(ClusterCsv(r.result, g, echo), f.out, out);
    } else {
      json body = NibbleJson(r.result, g);
      body["accepted_vol0"] = r.vol0;
      json attempts = json::array();
      for (const auto& [v, phi] : r.attempts) attempts.push_back({{"vol0", v}, {"phi", phi}});
      body["attempts"] = attempts;
      Emit(Json(body, echo), f.out, out);
    }
    return kExitOk;
  }
  if (!(f.vol0 > 0.0)) throw InputError("--vol0 is required (or use --phi-accept)");
  const NibbleResult r = PageRankNibble(g.graph, p);
  Emit(f.format == "csv" ? ClusterCsv(r, g, echo) : Json(NibbleJson(r, g), echo), f.out, out);
  return kExitOk;
}

int RunAutoCluster(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  if (!(f.vol0 > 0.0)) throw InputError("--vol0 is required");
  const AutoNibbleResult r = NibbleAuto(g.graph, NibbleFrom(f, g), f.phi_target, f.classic_scale);
  if (f.format == "csv") {
    Emit(ClusterCsv(r.best, g, echo), f.out, out);
    return kExitOk;
  }
  json body = NibbleJson(r.best, g);
  body["gap_mode"] = r.gap ? NibbleJson(*r.gap, g) : json{{"error", r.gap_error}};
  body["classic_mode"] = r.classic ? NibbleJson(*r.classic, g) : json{{"error", r.classic_error}};
  Emit(Json(body, echo), f.out, out);
  return kExitOk;
}

int RunConn(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  if (f.set.empty()) throw InputError("--set is required");
  const VertexSet a = LoadVertexSet(f.set, g.graph, &g);
  const ConnectivityReport r = ConnAndGap(g.graph, a, ParseConnDefinition(f.definition));
  Emit(Json(ToJson(r), echo), f.out, out);
  return kExitOk;
}

int RunSweepCurve(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  const VertexId seed = g.ToInternal(f.seed_vertex);
  PageRankParams pp;
  pp.alpha = f.alpha.value_or(pp.alpha);
  pp.epsilon = f.eps.value_or(pp.epsilon);
  const auto apr = ApproximatePageRank(g.graph, SparseMass::Indicator(seed), pp);
  const SweepProfile prof = BuildSweepProfile(g.graph, apr.p);
  std::ostringstream os;
  os << CsvEcho(echo);
  WriteSweepProfileCsv(os, prof);
  Emit(os.str(), f.out, out);
  return kExitOk;
}

int RunVerifyAppendix(const Flags& f, const json& echo, std::ostream& out) {
  std::vector<AppendixLemma> lemmas;
  if (f.lemma == "all") {
    lemmas = {AppendixLemma::kA1, AppendixLemma::kA2, AppendixLemma::kA3, AppendixLemma::kA4};
  } else {
    lemmas = {ParseAppendixLemma(f.lemma)};
  }
  const std::vector<std::size_t> ells = f.ells.empty() ? std::vector<std::size_t>{f.ell} : f.ells;
  const std::vector<double> gammas = f.gammas.empty() ? std::vector<double>{f.gamma} : f.gammas;
  std::vector<AppendixCheck> checks;
  for (std::size_t ell : ells) {
    for (double g : gammas) {
      for (AppendixLemma l : lemmas) checks.push_back(VerifyAppendixLemma({l, ell, g}, f.slack));
    }
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (f.format == "json") {
    json rows = json::array();
    for (const auto& c : checks) rows.push_back(ToJson(c));
    Emit(Json({{"checks", rows}, {"pass", all}}, echo), f.out, out);
  } else {
    std::ostringstream os;
    os << CsvEcho(echo) << "lemma,ell,gamma,measured,bound,slacked_bound,truncation,margin,pass\n";
    os << std::setprecision(17);
    for (const auto& c : checks) {
      os << ToString(c.request.lemma) << ',' << c.request.ell << ',' << c.request.gamma << ','
         << c.measured << ',' << c.bound << ',' << c.slacked_bound << ',' << c.truncation << ','
         << c.margin << ',' << (c.pass ? "pass" : "fail") << '\n';
    }
    Emit(os.str(), f.out, out);
  }
  if (!all) throw VerificationFailed{"appendix lemma check failed"};
  return kExitOk;
}

int RunVerifyHard(const Flags& f, const json& echo, std::ostream& out) {
  std::vector<HardGridPoint> points;
  if (f.grid) {
    HardGridOptions opts;
    opts.anchor = f.anchor;
    if (!f.ells.empty()) opts.ells = f.ells;
    if (!f.gammas.empty()) opts.gammas = f.gammas;
    points = HardInstanceGridSearch(opts);
  } else {
    points.push_back(EvaluateHardPoint(f.ell, f.phi_ell2, f.gamma, f.anchor));
  }
  const bool pass = !points.empty() && points.back().pass();
  json rows = json::array();
  for (const auto& p : points) rows.push_back(ToJson(p));
  Emit(Json({{"points", rows}, {"pass", pass}}, echo), f.out, out);
  if (!pass) throw VerificationFailed{"hard-instance check failed"};
  return kExitOk;
}

int RunBetaSweep(const Flags& f, const json& echo, std::ostream& out) {
  BetaSweepConfig cfg;
  cfg.betas = f.betas;
  cfg.runs = f.runs;
  cfg.rng_seed = f.rng_seed;
  cfg.nibble.c_min = f.c_min;
  cfg.nibble.c_max = f.c_max;
  cfg.nibble.epsilon_override = f.eps;
  std::ofstream log;
  if (!f.log.empty()) {
    log.open(ResolveOut(f.log));
    if (!log) throw InputError("cannot open '" + f.log + "' for writing");
  }
  const BetaSweepResult res = BetaSweepExperiment(cfg, [&](const BetaRunRecord& r) {
    if (log.is_open()) log << ToJson(r).dump() << '\n';
  });
  std::ostringstream os;
  os << CsvEcho(echo) << "# alpha_grid:";
  for (double a : cfg.alpha_grid) os << ' ' << a;
  os << "\nbeta,mean_ratio,ci_ratio,mean_acc,ci_acc,mean_phi_a,ci_phi_a,failures\n";
  os << std::setprecision(10);
  for (const auto& r : res.rows) {
    os << r.beta << ',' << r.ratio.mean << ',' << r.ratio.half_width << ',' << r.accuracy.mean
       << ',' << r.accuracy.half_width << ',' << r.phi_a.mean << ',' << r.phi_a.half_width << ','
       << r.failures << '\n';
  }
  Emit(os.str(), f.out, out);
  return kExitOk;
}

int RunSeedSweep(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  if (f.set.empty()) throw InputError("--set is required");
  const VertexSet a = LoadVertexSet(f.set, g.graph, &g);
  SeedSweepConfig cfg;
  cfg.nibble = NibbleFrom(f, g);
  if (!(cfg.nibble.vol0 > 0.0)) cfg.nibble.vol0 = a.volume();
  cfg.rng_seed = f.rng_seed;
  const SeedSweepResult res = SeedSweep(g.graph, a, cfg);
  SeedThresholds t;
  t.vol_out = f.t_vol_out;
  t.vol_miss = f.t_vol_miss;
  t.phi = f.t_phi.value_or(5.0 * Conductance(g.graph, a));
  std::size_t failures = 0;
  for (const auto& o : res.outcomes) failures += o.ok ? 0 : 1;
  Emit(Json({{"fraction", res.Fraction(t)},
             {"seeds", res.outcomes.size()},
             {"sampled", res.sampled},
             {"failures", failures},
             {"thresholds", {{"vol_out", t.vol_out}, {"vol_miss", t.vol_miss}, {"phi", t.phi}}}},
            echo),
       f.out, out);
  return kExitOk;
}

int RunEval(const Flags& f, const json& echo, std::ostream& out) {
  const LoadedGraph g = RequireGraph(f);
  if (f.set.empty() || f.truth.empty()) throw InputError("--set and --truth are required");
  const VertexSet s = LoadVertexSet(f.set, g.graph, &g);
  const VertexSet a = LoadVertexSet(f.truth, g.graph, &g);
  Emit(Json(ToJson(ClusterMetrics(g.graph, s, a)), echo), f.out, out);
  return kExitOk;
}

void AddOutput(CLI::App* app, Flags& f) {
  app->add_option("--out", f.out, "output file (default stdout)");
}

void AddNibble(CLI::App* app, Flags& f) {
  app->add_option("--graph", f.graph, "edge-list file");
  app->add_option("--seed-vertex", f.seed_vertex, "start vertex (file id)");
  app->add_option("--conn", f.conn, "Conn(A) estimate in (0, 1]");
  app->add_option("--vol0", f.vol0, "target volume estimate");
  app->add_option("--alpha-scale", f.alpha_scale, "alpha = min(scale * conn, 1/9)");
  app->add_option("--alpha", f.alpha, "teleport probability override");
  app->add_option("--eps", f.eps, "epsilon override");
  app->add_option("--c-min", f.c_min, "lower end of the c-window");
  app->add_option("--c-max", f.c_max, "upper end of the c-window");
  app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  AddOutput(app, f);
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Local graph clustering with approximate PageRank", "lgc"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "build a graph");
  gen->require_subcommand(1);
  auto* gen_ws = gen->add_subcommand("ws", "Watts-Strogatz ring");
  gen_ws->add_option("--n", f.n, "vertices");
  gen_ws->add_option("--k", f.k, "mean degree (even)");
  gen_ws->add_option("--beta", f.beta, "rewiring probability");
  gen_ws->add_option("--rng-seed", f.rng_seed, "random seed");
  AddOutput(gen_ws, f);
  auto* gen_exp1 = gen->add_subcommand("exp1", "planted 870-vertex benchmark");
  gen_exp1->add_option("--beta", f.beta, "rewiring probability inside A");
  gen_exp1->add_option("--rng-seed", f.rng_seed, "random seed");
  AddOutput(gen_exp1, f);
  auto* gen_hard = gen->add_subcommand("hard", "two-chain hard instance");
  gen_hard->add_option("--ell", f.ell, "top chain length (even)");
  gen_hard->add_option("--phi-ell2", f.phi_ell2, "phi * ell^2");
  gen_hard->add_option("--gamma", f.gamma, "alpha * ell^2, selects c0");
  gen_hard->add_option("--n", f.hard_n, "scale override");
  gen_hard->add_option("--phi", f.hard_phi, "phi override");
  gen_hard->add_option("--c0", f.c0, "c0 override");
  AddOutput(gen_hard, f);
  auto* gen_chain = gen->add_subcommand("chain", "unit path");
  gen_chain->add_option("--ell", f.ell, "edges");
  AddOutput(gen_chain, f);
  auto* gen_knn = gen->add_subcommand("knn", "weighted k-NN graph from a points CSV");
  gen_knn->add_option("--points", f.points, "points CSV");
  gen_knn->add_flag("--label-column", f.label_column, "first CSV column is a label");
  gen_knn->add_option("--k", f.k, "neighbors");
  gen_knn->add_option("--sigma-factor", f.sigma_factor, "sigma = factor * r");
  AddOutput(gen_knn, f);

  auto* cluster = app.add_subcommand("cluster", "PageRank-Nibble from one seed");
  AddNibble(cluster, f);
  cluster->add_option("--phi-accept", f.phi_accept, "run the vol0 doubling search");
  cluster->add_option("--vol0-max", f.vol0_max, "cap for the doubling search (default vol/2)");

  auto* autoc = app.add_subcommand("auto-cluster", "gap and classic mode, keep the better");
  AddNibble(autoc, f);
  autoc->add_option("--phi-target", f.phi_target, "conductance scale for classic mode")
      ->required();
  autoc->add_option("--classic-scale", f.classic_scale, "classic alpha = scale * phi-target");

  auto* conn = app.add_subcommand("conn", "connectivity report of a vertex set");
  conn->add_option("--graph", f.graph, "edge-list file");
  conn->add_option("--set", f.set, "vertex-set file");
  conn->add_option("--definition", f.definition, "mix, lambda or phis");
  AddOutput(conn, f);

  auto* curve = app.add_subcommand("sweep-curve", "sweep profile of an approximate PageRank");
  curve->add_option("--graph", f.graph, "edge-list file");
  curve->add_option("--seed-vertex", f.seed_vertex, "start vertex");
  curve->add_option("--alpha", f.alpha, "teleport probability (default 0.1)");
  curve->add_option("--eps", f.eps, "epsilon (default 1e-4)");
  AddOutput(curve, f);

  auto* va = app.add_subcommand("verify-appendix", "chain PageRank bounds");
  va->add_option("--lemma", f.lemma, "A1, A2, A3, A4 or all");
  va->add_option("--ell", f.ell, "chain length (even)");
  va->add_option("--gamma", f.gamma, "alpha * ell^2");
  va->add_option("--ells", f.ells, "grid of ell values");
  va->add_option("--gammas", f.gammas, "grid of gamma values");
  va->add_option("--slack", f.slack, "slack constant");
  va->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  AddOutput(va, f);

  auto* vh = app.add_subcommand("verify-hard", "hard-instance sweep check");
  vh->add_option("--ell", f.ell, "top chain length");
  vh->add_option("--phi-ell2", f.phi_ell2, "phi * ell^2");
  vh->add_option("--gamma", f.gamma, "alpha * ell^2");
  vh->add_option("--anchor", f.anchor, "required min phi / (phi(A) ell)");
  vh->add_flag("--grid", f.grid, "search the default grid instead");
  vh->add_option("--ells", f.ells, "grid of ell values");
  vh->add_option("--gammas", f.gammas, "grid of gamma values");
  AddOutput(vh, f);

  auto* bs = app.add_subcommand("beta-sweep", "planted-benchmark sweep over beta");
  bs->add_option("--betas", f.betas, "beta grid");
  bs->add_option("--runs", f.runs, "graphs per beta");
  bs->add_option("--rng-seed", f.rng_seed, "random seed");
  bs->add_option("--eps", f.eps, "epsilon override");
  bs->add_option("--c-min", f.c_min, "lower end of the c-window");
  bs->add_option("--c-max", f.c_max, "upper end of the c-window");
  bs->add_option("--log", f.log, "per-run JSONL log");
  AddOutput(bs, f);

  auto* ss = app.add_subcommand("seed-sweep", "fraction of good seeds in a set");
  AddNibble(ss, f);
  ss->add_option("--set", f.set, "ground-truth vertex-set file");
  ss->add_option("--max-vol-out", f.t_vol_out, "threshold on vol(S\\A)/vol(A)");
  ss->add_option("--max-vol-miss", f.t_vol_miss, "threshold on vol(A\\S)/vol(A)");
  ss->add_option("--max-phi", f.t_phi, "threshold on phi(S) (default 5 phi(A))");
  ss->add_option("--rng-seed", f.rng_seed, "sampling seed");

  auto* ev = app.add_subcommand("eval", "cluster metrics of S against A");
  ev->add_option("--graph", f.graph, "edge-list file");
  ev->add_option("--set", f.set, "output set S");
  ev->add_option("--truth", f.truth, "ground truth A");
  AddOutput(ev, f);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    for (CLI::App* sub : {gen_ws, gen_exp1, gen_hard, gen_chain, gen_knn}) {
      if (sub->parsed()) {
        return RunGenerate(sub->get_name(), f, Echo(sub, "generate " + sub->get_name()), out);
      }
    }
    const auto echo = [](CLI::App* sub) { return Echo(sub, sub->get_name()); };
    if (cluster->parsed()) return RunCluster(f, echo(cluster), out);
    if (autoc->parsed()) return RunAutoCluster(f, echo(autoc), out);
    if (conn->parsed()) return RunConn(f, echo(conn), out);
    if (curve->parsed()) return RunSweepCurve(f, echo(curve), out);
    if (va->parsed()) return RunVerifyAppendix(f, echo(va), out);
    if (vh->parsed()) return RunVerifyHard(f, echo(vh), out);
    if (bs->parsed()) return RunBetaSweep(f, echo(bs), out);
    if (ss->parsed()) return RunSeedSweep(f, echo(ss), out);
    if (ev->parsed()) return RunEval(f, echo(ev), out);
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what << "\n";
    return kExitVerification;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lgc
