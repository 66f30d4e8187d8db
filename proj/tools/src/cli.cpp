#include "msemi_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "msemi/axioms.hpp"
#include "msemi/constants.hpp"
#include "msemi/corpus.hpp"
#include "msemi/errors.hpp"
#include "msemi/instances.hpp"
#include "msemi/json_io.hpp"
#include "msemi/levy.hpp"
#include "msemi/suite.hpp"

namespace msemi::cli {

namespace {

using json = nlohmann::json;

constexpr const char* kConfigPrefix = "# config: ";

void require_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& what) {
  if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + what);
    }
  }
}

const json& need(const json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) throw ConfigError(what + " needs '" + key + "'");
  return j.at(key);
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_preamble(const json& config) { return kConfigPrefix + config.dump() + "\n"; }

EngineSpec engine_from(const json& cfg) {
  EngineKind kind = parse_engine_kind(need(cfg, "engine", "check config").get<std::string>());
  if (kind == EngineKind::exact) return EngineSpec::exact();
  return EngineSpec::monte_carlo(need(cfg, "trials", "check config").get<std::uint64_t>(),
                                 need(cfg, "seed", "check config").get<std::uint64_t>());
}

// axioms ---------------------------------------------------------------------

RunResult run_axioms(const json& cfg, bool with_csv) {
  require_keys(cfg, {"command", "instance", "mode", "samples", "seed", "tol", "classify"}, "axioms config");
  InstancePtr inst = parse_instance(need(cfg, "instance", "axioms config").get<std::string>());
  const std::string mode = need(cfg, "mode", "axioms config").get<std::string>();
  const double tol = need(cfg, "tol", "axioms config").get<double>();
  CheckMode check_mode;
  if (mode == "exhaustive") {
    check_mode = Exhaustive{};
  } else if (mode == "sampled") {
    check_mode = Sampled{need(cfg, "samples", "axioms config").get<std::size_t>(),
                         need(cfg, "seed", "axioms config").get<std::uint64_t>()};
  } else {
    throw ConfigError("axioms mode must be exhaustive or sampled, got '" + mode + "'");
  }
  AxiomReport report = verify_axioms(*inst, check_mode, tol);
  RunResult r;
  r.document = {{"config", cfg}, {"report", axiom_report_to_json(report)}};
  if (cfg.value("classify", false)) {
    r.document["properties"] = property_set_to_json(classify_group_metric(*inst, check_mode, tol));
  }
  r.exit_code = report.ok() ? kExitPass : kExitViolation;
  if (with_csv) {
    std::ostringstream os;
    os << csv_preamble(cfg) << "axiom,checked,violations,worst_excess,worst_witness\n";
    for (const auto& c : report.checks) {
      os << c.axiom << ',' << c.checked << ',' << c.violations << ',' << num(c.worst_excess) << ','
         << csv_field(c.worst_witness) << '\n';
    }
    r.csv = os.str();
  }
  return r;
}

// check ----------------------------------------------------------------------

struct ParamReader {
  const json& params;
  const std::string& checker;

  const json& get(const std::string& key) const {
    if (!params.contains(key)) {
      const std::string flag = key == "n" ? "n<i>" : key == "t_i" ? "t<i>" : key;
      throw ConfigError(checker + " needs --" + flag);
    }
    return params.at(key);
  }
  Real real(const std::string& key) const { return Real::parse(get(key).get<std::string>()); }
  double number(const std::string& key) const { return get(key).get<double>(); }
  double number_or(const std::string& key, double fallback) const {
    return params.contains(key) ? params.at(key).get<double>() : fallback;
  }
  unsigned whole(const std::string& key) const { return get(key).get<unsigned>(); }
};

HJParameters hj_from(const ParamReader& in) {
  HJParameters p;
  const auto n = in.get("n").get<std::vector<unsigned>>();
  const auto t = in.get("t_i").get<std::vector<std::string>>();
  if (in.params.contains("k") && in.params.at("k").get<std::size_t>() != n.size()) {
    throw ConfigError("hj: --k does not match the number of --n<i> values");
  }
  if (n.size() != t.size()) throw ConfigError("hj needs one --t<i> per --n<i>");
  p.n = n;
  for (const auto& v : t) p.t.push_back(Real::parse(v));
  p.s = in.real("s");
  return p;
}

SuiteResult run_explicit(const LawContext& ctx, const std::string& checker, const json& params, double tol) {
  ParamReader in{params, checker};
  SuiteResult out;
  if (checker == "hj") {
    out.reports.push_back(check_hj(ctx, hj_from(in)));
  } else if (checker == "hj_simple") {
    out.reports.push_back(check_hj_simple(ctx, in.whole("K"), in.real("t")));
  } else if (checker == "mogulskii") {
    auto [lo, hi] = check_mogulskii(ctx, in.whole("m"), in.real("a"), in.real("b"));
    out.reports.push_back(std::move(lo));
    out.reports.push_back(std::move(hi));
  } else if (checker == "ell_sandwich") {
    out.reports.push_back(check_ell_sandwich(ctx, in.real("t"), tol));
  } else if (checker == "moment_sandwich") {
    out.reports.push_back(check_moment_sandwich(ctx, in.real("t"), in.number("p"), tol));
  } else if (checker == "quantile_lemma") {
    out.ratios.push_back(check_quantile_lemma(ctx, in.real("t"), in.real("s")));
  } else if (checker == "tbounds") {
    auto [r1, r2] = check_tbounds(ctx, in.number("p"));
    out.ratios.push_back(std::move(r1));
    out.ratios.push_back(std::move(r2));
  } else if (checker == "truncated_quantile") {
    out.reports.push_back(check_truncated_quantile(ctx, in.number("p"), in.real("eta")));
  } else if (checker == "hj_moment") {
    out.reports.push_back(check_hj_moment_claim(ctx, in.number("p"), tol));
  } else if (checker == "truncated_moment") {
    out.reports.push_back(check_truncated_moment(ctx, in.number("r"), in.number("p"), tol));
  } else if (checker == "tupq") {
    TupqParameters prm{in.number_or("p0", 1), in.number("p"), in.number("q"), in.number_or("eps", log16())};
    const double c = in.number("c");
    const double cp = in.number_or("c_prime", c_prime(c, prm.p0, prm.eps));
    out.ratios.push_back(required_c(ctx, prm));
    auto [first, second] = check_tupq(ctx, prm, c, cp, tol);
    out.reports.push_back(std::move(first));
    if (second) out.reports.push_back(std::move(*second));
  } else {
    throw ConfigError("unknown checker '" + checker + "'");
  }
  return out;
}

RunResult run_check(const json& cfg, bool with_csv) {
  require_keys(cfg, {"command", "sequence", "engine", "trials", "seed", "tol", "ineq", "grid", "params"},
               "check config");
  IndependentSequence seq = sequence_from_json(need(cfg, "sequence", "check config"));
  const double tol = need(cfg, "tol", "check config").get<double>();
  const std::string grid = need(cfg, "grid", "check config").get<std::string>();
  if (grid != "default" && grid != "explicit") throw ConfigError("--grid must be 'default'");
  const json params = cfg.value("params", json::object());
  require_keys(params, {"k", "n", "t_i", "s", "K", "t", "m", "a", "b", "p", "q", "p0", "eps", "r", "eta", "c",
                        "c_prime"},
               "check params");
  LawContext ctx(seq, engine_from(cfg));
  SuiteResult res;
  for (const auto& name : need(cfg, "ineq", "check config").get<std::vector<std::string>>()) {
    const std::string checker = canonical_checker(name);
    res.append(grid == "default" ? run_default_grid(ctx, checker, tol) : run_explicit(ctx, checker, params, tol));
  }

  json reports = json::array();
  json ratios = json::array();
  std::size_t degenerate = 0;
  for (const auto& r : res.reports) {
    reports.push_back(r.to_json());
    if (r.degenerate) ++degenerate;
  }
  for (const auto& r : res.ratios) ratios.push_back(r.to_json());
  const std::size_t violations = res.violations();
  RunResult out;
  out.document = {{"config", cfg},
                  {"reports", reports},
                  {"ratios", ratios},
                  {"summary", {{"reports", res.reports.size()}, {"violations", violations}, {"degenerate", degenerate}}}};
  out.exit_code = violations == 0 ? kExitPass : kExitViolation;
  if (with_csv) {
    std::ostringstream os;
    os << csv_preamble(cfg) << "kind,name,params,lhs,rhs,slack,holds,certification,degenerate\n";
    for (const auto& r : res.reports) {
      os << "inequality," << r.name << ',' << csv_field(r.params.dump()) << ',' << num(r.lhs.to_double()) << ','
         << num(r.rhs.to_double()) << ',' << num(r.slack.to_double()) << ',' << (r.holds ? "true" : "false") << ','
         << to_string(r.certification) << ',' << csv_field(r.degenerate.value_or("")) << '\n';
    }
    for (const auto& r : res.ratios) {
      os << "ratio," << r.name << ',' << csv_field(r.params.dump()) << ',' << num(r.numerator) << ','
         << num(r.denominator) << ',' << num(r.ratio) << ",,," << csv_field(r.degenerate.value_or("")) << '\n';
    }
    out.csv = os.str();
  }
  return out;
}

// sweep ----------------------------------------------------------------------

std::string estimate_row(const ConstantEstimate& e) {
  std::ostringstream os;
  os << e.constant << ',' << num(e.value) << ',' << e.evaluated << ',' << e.degenerate_excluded << ',';
  if (e.witness) {
    os << e.witness->index << ',' << e.witness->instance << ',' << csv_field(e.witness->params.dump());
  } else {
    os << ",,";
  }
  os << '\n';
  return os.str();
}

RunResult run_sweep(const json& cfg, bool with_csv) {
  require_keys(cfg, {"command", "corpus", "constant", "p0", "eps", "p"}, "sweep config");
  CorpusSpec spec = CorpusSpec::from_json(need(cfg, "corpus", "sweep config"));
  const std::string constant = need(cfg, "constant", "sweep config").get<std::string>();
  auto corpus = generate_corpus(spec);
  RunResult out;
  std::vector<ConstantEstimate> rows;
  if (constant == "c") {
    const double p0 = need(cfg, "p0", "sweep config").get<double>();
    const double eps = need(cfg, "eps", "sweep config").get<double>();
    CEstimate est = estimate_c(corpus, p0, eps, default_pq_grid(), spec.seed);
    out.document = {{"config", cfg}, {"estimate", est.to_json()}};
    out.exit_code = std::isfinite(est.c.value) && est.second_violations == 0 ? kExitPass : kExitViolation;
    rows.push_back(est.c);
  } else if (constant == "c1") {
    ConstantEstimate est = estimate_c1(corpus, default_c1_grid(), spec.seed);
    out.document = {{"config", cfg}, {"estimate", est.to_json()}};
    out.exit_code = std::isfinite(est.value) ? kExitPass : kExitViolation;
    rows.push_back(est);
  } else if (constant == "tbounds") {
    rows = estimate_tbounds(corpus, need(cfg, "p", "sweep config").get<std::vector<double>>(), spec.seed);
    json ests = json::array();
    for (const auto& e : rows) ests.push_back(e.to_json());
    out.document = {{"config", cfg}, {"estimates", ests}};
  } else {
    throw ConfigError("--constant must be c, c1 or tbounds, got '" + constant + "'");
  }
  if (with_csv) {
    std::string csv = csv_preamble(cfg) +
                      "constant,value,evaluated,degenerate_excluded,witness_index,witness_instance,witness_params\n";
    for (const auto& e : rows) csv += estimate_row(e);
    out.csv = csv;
  }
  return out;
}

// levy -----------------------------------------------------------------------

WalkConfig walk_from(const json& j) {
  require_keys(j, {"instance", "schedule", "horizon", "paths", "seed", "eps", "windows", "threshold"}, "walk config");
  WalkConfig w;
  w.instance = parse_instance(need(j, "instance", "walk config").get<std::string>());
  w.schedule = Schedule::parse(need(j, "schedule", "walk config").get<std::string>());
  w.horizon = need(j, "horizon", "walk config").get<std::size_t>();
  w.paths = need(j, "paths", "walk config").get<std::size_t>();
  w.seed = need(j, "seed", "walk config").get<std::uint64_t>();
  w.eps = need(j, "eps", "walk config").get<std::vector<double>>();
  w.windows = need(j, "windows", "walk config").get<std::vector<std::size_t>>();
  w.threshold = need(j, "threshold", "walk config").get<double>();
  return w;
}

RunResult run_levy(const json& cfg, bool with_csv) {
  require_keys(cfg, {"command", "walk"}, "levy config");
  WalkConfig walk = walk_from(need(cfg, "walk", "levy config"));
  LevyReport report = levy_equivalence_experiment(walk);
  RunResult out;
  out.document = {{"config", cfg}, {"report", report.to_json()}};
  if (with_csv) {
    std::ostringstream os;
    os << csv_preamble(cfg);
    write_trace_csv(os, simulate_walk(walk));
    out.csv = os.str();
  }
  return out;
}

// corpus ---------------------------------------------------------------------

RunResult run_corpus(const json& cfg, bool with_csv) {
  require_keys(cfg, {"command", "corpus"}, "corpus config");
  CorpusSpec spec = CorpusSpec::from_json(need(cfg, "corpus", "corpus config"));
  auto corpus = generate_corpus(spec);
  RunResult out;
  out.document = {{"config", cfg}, {"corpus", corpus_to_json(spec, corpus)}};
  if (with_csv) {
    std::ostringstream os;
    os << csv_preamble(cfg) << "index,instance,length,joint_outcomes\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      os << i << ',' << corpus[i].instance().name() << ',' << corpus[i].size() << ','
         << corpus[i].joint_outcomes() << '\n';
    }
    out.csv = os.str();
  }
  return out;
}

json load_config_from_output(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::string first;
  std::getline(in, first);
  if (first.rfind(kConfigPrefix, 0) == 0) {
    try {
      return json::parse(first.substr(std::string(kConfigPrefix).size()));
    } catch (const json::exception& e) {
      throw ConfigError("bad config line in '" + path + "': " + e.what());
    }
  }
  json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("config")) throw ConfigError("'" + path + "' embeds no config");
  return doc.at("config");
}

CorpusSpec corpus_spec_from(const std::string& corpus) {
  if (corpus == "default") return CorpusSpec{};
  return CorpusSpec::from_json(read_json_file(corpus));
}

}  // namespace

RunResult execute(const json& config, bool with_csv) {
  if (!config.is_object() || !config.contains("command")) throw ConfigError("config needs a 'command'");
  const std::string command = config.at("command").get<std::string>();
  if (command == "axioms") return run_axioms(config, with_csv);
  if (command == "check") return run_check(config, with_csv);
  if (command == "sweep") return run_sweep(config, with_csv);
  if (command == "levy") return run_levy(config, with_csv);
  if (command == "corpus") return run_corpus(config, with_csv);
  throw ConfigError("unknown command '" + command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inequality checks, constant sweeps and walk simulations on metric semigroups", "msemi"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string engine = "exact";
  std::uint64_t trials = 100000;
  double tol = kFloatTolerance;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the output here instead of stdout");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  // axioms
  auto* ax = app.add_subcommand("axioms", "Check the metric semigroup axioms on an instance");
  std::string ax_instance;
  std::size_t ax_samples = 10000;
  bool ax_exhaustive = false;
  bool ax_classify = false;
  ax->add_option("instance", ax_instance, "Instance spec, e.g. cyclic:6")->required();
  auto* ax_ex = ax->add_flag("--exhaustive", ax_exhaustive, "Walk every tuple of a finite carrier");
  auto* ax_s = ax->add_option("--samples", ax_samples, "Number of random 4-tuples");
  ax_ex->excludes(ax_s);
  ax->add_flag("--classify", ax_classify, "Also classify the invariance properties of a group metric");
  ax->add_option("--seed", seed, "Sampling seed");
  ax->add_option("--tol", tol, "Tolerance for real-valued metrics");
  add_output(ax);

  // check
  auto* ck = app.add_subcommand("check", "Run inequality checkers on a sequence config");
  std::string ck_config;
  std::vector<std::string> ck_ineq;
  std::string ck_grid;
  ck->add_option("config", ck_config, "Sequence config JSON")->required();
  ck->add_option("--ineq", ck_ineq, "Checker names or 'all'")->required()->delimiter(',');
  ck->add_option("--grid", ck_grid, "Use the default parameter grid")->check(CLI::IsMember({"default"}));
  auto* ck_engine = ck->add_option("--engine", engine, "exact or mc")->check(CLI::IsMember({"exact", "mc", "monte-carlo"}));
  auto* ck_trials = ck->add_option("--trials", trials, "Monte Carlo trials");
  auto* ck_seed = ck->add_option("--seed", seed, "Monte Carlo seed");
  ck->add_option("--tol", tol, "Float-mode tolerance");
  add_output(ck);
  std::map<std::string, std::string> text_params;
  std::map<std::string, double> number_params;
  std::map<std::string, unsigned> whole_params;
  for (const char* key : {"s", "t", "a", "b", "eta", "t1", "t2", "t3"}) {
    ck->add_option(std::string("--") + key, text_params[key], "Exact number (3/10 or 0.3)");
  }
  for (const char* key : {"p", "q", "p0", "eps", "r", "c", "c_prime"}) {
    ck->add_option(std::string("--") + key, number_params[key], "Real parameter");
  }
  for (const char* key : {"k", "K", "m", "n1", "n2", "n3"}) {
    ck->add_option(std::string("--") + key, whole_params[key], "Integer parameter");
  }

  // sweep
  auto* sw = app.add_subcommand("sweep", "Estimate a universal constant over a corpus");
  std::string sw_corpus = "default";
  std::string sw_constant;
  double sw_p0 = 1;
  double sw_eps = log16();
  std::vector<double> sw_p = default_p_grid();
  CorpusSpec shape;
  sw->add_option("--corpus", sw_corpus, "'default' or a corpus spec JSON file");
  sw->add_option("--constant", sw_constant, "c, c1 or tbounds")->required()->check(CLI::IsMember({"c", "c1", "tbounds"}));
  sw->add_option("--p0", sw_p0, "Lower moment bound p0");
  sw->add_option("--eps", sw_eps, "Epsilon (default log 16)");
  sw->add_option("--p", sw_p, "Moment orders for tbounds")->delimiter(',');
  auto* sw_count = sw->add_option("--count", shape.count, "Corpus size");
  auto* sw_seed = sw->add_option("--seed", seed, "Corpus seed");
  add_output(sw);

  // levy
  auto* lv = app.add_subcommand("levy", "Simulate partial-product walks and compare convergence criteria");
  WalkConfig walk;
  std::string lv_instance;
  std::string lv_schedule = "geometric:3";
  std::string lv_trace;
  lv->add_option("--instance", lv_instance, "Instance spec, e.g. torus:1")->required();
  lv->add_option("--schedule", lv_schedule, "geometric:F, constant:uniform, zero or mixed:K");
  lv->add_option("--paths", walk.paths, "Number of simulated paths");
  lv->add_option("--horizon", walk.horizon, "Steps per path");
  lv->add_option("--eps", walk.eps, "Decreasing gap thresholds")->delimiter(',');
  lv->add_option("--windows", walk.windows, "Increasing start indices n0")->delimiter(',');
  lv->add_option("--threshold", walk.threshold, "Path fraction above which a gap persists");
  lv->add_option("--trace-csv", lv_trace, "Also write path,j,distance rows here");
  lv->add_option("--seed", seed, "Simulation seed");
  add_output(lv);

  // corpus
  auto* cp = app.add_subcommand("corpus", "Generate a seeded corpus of random sequences");
  CorpusSpec cp_spec;
  std::string cp_from;
  cp->add_option("--spec", cp_from, "Corpus spec JSON file");
  auto* cp_count = cp->add_option("--count", cp_spec.count, "Number of sequences");
  auto* cp_len = cp->add_option("--max-length", cp_spec.max_length, "Largest sequence length");
  auto* cp_sup = cp->add_option("--max-support", cp_spec.max_support, "Largest support per variable");
  auto* cp_inst = cp->add_option("--instances", cp_spec.instances, "Instance specs, cycled by index")->delimiter(',');
  auto* cp_seed = cp->add_option("--seed", seed, "Corpus seed (default 1)");
  add_output(cp);

  // replay
  auto* rp = app.add_subcommand("replay", "Re-run the config embedded in an earlier output");
  std::string rp_file;
  rp->add_option("output", rp_file, "JSON or CSV output of an earlier run")->required();
  add_output(rp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    json config;
    if (ax->parsed()) {
      InstancePtr inst = parse_instance(ax_instance);
      const bool exhaustive = ax_exhaustive || (ax_s->count() == 0 && inst->capabilities().finite);
      config = {{"command", "axioms"}, {"instance", inst->name()}, {"mode", exhaustive ? "exhaustive" : "sampled"},
                {"tol", tol}, {"classify", ax_classify}};
      if (!exhaustive) {
        config["samples"] = ax_samples;
        config["seed"] = seed;
      }
    } else if (ck->parsed()) {
      SequenceConfig sc = sequence_config_from_json(read_json_file(ck_config));
      EngineKind kind = ck_engine->count() ? parse_engine_kind(engine) : sc.engine.value_or(EngineKind::exact);
      std::vector<std::string> names;
      json params = json::object();
      for (const auto& n : ck_ineq) {
        if (n == "all") {
          for (const auto& c : checker_names()) names.push_back(c);
        } else {
          names.push_back(canonical_checker(n));
        }
      }
      for (const auto& [key, value] : text_params) {
        if (ck->count("--" + key) && key[0] != 't') params[key] = value;
      }
      if (ck->count("--t")) params["t"] = text_params["t"];
      json t_i = json::array();
      json n_i = json::array();
      for (int i = 1; i <= 3; ++i) {
        const std::string ni = "n" + std::to_string(i);
        const std::string ti = "t" + std::to_string(i);
        if (ck->count("--" + ni)) n_i.push_back(whole_params[ni]);
        if (ck->count("--" + ti)) t_i.push_back(text_params[ti]);
      }
      if (!n_i.empty()) params["n"] = n_i;
      if (!t_i.empty()) params["t_i"] = t_i;
      for (const auto& [key, value] : number_params) {
        if (ck->count("--" + key)) params[key] = value;
      }
      for (const char* key : {"k", "K", "m"}) {
        if (ck->count(std::string("--") + key)) params[key] = whole_params[key];
      }
      config = {{"command", "check"},
                {"sequence", sequence_to_json(sc.sequence)},
                {"engine", to_string(kind)},
                {"trials", ck_trials->count() ? trials : sc.trials.value_or(trials)},
                {"seed", ck_seed->count() ? seed : sc.seed.value_or(seed)},
                {"tol", tol},
                {"ineq", names},
                {"grid", ck_grid.empty() ? "explicit" : ck_grid},
                {"params", params}};
    } else if (sw->parsed()) {
      CorpusSpec spec = corpus_spec_from(sw_corpus);
      if (sw_count->count()) spec.count = shape.count;
      if (sw_seed->count()) spec.seed = seed;
      config = {{"command", "sweep"}, {"corpus", spec.to_json()}, {"constant", sw_constant}};
      if (sw_constant == "c") {
        config["p0"] = sw_p0;
        config["eps"] = sw_eps;
      } else if (sw_constant == "tbounds") {
        config["p"] = sw_p;
      }
    } else if (lv->parsed()) {
      walk.instance = parse_instance(lv_instance);
      walk.schedule = Schedule::parse(lv_schedule);
      walk.seed = seed;
      config = {{"command", "levy"}, {"walk", walk.to_json()}};
    } else if (cp->parsed()) {
      CorpusSpec spec = cp_from.empty() ? CorpusSpec{} : corpus_spec_from(cp_from);
      if (cp_count->count()) spec.count = cp_spec.count;
      if (cp_len->count()) spec.max_length = cp_spec.max_length;
      if (cp_sup->count()) spec.max_support = cp_spec.max_support;
      if (cp_inst->count()) spec.instances = cp_spec.instances;
      if (cp_seed->count()) spec.seed = seed;
      config = {{"command", "corpus"}, {"corpus", spec.to_json()}};
    } else {
      config = load_config_from_output(rp_file);
    }

    RunResult result = execute(config, format == "csv");
    const std::string text = format == "csv" ? result.csv : result.document.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot write '" + out_path + "'");
      file << text;
    }
    if (lv->parsed() && !lv_trace.empty()) {
      std::ofstream trace(lv_trace, std::ios::binary);
      if (!trace) throw ConfigError("cannot write '" + lv_trace + "'");
      write_trace_csv(trace, simulate_walk(walk_from(config.at("walk"))));
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace msemi::cli
