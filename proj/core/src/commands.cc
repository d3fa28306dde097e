// Copyright 2026 The opcost Authors
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

#include "opcost/commands.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "opcost/bounds.h"
#include "opcost/error.h"
#include "opcost/io.h"
#include "opcost/lattice.h"
#include "opcost/rademacher.h"
#include "opcost/robust.h"
#include "opcost/scenario.h"
#include "opcost/simultaneous.h"
#include "opcost/tolerances.h"

namespace opcost {
namespace {

const std::set<std::string> kProblemKeys = {
    "problem",        "dag",           "dag_events",        "dag_source",
    "dag_sink",       "dag_edges",     "knapsack_costs",    "knapsack_capacity",
    "staffing_coverage", "max_periods_per_shift", "bilinear_costs", "policy_set",
    "policy_lo",      "policy_hi"};

const std::set<std::string> kFitKeys = {
    "train", "test", "unlabeled", "output", "seed", "c1", "c2", "bias", "c1_grid",
    "c1_ceiling", "c1_points", "warm_start", "nm_scale", "nm_max_evals", "nm_tol",
    "nm_restarts", "nm_restart_scale", "pi_resolution", "beta_resolution", "loss_kind"};

const std::set<std::string> kBoundKeys = {
    "train", "sample", "output", "seed", "r", "x_bound", "b_bound", "constraints",
    "epsilon_grid", "lipschitz", "delta", "r_emp", "dudley_grid", "precision_denominator",
    "rademacher_samples"};

const std::set<std::string> kCountKeys = {"p", "K", "integer_constraints", "output"};

const std::set<std::string> kGenKeys = {"scenario", "n_train", "n_test", "noise", "seed",
                                        "output_dir"};

std::set<std::string> Union(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

std::string Resolve(const std::string& path, const std::string& base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

std::string JoinNumbers(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + FormatNumber(v(i));
  return out;
}

Vector ParseVector(const std::string& text, const std::string& what) {
  std::vector<std::string> parts = SplitList(text, ',');
  if (parts.size() <= 1) parts = SplitList(text, ' ');
  Vector v(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) v(i) = ParseDouble(parts[i], what);
  return v;
}

Bias ParseBias(const std::string& text) {
  if (text == "optimistic") return Bias::kOptimistic;
  if (text == "pessimistic") return Bias::kPessimistic;
  Fail(ErrorCode::kInvalidInput, "bias must be 'optimistic' or 'pessimistic', got '" + text +
                                     "'");
}

std::uint64_t RequireSeed(const KeyValueConfig& config, const std::string& command) {
  Require(config.Has("seed"), ErrorCode::kInvalidInput,
          "'" + command + "' is stochastic and needs --seed");
  const std::int64_t seed = config.RequireInt("seed");
  Require(seed >= 0, ErrorCode::kInvalidInput, "seed must be nonnegative");
  return static_cast<std::uint64_t>(seed);
}

NelderMeadConfig NelderMeadFromConfig(const KeyValueConfig& config, std::uint64_t seed) {
  NelderMeadConfig nm;
  nm.initial_simplex_scale = config.GetDouble("nm_scale", nm.initial_simplex_scale);
  nm.max_evals = static_cast<int>(config.GetInt("nm_max_evals", nm.max_evals));
  nm.convergence_tol = config.GetDouble("nm_tol", nm.convergence_tol);
  nm.num_restarts = static_cast<int>(config.GetInt("nm_restarts", nm.num_restarts));
  nm.restart_scale = config.GetDouble("nm_restart_scale", nm.restart_scale);
  nm.seed = seed;
  nm.Validate();
  return nm;
}

// Output goes to the "output" path when set, else to `fallback`.
class Sink {
 public:
  Sink(const KeyValueConfig& config, const std::string& base_dir, std::ostream& fallback)
      : stream_(&fallback) {
    if (config.Has("output")) {
      const std::string path = Resolve(config.RequireString("output"), base_dir);
      file_ = std::make_unique<std::ofstream>(path);
      Require(file_->good(), ErrorCode::kInvalidInput, "cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& out() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

Table SweepTable(const std::vector<SweepRow>& rows, int p) {
  Table table;
  table.header = {"c1", "opcost", "train_loss", "penalized_objective", "r2_train", "r2_test"};
  for (int j = 0; j < p; ++j) table.header.push_back("beta_" + std::to_string(j + 1));
  table.values = Matrix(rows.size(), table.header.size());
  const double nan = std::nan("");
  for (size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    const bool ok = r.error.empty();
    table.values(i, 0) = r.c1;
    table.values(i, 1) = ok ? r.opcost : nan;
    table.values(i, 2) = ok ? r.train_loss : nan;
    table.values(i, 3) = ok ? r.penalized_objective : nan;
    table.values(i, 4) = ok ? r.r2_train : nan;
    table.values(i, 5) = ok && r.r2_test ? *r.r2_test : nan;
    for (int j = 0; j < p; ++j) table.values(i, 6 + j) = ok ? r.beta(j) : nan;
  }
  return table;
}

struct FitInputs {
  Dataset train;
  std::optional<Dataset> test;
  UnlabeledSet unlabeled;
  OpCostProblem problem;
};

FitInputs LoadFitInputs(const KeyValueConfig& config, const std::string& base_dir) {
  FitInputs in{LoadDataset(Resolve(config.RequireString("train"), base_dir)), std::nullopt,
               LoadUnlabeled(Resolve(config.RequireString("unlabeled"), base_dir)),
               ProblemFromConfig(config)};
  if (config.Has("test")) in.test = LoadDataset(Resolve(config.RequireString("test"), base_dir));
  Require(in.train.p() == in.unlabeled.p(), ErrorCode::kInvalidInput,
          "train has " + std::to_string(in.train.p()) + " features, unlabeled has " +
              std::to_string(in.unlabeled.p()));
  if (in.test) {
    Require(in.test->p() == in.train.p(), ErrorCode::kInvalidInput,
            "test and train feature counts differ");
  }
  ValidateProblem(in.problem, in.unlabeled);
  return in;
}

int RunFit(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out) {
  const std::uint64_t seed = RequireSeed(config, "fit");
  const FitInputs in = LoadFitInputs(config, base_dir);
  const NelderMeadConfig nm = NelderMeadFromConfig(config, seed);
  SimultaneousConfig sc{config.GetDouble("c1", 0.0), config.GetDouble("c2", 0.0),
                        ParseBias(config.GetString("bias", "optimistic")), in.problem};
  const FitResult fit = FitSimultaneous(in.train, in.unlabeled, sc, nm);
  SweepRow row;
  row.c1 = sc.c1;
  row.beta = fit.model.beta;
  row.opcost = fit.policy.objective_value;
  row.train_loss = LeastSquaresLoss(fit.model, in.train);
  row.penalized_objective = row.train_loss + sc.c2 * row.beta.squaredNorm();
  row.r2_train = RSquared(PredictAll(fit.model, in.train.X), in.train.y);
  if (in.test) row.r2_test = RSquared(PredictAll(fit.model, in.test->X), in.test->y);
  Sink sink(config, base_dir, out);
  WriteTable(sink.out(), SweepTable({row}, in.train.p()));
  sink.out() << "# policy = " << JoinNumbers(fit.policy.policy) << '\n';
  sink.out() << "# objective = " << FormatNumber(fit.objective) << '\n';
  sink.out() << "# converged = " << (fit.converged ? "true" : "false") << '\n';
  return 0;
}

int RunSweep(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out,
             std::ostream& err) {
  const std::uint64_t seed = RequireSeed(config, "sweep");
  const FitInputs in = LoadFitInputs(config, base_dir);
  const NelderMeadConfig nm = NelderMeadFromConfig(config, seed);
  std::vector<double> grid = config.GetDoubleList("c1_grid");
  if (grid.empty()) {
    grid = DefaultC1Grid(config.GetDouble("c1_ceiling", 1.0),
                         static_cast<int>(config.GetInt("c1_points", 21)));
  }
  SweepOptions options;
  options.warm_start = config.GetBool("warm_start", true);
  options.test = in.test ? &*in.test : nullptr;
  const SweepResult result =
      SweepC1(in.train, in.unlabeled, grid, config.GetDouble("c2", 0.0),
              ParseBias(config.GetString("bias", "optimistic")), in.problem, nm, options);
  Sink sink(config, base_dir, out);
  WriteTable(sink.out(), SweepTable(result.rows, in.train.p()));
  sink.out() << "# cost_range = " << FormatNumber(result.cost_range) << '\n';
  sink.out() << "# relative_cost_range = " << FormatNumber(result.relative_cost_range) << '\n';
  sink.out() << "# r2_train_range = " << FormatNumber(result.r2_train_range) << '\n';
  int status = 0;
  for (size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    if (!row.error.empty()) {
      sink.out() << "# row " << i << " error: " << row.error << '\n';
      err << "error: sweep point c1=" << FormatNumber(row.c1) << ": " << row.error << '\n';
      status = 1;
    } else if (!row.converged) {
      sink.out() << "# row " << i << " did not converge\n";
    }
  }
  return status;
}

std::vector<MarginConstraint> ParseMarginConstraints(const std::string& text, int p) {
  std::vector<MarginConstraint> out;
  for (const std::string& row : SplitList(text, ';')) {
    const auto colon = row.find(':');
    Require(colon != std::string::npos, ErrorCode::kParse,
            "constraint '" + row + "' must look like 'c_1 ... c_p : delta'");
    MarginConstraint con;
    con.c = ParseVector(row.substr(0, colon), "constraints");
    con.delta = ParseDouble(row.substr(colon + 1), "constraints");
    Require(con.c.size() == p, ErrorCode::kInvalidInput,
            "constraint has " + std::to_string(con.c.size()) + " coefficients, expected " +
                std::to_string(p));
    out.push_back(std::move(con));
  }
  return out;
}

int RunBound(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out) {
  Matrix X;
  if (config.Has("sample")) {
    X = LoadUnlabeled(Resolve(config.RequireString("sample"), base_dir)).X;
  } else {
    X = LoadDataset(Resolve(config.RequireString("train"), base_dir)).X;
  }
  HypothesisClassSpec spec;
  spec.p = static_cast<int>(X.cols());
  const std::string r_text = config.GetString("r", "2");
  spec.r = (r_text == "inf" || r_text == "infinity") ? INFINITY : ParseDouble(r_text, "r");
  double max_row = 0.0;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    max_row = std::max(max_row, NormR(X.row(i).transpose(), std::max(1.0, spec.r)));
  }
  spec.x_bound = config.GetDouble("x_bound", max_row > 0.0 ? max_row : 1.0);
  spec.b_bound = config.RequireDouble("b_bound");
  spec.constraints = ParseMarginConstraints(config.GetString("constraints", ""), spec.p);
  spec.Validate();

  std::vector<double> eps = config.GetDoubleList("epsilon_grid");
  if (eps.empty()) {
    for (int k = 1; k <= 10; ++k) eps.push_back(spec.x_bound * spec.b_bound * k / 10.0);
  }
  CoveringOptions options;
  options.precision_denominator =
      config.GetInt("precision_denominator", Tolerances::kDefaultPrecisionDenominator);
  const double delta = config.GetDouble("delta", 0.05);
  const double lipschitz = config.GetDouble("lipschitz", 1.0);
  const int grid = static_cast<int>(config.GetInt("dudley_grid", Tolerances::kDefaultDudleyGrid));
  const BoundReport report =
      ComputeBoundReport(spec, X, eps, lipschitz, delta, grid, options);

  Table table;
  table.header = {"epsilon",   "K0",       "K",         "count_P_K0", "count_Pc_K",
                  "log_covering_bound", "vacuous", "estimated"};
  table.values = Matrix(report.records.size(), table.header.size());
  const double nan = std::nan("");
  for (size_t i = 0; i < report.records.size(); ++i) {
    const CoveringRecord& r = report.records[i];
    table.values.row(i) << r.epsilon, static_cast<double>(r.K0),
        r.K ? static_cast<double>(*r.K) : nan,
        r.count_P_K0 ? static_cast<double>(*r.count_P_K0) : nan,
        r.count_Pc_K ? static_cast<double>(*r.count_Pc_K) : nan, r.log_covering_bound,
        r.vacuous ? 1.0 : 0.0, r.estimated ? 1.0 : 0.0;
  }
  Sink sink(config, base_dir, out);
  WriteTable(sink.out(), table);
  std::ostream& o = sink.out();
  o << "# n = " << X.rows() << '\n';
  o << "# p = " << spec.p << '\n';
  o << "# x_bound = " << FormatNumber(spec.x_bound) << '\n';
  o << "# b_bound = " << FormatNumber(spec.b_bound) << '\n';
  o << "# lambda_min = " << FormatNumber(report.lambda_min) << '\n';
  o << "# dudley_value = " << FormatNumber(report.dudley_value) << '\n';
  o << "# lipschitz = " << FormatNumber(report.lipschitz) << '\n';
  o << "# confidence_delta = " << FormatNumber(report.confidence_delta) << '\n';
  o << "# deviation = " << FormatNumber(report.deviation) << '\n';
  o << "# final_bound_excess = " << FormatNumber(report.final_bound_excess) << '\n';
  if (config.Has("r_emp")) {
    o << "# generalization_bound = "
      << FormatNumber(config.RequireDouble("r_emp") + report.final_bound_excess) << '\n';
  }
  const std::int64_t samples = config.GetInt("rademacher_samples", 0);
  if (samples > 0) {
    const std::uint64_t seed = RequireSeed(config, "bound with rademacher_samples");
    const RademacherEstimate mc =
        EmpiricalRademacherMc(X, spec, static_cast<int>(samples), seed);
    o << "# rademacher_mc = " << FormatNumber(mc.estimate) << '\n';
    o << "# rademacher_se = " << FormatNumber(mc.standard_error) << '\n';
    o << "# rademacher_approximate = " << (mc.approximate ? "true" : "false") << '\n';
  }
  return 0;
}

int RunCount(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out) {
  LatticeCountQuery query;
  query.p = static_cast<int>(config.RequireInt("p"));
  query.K = config.RequireInt("K");
  for (const std::string& row : SplitList(config.GetString("integer_constraints", ""), ';')) {
    const auto le = row.find("<=");
    Require(le != std::string::npos, ErrorCode::kParse,
            "integer constraint '" + row + "' must look like 'g_1 ... g_p <= G'");
    IntegerConstraint con;
    for (const std::string& g : SplitList(row.substr(0, le), ' ')) {
      con.coefficients.push_back(ParseInt(g, "integer_constraints"));
    }
    con.bound = ParseInt(row.substr(le + 2), "integer_constraints");
    Require(static_cast<int>(con.coefficients.size()) == query.p, ErrorCode::kInvalidInput,
            "integer constraint has wrong length");
    query.constraints.push_back(std::move(con));
  }
  Sink sink(config, base_dir, out);
  sink.out() << CountConstrainedLattice(query, Tolerances::kMaxLatticePoints) << '\n';
  return 0;
}

int RunRoCheck(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out) {
  const std::uint64_t seed = RequireSeed(config, "rocheck");
  const FitInputs in = LoadFitInputs(config, base_dir);
  const NelderMeadConfig nm = NelderMeadFromConfig(config, seed);
  EquivalenceOptions options;
  options.bias = ParseBias(config.GetString("bias", "pessimistic"));
  options.pi_resolution = static_cast<int>(
      config.GetInt("pi_resolution", Tolerances::kDefaultGridResolution));
  options.beta_resolution = static_cast<int>(
      config.GetInt("beta_resolution", Tolerances::kDefaultGridResolution));
  options.loss_kind = ParseLossKind(config.GetString("loss_kind", "least-squares"));
  const EquivalenceReport report =
      CheckEquivalence(in.train, in.unlabeled, in.problem, config.GetDouble("c1", 1.0),
                       config.GetDouble("c2", 0.0), nm, options);
  Table table;
  table.header = {"claimed", "policy_distance", "value_gap", "grid_step", "minimax",
                  "maximin", "gap", "tolerance", "c1_star", "c2_star"};
  const double nan = std::nan("");
  const bool pess = report.claimed && options.bias == Bias::kPessimistic;
  table.values = Matrix(1, table.header.size());
  table.values.row(0) << (report.claimed ? 1.0 : 0.0),
      report.claimed ? report.policy_distance : nan, report.claimed ? report.value_gap : nan,
      report.claimed ? report.grid_step : nan, pess ? report.saddle.minimax_value : nan,
      pess ? report.saddle.maximin_value : nan, pess ? report.saddle.gap : nan,
      pess ? report.saddle.tolerance : nan, report.claimed ? report.c1_star : nan,
      report.claimed ? report.c2_star : nan;
  Sink sink(config, base_dir, out);
  WriteTable(sink.out(), table);
  if (!report.claimed) {
    sink.out() << "# equivalence not claimed: " << report.reason << '\n';
  } else {
    sink.out() << "# fitted_beta = " << JoinNumbers(report.fitted_beta) << '\n';
    sink.out() << "# fit_policy = " << JoinNumbers(report.fit_policy) << '\n';
    sink.out() << "# ro_policy = " << JoinNumbers(report.ro_policy) << '\n';
  }
  return 0;
}

int RunGen(const KeyValueConfig& config, const std::string& base_dir, std::ostream& out) {
  ScenarioSpec spec;
  spec.kind = ParseScenarioKind(config.RequireString("scenario"));
  spec.seed = RequireSeed(config, "gen");
  spec.n_train = static_cast<int>(config.GetInt("n_train", 0));
  spec.n_test = static_cast<int>(config.GetInt("n_test", 0));
  spec.noise = config.GetDouble("noise", -1.0);
  const Scenario scenario = GenerateScenario(spec);
  const std::filesystem::path dir = Resolve(config.RequireString("output_dir"), base_dir);
  std::filesystem::create_directories(dir);
  SaveTable((dir / "train.csv").string(), DatasetTable(scenario.train));
  SaveTable((dir / "test.csv").string(), DatasetTable(scenario.test));
  SaveTable((dir / "unlabeled.csv").string(),
            UnlabeledTable(scenario.unlabeled, scenario.train.feature_names));

  KeyValueConfig cfg;
  cfg.Set("train", "train.csv");
  cfg.Set("test", "test.csv");
  cfg.Set("unlabeled", "unlabeled.csv");
  ProblemToConfig(scenario.problem, cfg);
  cfg.Set("c2", FormatNumber(scenario.c2));
  cfg.Set("c1_ceiling", FormatNumber(scenario.c1_ceiling));
  cfg.Set("bias", std::string(BiasName(scenario.bias)));
  std::ofstream file(dir / "scenario.cfg");
  Require(file.good(), ErrorCode::kInvalidInput, "cannot write scenario.cfg");
  file << "# " << ScenarioKindName(spec.kind) << " scenario, seed " << spec.seed << '\n';
  file << "# true_beta = " << JoinNumbers(scenario.true_beta) << '\n';
  for (const auto& [key, value] : cfg.values()) file << key << " = " << value << '\n';
  out << "wrote " << (dir / "train.csv").string() << ", test.csv, unlabeled.csv, scenario.cfg\n";
  return 0;
}

}  // namespace

const std::vector<std::string>& CommandNames() {
  static const std::vector<std::string> names = {"fit",   "sweep",   "bound",
                                                 "count", "rocheck", "gen"};
  return names;
}

const std::set<std::string>& AllowedKeys(const std::string& command) {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"fit", Union(kFitKeys, kProblemKeys)},
      {"sweep", Union(kFitKeys, kProblemKeys)},
      {"rocheck", Union(kFitKeys, kProblemKeys)},
      {"bound", kBoundKeys},
      {"count", kCountKeys},
      {"gen", kGenKeys}};
  auto it = keys.find(command);
  Require(it != keys.end(), ErrorCode::kInvalidInput, "unknown command '" + command + "'");
  return it->second;
}

OpCostProblem ProblemFromConfig(const KeyValueConfig& config) {
  const std::string kind = config.RequireString("problem");
  OpCostProblem problem;
  if (kind == "scheduling") {
    const std::string preset = config.GetString("dag", config.Has("dag_edges") ? "" : "clinic");
    PrecedenceDag dag;
    if (preset == "clinic") {
      dag = PrecedenceDag::ClinicExample();
    } else {
      Require(preset.empty(), ErrorCode::kInvalidInput, "unknown dag preset '" + preset + "'");
      dag.num_events = static_cast<int>(config.RequireInt("dag_events"));
      dag.source = static_cast<int>(config.GetInt("dag_source", 0));
      dag.sink = static_cast<int>(config.GetInt("dag_sink", dag.num_events - 1));
      // "from-to:instance" items separated by commas.
      for (const std::string& item : SplitList(config.RequireString("dag_edges"), ',')) {
        const auto dash = item.find('-');
        const auto colon = item.find(':');
        Require(dash != std::string::npos && colon != std::string::npos && dash < colon,
                ErrorCode::kParse, "edge '" + item + "' must look like 'from-to:instance'");
        dag.edges.push_back({static_cast<int>(ParseInt(item.substr(0, dash), "dag_edges")),
                             static_cast<int>(ParseInt(item.substr(dash + 1, colon - dash - 1),
                                                       "dag_edges")),
                             static_cast<int>(ParseInt(item.substr(colon + 1), "dag_edges"))});
      }
    }
    ValidateDag(dag);
    problem.spec = dag;
  } else if (kind == "knapsack") {
    KnapsackSpec spec;
    spec.fixed_costs = ParseVector(config.RequireString("knapsack_costs"), "knapsack_costs");
    spec.capacity = static_cast<int>(config.RequireInt("knapsack_capacity"));
    problem.spec = spec;
  } else if (kind == "staffing") {
    StaffingSpec spec = StaffingSpec::CallCenter();
    const std::string coverage = config.GetString("staffing_coverage", "callcenter");
    if (coverage != "callcenter") {
      const std::vector<std::string> rows = SplitList(coverage, ';');
      Require(!rows.empty(), ErrorCode::kParse, "empty staffing coverage");
      std::vector<std::vector<std::string>> cells;
      for (const std::string& row : rows) cells.push_back(SplitList(row, ' '));
      spec.coverage = Eigen::MatrixXi(rows.size(), cells[0].size());
      for (size_t i = 0; i < cells.size(); ++i) {
        Require(cells[i].size() == cells[0].size(), ErrorCode::kParse,
                "ragged staffing coverage");
        for (size_t j = 0; j < cells[i].size(); ++j) {
          spec.coverage(i, j) = static_cast<int>(ParseInt(cells[i][j], "staffing_coverage"));
        }
      }
    }
    spec.max_periods_per_shift =
        static_cast<int>(config.GetInt("max_periods_per_shift", spec.max_periods_per_shift));
    ValidateStaffing(spec);
    problem.spec = spec;
  } else if (kind == "bilinear") {
    BilinearSpec spec;
    spec.costs = ParseVector(config.RequireString("bilinear_costs"), "bilinear_costs");
    const std::string set = config.GetString("policy_set", "simplex");
    if (set == "simplex") {
      spec.policy_set = PolicySetKind::kSimplex;
    } else if (set == "box") {
      spec.policy_set = PolicySetKind::kBox;
      spec.box_lo = config.GetDouble("policy_lo", 0.0);
      spec.box_hi = config.GetDouble("policy_hi", 1.0);
    } else {
      Fail(ErrorCode::kInvalidInput, "policy_set must be 'simplex' or 'box'");
    }
    problem.spec = spec;
  } else {
    Fail(ErrorCode::kInvalidInput,
         "problem must be scheduling, knapsack, staffing or bilinear; got '" + kind + "'");
  }
  return problem;
}

void ProblemToConfig(const OpCostProblem& problem, KeyValueConfig& config) {
  config.Set("problem", std::string(ProblemKindName(problem.kind())));
  switch (problem.kind()) {
    case ProblemKind::kScheduling: {
      const auto& dag = std::get<PrecedenceDag>(problem.spec);
      std::string edges;
      for (const DagEdge& e : dag.edges) {
        edges += (edges.empty() ? "" : ",") + std::to_string(e.from) + "-" +
                 std::to_string(e.to) + ":" + std::to_string(e.instance);
      }
      config.Set("dag_events", std::to_string(dag.num_events));
      config.Set("dag_source", std::to_string(dag.source));
      config.Set("dag_sink", std::to_string(dag.sink));
      config.Set("dag_edges", edges);
      break;
    }
    case ProblemKind::kKnapsack: {
      const auto& spec = std::get<KnapsackSpec>(problem.spec);
      config.Set("knapsack_costs", JoinNumbers(spec.fixed_costs));
      config.Set("knapsack_capacity", std::to_string(spec.capacity));
      break;
    }
    case ProblemKind::kStaffing: {
      const auto& spec = std::get<StaffingSpec>(problem.spec);
      std::string rows;
      for (Eigen::Index i = 0; i < spec.coverage.rows(); ++i) {
        if (i) rows += ";";
        for (Eigen::Index j = 0; j < spec.coverage.cols(); ++j) {
          rows += (j ? " " : "") + std::to_string(spec.coverage(i, j));
        }
      }
      config.Set("staffing_coverage", rows);
      config.Set("max_periods_per_shift", std::to_string(spec.max_periods_per_shift));
      break;
    }
    case ProblemKind::kBilinear: {
      const auto& spec = std::get<BilinearSpec>(problem.spec);
      config.Set("bilinear_costs", JoinNumbers(spec.costs));
      if (spec.policy_set == PolicySetKind::kSimplex) {
        config.Set("policy_set", "simplex");
      } else {
        config.Set("policy_set", "box");
        config.Set("policy_lo", FormatNumber(spec.box_lo));
        config.Set("policy_hi", FormatNumber(spec.box_hi));
      }
      break;
    }
  }
}

int RunCommand(const std::string& command, const KeyValueConfig& config,
               const std::string& base_dir, std::ostream& out, std::ostream& err) {
  try {
    config.RejectUnknown(AllowedKeys(command));
    if (command == "fit") return RunFit(config, base_dir, out);
    if (command == "sweep") return RunSweep(config, base_dir, out, err);
    if (command == "bound") return RunBound(config, base_dir, out);
    if (command == "count") return RunCount(config, base_dir, out);
    if (command == "rocheck") return RunRoCheck(config, base_dir, out);
    if (command == "gen") return RunGen(config, base_dir, out);
    Fail(ErrorCode::kInvalidInput, "unknown command '" + command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace opcost
