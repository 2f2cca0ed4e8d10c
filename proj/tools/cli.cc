// Copyright 2026 The Authors.
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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subord/algorithms.h"
#include "subord/assortment.h"
#include "subord/errors.h"
#include "subord/framework.h"
#include "subord/instances.h"
#include "subord/verify.h"

namespace subord::cli {
namespace {

using nlohmann::json;

// Thrown for flag combinations that parse but make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t ResolveSeed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SUBORD_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("SUBORD_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

std::vector<double> ParseDoubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("not a number in list: '" + item + "'");
    }
  }
  return out;
}

// Owns a base oracle and optionally perturbs it.
class OwnedOracle : public ValueOracle {
 public:
  OwnedOracle(std::unique_ptr<ValueOracle> inner, double delta,
              std::uint64_t seed)
      : ValueOracle(inner->ground_size()), inner_(std::move(inner)) {
    if (delta > 0.0) noisy_ = WrapNoisy(*inner_, delta, seed);
  }

 protected:
  double Evaluate(const ElementSet& s) override {
    return noisy_ ? noisy_->Value(s) : inner_->Value(s);
  }

 private:
  std::unique_ptr<ValueOracle> inner_;
  std::unique_ptr<NoisyOracle> noisy_;
};

std::optional<BruteForceResult> TryBruteForce(const Instance& instance,
                                              const Constraint& constraint) {
  if (std::holds_alternative<Unconstrained>(constraint) &&
      instance.ground_size() > kMaxOrderN) {
    return std::nullopt;
  }
  try {
    auto f = instance.MakeOracle();
    return BruteForceOpt(*f, constraint);
  } catch (const EnumerationCapError&) {
    return std::nullopt;
  }
}

std::string FormatDouble(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

struct SettingRow {
  std::string param;
  double value = 0.0;
  std::int64_t queries = 0;
};

struct RunReport {
  std::string instance;
  std::string algo;
  std::string mode;
  double epsilon = 0.0;
  double noise = 0.0;
  ElementSet solution;
  double value = 0.0;
  std::optional<double> opt;
  std::int64_t queries = 0;
  double wall_ms = 0.0;
  std::vector<SettingRow> settings;

  std::optional<double> ratio() const {
    if (!opt) return std::nullopt;
    if (*opt <= kTolerance) return 1.0;
    return value / *opt;
  }
};

void PrintReport(const RunReport& r, std::ostream& out) {
  out << "instance: " << r.instance << "\n"
      << "algorithm: " << r.algo << "\n"
      << "mode: " << r.mode << "\n"
      << "epsilon: " << FormatDouble(r.epsilon) << "\n"
      << "noise: " << FormatDouble(r.noise) << "\n"
      << "solution: " << r.solution.ToString() << "\n"
      << "value: " << FormatDouble(r.value) << "\n"
      << "opt: " << (r.opt ? FormatDouble(*r.opt) : "n/a") << "\n"
      << "ratio: " << (r.ratio() ? FormatDouble(*r.ratio()) : "n/a") << "\n"
      << "queries: " << r.queries << "\n";
  for (std::size_t i = 0; i < r.settings.size(); ++i) {
    out << "setting " << i << ": " << r.settings[i].param
        << " value=" << FormatDouble(r.settings[i].value)
        << " queries=" << r.settings[i].queries << "\n";
  }
  out << "wall_ms: " << FormatDouble(r.wall_ms) << "\n";
}

void WriteCsv(const RunReport& r, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << "instance,algo,mode,epsilon,value,opt,ratio,queries,wall_ms\n"
       << r.instance << "," << r.algo << "," << r.mode << ","
       << FormatDouble(r.epsilon) << "," << FormatDouble(r.value) << ","
       << (r.opt ? FormatDouble(*r.opt) : "") << ","
       << (r.ratio() ? FormatDouble(*r.ratio()) : "") << "," << r.queries
       << "," << FormatDouble(r.wall_ms) << "\n";
}

void WriteJson(const RunReport& r, const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  json j = {{"instance", r.instance},
            {"algorithm", r.algo},
            {"mode", r.mode},
            {"epsilon", r.epsilon},
            {"noise", r.noise},
            {"solution", r.solution.ToVector()},
            {"value", r.value},
            {"opt", r.opt ? json(*r.opt) : json(nullptr)},
            {"ratio", r.ratio() ? json(*r.ratio()) : json(nullptr)},
            {"queries", r.queries},
            {"wall_ms", r.wall_ms}};
  json settings = json::array();
  for (const SettingRow& s : r.settings) {
    settings.push_back(
        {{"param", s.param}, {"value", s.value}, {"queries", s.queries}});
  }
  j["settings"] = settings;
  file << j.dump(2) << "\n";
}

struct RunOptions {
  std::string instance;
  std::string algo = "cardinality";
  double epsilon = 0.1;
  std::optional<std::size_t> k;
  std::string budgets;
  std::optional<double> total;
  double noisy = 0.0;
  std::optional<std::uint64_t> seed;
  std::string csv;
  std::string json_path;
  int jobs = 1;
};

Constraint ResolveConstraint(const Instance& instance, const RunOptions& o) {
  if (o.k) return CardinalityConstraint{*o.k};
  if (!o.budgets.empty() || o.total) {
    std::vector<double> budgets;
    if (!o.budgets.empty()) {
      budgets = ParseDoubles(o.budgets);
    } else if (const auto* b = std::get_if<BudgetConstraint>(&instance.constraint)) {
      budgets = b->budgets();
    } else {
      throw UsageError("--B needs --budgets or a budget constraint");
    }
    if (!o.total) throw UsageError("--budgets needs --B");
    if (budgets.size() != instance.ground_size()) {
      throw UsageError("--budgets has " + std::to_string(budgets.size()) +
                       " entries, instance has " +
                       std::to_string(instance.ground_size()) + " elements");
    }
    return BudgetConstraint(std::move(budgets), *o.total);
  }
  return instance.constraint;
}

int CmdRun(const RunOptions& o, std::ostream& out) {
  const AlgorithmTag tag = [&] {
    try {
      return ParseAlgorithmTag(o.algo);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }();
  const Instance instance = LoadInstance(o.instance);
  Constraint constraint;
  try {
    constraint = ResolveConstraint(instance, o);
    CheckApplicable(tag, constraint);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (!(o.noisy >= 0.0 && o.noisy < 1.0)) {
    throw UsageError("--noisy must lie in [0, 1)");
  }
  const std::uint64_t seed = ResolveSeed(o.seed);

  RunReport report;
  report.instance = instance.id.empty() ? o.instance : instance.id;
  report.algo = o.algo;
  report.epsilon = o.epsilon;
  report.noise = o.noisy;

  const auto start = std::chrono::steady_clock::now();
  const auto choice = instance.choice_model();
  if (choice && !instance.order) {
    report.mode = "framework";
    OwnedOracle f(instance.MakeOracle(), o.noisy, seed);
    const FrameworkResult result =
        RunFramework(tag, *choice, f, constraint, o.epsilon);
    report.solution = result.best.solution;
    report.queries = result.total_queries;
    for (const FrameworkRun& run : result.runs) {
      report.settings.push_back(
          {run.param.ToString(), run.result.value, run.result.queries});
    }
  } else {
    report.mode = "direct";
    const Order order = instance.DefaultOrder();
    OracleFactory factory = [&]() -> std::unique_ptr<ValueOracle> {
      return std::make_unique<OwnedOracle>(instance.MakeOracle(), o.noisy,
                                           seed);
    };
    const CompositeResult result = MaximizeParallel(
        tag, factory, order.perm(), constraint, o.epsilon, o.jobs);
    report.solution = result.best.solution;
    report.queries = result.total_queries;
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
      report.settings.push_back({result.params[i].ToString(),
                                 result.runs[i].value, result.runs[i].queries});
    }
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  report.value = instance.MakeOracle()->Value(report.solution);
  if (auto opt = TryBruteForce(instance, constraint)) report.opt = opt->value;

  PrintReport(report, out);
  if (!o.csv.empty()) WriteCsv(report, o.csv);
  if (!o.json_path.empty()) WriteJson(report, o.json_path);
  return kOk;
}

struct VerifyOptions {
  std::string instance;
  std::string property;
  std::string order = "default";
  std::string algo = "cardinality";
  double epsilon = 0.1;
  std::optional<std::size_t> k;
};

Order ResolveOrder(const Instance& instance, const std::string& name) {
  const std::size_t n = instance.ground_size();
  if (name == "identity") return Order::Identity(n);
  if (name == "declared") {
    if (!instance.order) throw UsageError("instance declares no order");
    return *instance.order;
  }
  if (name == "descending-price") {
    if (instance.kind == InstanceKind::kMixture) {
      return DescendingPriceOrder(instance.mixture->prices());
    }
    if (!instance.choice_model()) {
      throw UsageError("descending-price needs a choice-model instance");
    }
    return DescendingPriceOrder(instance.choice_model()->prices());
  }
  return instance.DefaultOrder();
}

void PrintVerdict(const std::string& property, const CheckResult& result,
                  std::ostream& out) {
  if (result) {
    out << "FAIL " << property << ": " << result->ToString() << "\n";
  } else {
    out << "PASS " << property << "\n";
  }
}

int CmdVerify(const VerifyOptions& o, std::ostream& out) {
  const Instance instance = LoadInstance(o.instance);
  const std::string& p = o.property;
  auto need_model = [&]() {
    auto model = instance.choice_model();
    if (!model) throw UsageError(p + " needs an mnl or markov instance");
    return model;
  };
  if (p == "monotone") {
    PrintVerdict(p, CheckMonotone(*instance.MakeOracle()), out);
  } else if (p == "subadditive") {
    PrintVerdict(p, CheckSubadditive(*instance.MakeOracle()), out);
  } else if (p == "strong-order") {
    PrintVerdict(p, CheckStrongOrder(*instance.MakeOracle(),
                                     ResolveOrder(instance, o.order)),
                 out);
  } else if (p == "weak-order") {
    PrintVerdict(p, CheckWeakOrder(*instance.MakeOracle(),
                                   ResolveOrder(instance, o.order)),
                 out);
  } else if (p == "substitutable") {
    PrintVerdict(p, CheckSubstitutable(*need_model()), out);
  } else if (p == "compatible") {
    PrintVerdict(p, CheckCompatibility(*need_model()), out);
  } else if (p == "piecewise") {
    const auto model = need_model();
    const Constraint constraint =
        o.k ? Constraint{CardinalityConstraint{*o.k}} : instance.constraint;
    AlgorithmTag tag;
    try {
      tag = ParseAlgorithmTag(o.algo);
      CheckApplicable(tag, constraint);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
    ChoiceObjectiveOracle f(model);
    if (f.ground_size() > kMaxOrderN) {
      throw EnumerationCapError("piecewise order check enumerates at most n = " +
                                std::to_string(kMaxOrderN) + " elements");
    }
    const FrameworkResult result =
        RunFramework(tag, *model, f, constraint, o.epsilon);
    CheckResult first;
    for (const FrameworkRun& run : result.runs) {
      first = CheckPiecewiseOrder(f, run.history);
      if (first) break;
    }
    PrintVerdict(p, first, out);
  } else {
    throw UsageError("unknown property '" + p + "'");
  }
  return kOk;
}

struct GenOptions {
  std::string kind;
  std::string out;
  std::size_t k = 5;
  double eps_f = 0.01;
  std::size_t n = 8;
  std::size_t n1 = 6;
  std::size_t k1 = 2;
  std::size_t k2 = 1;
  std::size_t r = 1;
  std::size_t types = 3;
  std::optional<std::size_t> card_k;
  std::optional<std::uint64_t> seed;
};

int CmdGen(const GenOptions& o, std::ostream& out) {
  const std::uint64_t seed = ResolveSeed(o.seed);
  Instance instance;
  try {
    if (o.kind == "example1") {
      instance = GenExample1(o.k, o.eps_f);
    } else if (o.kind == "hidden-set") {
      instance = GenHiddenSet(o.n1, o.k1, o.k2, o.r, seed);
    } else if (o.kind == "mnl") {
      instance = GenRandomMnl(o.n, seed);
    } else if (o.kind == "markov") {
      instance = GenRandomMarkov(o.n, seed);
    } else if (o.kind == "markov4") {
      instance = GenMarkov4Item();
    } else if (o.kind == "mixture") {
      instance = GenRandomMixture(o.n, o.types, seed);
    } else if (o.kind == "coverage") {
      instance = GenRandomSubmodular(o.n, seed);
    } else {
      throw UsageError("unknown generator '" + o.kind + "'");
    }
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (o.card_k) instance.constraint = CardinalityConstraint{*o.card_k};
  SaveInstance(instance, o.out);
  out << "wrote " << InstanceKindName(instance.kind) << " instance with "
      << instance.ground_size() << " elements to " << o.out << "\n";
  return kOk;
}

struct BenchRow {
  std::string instance;
  std::string algo;
  std::optional<double> ratio;
  double bound = 0.0;
  std::int64_t queries = 0;
  std::optional<double> query_bound;
};

double Ratio(double value, double opt) {
  return opt <= kTolerance ? 1.0 : value / opt;
}

std::vector<Instance> BenchCorpus(std::uint64_t seed, std::size_t count) {
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 6 + i % 3;
    out.push_back(i % 2 == 0 ? GenRandomSubmodular(n, seed + i)
                             : GenRandomMnl(n, seed + i));
  }
  return out;
}

void BenchCardinality(std::uint64_t seed, std::vector<BenchRow>& rows) {
  const double eps = 0.1;
  for (const Instance& inst : BenchCorpus(seed, 20)) {
    const std::size_t n = inst.ground_size();
    const std::size_t k = 2 + n % 3;
    const Constraint c = CardinalityConstraint{k};
    auto f = inst.MakeOracle();
    const CompositeResult res =
        Maximize(AlgorithmTag::kCardinality, *f, inst.DefaultOrder().perm(), c, eps);
    const double opt = BruteForceOpt(*inst.MakeOracle(), c).value;
    rows.push_back({inst.id, "cardinality", Ratio(res.best.value, opt),
                    (1 - eps) * 0.5, res.total_queries,
                    4.0 * (n / eps) * std::log(static_cast<double>(k))});
  }
}

void BenchBudget(std::uint64_t seed, std::vector<BenchRow>& rows) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cost(1, 4);
  for (const Instance& inst : BenchCorpus(seed, 20)) {
    const std::size_t n = inst.ground_size();
    std::vector<double> b(n);
    for (double& x : b) x = cost(rng);
    const Constraint c = BudgetConstraint(b, 6.0);
    const double opt = BruteForceOpt(*inst.MakeOracle(), c).value;
    const auto seq = inst.DefaultOrder();
    auto f = inst.MakeOracle();
    const CompositeResult third =
        Maximize(AlgorithmTag::kBudgetThird, *f, seq.perm(), c, 0.1);
    rows.push_back({inst.id, "budget_third", Ratio(third.best.value, opt),
                    0.9 / 3.0, third.total_queries, std::nullopt});
    auto g = inst.MakeOracle();
    const CompositeResult half =
        Maximize(AlgorithmTag::kBudgetHalf, *g, seq.perm(), c, 0.25);
    rows.push_back({inst.id, "budget_half", Ratio(half.best.value, opt), 0.25,
                    half.total_queries, std::nullopt});
  }
}

void BenchMatroid(std::uint64_t seed, std::vector<BenchRow>& rows) {
  for (const Instance& inst : BenchCorpus(seed, 20)) {
    const std::size_t n = inst.ground_size();
    std::vector<std::size_t> blocks(n);
    for (std::size_t e = 0; e < n; ++e) blocks[e] = e % 3;
    const auto matroid = std::make_shared<PartitionMatroid>(
        blocks, std::vector<std::size_t>{1, 1, 2});
    const Constraint c = std::shared_ptr<const Matroid>(matroid);
    auto f = inst.MakeOracle();
    const RunResult run =
        MatroidLocalSearch(*f, inst.DefaultOrder().perm(), *matroid);
    const double opt = BruteForceOpt(*inst.MakeOracle(), c).value;
    rows.push_back({inst.id, "matroid", Ratio(run.value, opt), 0.25,
                    run.marginal_queries, static_cast<double>(n)});
  }
}

void BenchFramework(std::uint64_t seed, std::vector<BenchRow>& rows) {
  const double eps = 0.1;
  for (std::size_t i = 0; i < 10; ++i) {
    const Instance inst = GenRandomMarkov(6, seed + i);
    const Constraint c = CardinalityConstraint{3};
    ChoiceObjectiveOracle f(inst.choice_model());
    const FrameworkResult res =
        RunFramework(AlgorithmTag::kCardinality, *inst.markov, f, c, eps);
    const double opt = BruteForceOpt(*inst.MakeOracle(), c).value;
    rows.push_back({inst.id, "framework-cardinality",
                    Ratio(res.best.value, opt), (1 - eps) * 0.5,
                    res.total_queries, std::nullopt});
  }
}

int CmdBench(const std::string& suite, const std::string& csv,
             std::optional<std::uint64_t> seed_flag, std::ostream& out) {
  const std::uint64_t seed = ResolveSeed(seed_flag);
  std::vector<BenchRow> rows;
  const bool all = suite == "all";
  if (!all && suite != "cardinality" && suite != "budget" &&
      suite != "matroid" && suite != "framework") {
    throw UsageError("unknown bench suite '" + suite + "'");
  }
  if (all || suite == "cardinality") BenchCardinality(seed, rows);
  if (all || suite == "budget") BenchBudget(seed, rows);
  if (all || suite == "matroid") BenchMatroid(seed, rows);
  if (all || suite == "framework") BenchFramework(seed, rows);

  std::ostringstream table;
  table << "instance,algo,ratio,bound,queries,query_bound\n";
  for (const BenchRow& r : rows) {
    table << r.instance << "," << r.algo << ","
          << (r.ratio ? FormatDouble(*r.ratio) : "") << ","
          << FormatDouble(r.bound) << "," << r.queries << ","
          << (r.query_bound ? FormatDouble(*r.query_bound) : "") << "\n";
  }
  if (csv.empty()) {
    out << table.str();
  } else {
    std::ofstream file(csv);
    if (!file) throw UsageError("cannot write " + csv);
    file << table.str();
    out << "wrote " << rows.size() << " rows to " << csv << "\n";
  }
  return kOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Submodular-order maximization and assortment tools", "subord"};
  app.require_subcommand(1);

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "run an algorithm on an instance");
  run_cmd->add_option("instance", run.instance, "instance file")->required();
  run_cmd->add_option("--algo", run.algo,
                      "cardinality | budget_third | budget_half | matroid");
  run_cmd->add_option("--epsilon", run.epsilon, "accuracy parameter");
  run_cmd->add_option("--k", run.k, "override with a cardinality constraint");
  run_cmd->add_option("--budgets", run.budgets, "comma separated costs");
  run_cmd->add_option("--B", run.total, "budget total");
  run_cmd->add_option("--noisy", run.noisy, "multiplicative oracle noise");
  run_cmd->add_option("--seed", run.seed, "seed (default $SUBORD_SEED or 0)");
  run_cmd->add_option("--csv", run.csv, "write a CSV report");
  run_cmd->add_option("--json", run.json_path, "write a JSON report");
  run_cmd->add_option("--jobs", run.jobs, "worker threads for settings");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a property");
  verify_cmd->add_option("instance", verify.instance, "instance file")
      ->required();
  verify_cmd
      ->add_option("--property", verify.property,
                   "monotone | subadditive | strong-order | weak-order | "
                   "substitutable | compatible | piecewise")
      ->required();
  verify_cmd->add_option("--order", verify.order,
                         "descending-price | identity | declared");
  verify_cmd->add_option("--algo", verify.algo, "algorithm for piecewise");
  verify_cmd->add_option("--epsilon", verify.epsilon, "epsilon for piecewise");
  verify_cmd->add_option("--k", verify.k, "cardinality for piecewise");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd
      ->add_option("kind", gen.kind,
                   "example1 | hidden-set | mnl | markov | markov4 | mixture "
                   "| coverage")
      ->required();
  gen_cmd->add_option("out", gen.out, "output file")->required();
  gen_cmd->add_option("--k", gen.k, "example1 size");
  gen_cmd->add_option("--eps-f", gen.eps_f, "example1 poor-element value");
  gen_cmd->add_option("--n", gen.n, "number of elements");
  gen_cmd->add_option("--n1", gen.n1, "hidden-set |N1|");
  gen_cmd->add_option("--k1", gen.k1, "hidden-set k1");
  gen_cmd->add_option("--k2", gen.k2, "hidden-set k2");
  gen_cmd->add_option("--r", gen.r, "hidden-set r");
  gen_cmd->add_option("--types", gen.types, "mixture types");
  gen_cmd->add_option("--card-k", gen.card_k, "attach a cardinality constraint");
  gen_cmd->add_option("--seed", gen.seed, "seed (default $SUBORD_SEED or 0)");

  std::string suite;
  std::string bench_csv;
  std::optional<std::uint64_t> bench_seed;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
  bench_cmd->add_option("suite", suite,
                        "cardinality | budget | matroid | framework | all")
      ->required();
  bench_cmd->add_option("--csv", bench_csv, "write CSV here");
  bench_cmd->add_option("--seed", bench_seed, "seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (run_cmd->parsed()) return CmdRun(run, out);
    if (verify_cmd->parsed()) return CmdVerify(verify, out);
    if (gen_cmd->parsed()) return CmdGen(gen, out);
    return CmdBench(suite, bench_csv, bench_seed, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const EnumerationCapError& e) {
    err << "refused: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "instance error: " << e.what() << "\n";
    return kInstanceError;
  } catch (const InputError& e) {
    err << "instance error: " << e.what() << "\n";
    return kInstanceError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInstanceError;
  }
}

}  // namespace subord::cli
