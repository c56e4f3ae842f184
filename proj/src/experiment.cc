// Copyright 2026 The Quantal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "quantal/experiment.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>

#include "quantal/game_zoo.h"
#include "quantal/metrics.h"
#include "quantal/qse_optimizer.h"
#include "quantal/regret_solvers.h"
#include "quantal/strategy.h"

namespace quantal {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

const std::set<std::string>& NamedFamilies() {
  static const std::set<std::string> names = {
      "badqne",  "game1",        "game2",           "game3",
      "matching_pennies", "rock_paper_scissors", "two_qse", "coordination",
      "leduc"};
  return names;
}

const std::set<std::string>& KnownFamilies() {
  static const std::set<std::string> names = [] {
    std::set<std::string> s = NamedFamilies();
    for (const char* f :
         {"random_nfg", "random_efg", "grab_the_dollar", "majority_voting",
          "travelers_dilemma", "war_of_attrition", "one_card_poker",
          "goofspiel", "partition", "file"}) {
      s.insert(f);
    }
    return s;
  }();
  return names;
}

// Accepted algorithm names and the solver they select.
const std::map<std::string, std::string>& AlgorithmAliases() {
  static const std::map<std::string, std::string> names = {
      {"nash", "nash"},       {"cfr", "nash"},       {"cfr+", "nash"},
      {"rm+", "nash"},        {"qne", "qne"},        {"cfr-qr", "qne"},
      {"cfr_qr", "qne"},      {"rm-qr", "qne"},      {"rm_qr", "qne"},
      {"cfr_br", "cfr_br"},   {"cfr-br", "cfr_br"},  {"comb", "comb"},
      {"rqr", "rqr"},         {"ga", "ga"},          {"qse_ga", "ga"},
      {"best_ne", "best_ne"}, {"stored", "stored"}};
  return names;
}

std::string Canonical(const std::string& name) {
  const auto it = AlgorithmAliases().find(name);
  if (it == AlgorithmAliases().end()) {
    throw GameError("unknown algorithm '" + name + "'");
  }
  return it->second;
}

std::string Label(const AlgorithmSpec& spec) {
  return spec.params.value("label", spec.name);
}

template <typename T>
T Param(const Json& params, const char* key, T fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<T>();
}

std::string Compact(double v) {
  std::string s = FormatNumber(v);
  return s.empty() ? "nan" : s;
}

std::string ParamsTag(const GameSpec& spec) {
  const Json& p = spec.params;
  const std::string& f = spec.family;
  if (f == "random_nfg") {
    std::string tag = std::to_string(Param(p, "rows", 10)) + "x" +
                      std::to_string(Param(p, "cols", 10));
    if (!Param(p, "zero_sum", true)) tag += "_gs";
    return tag;
  }
  if (f == "random_efg") {
    if (p.contains("set")) return "set" + std::to_string(p.at("set").get<int>());
    return "b" + std::to_string(Param(p, "b", 3)) + "o" +
           std::to_string(Param(p, "o", 2)) + "l" +
           std::to_string(Param(p, "l", 1));
  }
  if (f == "grab_the_dollar" || f == "majority_voting" ||
      f == "travelers_dilemma" || f == "war_of_attrition") {
    return "n" + std::to_string(Param(p, "n", 10));
  }
  if (f == "one_card_poker") return "k" + std::to_string(Param(p, "deck_size", 3));
  if (f == "goofspiel") return "k" + std::to_string(Param(p, "k", 4));
  if (f == "game3") {
    return "a" + Compact(Param(p, "a", 0.0)) + "b" + Compact(Param(p, "b", 1.0)) +
           "c" + Compact(Param(p, "c", 2.0));
  }
  if (f == "partition") {
    std::string tag;
    for (int x : p.at("items").get<std::vector<int>>()) {
      if (!tag.empty()) tag += "-";
      tag += std::to_string(x);
    }
    return tag + (Param<std::string>(p, "variant", "zero_sum") == "general_sum"
                      ? "_gs"
                      : "_zs");
  }
  return "";
}

AnyGame BuildGame(const GameSpec& spec, std::uint64_t seed) {
  const Json& p = spec.params;
  const std::string& f = spec.family;
  if (f == "badqne") return zoo::BadQne();
  if (f == "game1") return zoo::Game1();
  if (f == "game2") return zoo::Game2();
  if (f == "game3") {
    return zoo::Game3(Param(p, "a", 0.0), Param(p, "b", 1.0), Param(p, "c", 2.0));
  }
  if (f == "matching_pennies") return zoo::MatchingPennies();
  if (f == "rock_paper_scissors") return zoo::RockPaperScissors();
  if (f == "two_qse") return zoo::TwoQseGame();
  if (f == "coordination") return zoo::Coordination();
  if (f == "leduc") return zoo::LeducHoldem();
  if (f == "random_nfg") {
    return zoo::RandomNfg(Param(p, "rows", 10), Param(p, "cols", 10), seed,
                          Param(p, "zero_sum", true));
  }
  if (f == "random_efg") {
    zoo::EfgSetParams s{Param(p, "b", 3), Param(p, "o", 2), Param(p, "l", 1)};
    if (p.contains("set")) s = zoo::RandomEfgSet(p.at("set").get<int>());
    return zoo::RandomEfg(s.b, s.o, s.l, seed);
  }
  if (f == "grab_the_dollar" || f == "majority_voting" ||
      f == "travelers_dilemma" || f == "war_of_attrition") {
    return zoo::GamutStyle(zoo::GamutFamilyFromName(f), Param(p, "n", 10), seed);
  }
  if (f == "one_card_poker") return zoo::OneCardPoker(Param(p, "deck_size", 3));
  if (f == "goofspiel") return zoo::Goofspiel(Param(p, "k", 4));
  if (f == "partition") {
    const std::string variant = Param<std::string>(p, "variant", "zero_sum");
    if (variant != "zero_sum" && variant != "general_sum") {
      throw GameError("partition variant must be zero_sum or general_sum");
    }
    return zoo::PartitionReductionGame(
        p.at("items").get<std::vector<int>>(),
        variant == "zero_sum" ? zoo::ReductionVariant::kZeroSum
                              : zoo::ReductionVariant::kGeneralSum);
  }
  if (f == "file") return GameFromJson(ReadJsonFile(p.at("path").get<std::string>()));
  throw GameError("unknown game family '" + f + "'");
}

struct Instance {
  std::string id;
  std::string family;
  std::uint64_t seed = 0;
  AnyGame game;
};

std::vector<Instance> Instantiate(const ExperimentConfig& config) {
  std::vector<Instance> out;
  for (const GameSpec& spec : config.games) {
    for (std::uint64_t seed : spec.seeds) {
      out.push_back({GameId(spec, seed), spec.family, seed, BuildGame(spec, seed)});
    }
  }
  return out;
}

bool IsZeroSum(const AnyGame& game) {
  return std::visit([](const auto& g) { return g.zero_sum(); }, game);
}

const AlgorithmSpec* FindCanonical(const ExperimentConfig& config,
                                   const std::string& canonical) {
  for (const AlgorithmSpec& a : config.algorithms) {
    if (Canonical(a.name) == canonical) return &a;
  }
  return nullptr;
}

Json ParamsOf(const AlgorithmSpec* spec) {
  return spec ? spec->params : Json::object();
}

std::uint64_t JobSeed(const ExperimentConfig& config, const Json& params,
                      std::uint64_t game_seed) {
  if (params.contains("seed")) return params.at("seed").get<std::uint64_t>();
  return config.seed * 1000003ULL + game_seed;
}

SolverOptions RegretOptions(const ExperimentConfig& config, const Json& params,
                            std::optional<double> value) {
  SolverOptions o;
  o.iterations = Param(params, "iterations", 10000L);
  o.tolerance = Param(params, "tolerance", 0.0);
  o.check_every = Param(params, "check_every", 100L);
  o.game_value = value;
  o.record_trace = config.traces;
  return o;
}

GaConfig GaOptions(const ExperimentConfig& config, const Json& params,
                   std::uint64_t game_seed) {
  GaConfig c;
  c.max_iters = Param(params, "max_iters", c.max_iters);
  c.step_size_init = Param(params, "step_size_init", c.step_size_init);
  c.armijo_backtrack_factor =
      Param(params, "armijo_backtrack_factor", c.armijo_backtrack_factor);
  c.convergence_tol = Param(params, "convergence_tol", c.convergence_tol);
  c.restarts = Param(params, "restarts", c.restarts);
  c.finite_diff_h = Param(params, "finite_diff_h", c.finite_diff_h);
  c.seed = JobSeed(config, params, game_seed);
  c.record_trace = config.traces;
  c.Validate();
  return c;
}

RqrOptions RqrFrom(const ExperimentConfig& config, const Json& params,
                   std::uint64_t game_seed, std::optional<double> value) {
  RqrOptions o;
  // The budget is split evenly between the phases; a fixed p skips phase 1
  // and gives phase 2 the whole budget.
  const long iterations = Param(params, "iterations", 10000L);
  const long half = std::max(1L, iterations / 2);
  o.phase1_iterations = Param(params, "phase1", half);
  o.phase2_iterations =
      Param(params, "phase2", std::max(1L, iterations - o.phase1_iterations));
  o.seed = JobSeed(config, params, game_seed);
  if (params.contains("fixed_p")) {
    o.fixed_p = params.at("fixed_p").get<double>();
    o.phase2_iterations = Param(params, "phase2", iterations);
  }
  o.p0 = Param(params, "p0", o.p0);
  o.step = Param(params, "step", o.step);
  o.threshold = Param(params, "threshold", o.threshold);
  o.game_value = value;
  o.record_trace = config.traces;
  return o;
}

std::optional<double> LambdaOf(const QuantalModel& model) {
  switch (model.kind()) {
    case QuantalModel::Kind::kLogit:
      return model.lambda();
    case QuantalModel::Kind::kUniform:
      return 0.0;
    default:
      return std::nullopt;
  }
}

BehavioralStrategy Combine(const AnyGame& game, const BehavioralStrategy& qne,
                           const BehavioralStrategy& nash, double alpha) {
  if (const auto* efg = std::get_if<ExtensiveFormGame>(&game)) {
    return ConvexCombineEfg(*efg, qne, nash, alpha);
  }
  if (alpha == 1.0) return qne;
  if (alpha == 0.0) return nash;
  MixedStrategy mix(qne.flat().size());
  for (std::size_t a = 0; a < mix.size(); ++a) {
    mix[a] = alpha * qne.flat()[a] + (1.0 - alpha) * nash.flat()[a];
  }
  return BehavioralStrategy::Mixed(Player::kLeader, std::move(mix));
}

// Per-game references shared by the algorithm jobs.
struct Reference {
  std::optional<double> value;
  std::optional<SolveReport> nash;
  std::optional<SolveReport> qne;
};

struct Needs {
  bool nash = false;
  bool qne = false;
};

Reference ComputeReference(const ExperimentConfig& config, const Instance& inst,
                           const QuantalModel& train, Needs needs) {
  Reference ref;
  if (IsZeroSum(inst.game)) {
    ref.value = std::visit(
        [&](const auto& g) {
          return ComputeGameValue(g, config.value_tolerance,
                                  config.value_max_iterations)
              .value;
        },
        inst.game);
  }
  if (needs.nash) {
    const SolverOptions o =
        RegretOptions(config, ParamsOf(FindCanonical(config, "nash")), ref.value);
    ref.nash = std::visit([&](const auto& g) { return SolveNash(g, o); }, inst.game);
  }
  if (needs.qne) {
    const SolverOptions o =
        RegretOptions(config, ParamsOf(FindCanonical(config, "qne")), ref.value);
    ref.qne = std::visit([&](const auto& g) { return SolveQne(g, train, o); },
                         inst.game);
  }
  return ref;
}

BehavioralStrategy LoadStored(const Instance& inst, const Json& params) {
  const fs::path dir = params.at("dir").get<std::string>();
  const std::string of = params.at("of").get<std::string>();
  const fs::path path = dir / (inst.id + "__" + of + ".json");
  BehavioralStrategy s = StrategyFromJson(ReadJsonFile(path.string()));
  std::visit([&](const auto& g) { s.Validate(g); }, inst.game);
  return s;
}

SolveReport RunAlgorithm(const ExperimentConfig& config, const Instance& inst,
                         const Reference& ref, const AlgorithmSpec& spec,
                         const QuantalModel& train) {
  const std::string algo = Canonical(spec.name);
  const Json& params = spec.params;
  if (algo == "nash") return *ref.nash;
  if (algo == "qne") return *ref.qne;
  return std::visit(
      [&](const auto& g) -> SolveReport {
        using G = std::decay_t<decltype(g)>;
        if (algo == "cfr_br") {
          return SolveCfrBr(g, train, RegretOptions(config, params, ref.value));
        }
        if (algo == "comb") {
          CombOptions o;
          o.sweep_size = Param(params, "sweep_size", o.sweep_size);
          o.game_value = ref.value;
          return SolveComb(g, train, ref.nash->strategy, ref.qne->strategy, o);
        }
        if (algo == "rqr") {
          return SolveRqr(g, train, RqrFrom(config, params, inst.seed, ref.value));
        }
        if (algo == "ga") {
          const GaConfig c = GaOptions(config, params, inst.seed);
          if constexpr (std::is_same_v<G, NormalFormGame>) {
            return SolveQseGaNfg(g, train, c, ref.nash->strategy);
          } else {
            return SolveQseGaEfg(g, train, c, ref.nash->strategy);
          }
        }
        if (algo == "best_ne") {
          if constexpr (std::is_same_v<G, NormalFormGame>) {
            if (!ref.value) throw GameError("best_ne needs a zero-sum game");
            return BestNeSearch(g, train, GaOptions(config, params, inst.seed),
                                ref.nash->strategy, *ref.value,
                                Param(params, "ne_tolerance", 1e-4));
          } else {
            throw GameError("best_ne is defined for normal-form games only");
          }
        }
        // stored
        SolveReport r;
        r.algorithm = "stored";
        r.strategy = LoadStored(inst, params);
        r.final_strategy = r.strategy;
        return r;
      },
      inst.game);
}

Needs NeedsOf(const ExperimentConfig& config) {
  Needs n;
  for (const AlgorithmSpec& a : config.algorithms) {
    const std::string c = Canonical(a.name);
    n.nash |= c == "nash" || c == "comb" || c == "ga" || c == "best_ne";
    n.qne |= c == "qne" || c == "comb";
  }
  return n;
}

ResultRow MakeRow(const Instance& inst, const std::string& label,
                  const SolveReport& report, const BehavioralStrategy& strategy,
                  const QuantalModel& model, const std::optional<double>& value) {
  const Evaluation e = std::visit(
      [&](const auto& g) { return Evaluate(g, strategy, model, value); },
      inst.game);
  ResultRow row;
  row.game_id = inst.id;
  row.family = inst.family;
  row.seed = inst.seed;
  row.algorithm = label;
  row.lambda = LambdaOf(model);
  row.iterations = report.iterations;
  row.gain = e.gain;
  row.exploitability = e.exploitability;
  row.eu_vs_qr = e.eu_vs_qr;
  row.eu_vs_br = e.eu_vs_br;
  row.tuned_param = report.tuned_param;
  row.wall_ms = report.wall_ms;
  return row;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GameError("cannot write " + path.string());
  out << text;
  if (!out) throw GameError("error writing " + path.string());
}

std::string Opt(const std::optional<double>& v) {
  return v ? FormatNumber(*v) : std::string();
}

std::string TraceCsv(const std::vector<TraceRow>& rows, bool with_wall_ms) {
  std::ostringstream os;
  os << kTraceHeader << '\n';
  for (const TraceRow& r : rows) {
    os << r.iter << ',' << FormatNumber(r.p_or_alpha) << ','
       << FormatNumber(r.gain_current) << ',' << FormatNumber(r.epsilon_br)
       << ',' << (with_wall_ms ? FormatNumber(r.wall_ms) : "") << '\n';
  }
  return os.str();
}

std::string GaTraceCsv(const std::vector<GaTraceRow>& rows) {
  std::ostringstream os;
  os << kGaTraceHeader << '\n';
  for (const GaTraceRow& r : rows) {
    os << r.restart_id << ',' << r.iter << ',' << FormatNumber(r.objective)
       << ',' << FormatNumber(r.step) << ',' << FormatNumber(r.grad_norm) << '\n';
  }
  return os.str();
}

void WriteArtifacts(const ExperimentConfig& config, const std::string& stem,
                    const SolveReport& report) {
  const fs::path out = config.out_dir;
  WriteJsonFile((out / "strategies" / (stem + ".json")).string(),
                ToJson(report.strategy));
  if (!config.traces) return;
  if (!report.trace.empty()) {
    WriteText(out / "traces" / (stem + ".csv"),
              TraceCsv(report.trace, config.record_wall_ms));
  }
  if (!report.ga_trace.empty()) {
    WriteText(out / "traces" / (stem + "_ga.csv"), GaTraceCsv(report.ga_trace));
  }
}

void PrepareOutDir(const ExperimentConfig& config) {
  const fs::path out = config.out_dir;
  fs::create_directories(out / "strategies");
  if (config.traces) fs::create_directories(out / "traces");
}

// Runs `jobs` closures on `workers` threads. Each job writes only its own
// slot; the first error (in job order) is rethrown after all jobs finish.
template <typename Job>
void RunJobs(std::size_t n, int workers, const Job& job) {
  std::vector<std::string> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long i = 0; i < count; ++i) {
    try {
      job(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      errors[i] = e.what();
      if (errors[i].empty()) errors[i] = "unknown error";
    }
  }
  std::string all;
  for (const std::string& e : errors) {
    if (e.empty()) continue;
    if (!all.empty()) all += "; ";
    all += e;
  }
  if (!all.empty()) throw GameError(all);
}

std::vector<Reference> References(const ExperimentConfig& config,
                                  const std::vector<Instance>& games,
                                  const QuantalModel& train, Needs needs) {
  std::vector<Reference> refs(games.size());
  RunJobs(games.size(), config.workers, [&](std::size_t i) {
    try {
      refs[i] = ComputeReference(config, games[i], train, needs);
    } catch (const std::exception& e) {
      throw GameError(games[i].id + ": " + e.what());
    }
  });
  return refs;
}

struct Solved {
  std::vector<Instance> games;
  std::vector<Reference> refs;
  // reports[g * algorithms + a]
  std::vector<SolveReport> reports;
};

Solved SolveAll(const ExperimentConfig& config) {
  config.Validate();
  PrepareOutDir(config);
  const QuantalModel train = config.model.Scaled(config.lambda_multiplier);
  Solved s;
  s.games = Instantiate(config);
  s.refs = References(config, s.games, train, NeedsOf(config));
  const std::size_t na = config.algorithms.size();
  s.reports.resize(s.games.size() * na);
  RunJobs(s.reports.size(), config.workers, [&](std::size_t job) {
    const Instance& inst = s.games[job / na];
    const AlgorithmSpec& spec = config.algorithms[job % na];
    try {
      const auto start = Clock::now();
      SolveReport report = RunAlgorithm(config, inst, s.refs[job / na], spec, train);
      const std::string algo = Canonical(spec.name);
      if (algo != "nash" && algo != "qne") report.wall_ms = MillisSince(start);
      WriteArtifacts(config, inst.id + "__" + Label(spec), report);
      s.reports[job] = std::move(report);
    } catch (const std::exception& e) {
      throw GameError(inst.id + " / " + spec.name + ": " + e.what());
    }
  });
  return s;
}

void WriteRows(const ExperimentConfig& config, const std::string& file,
               const std::vector<ResultRow>& rows) {
  WriteText(fs::path(config.out_dir) / file,
            FormatCsv(rows, config.record_wall_ms));
}

}  // namespace

ExperimentConfig ExperimentConfig::FromJson(const Json& j) {
  if (!j.is_object()) throw GameError("config must be a JSON object");
  ExperimentConfig c;
  try {
    for (const Json& g : j.value("games", Json::array())) {
      GameSpec spec;
      spec.family = g.at("family").get<std::string>();
      spec.params = g.value("params", Json::object());
      if (g.contains("seeds")) {
        const Json& seeds = g.at("seeds");
        if (seeds.is_number_integer()) {
          spec.seeds.clear();
          const auto n = seeds.get<std::uint64_t>();
          const auto first = g.value("first_seed", std::uint64_t{0});
          for (std::uint64_t k = 0; k < n; ++k) spec.seeds.push_back(first + k);
        } else {
          spec.seeds = seeds.get<std::vector<std::uint64_t>>();
        }
      }
      c.games.push_back(std::move(spec));
    }
    for (const Json& a : j.value("algorithms", Json::array())) {
      AlgorithmSpec spec;
      if (a.is_string()) {
        spec.name = a.get<std::string>();
      } else {
        spec.name = a.at("name").get<std::string>();
        spec.params = a.value("params", Json::object());
        for (const auto& [key, value] : a.items()) {
          if (key != "name" && key != "params") spec.params[key] = value;
        }
      }
      c.algorithms.push_back(std::move(spec));
    }
    if (j.contains("model")) c.model = ModelFromJson(j.at("model"));
    c.lambda_multiplier = j.value("lambda_multiplier", c.lambda_multiplier);
    c.lambdas = j.value("lambdas", c.lambdas);
    c.p_grid = j.value("p_grid", c.p_grid);
    c.value_tolerance = j.value("value_tolerance", c.value_tolerance);
    c.value_max_iterations =
        j.value("value_max_iterations", c.value_max_iterations);
    c.traces = j.value("traces", c.traces);
    c.record_wall_ms = j.value("record_wall_ms", c.record_wall_ms);
    c.workers = j.value("workers", c.workers);
    c.seed = j.value("seed", c.seed);
    c.out_dir = j.value("out_dir", c.out_dir);
  } catch (const Json::exception& e) {
    throw GameError(std::string("malformed config: ") + e.what());
  }
  return c;
}

void ExperimentConfig::Validate(bool need_algorithms) const {
  if (games.empty()) throw GameError("config lists no games");
  if (need_algorithms && algorithms.empty()) {
    throw GameError("config lists no algorithms");
  }
  std::set<std::string> ids;
  for (const GameSpec& g : games) {
    if (!KnownFamilies().count(g.family)) {
      throw GameError("unknown game family '" + g.family + "'");
    }
    if (g.seeds.empty()) throw GameError(g.family + ": empty seed list");
    std::set<std::uint64_t> seen(g.seeds.begin(), g.seeds.end());
    if (seen.size() != g.seeds.size()) {
      throw GameError(g.family + ": seeds must be distinct");
    }
    for (std::uint64_t s : g.seeds) {
      if (!ids.insert(GameId(g, s)).second) {
        throw GameError("duplicate game id " + GameId(g, s));
      }
    }
  }
  std::set<std::string> labels;
  for (const AlgorithmSpec& a : algorithms) {
    Canonical(a.name);
    if (!labels.insert(Label(a)).second) {
      throw GameError("duplicate algorithm label '" + Label(a) + "'");
    }
    if (Canonical(a.name) == "stored" &&
        (!a.params.contains("dir") || !a.params.contains("of"))) {
      throw GameError("stored needs 'dir' and 'of'");
    }
  }
  if (workers < 1) throw GameError("workers must be at least 1");
  if (!(lambda_multiplier > 0.0)) {
    throw GameError("lambda_multiplier must be positive");
  }
  if (!(value_tolerance >= 0.0) || value_max_iterations < 1) {
    throw GameError("invalid value tolerance settings");
  }
  for (double l : lambdas) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw GameError("lambdas must be nonnegative");
    }
  }
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw GameError("p_grid values must be in [0, 1]");
  }
}

std::string FormatNumber(double v) {
  if (std::isnan(v)) return "";
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string FormatCsv(const std::vector<ResultRow>& rows, bool with_wall_ms) {
  std::ostringstream os;
  os << kResultsHeader << '\n';
  for (const ResultRow& r : rows) {
    os << r.game_id << ',' << r.family << ',' << r.seed << ',' << r.algorithm
       << ',' << Opt(r.lambda) << ',' << r.iterations << ',' << Opt(r.gain)
       << ',' << Opt(r.exploitability) << ',' << FormatNumber(r.eu_vs_qr)
       << ',' << FormatNumber(r.eu_vs_br) << ',' << Opt(r.tuned_param) << ','
       << (with_wall_ms ? FormatNumber(r.wall_ms) : "") << '\n';
  }
  return os.str();
}

std::string GameId(const GameSpec& spec, std::uint64_t seed) {
  if (spec.family == "file") {
    return fs::path(spec.params.at("path").get<std::string>()).stem().string();
  }
  const std::string tag = ParamsTag(spec);
  return spec.family + (tag.empty() ? "" : "_" + tag) + "_" +
         std::to_string(seed);
}

std::vector<std::string> CmdGenerate(const ExperimentConfig& config) {
  config.Validate(false);
  fs::create_directories(config.out_dir);
  std::vector<std::pair<const GameSpec*, std::uint64_t>> todo;
  for (const GameSpec& g : config.games) {
    for (std::uint64_t s : g.seeds) todo.emplace_back(&g, s);
  }
  std::vector<std::string> paths(todo.size());
  RunJobs(todo.size(), config.workers, [&](std::size_t i) {
    const auto [spec, seed] = todo[i];
    const AnyGame game = BuildGame(*spec, seed);
    const fs::path path =
        fs::path(config.out_dir) / (GameId(*spec, seed) + ".json");
    std::visit([&](const auto& g) { WriteJsonFile(path.string(), ToJson(g)); },
               game);
    paths[i] = path.string();
  });
  return paths;
}

std::vector<ResultRow> CmdSolve(const ExperimentConfig& config) {
  const Solved s = SolveAll(config);
  const std::size_t na = config.algorithms.size();
  std::vector<ResultRow> rows;
  for (std::size_t job = 0; job < s.reports.size(); ++job) {
    const AlgorithmSpec& spec = config.algorithms[job % na];
    const SolveReport& r = s.reports[job];
    rows.push_back(MakeRow(s.games[job / na], Label(spec), r, r.strategy,
                           config.model, s.refs[job / na].value));
  }
  WriteRows(config, "results.csv", rows);
  return rows;
}

std::vector<ResultRow> CmdSweepLambda(const ExperimentConfig& config) {
  if (config.lambdas.empty()) throw GameError("config lists no lambdas");
  const Solved s = SolveAll(config);
  const std::size_t na = config.algorithms.size();
  const std::size_t nl = config.lambdas.size();
  std::vector<ResultRow> rows(s.reports.size() * nl);
  RunJobs(rows.size(), config.workers, [&](std::size_t i) {
    const std::size_t job = i / nl;
    const SolveReport& r = s.reports[job];
    ResultRow row = MakeRow(s.games[job / na], Label(config.algorithms[job % na]),
                            r, r.strategy, LogitOrUniform(config.lambdas[i % nl]),
                            s.refs[job / na].value);
    rows[i] = std::move(row);
  });
  WriteRows(config, "sweep_lambda.csv", rows);
  return rows;
}

std::vector<ResultRow> CmdPProfile(const ExperimentConfig& config) {
  config.Validate(false);
  PrepareOutDir(config);
  std::vector<double> grid = config.p_grid;
  if (grid.empty()) {
    for (int k = 0; k <= 10; ++k) grid.push_back(k / 10.0);
  }
  const QuantalModel train = config.model.Scaled(config.lambda_multiplier);
  const std::vector<Instance> games = Instantiate(config);
  const std::vector<Reference> refs =
      References(config, games, train, Needs{true, true});
  const Json rqr_params = ParamsOf(FindCanonical(config, "rqr"));
  const std::size_t ng = grid.size();
  // Per game: COMB rows for every grid value, then RQR rows.
  std::vector<ResultRow> rows(games.size() * 2 * ng);
  RunJobs(rows.size(), config.workers, [&](std::size_t i) {
    const std::size_t gi = i / (2 * ng);
    const bool is_rqr = (i % (2 * ng)) >= ng;
    const double v = grid[i % ng];
    const Instance& inst = games[gi];
    const Reference& ref = refs[gi];
    const auto start = Clock::now();
    SolveReport report;
    std::string label;
    if (is_rqr) {
      RqrOptions o = RqrFrom(config, rqr_params, inst.seed, ref.value);
      o.fixed_p = v;
      o.phase2_iterations =
          Param(rqr_params, "phase2", Param(rqr_params, "iterations", 10000L));
      report = std::visit([&](const auto& g) { return SolveRqr(g, train, o); },
                          inst.game);
      label = "rqr";
    } else {
      report.strategy =
          Combine(inst.game, ref.qne->strategy, ref.nash->strategy, v);
      report.final_strategy = report.strategy;
      report.tuned_param = v;
      report.iterations = 1;
      label = "comb";
    }
    report.wall_ms = MillisSince(start);
    WriteArtifacts(config, inst.id + "__" + label + "_p" + FormatNumber(v),
                   report);
    rows[i] = MakeRow(inst, label, report, report.strategy, config.model,
                      ref.value);
  });
  WriteRows(config, "p_profile.csv", rows);
  return rows;
}

std::vector<std::string> CmdValidate(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> inside;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.path().extension() == ".json") {
          inside.push_back(entry.path().string());
        }
      }
      std::sort(inside.begin(), inside.end());
      files.insert(files.end(), inside.begin(), inside.end());
    } else {
      files.push_back(p);
    }
  }
  std::vector<std::string> failures;
  for (const std::string& f : files) {
    try {
      GameFromJson(ReadJsonFile(f));
    } catch (const std::exception& e) {
      failures.push_back(f + ": " + e.what());
    }
  }
  return failures;
}

}  // namespace quantal
