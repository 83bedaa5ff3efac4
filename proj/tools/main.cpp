#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "sto/bounds.hpp"
#include "sto/classical.hpp"
#include "sto/schedules.hpp"
#include "sto/statevec.hpp"
#include "sto/subspace.hpp"
#include "sto/sweep.hpp"

namespace {

struct InstanceFlags {
  std::int64_t n = 1024;
  std::int64_t m = 16;
  std::string c_star = "1";
  std::string c_s = "1";
  double epsilon = 0.0;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("--n", flags.n, "number of items N");
  cmd->add_option("--m", flags.m, "promised set size M");
  cmd->add_option("--c-star", flags.c_star, "expensive oracle cost (rational, e.g. 10 or 1/4)");
  cmd->add_option("--c-s", flags.c_s, "cheap oracle cost (rational)");
  cmd->add_option("--epsilon", flags.epsilon, "allowed failure probability");
}

sto::ProblemInstance make_instance(const InstanceFlags& flags) {
  return {flags.n, flags.m, sto::rational_from_string(flags.c_star),
          sto::rational_from_string(flags.c_s), flags.epsilon};
}

std::ofstream open_out(const std::string& path) {
  std::ofstream file(path, std::ios::binary);  // LF endings everywhere
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

// Stream chosen by --out, defaulting to stdout.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) file_ = open_out(path);
  }
  std::ostream& stream() { return file_ ? static_cast<std::ostream&>(*file_) : std::cout; }

 private:
  std::optional<std::ofstream> file_;
};

int run_simulate(const std::string& plan_path, std::uint64_t seed, const std::string& out_path) {
  std::ifstream in(plan_path);
  if (!in) throw std::runtime_error("cannot read '" + plan_path + "'");
  auto [instance, schedule] = sto::read_plan(in);
  sto::OracleAssignment assignment =
      sto::random_assignment(instance.n, instance.m, true, seed);
  auto [state, ledger] = sto::run_schedule(instance, assignment, schedule);
  double success = sto::success_probability(state, assignment);

  OutputTarget out(out_path);
  out.stream().precision(17);
  out.stream() << "success,q_star,q_s,total_cost\n"
               << success << ',' << ledger.q_star << ',' << ledger.q_s << ','
               << sto::to_double(ledger.total(instance)) << '\n';
  return 0;
}

int run_optimize(const InstanceFlags& flags, const std::string& out_path) {
  sto::ProblemInstance instance = make_instance(flags);
  sto::HybridPlan plan = sto::optimize_hybrid(instance);
  std::cout.precision(17);
  std::cout << "t_inner = " << plan.shape.t_inner << "\n"
            << "tau_outer = " << plan.shape.tau_outer << "\n"
            << "alpha = " << plan.shape.alpha << "\n"
            << "q_star = " << plan.shape.q_star << "\n"
            << "q_s = " << plan.shape.q_s << "\n"
            << "cost = " << sto::to_string(plan.shape.cost) << "\n"
            << "predicted_success = " << plan.shape.success << "\n"
            << "schedule_length = " << plan.plan.schedule.steps.size() << "\n";
  if (!out_path.empty()) {
    std::ofstream file = open_out(out_path);
    sto::write_plan(file, instance, plan.plan.schedule);
  }
  return 0;
}

int run_bounds(const InstanceFlags& flags, const std::string& mode, const std::string& out_path) {
  sto::ProblemInstance instance = make_instance(flags);
  std::vector<sto::BoundReport> reports;
  reports.push_back(sto::qcc_lower_bound(instance));
  if (mode.empty() || mode == "asymptotic")
    reports.push_back(sto::conqcc_lower_bound(instance, sto::ConqccMode::Asymptotic));
  if (mode.empty() || mode == "exact_integer")
    reports.push_back(sto::conqcc_lower_bound(instance, sto::ConqccMode::ExactInteger));
  if (instance.n > instance.m && instance.m >= 2)
    reports.push_back(sto::exact_lower_bound(instance));
  reports.push_back(sto::rcc_bounded_bound(instance));
  {
    sto::BoundReport r;
    r.name = "rcc0";
    r.value = sto::to_double(sto::rcc0(instance));
    r.mode = "exact_integer";
    r.provenance = "zero-error classical minimum";
    reports.push_back(r);
  }

  OutputTarget out(out_path);
  sto::write_bound_reports(out.stream(), reports);
  return 0;
}

int run_classical(const InstanceFlags& flags, const std::string& mode, std::uint64_t seed,
                  const std::string& out_path) {
  sto::ProblemInstance instance = make_instance(flags);
  if (mode == "montecarlo") {
    auto alg4 = sto::classical_strategy(sto::StrategyKind::Alg4);
    auto alg5 = sto::classical_strategy(sto::StrategyKind::Alg5);
    OutputTarget out(out_path);
    out.stream().precision(17);
    out.stream() << "strategy,estimate,stderr\n";
    for (sto::Strategy* s : {alg4.get(), alg5.get()}) {
      sto::MonteCarloResult mc = sto::monte_carlo_success(*s, instance, 1000, seed);
      out.stream() << s->name() << ',' << mc.estimate << ',' << mc.stderr_ << '\n';
    }
    return 0;
  }
  if (!mode.empty() && mode != "game")
    throw CLI::ValidationError("--mode must be 'game' or 'montecarlo'");

  auto alg4 = sto::classical_strategy(sto::StrategyKind::Alg4);
  auto alg5 = sto::classical_strategy(sto::StrategyKind::Alg5);
  std::vector<sto::Strategy*> strategies = {alg4.get(), alg5.get()};
  auto corpus = sto::heuristic_corpus();
  for (const auto& s : corpus) strategies.push_back(s.get());

  std::cout << "rcc0 = " << sto::to_string(sto::rcc0(instance)) << "\n";
  bool all_certified = true;
  for (sto::Strategy* s : strategies) {
    sto::GameResult game = sto::adversary_game(*s, instance);
    all_certified = all_certified && game.certified;
    std::cout << s->name() << ": forced_cost = " << sto::to_string(game.forced_cost)
              << ", certified = " << (game.certified ? "yes" : "no") << "\n";
    if (!out_path.empty() && s == alg5.get()) {
      std::ofstream file = open_out(out_path);
      sto::write_game_transcript(file, game.transcript);
    }
  }
  return all_certified ? 0 : 1;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot read '" + config_path + "'");
  sto::SweepConfig config = sto::parse_sweep_config(in);
  std::string target = out_path.empty() ? config.out : out_path;
  OutputTarget out(target);
  sto::run_sweep(config, out.stream());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search-with-two-oracles simulation and verification lab"};
  app.require_subcommand(1);

  InstanceFlags flags;
  std::string plan_path, config_path, out_path, mode;
  std::uint64_t seed = 0;

  CLI::App* simulate = app.add_subcommand("simulate", "replay a serialized plan");
  simulate->add_option("--plan", plan_path, "plan file")->required();
  simulate->add_option("--seed", seed, "assignment seed");
  simulate->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* optimize = app.add_subcommand("optimize", "optimize the hybrid schedule");
  add_instance_flags(optimize, flags);
  optimize->add_option("--out", out_path, "write the compiled plan here");

  CLI::App* bounds = app.add_subcommand("bounds", "print lower-bound reports");
  add_instance_flags(bounds, flags);
  bounds->add_option("--mode", mode, "exact_integer or asymptotic (default both)");
  bounds->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* classical = app.add_subcommand("classical", "adversary games / Monte Carlo");
  add_instance_flags(classical, flags);
  classical->add_option("--mode", mode, "game (default) or montecarlo");
  classical->add_option("--seed", seed, "Monte Carlo seed");
  classical->add_option("--out", out_path, "transcript / CSV output path");

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a grid from a config file");
  sweep->add_option("--config", config_path, "flat key = value config file")->required();
  sweep->add_option("--out", out_path, "output CSV path (overrides config)");

  CLI::App* fig2 = app.add_subcommand("fig2", "fixed cost-comparison grid CSV");
  fig2->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(plan_path, seed, out_path);
    if (optimize->parsed()) return run_optimize(flags, out_path);
    if (bounds->parsed()) return run_bounds(flags, mode, out_path);
    if (classical->parsed()) return run_classical(flags, mode, seed, out_path);
    if (sweep->parsed()) return run_sweep_cmd(config_path, out_path);
    if (fig2->parsed()) {
      OutputTarget out(out_path);
      sto::fig2(out.stream());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
