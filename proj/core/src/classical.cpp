#include "sto/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace sto {

namespace {

int answer_one_seen(const History& history, OracleKind kind) {
  for (const QueryRecord& q : history)
    if (q.kind == kind && q.answer == 1) return 1;
  return 0;
}

std::vector<Index> positives(const History& history, OracleKind kind) {
  std::vector<Index> out;
  for (const QueryRecord& q : history)
    if (q.kind == kind && q.answer == 1) out.push_back(q.index);
  return out;
}

class Alg4Strategy final : public Strategy {
 public:
  std::string name() const override { return "alg4_star_all"; }
  Action next(const ProblemInstance& instance, const History& history) override {
    if (static_cast<Index>(history.size()) < instance.n)
      return {ActionKind::QueryStar, static_cast<Index>(history.size()) + 1, 0};
    return {ActionKind::Halt, 0, answer_one_seen(history, OracleKind::Star)};
  }
};

class Alg5Strategy final : public Strategy {
 public:
  std::string name() const override { return "alg5_set_then_star"; }
  Action next(const ProblemInstance& instance, const History& history) override {
    const Index n = instance.n, m = instance.m;
    if (static_cast<Index>(history.size()) < n - 1)
      return {ActionKind::QueryS, static_cast<Index>(history.size()) + 1, 0};

    std::vector<Index> found = positives(history, OracleKind::SetOracle);
    std::vector<Index> targets;
    if (static_cast<Index>(found.size()) == m) targets = found;
    else if (static_cast<Index>(found.size()) == m - 1) {
      targets = found;
      targets.push_back(n);  // the one item never asked about membership
    } else
      return {ActionKind::Halt, 0, 0};

    if (answer_one_seen(history, OracleKind::Star)) return {ActionKind::Halt, 0, 1};
    std::size_t stars_done = history.size() - static_cast<std::size_t>(n - 1);
    if (stars_done < targets.size()) return {ActionKind::QueryStar, targets[stars_done], 0};
    return {ActionKind::Halt, 0, 0};
  }
};

// Expensive-oracle sweep in a fixed item order, optionally stopping at the
// first hit.
class StarSweepStrategy final : public Strategy {
 public:
  StarSweepStrategy(std::string name, bool reverse, bool even_first, bool early_exit)
      : name_(std::move(name)), reverse_(reverse), even_first_(even_first),
        early_exit_(early_exit) {}

  std::string name() const override { return name_; }

  Action next(const ProblemInstance& instance, const History& history) override {
    if (early_exit_ && answer_one_seen(history, OracleKind::Star))
      return {ActionKind::Halt, 0, 1};
    std::vector<Index> order = query_order(instance.n);
    if (history.size() < order.size())
      return {ActionKind::QueryStar, order[history.size()], 0};
    return {ActionKind::Halt, 0, answer_one_seen(history, OracleKind::Star)};
  }

 private:
  std::vector<Index> query_order(Index n) const {
    std::vector<Index> order;
    if (even_first_) {
      for (Index i = 2; i <= n; i += 2) order.push_back(i);
      for (Index i = 1; i <= n; i += 2) order.push_back(i);
    } else
      for (Index i = 1; i <= n; ++i) order.push_back(i);
    if (reverse_) std::reverse(order.begin(), order.end());
    return order;
  }

  std::string name_;
  bool reverse_;
  bool even_first_;
  bool early_exit_;
};

// Set-oracle sweep over every item, then expensive queries on the members
// found.
class MembershipFirstStrategy final : public Strategy {
 public:
  MembershipFirstStrategy(std::string name, bool reverse) : name_(std::move(name)), reverse_(reverse) {}

  std::string name() const override { return name_; }

  Action next(const ProblemInstance& instance, const History& history) override {
    const Index n = instance.n;
    if (static_cast<Index>(history.size()) < n) {
      Index pos = static_cast<Index>(history.size()) + 1;
      return {ActionKind::QueryS, reverse_ ? n - pos + 1 : pos, 0};
    }
    if (answer_one_seen(history, OracleKind::Star)) return {ActionKind::Halt, 0, 1};
    std::vector<Index> members = positives(history, OracleKind::SetOracle);
    std::sort(members.begin(), members.end());
    std::size_t stars_done = history.size() - static_cast<std::size_t>(n);
    if (stars_done < members.size()) return {ActionKind::QueryStar, members[stars_done], 0};
    return {ActionKind::Halt, 0, 0};
  }

 private:
  std::string name_;
  bool reverse_;
};

Rational query_cost(OracleKind kind, const ProblemInstance& instance) {
  return kind == OracleKind::Star ? instance.c_star : instance.c_s;
}

constexpr std::int64_t step_slack = 4;

[[noreturn]] void step_limit_error(const Strategy& strategy) {
  throw std::runtime_error("strategy '" + strategy.name() + "' exceeded the step limit");
}

// All assignments consistent with the recorded answers, over every S of
// size M and every marked-item option (including none).
std::set<int> consistent_sto_values(const ProblemInstance& instance, const History& history) {
  const Index n = instance.n, m = instance.m;
  std::set<int> values;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<int>(m)) continue;
    bool ok = true;
    for (const QueryRecord& q : history) {
      if (q.kind != OracleKind::SetOracle) continue;
      int member = (mask >> (q.index - 1)) & 1u;
      if (member != q.answer) { ok = false; break; }
    }
    if (!ok) continue;

    bool unmarked_ok = true;
    for (const QueryRecord& q : history)
      if (q.kind == OracleKind::Star && q.answer == 1) { unmarked_ok = false; break; }
    if (unmarked_ok) values.insert(0);

    for (Index j = 1; j <= n; ++j) {
      if (((mask >> (j - 1)) & 1u) == 0) continue;
      bool marked_ok = true;
      for (const QueryRecord& q : history)
        if (q.kind == OracleKind::Star && q.answer != (q.index == j ? 1 : 0)) {
          marked_ok = false;
          break;
        }
      if (marked_ok) values.insert(1);
    }
    if (values.size() == 2) break;
  }
  return values;
}

}  // namespace

std::unique_ptr<Strategy> classical_strategy(StrategyKind kind) {
  if (kind == StrategyKind::Alg4) return std::make_unique<Alg4Strategy>();
  return std::make_unique<Alg5Strategy>();
}

Rational rcc0(const ProblemInstance& instance) {
  Rational all_star = Rational(instance.n) * instance.c_star;
  Rational two_phase =
      Rational(instance.n - 1) * instance.c_s + Rational(instance.m) * instance.c_star;
  return std::min(all_star, two_phase);
}

RunResult run_strategy(Strategy& strategy, const ProblemInstance& instance,
                       const OracleAssignment& assignment, std::uint64_t seed) {
  strategy.reset(seed);
  RunResult result;
  std::int64_t limit = 2 * instance.n + step_slack;
  for (std::int64_t step = 0; step <= limit; ++step) {
    Action action = strategy.next(instance, result.history);
    if (action.kind == ActionKind::Halt) {
      result.answer = action.answer;
      return result;
    }
    OracleKind kind = action.kind == ActionKind::QueryStar ? OracleKind::Star
                                                           : OracleKind::SetOracle;
    int answer = assignment.query(kind, action.index);
    (kind == OracleKind::Star ? result.ledger.q_star : result.ledger.q_s) += 1;
    result.history.push_back({kind, action.index, answer});
  }
  step_limit_error(strategy);
}

GameResult adversary_game(Strategy& strategy, const ProblemInstance& instance) {
  if (instance.n > 12) throw std::invalid_argument("adversary game limited to N <= 12");
  strategy.reset(0);

  GameResult result;
  History history;
  std::set<Index> s_one, s_zero;
  std::int64_t limit = 2 * instance.n + step_slack;

  for (std::int64_t step = 0; step <= limit; ++step) {
    Action action = strategy.next(instance, history);
    if (action.kind == ActionKind::Halt) {
      result.answer = action.answer;
      std::set<int> values = consistent_sto_values(instance, history);
      result.certified = !values.empty() &&
                         std::all_of(values.begin(), values.end(),
                                     [&](int v) { return v == action.answer; });
      result.transcript.push_back({step, "halt", 0, action.answer, result.forced_cost});
      return result;
    }

    int answer = 0;
    OracleKind kind;
    if (action.kind == ActionKind::QueryStar) {
      kind = OracleKind::Star;
      answer = 0;  // never reveal the marked item; an unmarked input stays consistent
    } else {
      kind = OracleKind::SetOracle;
      Index i = action.index;
      if (s_one.count(i)) answer = 1;
      else if (s_zero.count(i)) answer = 0;
      else {
        // Fresh membership question. Commit the first M-1 items to S; after
        // that answer 0 unless too few untouched items would remain to fill
        // S up to size M.
        std::int64_t untouched = 0;
        for (Index j = 1; j <= instance.n; ++j)
          if (j != i && !s_one.count(j) && !s_zero.count(j)) ++untouched;
        bool forced_in =
            static_cast<std::int64_t>(s_one.size()) + untouched < instance.m;
        if (static_cast<std::int64_t>(s_one.size()) < instance.m - 1 || forced_in) {
          answer = 1;
          s_one.insert(i);
        } else {
          answer = 0;
          s_zero.insert(i);
        }
      }
    }
    result.forced_cost += query_cost(kind, instance);
    history.push_back({kind, action.index, answer});
    result.transcript.push_back({step, kind == OracleKind::Star ? "f_star" : "f_s",
                                 action.index, answer, result.forced_cost});
  }
  step_limit_error(strategy);
}

void write_game_transcript(std::ostream& out, const std::vector<TranscriptRow>& transcript) {
  out << "step,kind,index,answer,cumulative_cost\n";
  for (const TranscriptRow& row : transcript)
    out << row.step << ',' << row.kind << ',' << row.index << ',' << row.answer << ','
        << to_string(row.cumulative_cost) << '\n';
}

FakeOracleResult simulate_with_fake_fs(Strategy& strategy, const ProblemInstance& instance,
                                       const OracleAssignment& assignment, std::uint64_t seed) {
  strategy.reset(seed);
  const std::vector<Index> t_set =
      random_unmarked_assignment(instance.n, instance.m - 1, seed).s();

  FakeOracleResult result;
  auto i_star = assignment.i_star();
  result.valid = !(i_star && std::binary_search(t_set.begin(), t_set.end(), *i_star));

  History history;
  std::int64_t limit = 2 * instance.n + step_slack;
  for (std::int64_t step = 0; step <= limit; ++step) {
    Action action = strategy.next(instance, history);
    if (action.kind == ActionKind::Halt) {
      result.answer = action.answer;
      return result;
    }
    int answer;
    if (action.kind == ActionKind::QueryStar) {
      answer = assignment.query(OracleKind::Star, action.index);
      ++result.ledger.q_star;
      history.push_back({OracleKind::Star, action.index, answer});
    } else {
      // f~_S(i) = f_T(i) or f_star(i); the disjunction costs one real
      // expensive query.
      answer = std::binary_search(t_set.begin(), t_set.end(), action.index) ||
               assignment.query(OracleKind::Star, action.index);
      ++result.ledger.q_s;
      history.push_back({OracleKind::SetOracle, action.index, answer});
    }
    ++result.star_queries;
  }
  step_limit_error(strategy);
}

MonteCarloResult monte_carlo_success(Strategy& strategy, const ProblemInstance& instance,
                                     std::int64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    bool marked = t % 2 == 0;
    OracleAssignment assignment =
        random_assignment(instance.n, instance.m, marked, seed + static_cast<std::uint64_t>(t));
    RunResult run = run_strategy(strategy, instance, assignment,
                                 seed * 1000003ULL + static_cast<std::uint64_t>(t));
    if (run.answer == assignment.sto_value()) ++hits;
  }
  MonteCarloResult result;
  result.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  result.stderr_ =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(trials));
  return result;
}

BoundReport rcc_bounded_bound(const ProblemInstance& instance, double gamma1, double gamma2) {
  if (!(gamma1 > 0.0 && gamma2 > 0.0)) throw std::invalid_argument("gammas must be positive");
  double m = static_cast<double>(instance.m), n = static_cast<double>(instance.n);
  double c_star = to_double(instance.c_star), c_s = to_double(instance.c_s);

  BoundReport report;
  report.name = "rcc_bounded";
  report.mode = "asymptotic";
  report.provenance = "two-constraint query program with caller-supplied constants";
  if (m / n > 1.0 / 9.0) {
    report.value = gamma1 * m * c_star;
    return report;
  }
  // Vertices: q_star = gamma1 M with the remainder cheap, or all expensive.
  double split = gamma1 * m * c_star + std::max(0.0, gamma2 * n - gamma1 * m) * c_s;
  double all_star = gamma2 * n * c_star;
  report.value = std::min(split, all_star);
  return report;
}

std::vector<std::unique_ptr<Strategy>> heuristic_corpus() {
  std::vector<std::unique_ptr<Strategy>> corpus;
  corpus.push_back(std::make_unique<StarSweepStrategy>("star_sweep_reverse", true, false, false));
  corpus.push_back(std::make_unique<StarSweepStrategy>("star_sweep_early_exit", false, false, true));
  corpus.push_back(std::make_unique<StarSweepStrategy>("star_sweep_even_first", false, true, false));
  corpus.push_back(std::make_unique<MembershipFirstStrategy>("membership_all_then_star", false));
  corpus.push_back(std::make_unique<MembershipFirstStrategy>("membership_reverse_then_star", true));
  return corpus;
}

}  // namespace sto
