#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "sto/bounds.hpp"
#include "sto/problem.hpp"

namespace sto {

enum class ActionKind { QueryStar, QueryS, Halt };

struct Action {
  ActionKind kind = ActionKind::Halt;
  Index index = 0;  // for queries
  int answer = 0;   // for Halt
};

struct QueryRecord {
  OracleKind kind = OracleKind::Star;
  Index index = 0;
  int answer = 0;
};

using History = std::vector<QueryRecord>;

/// A classical decision procedure: maps the query history to the next action.
/// Deterministic strategies depend only on the history; randomized ones draw
/// from a generator reseeded via reset().
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Action next(const ProblemInstance& instance, const History& history) = 0;
  virtual void reset(std::uint64_t /*seed*/) {}
};

enum class StrategyKind { Alg4, Alg5 };

/// Alg4 queries every item with the expensive oracle (cost exactly
/// N c_star). Alg5 queries all but the last item with the set oracle, then
/// branches on how much of S it saw.
std::unique_ptr<Strategy> classical_strategy(StrategyKind kind);

/// Exact zero-error cost: min{ N c_star, (N-1) c_s + M c_star }.
Rational rcc0(const ProblemInstance& instance);

struct RunResult {
  int answer = 0;
  CostLedger ledger;
  History history;
};

/// Run a strategy against a concrete assignment (step-limited).
RunResult run_strategy(Strategy& strategy, const ProblemInstance& instance,
                       const OracleAssignment& assignment, std::uint64_t seed = 0);

struct TranscriptRow {
  std::int64_t step = 0;
  std::string kind;  // "f_s", "f_star", or "halt"
  Index index = 0;
  int answer = 0;
  Rational cumulative_cost{0};
};

struct GameResult {
  Rational forced_cost{0};
  bool certified = false;  // halt answer correct on every consistent assignment
  int answer = 0;
  std::vector<TranscriptRow> transcript;
};

/// Adversarial oracle game for deterministic strategies: set-oracle queries
/// are answered 1 for the first M-1 fresh items (and whenever a 0 answer
/// would leave no set of size M), expensive-oracle queries are answered 0
/// for as long as that stays consistent. Certification is checked by
/// exhaustive enumeration, so N <= 12.
GameResult adversary_game(Strategy& strategy, const ProblemInstance& instance);

/// CSV columns: step,kind,index,answer,cumulative_cost.
void write_game_transcript(std::ostream& out, const std::vector<TranscriptRow>& transcript);

struct FakeOracleResult {
  int answer = 0;
  CostLedger ledger;               // the wrapped strategy's own query counts
  std::int64_t star_queries = 0;   // real expensive-oracle calls = q_star + q_s
  bool valid = false;
};

/// Run a strategy with the set oracle replaced by the simulated
/// f~_S(i) = f_T(i) or f_star(i), T a seeded uniform set of size M-1; each
/// simulated call costs one real expensive query. valid = 0 iff a marked
/// item exists and lies in T.
FakeOracleResult simulate_with_fake_fs(Strategy& strategy, const ProblemInstance& instance,
                                       const OracleAssignment& assignment, std::uint64_t seed);

struct MonteCarloResult {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

/// Empirical success rate over seeded random assignments, half of them with
/// a marked item.
MonteCarloResult monte_carlo_success(Strategy& strategy, const ProblemInstance& instance,
                                     std::int64_t trials, std::uint64_t seed);

/// Closed-form optimum of: minimize q_star c_star + q_s c_s subject to
/// q_star >= gamma1 M and q_star + q_s >= gamma2 N; for M/N > 1/9 the bound
/// is gamma1 M c_star.
BoundReport rcc_bounded_bound(const ProblemInstance& instance, double gamma1 = 1.0,
                              double gamma2 = 1.0);

/// At least five deterministic zero-error strategies used to exercise the
/// adversary game.
std::vector<std::unique_ptr<Strategy>> heuristic_corpus();

}  // namespace sto
