#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sto/rational.hpp"

namespace sto {

using Index = std::int64_t;  // 1-based item index

/// The tuple (N, M, c_*, c_S, epsilon) fixing one search-with-two-oracles
/// problem: N items, a promised set size M, an expensive marked-item oracle
/// and a cheap set-membership oracle, and an allowed failure probability.
struct ProblemInstance {
  Index n = 1;
  Index m = 1;
  Rational c_star{1};
  Rational c_s{1};
  double epsilon = 0.0;

  ProblemInstance(Index n_, Index m_, Rational c_star_, Rational c_s_, double epsilon_);

  double cost_ratio() const { return to_double(c_star) / to_double(c_s); }
};

enum class OracleKind { Star, SetOracle };

/// One concrete hidden input: the set S and, if the instance has a marked
/// item, its index i_* in S. When i_* is absent |S| is unconstrained.
class OracleAssignment {
 public:
  OracleAssignment(Index n, std::vector<Index> s, std::optional<Index> i_star);

  Index n() const { return n_; }
  const std::vector<Index>& s() const { return s_; }
  std::optional<Index> i_star() const { return i_star_; }

  bool in_s(Index i) const;

  int query(OracleKind kind, Index i) const;

  /// 1 iff the marked item exists.
  int sto_value() const { return i_star_.has_value() ? 1 : 0; }

 private:
  Index n_;
  std::vector<Index> s_;  // sorted
  std::optional<Index> i_star_;
};

/// Uniformly random S of size m; if marked, a uniformly random i_* in S.
/// Deterministic for a fixed seed.
OracleAssignment random_assignment(Index n, Index m, bool marked, std::uint64_t seed);

/// Unmarked family with caller-chosen |S| (both |S|=M and |S|=M-1 no-marked
/// families appear in the adversary constructions).
OracleAssignment random_unmarked_assignment(Index n, Index set_size, std::uint64_t seed);

/// Query counts for the two oracles; the exact total is recomputed from the
/// instance costs on demand.
struct CostLedger {
  std::int64_t q_star = 0;
  std::int64_t q_s = 0;

  Rational total(const ProblemInstance& instance) const {
    return Rational(q_star) * instance.c_star + Rational(q_s) * instance.c_s;
  }
};

}  // namespace sto
