#pragma once

#include "sto/problem.hpp"
#include "sto/statevec.hpp"

namespace sto {

/// Amplitude-amplification iteration count:
///   tau = ceil((arcsin sqrt(1-alpha) - arcsin p) / (2 arcsin p)), floored at 0.
/// p is the initial overlap with the target state, 1-alpha the target success
/// probability.
std::int64_t aa_iterations(double p, double alpha);

/// Exact cost tau * (c_T + 2 c_A) of one amplitude-amplification stage.
Rational aa_cost(std::int64_t tau, const Rational& c_t, const Rational& c_a);

/// A compiled flat schedule together with its exact predicted ledger and the
/// success-probability lower bound it was sized for.
struct Plan {
  Schedule schedule;
  std::int64_t predicted_q_star = 0;
  std::int64_t predicted_q_s = 0;
  Rational predicted_cost{0};
  double predicted_success = 0.0;

  static Plan from(const ProblemInstance& instance, Schedule schedule, double predicted_success);
};

/// Direct Grover search with the starred oracle only.
Plan build_alg1(const ProblemInstance& instance);

/// Two-stage search: rotate fully onto the set S, then amplify toward the
/// marked item, with the S-rotation replayed inside each outer iteration.
Plan build_alg2(const ProblemInstance& instance);

/// Integer shape of a hybrid plan, computable without compiling a schedule.
struct HybridShape {
  std::int64_t t_inner = 0;   // inner OracleS rotation count
  std::int64_t tau_outer = 0;
  double alpha = 0.0;         // residual after the inner stage
  std::int64_t q_star = 0;
  std::int64_t q_s = 0;       // (2 tau + 1) * t_inner
  Rational cost{0};
  double success = 0.0;       // success lower bound of the compiled schedule
};

struct HybridPlan {
  HybridShape shape;
  Plan plan;
};

/// Largest root of tan(phi + s) = phi + ratio * s on (0, pi/2 - s), by
/// bisection; 0 when the positive branch is empty.
double solve_phi_opt(double s, double cost_ratio);

/// solve_phi_opt at s = sqrt(M/N), ratio = c_star/c_s.
double phi_opt(const ProblemInstance& instance);

/// (c_s sqrt(N) arcsin(sqrt(1-eps)) / 2) * sec(phi_opt + sqrt(M/N)).
double hybrid_cost_asymptotic(const ProblemInstance& instance);

HybridShape hybrid_shape(const ProblemInstance& instance, std::int64_t t_inner);

HybridPlan build_hybrid(const ProblemInstance& instance, std::int64_t t_inner);

/// Exhaustive integer minimization of the exact hybrid cost over
/// t_inner in [0, aa_iterations(sqrt(M/N), 0)], ties toward smaller t_inner.
HybridShape optimize_hybrid_shape(const ProblemInstance& instance);

HybridPlan optimize_hybrid(const ProblemInstance& instance);

struct CostEnvelope {
  Rational alg1_cost;
  Rational alg2_cost;
  Rational hybrid_cost;
  double qcc_big_o;  // max{c_star sqrt(M), c_s sqrt(N)}, constant 1
};

CostEnvelope cost_envelope(const ProblemInstance& instance);

}  // namespace sto
