#include "sto/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sto {

namespace {

// Ceiling with a guard against values that are an integer up to floating
// noise (the tau formulas routinely land exactly on integers).
std::int64_t ceil_guarded(double x) {
  double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

double arcsin_success(double epsilon) { return std::asin(std::sqrt(1.0 - epsilon)); }

double inner_angle(const ProblemInstance& instance) {
  return std::asin(std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n)));
}

Schedule repeat(const std::vector<Primitive>& block, std::int64_t times) {
  Schedule s;
  s.steps.reserve(block.size() * static_cast<std::size_t>(times));
  for (std::int64_t i = 0; i < times; ++i)
    s.steps.insert(s.steps.end(), block.begin(), block.end());
  return s;
}

}  // namespace

std::int64_t aa_iterations(double p, double alpha) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("overlap p must be in (0, 1]");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in [0, 1)");
  double theta = std::asin(p);
  double tau = (std::asin(std::sqrt(1.0 - alpha)) - theta) / (2.0 * theta);
  return std::max<std::int64_t>(ceil_guarded(tau), 0);
}

Rational aa_cost(std::int64_t tau, const Rational& c_t, const Rational& c_a) {
  if (tau < 0) throw std::invalid_argument("tau must be nonnegative");
  return Rational(tau) * (c_t + Rational(2) * c_a);
}

Plan Plan::from(const ProblemInstance& instance, Schedule schedule, double predicted_success) {
  Plan plan;
  CostLedger ledger = schedule.ledger();
  plan.schedule = std::move(schedule);
  plan.predicted_q_star = ledger.q_star;
  plan.predicted_q_s = ledger.q_s;
  plan.predicted_cost = ledger.total(instance);
  plan.predicted_success = predicted_success;
  return plan;
}

Plan build_alg1(const ProblemInstance& instance) {
  if (instance.n < 2) throw std::invalid_argument("need N >= 2");
  double p = 1.0 / std::sqrt(static_cast<double>(instance.n));
  std::int64_t tau = aa_iterations(p, instance.epsilon);
  Schedule schedule = repeat({Primitive::OracleStar, Primitive::Diffusion}, tau);
  double s = std::sin(static_cast<double>(2 * tau + 1) * std::asin(p));
  return Plan::from(instance, std::move(schedule), s * s);
}

double solve_phi_opt(double s, double cost_ratio) {
  if (!(s > 0.0 && s < M_PI / 2.0)) throw std::invalid_argument("angle s out of range");
  auto f = [&](double phi) { return std::tan(phi + s) - phi - cost_ratio * s; };
  if (f(0.0) >= 0.0) return 0.0;  // no positive root; the max-with-0 branch
  double lo = 0.0, hi = M_PI / 2.0 - s;
  // f is increasing and diverges at the right endpoint, so [lo, hi) brackets
  // the unique root.
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double phi_opt(const ProblemInstance& instance) {
  if (!(instance.n > instance.m && instance.m >= 2))
    throw std::invalid_argument("need N > M >= 2");
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  return solve_phi_opt(s, instance.cost_ratio());
}

double hybrid_cost_asymptotic(const ProblemInstance& instance) {
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  double phi = phi_opt(instance);
  return to_double(instance.c_s) * std::sqrt(static_cast<double>(instance.n)) *
         arcsin_success(instance.epsilon) / 2.0 / std::cos(phi + s);
}

HybridShape hybrid_shape(const ProblemInstance& instance, std::int64_t t_inner) {
  if (t_inner < 0) throw std::invalid_argument("t_inner must be nonnegative");
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  std::int64_t t_full = aa_iterations(s, 0.0);
  if (t_inner > t_full)
    throw std::domain_error("inner rotation overshoots past pi/2");

  double phi0 = inner_angle(instance);
  double p_inner = std::sin(static_cast<double>(2 * t_inner + 1) * phi0);
  double p_outer = p_inner / std::sqrt(static_cast<double>(instance.m));

  HybridShape shape;
  shape.t_inner = t_inner;
  shape.alpha = std::clamp(1.0 - p_inner * p_inner, 0.0, 1.0);
  shape.tau_outer = aa_iterations(p_outer, instance.epsilon);
  shape.q_star = shape.tau_outer;
  shape.q_s = (2 * shape.tau_outer + 1) * t_inner;
  shape.cost = Rational(shape.q_star) * instance.c_star + Rational(shape.q_s) * instance.c_s;
  double v = std::sin(static_cast<double>(2 * shape.tau_outer + 1) * std::asin(p_outer));
  shape.success = v * v;
  return shape;
}

HybridPlan build_hybrid(const ProblemInstance& instance, std::int64_t t_inner) {
  HybridShape shape = hybrid_shape(instance, t_inner);

  std::vector<Primitive> prep;  // inner stage, execution order
  for (std::int64_t i = 0; i < shape.t_inner; ++i) {
    prep.push_back(Primitive::OracleS);
    prep.push_back(Primitive::Diffusion);
  }
  std::vector<Primitive> prep_rev(prep.rbegin(), prep.rend());

  Schedule schedule;
  schedule.steps = prep;
  for (std::int64_t i = 0; i < shape.tau_outer; ++i) {
    schedule.steps.push_back(Primitive::OracleStar);
    schedule.steps.insert(schedule.steps.end(), prep_rev.begin(), prep_rev.end());
    schedule.steps.push_back(Primitive::Diffusion);
    schedule.steps.insert(schedule.steps.end(), prep.begin(), prep.end());
  }

  HybridPlan plan;
  plan.plan = Plan::from(instance, std::move(schedule), shape.success);
  plan.shape = shape;
  return plan;
}

Plan build_alg2(const ProblemInstance& instance) {
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  return build_hybrid(instance, aa_iterations(s, 0.0)).plan;
}

HybridShape optimize_hybrid_shape(const ProblemInstance& instance) {
  if (!(instance.n > instance.m && instance.m >= 2))
    throw std::invalid_argument("need N > M >= 2");
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  std::int64_t t_full = aa_iterations(s, 0.0);
  HybridShape best = hybrid_shape(instance, 0);
  for (std::int64_t t = 1; t <= t_full; ++t) {
    HybridShape candidate = hybrid_shape(instance, t);
    if (candidate.cost < best.cost) best = candidate;  // ties keep smaller t
  }
  return best;
}

HybridPlan optimize_hybrid(const ProblemInstance& instance) {
  return build_hybrid(instance, optimize_hybrid_shape(instance).t_inner);
}

CostEnvelope cost_envelope(const ProblemInstance& instance) {
  CostEnvelope env;
  double p1 = 1.0 / std::sqrt(static_cast<double>(instance.n));
  env.alg1_cost = Rational(aa_iterations(p1, instance.epsilon)) * instance.c_star;
  double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
  env.alg2_cost = hybrid_shape(instance, aa_iterations(s, 0.0)).cost;
  env.hybrid_cost = optimize_hybrid_shape(instance).cost;
  env.qcc_big_o =
      std::max(to_double(instance.c_star) * std::sqrt(static_cast<double>(instance.m)),
               to_double(instance.c_s) * std::sqrt(static_cast<double>(instance.n)));
  return env;
}

}  // namespace sto
