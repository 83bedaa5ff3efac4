#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sto/bounds.hpp"
#include "sto/schedules.hpp"
#include "sto/statevec.hpp"

using namespace sto;

TEST_CASE("adversary matrices at N=4") {
  AdversaryReport paired = adversary_matrices(4, 2, AdversaryConstruction::PairedRemoval);
  CHECK(paired.gamma_norm == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(paired.max_d_star_norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(paired.max_d_s_norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(paired.n_rows == 12);  // C(4,2) sets times 2 marked choices
  CHECK(paired.n_cols == 4);   // C(4,1)

  AdversaryReport same = adversary_matrices(4, 2, AdversaryConstruction::SameSet);
  CHECK(same.gamma_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(same.max_d_s_norm == 0.0);
  CHECK(same.max_d_star_norm == doctest::Approx(1.0).epsilon(1e-9));

  AdversaryReport mid = adversary_matrices(6, 3, AdversaryConstruction::PairedRemoval);
  CHECK(mid.max_d_star_norm == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mid.max_d_s_norm == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(adversary_matrices(9, 2, AdversaryConstruction::PairedRemoval),
                  std::invalid_argument);
  CHECK_THROWS_AS(adversary_matrices(4, 1, AdversaryConstruction::PairedRemoval),
                  std::invalid_argument);
}

TEST_CASE("basic adversary bound") {
  CHECK(basic_adversary_bound(1, 1, 1, 1, 0.0) == doctest::Approx(0.5));
  CHECK(basic_adversary_bound(4, 9, 1, 1, 0.0) == doctest::Approx(3.0));
  CHECK(basic_adversary_bound(1, 1, 1, 1, 0.4999999) == doctest::Approx(0.0).epsilon(1e-3));
  CHECK_THROWS_AS(basic_adversary_bound(0, 1, 1, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(basic_adversary_bound(1, 1, 1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("qcc lower bound") {
  ProblemInstance instance(10000, 400, Rational(1), Rational(1), 0.0);
  BoundReport report = qcc_lower_bound(instance);
  CHECK(report.value == doctest::Approx(std::max(std::sqrt(9601.0), 20.0) / 2.0).epsilon(1e-12));

  // Soundness against the achievable cost on a small grid.
  for (Index n : {1024, 4096})
    for (std::int64_t ratio : {1, 4, 20}) {
      ProblemInstance p(n, 16, Rational(ratio), Rational(1), 0.1);
      CHECK(qcc_lower_bound(p).value <= to_double(optimize_hybrid_shape(p).cost));
    }
}

TEST_CASE("esto block sizes") {
  EstoParams p = esto_params(Rational(10), Rational(10), Rational(1));
  CHECK(p.m_star == 131);
  CHECK(p.m_s == 131);
  EstoParams q = esto_params(Rational(2), Rational(2), Rational(1));
  CHECK(q.m_star == 1);
  CHECK_THROWS_AS(esto_params(Rational(10), Rational(1), Rational(1)), std::domain_error);

  // m(K c) / K^2 -> (4 c / pi)^2.
  double target = std::pow(4.0 * 3.0 / M_PI, 2.0);
  for (std::int64_t k : {10, 100, 1000, 10000}) {
    EstoParams scaled = esto_params(Rational(3), Rational(3), Rational(k));
    double ratio = static_cast<double>(scaled.m_star) / static_cast<double>(k * k);
    CHECK(std::abs(ratio - target) / target < 2.0 / static_cast<double>(k) + 1e-6);
  }
}

TEST_CASE("conqcc bound in both modes") {
  ProblemInstance instance(10000, 400, Rational(1), Rational(1, 2), 0.0);
  BoundReport asym = conqcc_lower_bound(instance, ConqccMode::Asymptotic);
  double expected = std::max(20.0, 0.5 * std::sqrt(9601.0)) / M_PI;
  CHECK(asym.value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(asym.mode == "asymptotic");

  BoundReport exact = conqcc_lower_bound(instance, ConqccMode::ExactInteger, Rational(1000));
  CHECK(std::abs(exact.value - asym.value) / asym.value < 0.01);
  CHECK(exact.mode == "exact_integer");

  // Soundness below the achievable hybrid cost.
  CHECK(asym.value <= to_double(optimize_hybrid_shape(instance).cost));
}

TEST_CASE("exact lower bound and its regime diagnostic") {
  for (Index n : {1024, 4096, 65536})
    for (Index m : {16, 64}) {
      ProblemInstance p(n, m, Rational(10), Rational(1), 0.1);
      BoundReport report = exact_lower_bound(p);
      CHECK(report.value == doctest::Approx(hybrid_cost_asymptotic(p)).epsilon(1e-12));
      CHECK(report.diagnostic_c_available);
    }

  // Independent recomputation of the diagnostic; at this size C sits just
  // below 0.2, so the regime warning must fire.
  ProblemInstance regime(100000000, 10000, Rational(10), Rational(1), 0.1);
  BoundReport out_of_regime = exact_lower_bound(regime);
  double s = std::sqrt(1e4 / 1e8);
  double expected_c =
      1e4 / (10.0 * std::sqrt(0.1) * 2e4 * std::cos(phi_opt(regime) + s));
  CHECK(out_of_regime.diagnostic_c == doctest::Approx(expected_c).epsilon(1e-12));
  CHECK(out_of_regime.asymptotic_regime_warning);

  // A larger set at the same N drives C below the 0.1 threshold.
  ProblemInstance regime_ok(100000000, 100000, Rational(10), Rational(1), 0.1);
  BoundReport good = exact_lower_bound(regime_ok);
  CHECK(good.diagnostic_c < 0.1);
  CHECK_FALSE(good.asymptotic_regime_warning);

  ProblemInstance no_eps(1024, 16, Rational(10), Rational(1), 0.0);
  BoundReport unavailable = exact_lower_bound(no_eps);
  CHECK_FALSE(unavailable.diagnostic_c_available);
  CHECK(unavailable.value == doctest::Approx(hybrid_cost_asymptotic(no_eps)).epsilon(1e-12));
}

TEST_CASE("norm grids match the closed forms") {
  for (Index n = 4; n <= 8; ++n)
    for (Index m = 2; m <= n - 1; ++m) {
      AdversaryReport paired = adversary_matrices(n, m, AdversaryConstruction::PairedRemoval);
      CHECK(paired.gamma_norm ==
            doctest::Approx(std::sqrt(static_cast<double>(n - m + 1))).epsilon(1e-9));
      AdversaryReport same = adversary_matrices(n, m, AdversaryConstruction::SameSet);
      CHECK(same.gamma_norm == doctest::Approx(std::sqrt(static_cast<double>(m))).epsilon(1e-9));
      CHECK(same.max_d_s_norm == 0.0);
    }
}

TEST_CASE("w progress trace") {
  AdversaryReport report = adversary_matrices(4, 2, AdversaryConstruction::PairedRemoval);

  Schedule empty;
  std::vector<double> constant = w_progress_trace(empty, 4, 2,
                                                  AdversaryConstruction::PairedRemoval);
  REQUIRE(constant.size() == 1);
  CHECK(constant[0] == doctest::Approx(report.gamma_norm).epsilon(1e-9));

  ProblemInstance instance(4, 2, Rational(1), Rational(1), 0.0);
  Plan alg1 = build_alg1(ProblemInstance(4, 1, Rational(1), Rational(1), 0.0));
  std::vector<double> trace =
      w_progress_trace(alg1.schedule, 4, 2, AdversaryConstruction::PairedRemoval);
  REQUIRE(trace.size() == alg1.schedule.steps.size() + 1);
  CHECK(trace[0] == doctest::Approx(report.gamma_norm).epsilon(1e-9));
  for (std::size_t i = 0; i < alg1.schedule.steps.size(); ++i) {
    double allowed;
    switch (alg1.schedule.steps[i]) {
      case Primitive::Diffusion: allowed = 1e-9; break;
      case Primitive::OracleS: allowed = 2.0 * report.max_d_s_norm + 1e-9; break;
      case Primitive::OracleStar: allowed = 2.0 * report.max_d_star_norm + 1e-9; break;
    }
    CHECK(std::abs(trace[i + 1] - trace[i]) <= allowed);
  }

  CHECK_THROWS_AS(w_progress_trace(empty, 7, 2, AdversaryConstruction::PairedRemoval),
                  std::invalid_argument);
}

TEST_CASE("bound report CSV") {
  std::ostringstream out;
  BoundReport a;
  a.name = "demo";
  a.value = 1.5;
  a.mode = "asymptotic";
  a.provenance = "test";
  write_bound_reports(out, {a});
  CHECK(out.str() == "name,value,mode,provenance\ndemo,1.5,asymptotic,test\n");
}
