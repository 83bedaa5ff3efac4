#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sto/problem.hpp"
#include "sto/statevec.hpp"

namespace sto {

/// The two explicit adversary-matrix constructions, both built by exhaustive
/// enumeration of small instances:
///  - PairedRemoval pairs each marked input (S, i_*) with the unmarked input
///    whose set is S with i_* removed;
///  - SameSet pairs each marked input (S, i_*) with the unmarked input that
///    keeps the same set S.
enum class AdversaryConstruction { PairedRemoval, SameSet };

struct AdversaryReport {
  AdversaryConstruction construction = AdversaryConstruction::PairedRemoval;
  double gamma_norm = 0.0;
  double max_d_star_norm = 0.0;  // max over i of || Gamma o D_i ||, expensive oracle
  double max_d_s_norm = 0.0;     // same for the set oracle
  std::int64_t n_rows = 0;
  std::int64_t n_cols = 0;
};

/// Brute-force regime: N <= 8, 2 <= M <= N-1. Spectral norms by dense
/// symmetric eigen-decomposition.
AdversaryReport adversary_matrices(Index n, Index m, AdversaryConstruction construction);

/// The generic weighted adversary value ((1 - 2 sqrt(eps(1-eps))) / 2) *
/// sqrt(mu mu' / (l l')).
double basic_adversary_bound(double mu, double mu_prime, double l, double l_prime,
                             double epsilon);

/// Uniform carrier for every lower bound the suite produces.
struct BoundReport {
  std::string name;
  double value = 0.0;
  std::string mode;        // "exact_integer", "asymptotic", or empty
  std::string provenance;

  // Set by exact_lower_bound only: the small-ratio diagnostic C and its
  // availability (C involves 1/sqrt(epsilon), so epsilon = 0 has none).
  double diagnostic_c = 0.0;
  bool diagnostic_c_available = false;
  bool asymptotic_regime_warning = false;  // true when C > 0.1
};

/// CSV columns: name,value,mode,provenance.
void write_bound_reports(std::ostream& out, const std::vector<BoundReport>& reports);

/// max{ c_s g(eps) sqrt(N-M+1), c_star g(eps) sqrt(M) } with
/// g(eps) = (1 - (2 sqrt(eps(1-eps)) + 2 eps)) / 2.
BoundReport qcc_lower_bound(const ProblemInstance& instance);

/// Block-search sizes: the largest integers m with
/// ceil((pi/4) sqrt(m)) + 1 <= K * cost, for each of the two costs.
struct EstoParams {
  std::int64_t m_star = 0;
  std::int64_t m_s = 0;
  Rational scale{1};  // K
};

EstoParams esto_params(const Rational& c_star, const Rational& c_s, const Rational& k_scale);

enum class ConqccMode { ExactInteger, Asymptotic };

/// Controlled-oracle cost lower bound. ExactInteger evaluates the finite-K
/// expression ((1 - 2 sqrt(eps(1-eps))) / 4) max{ sqrt(M m_star),
/// sqrt((N-M+1) m_s) } / K; Asymptotic is its K -> infinity limit
/// ((1 - 2 sqrt(eps(1-eps))) / pi) max{ c_star sqrt(M), c_s sqrt(N-M+1) }.
BoundReport conqcc_lower_bound(const ProblemInstance& instance, ConqccMode mode,
                               const Rational& k_scale = Rational(1000));

/// The exact cost bound for Grover-like schedules:
/// (c_s sqrt(N) arcsin sqrt(1-eps) / 2) sec(phi_opt + sqrt(M/N)), with the
/// regime diagnostic C = c_s sqrt(N) / (c_star sqrt(eps) 2 M cos(phi_opt +
/// sqrt(M/N))) attached when eps > 0.
BoundReport exact_lower_bound(const ProblemInstance& instance);

/// Adversary progress functional along a schedule: W^0 = ||Gamma|| and each
/// oracle step moves W by at most twice the matching filtered norm. Requires
/// N <= 6 (every input pair in Gamma's support is simulated).
std::vector<double> w_progress_trace(const Schedule& schedule, Index n, Index m,
                                     AdversaryConstruction construction);

}  // namespace sto
