#include "sto/bounds.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sto/schedules.hpp"

namespace sto {

namespace {

std::vector<std::uint32_t> subsets_of_size(Index n, Index size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == static_cast<int>(size)) out.push_back(mask);
  return out;  // ascending, deterministic
}

std::vector<Index> mask_to_items(std::uint32_t mask) {
  std::vector<Index> items;
  for (Index i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) items.push_back(i + 1);
  return items;
}

struct InputFamilies {
  // Marked inputs (S, i_*), |S| = M.
  std::vector<std::pair<std::uint32_t, Index>> rows;
  // Unmarked inputs, one set mask each.
  std::vector<std::uint32_t> cols;
};

InputFamilies enumerate_inputs(Index n, Index m, AdversaryConstruction construction) {
  InputFamilies fam;
  for (std::uint32_t s : subsets_of_size(n, m))
    for (Index i : mask_to_items(s)) fam.rows.emplace_back(s, i);
  fam.cols = construction == AdversaryConstruction::PairedRemoval ? subsets_of_size(n, m - 1)
                                                                  : subsets_of_size(n, m);
  return fam;
}

Eigen::MatrixXd gamma_matrix(const InputFamilies& fam, AdversaryConstruction construction) {
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(fam.rows.size()),
                                                static_cast<Eigen::Index>(fam.cols.size()));
  for (std::size_t r = 0; r < fam.rows.size(); ++r) {
    auto [s, i_star] = fam.rows[r];
    std::uint32_t paired = construction == AdversaryConstruction::PairedRemoval
                               ? (s & ~(1u << (i_star - 1)))
                               : s;
    for (std::size_t c = 0; c < fam.cols.size(); ++c)
      if (fam.cols[c] == paired) gamma(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
  }
  return gamma;
}

double spectral_norm(const Eigen::MatrixXd& a) {
  // Dense symmetric eigen-decomposition of the Gram matrix of the thinner side.
  Eigen::MatrixXd gram = a.rows() >= a.cols() ? Eigen::MatrixXd(a.transpose() * a)
                                              : Eigen::MatrixXd(a * a.transpose());
  if (gram.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

// Does query i distinguish the row input from the column input under the
// given oracle?
bool query_differs(OracleKind kind, std::uint32_t row_s, Index row_star, std::uint32_t col_s,
                   Index i) {
  std::uint32_t bit = 1u << (i - 1);
  if (kind == OracleKind::Star) return i == row_star;  // unmarked side always answers 0
  return ((row_s & bit) != 0) != ((col_s & bit) != 0);
}

double max_filtered_norm(const Eigen::MatrixXd& gamma, const InputFamilies& fam, Index n,
                         OracleKind kind) {
  double best = 0.0;
  for (Index i = 1; i <= n; ++i) {
    Eigen::MatrixXd filtered = Eigen::MatrixXd::Zero(gamma.rows(), gamma.cols());
    for (Eigen::Index r = 0; r < gamma.rows(); ++r)
      for (Eigen::Index c = 0; c < gamma.cols(); ++c)
        if (gamma(r, c) != 0.0 &&
            query_differs(kind, fam.rows[static_cast<std::size_t>(r)].first,
                          fam.rows[static_cast<std::size_t>(r)].second,
                          fam.cols[static_cast<std::size_t>(c)], i))
          filtered(r, c) = gamma(r, c);
    best = std::max(best, spectral_norm(filtered));
  }
  return best;
}

std::int64_t rational_floor(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

// ceil((pi/4) sqrt(i)) + 1 <= limit ?
bool block_size_fits(std::int64_t i, const Rational& limit) {
  double x = M_PI / 4.0 * std::sqrt(static_cast<double>(i));
  double r = std::round(x);
  std::int64_t c = std::abs(x - r) < 1e-9 ? static_cast<std::int64_t>(r)
                                          : static_cast<std::int64_t>(std::ceil(x));
  return Rational(c + 1) <= limit;
}

std::int64_t max_block_size(const Rational& limit) {
  if (!block_size_fits(1, limit))
    throw std::domain_error("no valid block size at this cost; increase the scale K");
  std::int64_t b = rational_floor(limit - Rational(1));  // largest allowed ceiling value
  double guess_d = std::pow(4.0 * static_cast<double>(b) / M_PI, 2.0);
  std::int64_t m = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(guess_d)));
  while (!block_size_fits(m, limit)) --m;
  while (block_size_fits(m + 1, limit)) ++m;
  return m;
}

double error_prefactor(double epsilon) { return 1.0 - 2.0 * std::sqrt(epsilon * (1.0 - epsilon)); }

}  // namespace

AdversaryReport adversary_matrices(Index n, Index m, AdversaryConstruction construction) {
  if (n > 8) throw std::invalid_argument("adversary enumeration limited to N <= 8");
  if (m < 2 || m > n - 1) throw std::invalid_argument("need 2 <= M <= N-1");

  InputFamilies fam = enumerate_inputs(n, m, construction);
  Eigen::MatrixXd gamma = gamma_matrix(fam, construction);

  AdversaryReport report;
  report.construction = construction;
  report.n_rows = static_cast<std::int64_t>(fam.rows.size());
  report.n_cols = static_cast<std::int64_t>(fam.cols.size());
  report.gamma_norm = spectral_norm(gamma);
  report.max_d_star_norm = max_filtered_norm(gamma, fam, n, OracleKind::Star);
  report.max_d_s_norm = max_filtered_norm(gamma, fam, n, OracleKind::SetOracle);
  return report;
}

double basic_adversary_bound(double mu, double mu_prime, double l, double l_prime,
                             double epsilon) {
  if (!(mu > 0.0 && mu_prime > 0.0 && l > 0.0 && l_prime > 0.0))
    throw std::invalid_argument("weights must be positive");
  if (!(epsilon >= 0.0 && epsilon < 0.5)) throw std::invalid_argument("need 0 <= epsilon < 1/2");
  return error_prefactor(epsilon) / 2.0 * std::sqrt(mu * mu_prime / (l * l_prime));
}

void write_bound_reports(std::ostream& out, const std::vector<BoundReport>& reports) {
  out << "name,value,mode,provenance\n";
  auto prev = out.precision(17);
  for (const BoundReport& r : reports)
    out << r.name << ',' << r.value << ',' << r.mode << ',' << r.provenance << '\n';
  out.precision(prev);
}

BoundReport qcc_lower_bound(const ProblemInstance& instance) {
  double eps = instance.epsilon;
  double g = (1.0 - (2.0 * std::sqrt(eps * (1.0 - eps)) + 2.0 * eps)) / 2.0;
  double cheap = to_double(instance.c_s) *
                 std::sqrt(static_cast<double>(instance.n - instance.m + 1));
  double dear = to_double(instance.c_star) * std::sqrt(static_cast<double>(instance.m));
  BoundReport report;
  report.name = "qcc_adversary";
  report.value = g * std::max(cheap, dear);
  report.mode = "exact_integer";
  report.provenance = "weighted adversary over the paired input families";
  return report;
}

EstoParams esto_params(const Rational& c_star, const Rational& c_s, const Rational& k_scale) {
  if (k_scale <= Rational(0)) throw std::invalid_argument("K must be positive");
  EstoParams params;
  params.scale = k_scale;
  params.m_star = max_block_size(k_scale * c_star);
  params.m_s = max_block_size(k_scale * c_s);
  return params;
}

BoundReport conqcc_lower_bound(const ProblemInstance& instance, ConqccMode mode,
                               const Rational& k_scale) {
  double pref = error_prefactor(instance.epsilon);
  BoundReport report;
  report.name = "conqcc";
  if (mode == ConqccMode::Asymptotic) {
    report.mode = "asymptotic";
    report.provenance = "large-K limit of the block-search reduction";
    report.value = pref / M_PI *
                   std::max(to_double(instance.c_star) * std::sqrt(static_cast<double>(instance.m)),
                            to_double(instance.c_s) *
                                std::sqrt(static_cast<double>(instance.n - instance.m + 1)));
  } else {
    EstoParams params = esto_params(instance.c_star, instance.c_s, k_scale);
    report.mode = "exact_integer";
    report.provenance = "block-search reduction at finite K";
    report.value =
        pref / 4.0 *
        std::max(std::sqrt(static_cast<double>(instance.m) * static_cast<double>(params.m_star)),
                 std::sqrt(static_cast<double>(instance.n - instance.m + 1) *
                           static_cast<double>(params.m_s))) /
        to_double(k_scale);
  }
  return report;
}

BoundReport exact_lower_bound(const ProblemInstance& instance) {
  BoundReport report;
  report.name = "grover_like_exact";
  report.mode = "asymptotic";
  report.provenance = "progress-function bound for Grover-like schedules";
  report.value = hybrid_cost_asymptotic(instance);
  if (instance.epsilon > 0.0) {
    double s = std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n));
    double denom = to_double(instance.c_star) * std::sqrt(instance.epsilon) * 2.0 *
                   static_cast<double>(instance.m) * std::cos(phi_opt(instance) + s);
    report.diagnostic_c =
        to_double(instance.c_s) * std::sqrt(static_cast<double>(instance.n)) / denom;
    report.diagnostic_c_available = true;
    report.asymptotic_regime_warning = report.diagnostic_c > 0.1;
  }
  return report;
}

std::vector<double> w_progress_trace(const Schedule& schedule, Index n, Index m,
                                     AdversaryConstruction construction) {
  if (n > 6) throw std::invalid_argument("W trace limited to N <= 6");
  if (m < 2 || m > n - 1) throw std::invalid_argument("need 2 <= M <= N-1");

  InputFamilies fam = enumerate_inputs(n, m, construction);
  Eigen::MatrixXd gamma = gamma_matrix(fam, construction);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(gamma, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd u = svd.matrixU().col(0);
  Eigen::VectorXd w = svd.matrixV().col(0);

  std::vector<OracleAssignment> row_inputs, col_inputs;
  row_inputs.reserve(fam.rows.size());
  for (auto [s, i_star] : fam.rows) row_inputs.emplace_back(n, mask_to_items(s), i_star);
  col_inputs.reserve(fam.cols.size());
  for (std::uint32_t s : fam.cols) col_inputs.emplace_back(n, mask_to_items(s), std::nullopt);

  std::vector<StateVector> row_states(row_inputs.size(), uniform_state(n));
  std::vector<StateVector> col_states(col_inputs.size(), uniform_state(n));

  auto w_value = [&] {
    double total = 0.0;
    for (Eigen::Index r = 0; r < gamma.rows(); ++r)
      for (Eigen::Index c = 0; c < gamma.cols(); ++c) {
        if (gamma(r, c) == 0.0) continue;
        const auto& a = row_states[static_cast<std::size_t>(r)].amplitudes;
        const auto& b = col_states[static_cast<std::size_t>(c)].amplitudes;
        double overlap = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) overlap += (std::conj(a[i]) * b[i]).real();
        total += gamma(r, c) * u(r) * w(c) * overlap;
      }
    return total;
  };

  std::vector<double> trace;
  trace.reserve(schedule.steps.size() + 1);
  trace.push_back(w_value());
  for (Primitive op : schedule.steps) {
    for (std::size_t i = 0; i < row_states.size(); ++i)
      row_states[i] = apply_primitive(row_states[i], op, row_inputs[i]);
    for (std::size_t i = 0; i < col_states.size(); ++i)
      col_states[i] = apply_primitive(col_states[i], op, col_inputs[i]);
    trace.push_back(w_value());
  }
  return trace;
}

}  // namespace sto
