#pragma once

#include <iosfwd>
#include <vector>

#include "sto/problem.hpp"
#include "sto/statevec.hpp"

namespace sto {

/// Geometry of the three-dimensional invariant subspace spanned by the marked
/// item, the rest of S, and the complement of S, together with the shifted
/// angles used by the progress function.
struct PolarFrame {
  double theta0 = 0.0;   // arcsin sqrt(1/M)
  double phi0 = 0.0;     // arcsin sqrt(M/N)
  double phi_opt = 0.0;
  double k = 0.0;        // theta0 * cos(phi_opt + phi0)
};

/// Requires N > M >= 2; M = 1 or M = N makes the frame degenerate.
PolarFrame frame(const ProblemInstance& instance);

/// Gauge-fixed polar coordinates on the unit sphere of the invariant
/// subspace: theta in [0, pi/2], phi in (-pi, pi]; the uniform state sits at
/// (0, 0).
struct PolarPoint {
  double theta = 0.0;
  double phi = 0.0;
};

/// Project a statevector onto the invariant subspace. Throws when the
/// residual outside the subspace exceeds 1e-9 (the amplitudes must be real
/// and constant on each of the three index classes).
PolarPoint embed(const StateVector& state, const OracleAssignment& assignment,
                 const PolarFrame& frame);

/// Exact 3D reflection of the point under one primitive, re-gauged.
PolarPoint apply_polar(const PolarPoint& point, Primitive op, const ProblemInstance& instance);

/// Run a schedule entirely in polar coordinates, starting from the uniform
/// state.
PolarPoint run_schedule_polar(const ProblemInstance& instance, const Schedule& schedule);

/// Success probability |<i_*|state>|^2 recovered from the polar coordinates.
double polar_success(const PolarPoint& point, const PolarFrame& frame);

/// H(theta, phi) = theta - k * min_l |phi + 2 l pi - pi/2|; defined for
/// theta > 0 only (throws otherwise).
double progress(const PolarPoint& point, const PolarFrame& frame);

/// Leading-order progress gained by one expensive-oracle step at angle phi:
/// 2 (theta0 sin(phi + phi0) - k phi). Maximized at phi = phi_opt.
double p_star(double phi, const PolarFrame& frame);

struct ProgressStep {
  std::int64_t step = 0;  // index into the schedule
  Primitive primitive = Primitive::Diffusion;
  double cost = 0.0;
  double theta = 0.0;     // after the step
  double phi = 0.0;
  double h = 0.0;
  double dh = 0.0;
  double dh_per_cost = 0.0;
  bool flagged = false;
};

struct ProgressTrace {
  std::vector<ProgressStep> steps;
  double bound_per_cost = 0.0;   // 2 phi0 k / c_s
  double tolerance = 0.0;
  double epsilon_used = 0.0;
  bool epsilon_substituted = false;  // true when epsilon = 0 was replaced by 1e-6
  std::int64_t start_index = -1;     // schedule index where the audit begins, -1 if empty
  double max_dh_per_cost = 0.0;
  std::int64_t violations = 0;
};

/// Replay the schedule in polar coordinates and audit the per-cost progress
/// of every step from the trajectory's late phase: the last upward crossing
/// of theta past 2 theta0, advanced to the first subsequent point with
/// phi >= 0. Steps whose dH per unit cost exceed bound * (1 + tol) are
/// flagged. An empty trace (no crossing) passes vacuously.
ProgressTrace audit_schedule(const ProblemInstance& instance, const OracleAssignment& assignment,
                             const Schedule& schedule, double tol = 0.05);

/// CSV columns: step,primitive,cost,theta,phi,H,dH,dH_per_cost.
void write_progress_trace(std::ostream& out, const ProgressTrace& trace);

struct SequenceLemmaReport {
  std::int64_t seq1_checked = 0;
  std::int64_t seq1_violations = 0;
  std::int64_t seq2_checked = 0;
  std::int64_t seq2_violations = 0;
  std::int64_t seq3_checked = 0;
  std::int64_t seq3_violations = 0;

  bool ok() const { return seq1_violations + seq2_violations + seq3_violations == 0; }
};

/// Grid verification of the three pairing inequalities that justify spending
/// expensive-oracle steps only at phi >= 0:
///   I.   p*(phi_i) + p*(phi_neg) <= 2 p*(phi_opt) when phi_i + phi_neg >= 0,
///   II.  4 theta0 sin(mid + phi0) cos(half-diff) < 4 theta0 sin(phi0)
///        when -pi/4 < mid < 0 with mid = (phi_i + phi_neg)/2,
///   III. 2 theta0 sin(phi_neg + phi0) <= 2 theta0 sin(phi_w + phi0)
///        for phi_w in [0, 2 phi0), phi_neg < 0.
/// phi_i ranges over (0, pi/2), phi_neg over (-pi/2, 0), each sampled at
/// points_per_axis interior points.
SequenceLemmaReport check_sequence_lemma(const PolarFrame& frame, std::int64_t points_per_axis);

}  // namespace sto
