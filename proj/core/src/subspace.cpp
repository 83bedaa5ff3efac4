#include "sto/subspace.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "sto/schedules.hpp"

namespace sto {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Rows of the shifted orthonormal basis, expressed in the class basis
// (|i_*>, |S^->, |S-perp>). The z row is the uniform state.
struct Basis {
  Vec3 x, y, z;
};

Basis basis_for(const PolarFrame& f) {
  double st = std::sin(f.theta0), ct = std::cos(f.theta0);
  double sp = std::sin(f.phi0), cp = std::cos(f.phi0);
  Basis b;
  b.x = {ct, -st, 0.0};
  b.y = {cp * st, cp * ct, -sp};
  b.z = {sp * st, sp * ct, cp};
  return b;
}

Vec3 class_vector(const PolarPoint& p, const Basis& b) {
  double xc = std::sin(p.theta);
  double yc = std::cos(p.theta) * std::sin(p.phi);
  double zc = std::cos(p.theta) * std::cos(p.phi);
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = xc * b.x[i] + yc * b.y[i] + zc * b.z[i];
  return v;
}

double wrap_phi(double phi) {
  double w = std::remainder(phi, 2.0 * M_PI);  // lands in [-pi, pi]
  if (w <= -M_PI) w = M_PI;
  return w;
}

PolarPoint to_polar(const Vec3& v, const Basis& b) {
  double xc = dot(v, b.x), yc = dot(v, b.y), zc = dot(v, b.z);
  PolarPoint p;
  p.theta = std::atan2(xc, std::hypot(yc, zc));  // cos(theta) >= 0 by construction
  p.phi = std::atan2(yc, zc);
  if (p.theta < 0.0) {  // gauge: (theta, phi) -> (-theta, phi + pi)
    p.theta = -p.theta;
    p.phi += M_PI;
  }
  p.phi = wrap_phi(p.phi);
  return p;
}

double step_cost(Primitive op, const ProblemInstance& instance) {
  switch (op) {
    case Primitive::Diffusion: return 0.0;
    case Primitive::OracleS: return to_double(instance.c_s);
    case Primitive::OracleStar: return to_double(instance.c_star);
  }
  return 0.0;
}

}  // namespace

PolarFrame frame(const ProblemInstance& instance) {
  if (instance.m < 2 || instance.n <= instance.m)
    throw std::domain_error("polar frame degenerate: need N > M >= 2");
  PolarFrame f;
  f.theta0 = std::asin(std::sqrt(1.0 / static_cast<double>(instance.m)));
  f.phi0 = std::asin(std::sqrt(static_cast<double>(instance.m) / static_cast<double>(instance.n)));
  f.phi_opt = solve_phi_opt(f.phi0, instance.cost_ratio());
  f.k = f.theta0 * std::cos(f.phi_opt + f.phi0);
  return f;
}

PolarPoint embed(const StateVector& state, const OracleAssignment& assignment,
                 const PolarFrame& fr) {
  if (state.n() != assignment.n())
    throw std::invalid_argument("state dimension does not match assignment");
  auto i_star = assignment.i_star();
  if (!i_star) throw std::invalid_argument("embedding requires a marked item");
  const auto& amp = state.amplitudes;
  const Index n = assignment.n();
  const Index m = static_cast<Index>(assignment.s().size());
  if (m < 2 || n <= m) throw std::domain_error("polar frame degenerate: need N > M >= 2");

  double sum_minus = 0.0, sum_perp = 0.0;
  for (Index i = 1; i <= n; ++i) {
    double a = amp[static_cast<std::size_t>(i - 1)].real();
    if (i == *i_star) continue;
    if (assignment.in_s(i)) sum_minus += a;
    else sum_perp += a;
  }
  Vec3 v = {amp[static_cast<std::size_t>(*i_star - 1)].real(),
            sum_minus / std::sqrt(static_cast<double>(m - 1)),
            sum_perp / std::sqrt(static_cast<double>(n - m))};

  double captured = dot(v, v);
  double residual = state.squared_norm() - captured;
  if (!(residual <= 1e-9))
    throw std::domain_error("state leaves the invariant subspace");

  return to_polar(v, basis_for(fr));
}

PolarPoint apply_polar(const PolarPoint& point, Primitive op, const ProblemInstance& instance) {
  PolarFrame fr = frame(instance);
  Basis b = basis_for(fr);
  Vec3 v = class_vector(point, b);
  switch (op) {
    case Primitive::Diffusion: {
      // 2|N><N| - I, matching the statevector convention; |N> is the z row.
      double proj = dot(v, b.z);
      for (int i = 0; i < 3; ++i) v[i] = 2.0 * proj * b.z[i] - v[i];
      break;
    }
    case Primitive::OracleS:
      v[0] = -v[0];
      v[1] = -v[1];
      break;
    case Primitive::OracleStar:
      v[0] = -v[0];
      break;
  }
  return to_polar(v, b);
}

PolarPoint run_schedule_polar(const ProblemInstance& instance, const Schedule& schedule) {
  PolarPoint p;  // uniform state: the z axis
  for (Primitive op : schedule.steps) p = apply_polar(p, op, instance);
  return p;
}

double polar_success(const PolarPoint& point, const PolarFrame& fr) {
  Basis b = basis_for(fr);
  Vec3 v = class_vector(point, b);
  return v[0] * v[0];
}

double progress(const PolarPoint& point, const PolarFrame& fr) {
  if (!(point.theta > 0.0)) throw std::domain_error("progress undefined at theta <= 0");
  double dist = std::abs(std::remainder(point.phi - M_PI / 2.0, 2.0 * M_PI));
  return point.theta - fr.k * dist;
}

double p_star(double phi, const PolarFrame& fr) {
  return 2.0 * (fr.theta0 * std::sin(phi + fr.phi0) - fr.k * phi);
}

ProgressTrace audit_schedule(const ProblemInstance& instance, const OracleAssignment& assignment,
                             const Schedule& schedule, double tol) {
  if (!assignment.i_star()) throw std::invalid_argument("audit requires a marked item");
  PolarFrame fr = frame(instance);

  ProgressTrace trace;
  trace.tolerance = tol;
  trace.bound_per_cost = 2.0 * fr.phi0 * fr.k / to_double(instance.c_s);
  trace.epsilon_used = instance.epsilon;
  if (instance.epsilon == 0.0) {
    // The correction terms the tolerance covers blow up as 1/sqrt(epsilon);
    // audit an exact-success schedule as if epsilon were tiny but positive.
    trace.epsilon_used = 1e-6;
    trace.epsilon_substituted = true;
  }

  std::vector<PolarPoint> path(schedule.steps.size() + 1);
  for (std::size_t i = 0; i < schedule.steps.size(); ++i)
    path[i + 1] = apply_polar(path[i], schedule.steps[i], instance);

  // Last upward crossing of theta past 2 theta0 ...
  double gate = 2.0 * fr.theta0;
  std::ptrdiff_t crossing = -1;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (path[i - 1].theta < gate && path[i].theta >= gate) crossing = static_cast<std::ptrdiff_t>(i);
  if (crossing < 0) return trace;  // vacuous pass

  // ... advanced to the first subsequent point on the phi >= 0 side.
  std::ptrdiff_t start = -1;
  for (std::size_t i = static_cast<std::size_t>(crossing); i < path.size(); ++i)
    if (path[i].theta >= gate && path[i].phi >= 0.0) {
      start = static_cast<std::ptrdiff_t>(i);
      break;
    }
  if (start < 0) return trace;
  trace.start_index = start;

  double limit = trace.bound_per_cost * (1.0 + tol);
  for (std::size_t i = static_cast<std::size_t>(start); i < schedule.steps.size(); ++i) {
    Primitive op = schedule.steps[i];
    ProgressStep rec;
    rec.step = static_cast<std::int64_t>(i);
    rec.primitive = op;
    rec.cost = step_cost(op, instance);
    rec.theta = path[i + 1].theta;
    rec.phi = path[i + 1].phi;
    double h_before = progress(path[i], fr);
    rec.h = progress(path[i + 1], fr);
    rec.dh = rec.h - h_before;
    rec.dh_per_cost = rec.cost > 0.0 ? rec.dh / rec.cost : 0.0;
    rec.flagged = rec.dh_per_cost > limit;
    if (rec.flagged) ++trace.violations;
    if (rec.dh_per_cost > trace.max_dh_per_cost) trace.max_dh_per_cost = rec.dh_per_cost;
    trace.steps.push_back(rec);
  }
  return trace;
}

void write_progress_trace(std::ostream& out, const ProgressTrace& trace) {
  out << "step,primitive,cost,theta,phi,H,dH,dH_per_cost\n";
  auto prev = out.precision(17);
  for (const ProgressStep& s : trace.steps)
    out << s.step << ',' << mnemonic(s.primitive) << ',' << s.cost << ',' << s.theta << ','
        << s.phi << ',' << s.h << ',' << s.dh << ',' << s.dh_per_cost << '\n';
  out.precision(prev);
}

SequenceLemmaReport check_sequence_lemma(const PolarFrame& fr, std::int64_t points_per_axis) {
  if (points_per_axis < 1) throw std::invalid_argument("empty sequence-lemma grid");
  SequenceLemmaReport report;
  const double slack = 1e-12;
  double max_pstar = p_star(fr.phi_opt, fr);

  auto grid_point = [&](std::int64_t j, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(j) + 0.5) / static_cast<double>(points_per_axis);
  };

  for (std::int64_t a = 0; a < points_per_axis; ++a) {
    double phi_i = grid_point(a, 0.0, M_PI / 2.0);
    for (std::int64_t b = 0; b < points_per_axis; ++b) {
      double phi_neg = grid_point(b, -M_PI / 2.0, 0.0);
      double mid = 0.5 * (phi_i + phi_neg);
      if (phi_i + phi_neg >= 0.0) {
        ++report.seq1_checked;
        if (p_star(phi_i, fr) + p_star(phi_neg, fr) > 2.0 * max_pstar + slack)
          ++report.seq1_violations;
      }
      if (mid > -M_PI / 4.0 && mid < 0.0) {
        ++report.seq2_checked;
        double lhs = 4.0 * fr.theta0 * std::sin(mid + fr.phi0) * std::cos(0.5 * (phi_i - phi_neg));
        if (lhs >= 4.0 * fr.theta0 * std::sin(fr.phi0) + slack) ++report.seq2_violations;
      }
    }
  }

  for (std::int64_t b = 0; b < points_per_axis; ++b) {
    double phi_neg = grid_point(b, -M_PI / 2.0, 0.0);
    for (std::int64_t w = 0; w < points_per_axis; ++w) {
      double phi_w = grid_point(w, 0.0, 2.0 * fr.phi0);
      ++report.seq3_checked;
      if (2.0 * fr.theta0 * std::sin(phi_neg + fr.phi0) >
          2.0 * fr.theta0 * std::sin(phi_w + fr.phi0) + slack)
        ++report.seq3_violations;
    }
  }
  return report;
}

}  // namespace sto
