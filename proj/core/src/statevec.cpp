#include "sto/statevec.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sto {

char const* mnemonic(Primitive p) {
  switch (p) {
    case Primitive::Diffusion: return "G";
    case Primitive::OracleS: return "OS";
    case Primitive::OracleStar: return "O*";
  }
  throw std::logic_error("unknown primitive");
}

CostLedger Schedule::ledger() const {
  CostLedger ledger;
  for (Primitive p : steps) {
    if (p == Primitive::OracleStar) ++ledger.q_star;
    if (p == Primitive::OracleS) ++ledger.q_s;
  }
  return ledger;
}

void write_plan(std::ostream& out, const ProblemInstance& instance, const Schedule& schedule) {
  out << instance.n << ' ' << instance.m << ' ' << to_string(instance.c_star) << ' '
      << to_string(instance.c_s) << ' ' << instance.epsilon << '\n';
  for (Primitive p : schedule.steps) out << mnemonic(p) << '\n';
}

std::pair<ProblemInstance, Schedule> read_plan(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("plan: missing header");
  std::istringstream hs(header);
  Index n, m;
  std::string c_star_text, c_s_text;
  double epsilon;
  if (!(hs >> n >> m >> c_star_text >> c_s_text >> epsilon))
    throw std::invalid_argument("plan: bad header '" + header + "'");
  ProblemInstance instance(n, m, rational_from_string(c_star_text),
                           rational_from_string(c_s_text), epsilon);
  Schedule schedule;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "G") schedule.steps.push_back(Primitive::Diffusion);
    else if (line == "OS") schedule.steps.push_back(Primitive::OracleS);
    else if (line == "O*") schedule.steps.push_back(Primitive::OracleStar);
    else throw std::invalid_argument("plan: unknown primitive '" + line + "'");
  }
  return {instance, schedule};
}

double StateVector::squared_norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

StateVector uniform_state(Index n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  StateVector state;
  state.amplitudes.assign(static_cast<std::size_t>(n),
                          std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  return state;
}

namespace {

void apply_in_place(StateVector& state, Primitive op, const OracleAssignment& assignment,
                    const std::vector<char>& s_mask) {
  auto& amp = state.amplitudes;
  switch (op) {
    case Primitive::Diffusion: {
      std::complex<double> mean(0.0, 0.0);
      for (const auto& a : amp) mean += a;
      mean /= static_cast<double>(amp.size());
      for (auto& a : amp) a = 2.0 * mean - a;
      break;
    }
    case Primitive::OracleS: {
      for (std::size_t i = 0; i < amp.size(); ++i)
        if (s_mask[i]) amp[i] = -amp[i];
      break;
    }
    case Primitive::OracleStar: {
      if (auto i_star = assignment.i_star())
        amp[static_cast<std::size_t>(*i_star - 1)] *= -1.0;
      break;
    }
  }
}

std::vector<char> make_s_mask(const OracleAssignment& assignment) {
  std::vector<char> mask(static_cast<std::size_t>(assignment.n()), 0);
  for (Index i : assignment.s()) mask[static_cast<std::size_t>(i - 1)] = 1;
  return mask;
}

}  // namespace

StateVector apply_primitive(const StateVector& state, Primitive op,
                            const OracleAssignment& assignment) {
  if (state.n() != assignment.n())
    throw std::invalid_argument("state dimension does not match assignment");
  StateVector out = state;
  apply_in_place(out, op, assignment, make_s_mask(assignment));
  return out;
}

std::pair<StateVector, CostLedger> run_schedule(const ProblemInstance& instance,
                                                const OracleAssignment& assignment,
                                                const Schedule& schedule) {
  if (instance.n != assignment.n())
    throw std::invalid_argument("instance dimension does not match assignment");
  StateVector state = uniform_state(instance.n);
  const std::vector<char> s_mask = make_s_mask(assignment);
  for (Primitive p : schedule.steps) apply_in_place(state, p, assignment, s_mask);
  return {std::move(state), schedule.ledger()};
}

double success_probability(const StateVector& state, const OracleAssignment& assignment) {
  auto i_star = assignment.i_star();
  if (!i_star)
    throw std::domain_error("success probability undefined without a marked item");
  if (state.n() != assignment.n())
    throw std::invalid_argument("state dimension does not match assignment");
  return std::norm(state.amplitudes[static_cast<std::size_t>(*i_star - 1)]);
}

}  // namespace sto
