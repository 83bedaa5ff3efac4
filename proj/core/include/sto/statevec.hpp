#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sto/problem.hpp"

namespace sto {

/// The three self-inverse primitives of a Grover-like schedule.
enum class Primitive { Diffusion, OracleS, OracleStar };

char const* mnemonic(Primitive p);  // "G", "OS", "O*"

/// A flat sequence of primitives. Diffusion is free; each oracle step is
/// charged once.
struct Schedule {
  std::vector<Primitive> steps;

  CostLedger ledger() const;
};

/// Line-based plan format: header "N M c_star c_s epsilon", then one
/// mnemonic per line.
void write_plan(std::ostream& out, const ProblemInstance& instance, const Schedule& schedule);
std::pair<ProblemInstance, Schedule> read_plan(std::istream& in);

struct StateVector {
  std::vector<std::complex<double>> amplitudes;

  Index n() const { return static_cast<Index>(amplitudes.size()); }
  double squared_norm() const;
};

/// Every amplitude 1/sqrt(N).
StateVector uniform_state(Index n);

/// OracleStar flips the sign at i_* (identity if absent); OracleS flips signs
/// on S; Diffusion reflects about the uniform state, done in O(N) via the
/// mean.
StateVector apply_primitive(const StateVector& state, Primitive op,
                            const OracleAssignment& assignment);

/// Left-to-right application to the uniform state, with cost accounting.
std::pair<StateVector, CostLedger> run_schedule(const ProblemInstance& instance,
                                                const OracleAssignment& assignment,
                                                const Schedule& schedule);

/// |amplitude at i_*|^2. Undefined (throws) without a marked item.
double success_probability(const StateVector& state, const OracleAssignment& assignment);

}  // namespace sto
