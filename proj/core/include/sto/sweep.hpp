#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sto/problem.hpp"

namespace sto {

/// Instance grid plus the list of quantities to evaluate per grid point.
/// Parsed from a flat `key = value` config file; list values are
/// comma-separated. Keys: n, m, c_star, c_s, epsilon, quantities, out, seed.
struct SweepConfig {
  std::vector<Index> n{};
  std::vector<Index> m{};
  std::vector<Rational> c_star{};
  std::vector<Rational> c_s{};
  std::vector<double> epsilon{};
  std::vector<std::string> quantities{};
  std::string out;
  std::uint64_t seed = 0;
};

SweepConfig parse_sweep_config(std::istream& in);

/// Known quantity names accepted in SweepConfig::quantities.
const std::vector<std::string>& sweep_quantities();

/// One CSV row per grid point (cross product in declaration order), columns
/// n,m,c_star,c_s,epsilon followed by the requested quantities.
/// Deterministic for a fixed seed.
void run_sweep(const SweepConfig& config, std::ostream& out);

/// The fixed comparison grid: c_s in {0.01, ..., 1.00}, c_star = 1,
/// N = 10^4, M = 400, epsilon = 0. Columns: c_s, hybrid_asymptotic,
/// hybrid_exact_optimized, alg1_cost, alg2_cost, conqcc_asymptotic,
/// qcc_adversary.
void fig2(std::ostream& out);

}  // namespace sto
