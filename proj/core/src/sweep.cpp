#include "sto/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sto/bounds.hpp"
#include "sto/classical.hpp"
#include "sto/schedules.hpp"
#include "sto/statevec.hpp"
#include "sto/subspace.hpp"

namespace sto {

namespace {

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::istringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("config: not an integer: '" + text + "'");
  return v;
}

using QuantityFn = std::function<double(const ProblemInstance&, std::uint64_t)>;

double simulated_success(const ProblemInstance& instance, std::uint64_t seed) {
  HybridPlan plan = optimize_hybrid(instance);
  OracleAssignment assignment = random_assignment(instance.n, instance.m, true, seed);
  auto [state, ledger] = run_schedule(instance, assignment, plan.plan.schedule);
  return success_probability(state, assignment);
}

double audit_max_ratio(const ProblemInstance& instance, std::uint64_t seed) {
  HybridPlan plan = optimize_hybrid(instance);
  OracleAssignment assignment = random_assignment(instance.n, instance.m, true, seed);
  ProgressTrace trace = audit_schedule(instance, assignment, plan.plan.schedule);
  return trace.bound_per_cost > 0.0 ? trace.max_dh_per_cost / trace.bound_per_cost : 0.0;
}

const std::map<std::string, QuantityFn>& quantity_table() {
  static const std::map<std::string, QuantityFn> table = {
      {"alg1_cost", [](const ProblemInstance& p, std::uint64_t) {
         return to_double(build_alg1(p).predicted_cost);
       }},
      {"alg2_cost", [](const ProblemInstance& p, std::uint64_t) {
         return to_double(cost_envelope(p).alg2_cost);
       }},
      {"hybrid_cost", [](const ProblemInstance& p, std::uint64_t) {
         return to_double(optimize_hybrid_shape(p).cost);
       }},
      {"hybrid_t_inner", [](const ProblemInstance& p, std::uint64_t) {
         return static_cast<double>(optimize_hybrid_shape(p).t_inner);
       }},
      {"hybrid_asymptotic", [](const ProblemInstance& p, std::uint64_t) {
         return hybrid_cost_asymptotic(p);
       }},
      {"conqcc_asymptotic", [](const ProblemInstance& p, std::uint64_t) {
         return conqcc_lower_bound(p, ConqccMode::Asymptotic).value;
       }},
      {"qcc_adversary", [](const ProblemInstance& p, std::uint64_t) {
         return qcc_lower_bound(p).value;
       }},
      {"exact_bound", [](const ProblemInstance& p, std::uint64_t) {
         return exact_lower_bound(p).value;
       }},
      {"rcc0", [](const ProblemInstance& p, std::uint64_t) { return to_double(rcc0(p)); }},
      {"rcc_bounded", [](const ProblemInstance& p, std::uint64_t) {
         return rcc_bounded_bound(p).value;
       }},
      {"simulated_success", simulated_success},
      {"audit_max_ratio", audit_max_ratio},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& sweep_quantities() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : quantity_table()) out.push_back(name);
    return out;
  }();
  return names;
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig config;
  std::string line;
  while (std::getline(in, line)) {
    std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    auto eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value', got '" + text + "'");
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (key == "n") {
      for (const auto& v : split_list(value)) config.n.push_back(parse_int(v));
    } else if (key == "m") {
      for (const auto& v : split_list(value)) config.m.push_back(parse_int(v));
    } else if (key == "c_star") {
      for (const auto& v : split_list(value)) config.c_star.push_back(rational_from_string(v));
    } else if (key == "c_s") {
      for (const auto& v : split_list(value)) config.c_s.push_back(rational_from_string(v));
    } else if (key == "epsilon") {
      for (const auto& v : split_list(value)) config.epsilon.push_back(std::stod(v));
    } else if (key == "quantities") {
      config.quantities = split_list(value);
    } else if (key == "out") {
      config.out = value;
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(parse_int(value));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return config;
}

void run_sweep(const SweepConfig& config, std::ostream& out) {
  if (config.n.empty() || config.m.empty() || config.c_star.empty() || config.c_s.empty() ||
      config.epsilon.empty())
    throw std::invalid_argument("sweep grid is empty");
  if (config.quantities.empty()) throw std::invalid_argument("no quantities requested");
  for (const std::string& q : config.quantities)
    if (!quantity_table().count(q))
      throw std::invalid_argument("unknown quantity '" + q + "'");

  out << "n,m,c_star,c_s,epsilon";
  for (const std::string& q : config.quantities) out << ',' << q;
  out << '\n';
  auto prev = out.precision(17);

  std::uint64_t row = 0;
  for (Index n : config.n)
    for (Index m : config.m)
      for (const Rational& c_star : config.c_star)
        for (const Rational& c_s : config.c_s)
          for (double epsilon : config.epsilon) {
            ProblemInstance instance(n, m, c_star, c_s, epsilon);
            out << n << ',' << m << ',' << to_double(c_star) << ',' << to_double(c_s) << ','
                << epsilon;
            for (const std::string& q : config.quantities)
              out << ',' << quantity_table().at(q)(instance, config.seed + row);
            out << '\n';
            ++row;
          }
  out.precision(prev);
}

void fig2(std::ostream& out) {
  out << "c_s,hybrid_asymptotic,hybrid_exact_optimized,alg1_cost,alg2_cost,"
         "conqcc_asymptotic,qcc_adversary\n";
  auto prev = out.precision(17);
  for (int i = 1; i <= 100; ++i) {
    ProblemInstance instance(10000, 400, Rational(1), Rational(i, 100), 0.0);
    CostEnvelope env = cost_envelope(instance);
    out << to_double(instance.c_s) << ',' << hybrid_cost_asymptotic(instance) << ','
        << to_double(env.hybrid_cost) << ',' << to_double(env.alg1_cost) << ','
        << to_double(env.alg2_cost) << ','
        << conqcc_lower_bound(instance, ConqccMode::Asymptotic).value << ','
        << qcc_lower_bound(instance).value << '\n';
  }
  out.precision(prev);
}

}  // namespace sto
