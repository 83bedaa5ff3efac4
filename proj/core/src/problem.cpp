#include "sto/problem.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sto {

Rational rational_from_string(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();

  auto parse_int = [&](std::string_view s) -> std::int64_t {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(num, den);
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
    if (text.empty()) fail();
  }
  auto dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? "" : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) fail();

  Rational value(int_part.empty() ? 0 : parse_int(int_part));
  if (!frac_part.empty()) {
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      if (den > std::numeric_limits<std::int64_t>::max() / 10)
        throw std::invalid_argument("decimal too long: '" + std::string(text) + "'");
      den *= 10;
    }
    value += Rational(parse_int(frac_part), den);
  }
  return negative ? -value : value;
}

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

ProblemInstance::ProblemInstance(Index n_, Index m_, Rational c_star_, Rational c_s_,
                                 double epsilon_)
    : n(n_), m(m_), c_star(std::move(c_star_)), c_s(std::move(c_s_)), epsilon(epsilon_) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= M <= N");
  if (c_s <= Rational(0)) throw std::invalid_argument("c_s must be positive");
  if (c_star < c_s) throw std::invalid_argument("need c_star >= c_s");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::invalid_argument("need 0 <= epsilon < 1");
}

OracleAssignment::OracleAssignment(Index n, std::vector<Index> s, std::optional<Index> i_star)
    : n_(n), s_(std::move(s)), i_star_(i_star) {
  if (n_ < 1) throw std::invalid_argument("N must be positive");
  std::sort(s_.begin(), s_.end());
  if (std::adjacent_find(s_.begin(), s_.end()) != s_.end())
    throw std::invalid_argument("S has duplicate elements");
  for (Index i : s_)
    if (i < 1 || i > n_) throw std::invalid_argument("S element out of range");
  if (i_star_ && !in_s(*i_star_))
    throw std::invalid_argument("marked item must lie in S");
}

bool OracleAssignment::in_s(Index i) const {
  return std::binary_search(s_.begin(), s_.end(), i);
}

int OracleAssignment::query(OracleKind kind, Index i) const {
  if (i < 1 || i > n_) throw std::out_of_range("query index out of range");
  if (kind == OracleKind::Star) return (i_star_ && *i_star_ == i) ? 1 : 0;
  return in_s(i) ? 1 : 0;
}

namespace {

// Scramble sequential seeds before feeding them to the engine; nearby raw
// seeds otherwise produce correlated first draws.
std::uint64_t mix_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Index> sample_without_replacement(Index n, Index count, std::mt19937_64& rng) {
  // Partial Fisher-Yates over [1, N].
  std::vector<Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), Index{1});
  for (Index i = 0; i < count; ++i) {
    std::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

}  // namespace

OracleAssignment random_assignment(Index n, Index m, bool marked, std::uint64_t seed) {
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= M <= N");
  std::mt19937_64 rng(mix_seed(seed));
  std::vector<Index> s = sample_without_replacement(n, m, rng);
  std::optional<Index> i_star;
  if (marked) {
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    i_star = s[pick(rng)];
  }
  return OracleAssignment(n, std::move(s), i_star);
}

OracleAssignment random_unmarked_assignment(Index n, Index set_size, std::uint64_t seed) {
  if (set_size < 0 || set_size > n) throw std::invalid_argument("need 0 <= |S| <= N");
  std::mt19937_64 rng(mix_seed(~seed));
  return OracleAssignment(n, sample_without_replacement(n, set_size, rng), std::nullopt);
}

}  // namespace sto
