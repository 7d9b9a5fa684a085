#include "mpcmix/random_instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mpcmix {
namespace {

RationalVector normalize(const std::vector<std::int64_t>& raw) {
  std::int64_t total = 0;
  for (auto x : raw) total += x;
  RationalVector out;
  out.reserve(raw.size());
  for (auto x : raw) out.emplace_back(x, total);
  return out;
}

}  // namespace

std::size_t InstanceGenerator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rational InstanceGenerator::random_atom() {
  const auto den = static_cast<std::int64_t>(uniform(1, 6));
  const auto num = static_cast<std::int64_t>(uniform(0, 40)) - 20;
  return {num, den};
}

DiscreteDistribution InstanceGenerator::distribution(std::size_t n) {
  std::set<Rational> atoms;
  while (atoms.size() < n) atoms.insert(random_atom());
  std::vector<std::int64_t> raw(n);
  for (auto& w : raw) w = static_cast<std::int64_t>(uniform(1, 9));
  return {RationalVector(atoms.begin(), atoms.end()), normalize(raw)};
}

TransitionMatrix InstanceGenerator::transition(std::size_t n, std::size_t m, double zero_chance) {
  std::bernoulli_distribution zero(zero_chance);
  RationalMatrix f(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> raw(m);
    for (auto& x : raw) x = zero(rng_) ? 0 : static_cast<std::int64_t>(uniform(1, 9));
    if (std::all_of(raw.begin(), raw.end(), [](auto x) { return x == 0; })) {
      raw[uniform(0, m - 1)] = static_cast<std::int64_t>(uniform(1, 9));
    }
    const RationalVector row = normalize(raw);
    for (std::size_t j = 0; j < m; ++j) f(i, j) = row[j];
  }
  return TransitionMatrix(std::move(f));
}

SmpcTriple InstanceGenerator::smpc(std::size_t n, std::size_t m, double zero_chance) {
  const DiscreteDistribution p = distribution(n);
  return apply_transition(p, transition(n, m, zero_chance));
}

PiecewiseLinearFn InstanceGenerator::function(const Rational& lo, const Rational& hi,
                                              std::size_t knots) {
  if (!(lo < hi)) throw std::invalid_argument("function interval must have lo < hi");
  std::set<Rational> xs{lo, hi};
  // Interior knots on a grid of the interval.
  const auto steps = static_cast<std::int64_t>(uniform(4, 12));
  while (xs.size() < std::max<std::size_t>(knots, 2)) {
    const auto k = static_cast<std::int64_t>(uniform(1, static_cast<std::size_t>(steps - 1)));
    xs.insert(lo + (hi - lo) * Rational(k, steps));
    if (xs.size() >= static_cast<std::size_t>(steps + 1)) break;
  }
  std::vector<PiecewiseLinearFn::Knot> out;
  for (const auto& x : xs) {
    const auto den = static_cast<std::int64_t>(uniform(1, 6));
    const auto num = static_cast<std::int64_t>(uniform(0, 40)) - 20;
    out.emplace_back(x, Rational(num, den));
  }
  return PiecewiseLinearFn(std::move(out));
}

}  // namespace mpcmix
