#pragma once

#include <string>
#include <vector>

#include "mpcmix/distribution.hpp"
#include "mpcmix/persuasion.hpp"

namespace mpcmix::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline RationalVector qv(std::initializer_list<const char*> items) {
  RationalVector out;
  for (const char* s : items) out.push_back(q(s));
  return out;
}

inline RationalMatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<RationalVector> out;
  for (auto r : rows) out.push_back(qv(r));
  return RationalMatrix::from_rows(out);
}

// Three-atom prior with a four-atom contraction.
inline DiscreteDistribution example_prior() {
  return {qv({"0", "1/2", "1"}), qv({"3/10", "3/10", "2/5"})};
}

inline TransitionMatrix example_transition() {
  return TransitionMatrix(qm({{"2/3", "1/3", "0", "0"},
                              {"1/3", "0", "1/3", "1/3"},
                              {"0", "1/4", "1/4", "1/2"}}));
}

inline DiscreteDistribution example_target() {
  return {qv({"1/6", "1/2", "3/4", "5/6"}), qv({"3/10", "1/5", "1/5", "3/10"})};
}

inline RationalMatrix example_left_transition() {
  return qm({{"5/6", "1/6", "0", "0"}, {"5/12", "0", "0", "7/12"}, {"0", "1/8", "0", "7/8"}});
}

inline RationalMatrix example_right_transition() {
  return qm({{"4/9", "5/9", "0", "0"}, {"2/9", "0", "7/9", "0"}, {"0", "5/12", "7/12", "0"}});
}

inline DiscreteDistribution example_left_target() {
  return {qv({"1/6", "1/2", "5/6"}), qv({"3/8", "1/10", "21/40"})};
}

// The printed third atom 3/64 is a misprint; the barycenter of the third
// column of the right transition is 3/4.
inline DiscreteDistribution example_right_target() {
  return {qv({"1/6", "1/2", "3/4"}), qv({"1/5", "1/3", "7/15"})};
}

// Two-seller competition instance and its candidate equilibrium cdf.
inline DiscreteDistribution competition_prior() {
  return {qv({"0", "1/2", "3/4"}), qv({"1/6", "1/2", "1/3"})};
}

inline PiecewiseLinearFn competition_cdf() {
  return PiecewiseLinearFn({{q("0"), q("0")}, {q("1/2"), q("1/3")}, {q("3/4"), q("1")}});
}

}  // namespace mpcmix::testing
