#include <doctest.h>

#include "fixtures.hpp"
#include "mpcmix/lp.hpp"
#include "mpcmix/random_instance.hpp"
#include "oracles.hpp"

using namespace mpcmix;
using namespace mpcmix::testing;

namespace {

using S = ConstraintSense;

StandardFormLP make_lp(RationalVector c, RationalMatrix a, RationalVector b, std::vector<S> sense) {
  return {std::move(c), std::move(a), std::move(b), std::move(sense)};
}

bool satisfies(const StandardFormLP& lp, const RationalVector& x) {
  for (const auto& v : x) {
    if (v.sign() < 0) return false;
  }
  const RationalVector ax = lp.constraints.apply(x);
  for (std::size_t r = 0; r < ax.size(); ++r) {
    if (lp.sense[r] == S::eq && ax[r] != lp.rhs[r]) return false;
    if (lp.sense[r] == S::le && ax[r] > lp.rhs[r]) return false;
    if (lp.sense[r] == S::ge && ax[r] < lp.rhs[r]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("box LP") {
  const auto lp = make_lp(qv({"1", "1"}), qm({{"1", "0"}, {"0", "1"}}), qv({"1", "1"}), {S::le, S::le});
  const LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == 2);
  CHECK(out.solution == qv({"1", "1"}));
}

TEST_CASE("contradictory constraints are infeasible") {
  const auto lp = make_lp(qv({"1"}), qm({{"1"}, {"1"}}), qv({"1", "0"}), {S::eq, S::le});
  CHECK(solve(lp).status == LPStatus::infeasible);
}

TEST_CASE("unbounded LP") {
  const auto lp = make_lp(qv({"1", "0"}), qm({{"1", "-1"}}), qv({"1"}), {S::le});
  CHECK(solve(lp).status == LPStatus::unbounded);
}

TEST_CASE("negative right-hand sides and ge rows") {
  // max -x1 - x2 s.t. -x1 - 2 x2 <= -4, x1 - x2 = -1  ->  x = (2/3, 5/3)
  const auto lp = make_lp(qv({"-1", "-1"}), qm({{"-1", "-2"}, {"1", "-1"}}), qv({"-4", "-1"}), {S::le, S::eq});
  const LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.solution == qv({"2/3", "5/3"}));
  CHECK(out.value == q("-7/3"));
}

TEST_CASE("redundant equality rows are dropped") {
  const auto lp = make_lp(qv({"1", "2"}), qm({{"1", "1"}, {"2", "2"}, {"1", "0"}}), qv({"1", "2", "1"}),
                          {S::eq, S::eq, S::le});
  const LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == 2);
}

TEST_CASE("degenerate LP terminates") {
  // Classic cycling example for the largest-coefficient rule.
  const auto lp = make_lp(qv({"3/4", "-20", "1/2", "-6"}),
                          qm({{"1/4", "-8", "-1", "9"}, {"1/2", "-12", "-1/2", "3"}, {"0", "0", "1", "0"}}),
                          qv({"0", "0", "1"}), {S::le, S::le, S::le});
  const LPOutcome out = solve(lp);
  REQUIRE(out.status == LPStatus::optimal);
  CHECK(out.value == q("5/4"));
  CHECK(out.iterations < 50);
}

TEST_CASE("property: simplex matches vertex enumeration") {
  InstanceGenerator gen(31337);
  auto small = [&gen] {
    return Rational(static_cast<std::int64_t>(gen.uniform(0, 12)) - 4, static_cast<std::int64_t>(gen.uniform(1, 3)));
  };
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = gen.uniform(1, 4);
    const std::size_t m = gen.uniform(1, 7 - d);  // one bounding row added below
    StandardFormLP lp{RationalVector(d), RationalMatrix(m + 1, d), RationalVector(m + 1),
                      std::vector<S>(m + 1, S::le)};
    for (auto& c : lp.objective) c = small();
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t j = 0; j < d; ++j) lp.constraints(r, j) = small();
      lp.rhs[r] = small();
      lp.sense[r] = static_cast<S>(gen.uniform(0, 2));
    }
    for (std::size_t j = 0; j < d; ++j) lp.constraints(m, j) = 1;
    lp.rhs[m] = static_cast<std::int64_t>(gen.uniform(1, 10));

    const LPOutcome out = solve(lp);
    const VertexOracle oracle = enumerate_vertices(lp);
    CHECK(out.iterations < 100);
    REQUIRE(out.status != LPStatus::unbounded);
    CHECK((out.status == LPStatus::optimal) == oracle.feasible);
    if (oracle.feasible && out.status == LPStatus::optimal) {
      ++feasible;
      CHECK(out.value == oracle.best);
      CHECK(satisfies(lp, out.solution));
    }
  }
  CHECK(feasible > 50);
}

TEST_CASE("find_witness") {
  SUBCASE("worked example") {
    const auto f = find_witness(example_prior(), example_target());
    REQUIRE(f.has_value());
    CHECK_NOTHROW(validate_smpc(example_prior(), *f, example_target()));
  }
  SUBCASE("full pooling") {
    const auto f = find_witness(example_prior(), DiscreteDistribution::point_mass(q("11/20")));
    REQUIRE(f.has_value());
    CHECK(f->matrix() == qm({{"1"}, {"1"}, {"1"}}));
  }
  SUBCASE("mean mismatch") {
    CHECK_FALSE(find_witness(example_prior(), DiscreteDistribution::point_mass(q("1/2"))).has_value());
  }
  SUBCASE("spread is not a contraction") {
    CHECK_FALSE(find_witness(example_target(), example_prior()).has_value());
  }
}

TEST_CASE("property: witness exists iff convex order holds") {
  InstanceGenerator gen(77);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = gen.uniform(1, 5);
    const DiscreteDistribution p = gen.distribution(n);
    DiscreteDistribution candidate = apply_transition(p, gen.transition(n, gen.uniform(1, 5))).target();
    if (trial % 3 == 1) {
      // Same mean, arbitrary shape: either answer is possible.
      candidate = gen.distribution(gen.uniform(1, 5));
      const Rational shift = mean(p) - mean(candidate);
      RationalVector atoms = candidate.atoms();
      for (auto& a : atoms) a += shift;
      candidate = DiscreteDistribution(atoms, candidate.weights());
    }
    const auto witness = find_witness(p, candidate);
    CHECK(witness.has_value() == is_mpc(p, candidate));
    if (witness) CHECK_NOTHROW(validate_smpc(p, *witness, candidate));
  }
}
