#include <doctest.h>

#include "fixtures.hpp"
#include "mpcmix/error.hpp"
#include "mpcmix/random_instance.hpp"
#include "oracles.hpp"

using namespace mpcmix;
using namespace mpcmix::testing;

TEST_CASE("null vector of the example transition") {
  const RationalMatrix f = example_transition().matrix();
  const auto c = null_space_vector(f);
  REQUIRE(c.has_value());
  // Solved by hand: row 1 gives c1 = -c2/2, row 3 gives c2 = -c3 - 2c4,
  // row 2 then fixes the ratio c3 : c4 = -4 : 3.
  CHECK(*c == qv({"1", "-2", "-4", "3"}));
  CHECK(annihilates(f, *c));
}

TEST_CASE("null vector edge cases") {
  CHECK_FALSE(null_space_vector(RationalMatrix::identity(2)).has_value());

  const auto dup = null_space_vector(qm({{"1/3", "1/3"}, {"2", "2"}}));
  REQUIRE(dup.has_value());
  CHECK(*dup == qv({"1", "-1"}));

  // Zero first column: the first nonzero entry of the normalized vector is 1.
  const auto zero_col = null_space_vector(qm({{"0", "1"}, {"0", "2"}}));
  REQUIRE(zero_col.has_value());
  CHECK(*zero_col == qv({"1", "0"}));

  const auto wide = null_space_vector(qm({{"1", "2", "3"}}));
  REQUIRE(wide.has_value());
  CHECK(*wide == qv({"1", "-1/2", "0"}));
}

TEST_CASE("rank and echelon form") {
  CHECK(rank(RationalMatrix::identity(4)) == 4);
  CHECK(rank(qm({{"1", "2"}, {"2", "4"}})) == 1);
  CHECK(rank(example_transition().matrix()) == 3);
  const RowEchelon e = reduced_row_echelon(qm({{"0", "2", "4"}, {"1", "1", "1"}}));
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == qm({{"1", "0", "-1"}, {"0", "1", "2"}}));
}

TEST_CASE("matrix construction errors") {
  CHECK_THROWS_AS(RationalMatrix(0, 3), Error);
  CHECK_THROWS_AS(RationalMatrix::from_rows({}), Error);
  CHECK_THROWS_AS(RationalMatrix::from_rows({qv({"1", "2"}), qv({"1"})}), Error);
}

TEST_CASE("property: wide random matrices have a deterministic null vector") {
  InstanceGenerator gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = gen.uniform(1, 6);
    RationalMatrix m(rows, rows + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c <= rows; ++c) m(r, c) = gen.random_atom();
    }
    const auto c = null_space_vector(m);
    REQUIRE(c.has_value());
    CHECK(annihilates(m, *c));
    const auto first = std::find_if(c->begin(), c->end(), [](const Rational& x) { return !x.is_zero(); });
    REQUIRE(first != c->end());
    CHECK(*first == 1);
    const RationalMatrix copy = m;
    CHECK(null_space_vector(copy) == c);
  }
}
