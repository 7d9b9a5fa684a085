#pragma once

#include <json.hpp>

#include "mpcmix/decomposition.hpp"
#include "mpcmix/distribution.hpp"
#include "mpcmix/persuasion.hpp"
#include "mpcmix/rational.hpp"

namespace mpcmix::json_io {

using nlohmann::json;

// Every rational is written as an exact "a/b" string. With decimals set,
// distributions and weights additionally carry *_decimal arrays of doubles;
// readers ignore those fields.
struct WriteOptions {
  bool decimals = false;
};

json to_json(const Rational& x);
json to_json(const RationalVector& xs);
json to_json(const DiscreteDistribution& d, const WriteOptions& opts = {});
json to_json(const RationalMatrix& m);
json to_json(const TransitionMatrix& f);
json to_json(const SmpcTriple& t, const WriteOptions& opts = {});
json to_json(const Mixture& m, const WriteOptions& opts = {});
json to_json(const PiecewiseLinearFn& fn);

// Readers throw ParseError on malformed structure or text and Error on
// well-formed values that break a domain invariant.
Rational rational_from_json(const json& j);
RationalVector vector_from_json(const json& j);
DiscreteDistribution distribution_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j);
TransitionMatrix transition_from_json(const json& j);
SmpcTriple triple_from_json(const json& j);
Mixture mixture_from_json(const json& j);
PiecewiseLinearFn function_from_json(const json& j);

/// Looks up a required member, throwing ParseError when it is absent.
const json& member(const json& j, const char* key);

}  // namespace mpcmix::json_io
