#include "mpcmix/json_io.hpp"

#include "mpcmix/error.hpp"

namespace mpcmix::json_io {
namespace {

json decimals(const RationalVector& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_double());
  return out;
}

const json& array_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return v;
}

}  // namespace

const json& member(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

json to_json(const Rational& x) { return x.to_string(); }

json to_json(const RationalVector& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

json to_json(const DiscreteDistribution& d, const WriteOptions& opts) {
  json out = {{"atoms", to_json(d.atoms())}, {"weights", to_json(d.weights())}};
  if (opts.decimals) {
    out["atoms_decimal"] = decimals(d.atoms());
    out["weights_decimal"] = decimals(d.weights());
  }
  return out;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto span = m.row(r);
    rows.push_back(to_json(RationalVector(span.begin(), span.end())));
  }
  return {{"rows", std::move(rows)}};
}

json to_json(const TransitionMatrix& f) { return to_json(f.matrix()); }

json to_json(const SmpcTriple& t, const WriteOptions& opts) {
  return {{"source", to_json(t.source(), opts)},
          {"transition", to_json(t.transition())},
          {"target", to_json(t.target(), opts)}};
}

json to_json(const Mixture& m, const WriteOptions& opts) {
  json out = json::object();
  if (!m.components.empty()) out["source"] = to_json(m.components.front().component.source(), opts);
  json components = json::array();
  for (const auto& [weight, component] : m.components) {
    json item = {{"weight", to_json(weight)},
                 {"target", to_json(component.target(), opts)},
                 {"transition", to_json(component.transition())}};
    if (opts.decimals) item["weight_decimal"] = weight.to_double();
    components.push_back(std::move(item));
  }
  out["components"] = std::move(components);
  return out;
}

json to_json(const PiecewiseLinearFn& fn) {
  json knots = json::array();
  for (const auto& [x, y] : fn.knots()) knots.push_back({x.to_string(), y.to_string()});
  return {{"knots", std::move(knots)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RationalVector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

DiscreteDistribution distribution_from_json(const json& j) {
  return DiscreteDistribution(vector_from_json(array_member(j, "atoms")),
                              vector_from_json(array_member(j, "weights")));
}

RationalMatrix matrix_from_json(const json& j) {
  std::vector<RationalVector> rows;
  for (const auto& row : array_member(j, "rows")) rows.push_back(vector_from_json(row));
  return RationalMatrix::from_rows(rows);
}

TransitionMatrix transition_from_json(const json& j) { return TransitionMatrix(matrix_from_json(j)); }

SmpcTriple triple_from_json(const json& j) {
  return validate_smpc(distribution_from_json(member(j, "source")),
                       transition_from_json(member(j, "transition")),
                       distribution_from_json(member(j, "target")));
}

Mixture mixture_from_json(const json& j) {
  const DiscreteDistribution source = distribution_from_json(member(j, "source"));
  Mixture out;
  for (const auto& item : array_member(j, "components")) {
    out.components.push_back(
        {rational_from_json(member(item, "weight")),
         validate_smpc(source, transition_from_json(member(item, "transition")),
                       distribution_from_json(member(item, "target")))});
  }
  return out;
}

PiecewiseLinearFn function_from_json(const json& j) {
  std::vector<PiecewiseLinearFn::Knot> knots;
  for (const auto& k : array_member(j, "knots")) {
    if (!k.is_array() || k.size() != 2) throw ParseError("knot must be a pair [x, y]");
    knots.emplace_back(rational_from_json(k[0]), rational_from_json(k[1]));
  }
  return PiecewiseLinearFn(std::move(knots));
}

}  // namespace mpcmix::json_io
