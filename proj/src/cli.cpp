#include "mpcmix/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "mpcmix/decomposition.hpp"
#include "mpcmix/error.hpp"
#include "mpcmix/json_io.hpp"
#include "mpcmix/lp.hpp"
#include "mpcmix/persuasion.hpp"
#include "mpcmix/random_instance.hpp"

namespace mpcmix::cli {
namespace {

using json_io::json;
using json_io::member;

// Output of one command: the JSON result and its human-readable rendering.
struct Result {
  json body;
  std::string table;
};

std::string cell(const Rational& x, bool decimals) {
  std::string s = x.to_string();
  if (decimals) {
    std::ostringstream os;
    os << std::setprecision(6) << x.to_double();
    s += " (" + os.str() + ")";
  }
  return s;
}

void print_distribution(std::ostream& os, const std::string& title, const DiscreteDistribution& d,
                        bool decimals) {
  os << title << "\n";
  os << "  " << std::left << std::setw(24) << "atom" << "weight\n";
  for (std::size_t j = 0; j < d.size(); ++j) {
    os << "  " << std::setw(24) << cell(d.atoms()[j], decimals) << cell(d.weights()[j], decimals)
       << "\n";
  }
}

void print_matrix(std::ostream& os, const std::string& title, const RationalMatrix& m) {
  os << title << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << " " << std::setw(10) << m(r, c).to_string();
    os << "\n";
  }
}

void print_mixture(std::ostream& os, const Mixture& m, bool decimals) {
  for (std::size_t k = 0; k < m.components.size(); ++k) {
    const auto& [weight, component] = m.components[k];
    print_distribution(os, "component " + std::to_string(k + 1) + "  weight " + cell(weight, decimals),
                       component.target(), decimals);
  }
}

RationalVector default_candidates(const DiscreteDistribution& prior, const PiecewiseLinearFn& fn) {
  std::set<Rational> points(prior.atoms().begin(), prior.atoms().end());
  for (const auto& [x, y] : fn.knots()) {
    if (prior.atoms().front() <= x && x <= prior.atoms().back()) points.insert(x);
  }
  return {points.begin(), points.end()};
}

RationalVector candidates_from(const json& input, const DiscreteDistribution& prior,
                               const PiecewiseLinearFn& fn) {
  if (const auto it = input.find("candidates"); it != input.end()) {
    return json_io::vector_from_json(*it);
  }
  return default_candidates(prior, fn);
}

SmpcTriple triple_from_input(const json& input) {
  const DiscreteDistribution source = json_io::distribution_from_json(member(input, "source"));
  const TransitionMatrix transition = json_io::transition_from_json(member(input, "transition"));
  if (input.contains("target")) {
    return validate_smpc(source, transition, json_io::distribution_from_json(input["target"]));
  }
  return apply_transition(source, transition);
}

Result verify_smpc_cmd(const json& input, const json_io::WriteOptions&) {
  const SmpcTriple t = json_io::triple_from_json(input);
  Result r;
  r.body = {{"valid", true}, {"mean", json_io::to_json(mean(t.source()))}};
  r.table = "valid SMPC; common mean " + mean(t.source()).to_string() + "\n";
  return r;
}

Result apply_cmd(const json& input, const json_io::WriteOptions& opts) {
  const SmpcTriple t =
      apply_transition(json_io::distribution_from_json(member(input, "source")),
                       json_io::transition_from_json(member(input, "transition")));
  Result r;
  r.body = json_io::to_json(t, opts);
  std::ostringstream os;
  print_distribution(os, "target", t.target(), opts.decimals);
  print_matrix(os, "transition", t.transition().matrix());
  r.table = os.str();
  return r;
}

Result is_mpc_cmd(const json& input, const json_io::WriteOptions&) {
  const MpcCheck check = check_mpc(json_io::distribution_from_json(member(input, "source")),
                                   json_io::distribution_from_json(member(input, "target")));
  Result r;
  r.body = {{"is_mpc", check.holds}};
  if (!check.holds) {
    r.body["reason"] = check.reason;
    if (check.violation_point) r.body["violation_at"] = json_io::to_json(*check.violation_point);
  }
  r.table = check.holds ? "target is a mean-preserving contraction of source\n"
                        : "not a mean-preserving contraction: " + check.reason + "\n";
  return r;
}

Result find_witness_cmd(const json& input, const json_io::WriteOptions& opts) {
  const DiscreteDistribution source = json_io::distribution_from_json(member(input, "source"));
  const DiscreteDistribution target = json_io::distribution_from_json(member(input, "target"));
  const auto witness = find_witness(source, target);
  if (!witness) throw Error("not-mpc", "no row-stochastic witness exists; target is not an MPC of source");
  const SmpcTriple t = validate_smpc(source, *witness, target);
  Result r;
  r.body = json_io::to_json(t, opts);
  std::ostringstream os;
  print_matrix(os, "witness", t.transition().matrix());
  r.table = os.str();
  return r;
}

Result decompose_cmd(const json& input, const json_io::WriteOptions& opts) {
  const Mixture m = decompose_full(triple_from_input(input));
  Result r;
  r.body = json_io::to_json(m, opts);
  std::ostringstream os;
  print_mixture(os, m, opts.decimals);
  r.table = os.str();
  return r;
}

Result solve_persuasion_cmd(const json& input, const json_io::WriteOptions& opts) {
  const DiscreteDistribution prior = json_io::distribution_from_json(member(input, "source"));
  const PiecewiseLinearFn u = json_io::function_from_json(member(input, "utility"));
  const PersuasionSolution s = solve_linear_persuasion(prior, u, candidates_from(input, prior, u));
  Result r;
  r.body = {{"value", json_io::to_json(s.value)},
            {"reduced_value", json_io::to_json(expected_value(s.reduced.target(), u))},
            {"knot_complete", s.knot_complete},
            {"optimum", json_io::to_json(s.optimum, opts)},
            {"reduced", json_io::to_json(s.reduced, opts)},
            {"certificate", json_io::to_json(s.certificate, opts)}};
  std::ostringstream os;
  os << "value " << cell(s.value, opts.decimals)
     << (s.knot_complete ? "" : " (lower bound: candidates miss some utility knots)") << "\n";
  print_distribution(os, "optimal posterior means", s.optimum.target(), opts.decimals);
  print_distribution(os, "reduced (at most n atoms)", s.reduced.target(), opts.decimals);
  r.table = os.str();
  return r;
}

Result check_deviation_cmd(const json& input, const json_io::WriteOptions& opts) {
  const DiscreteDistribution prior = json_io::distribution_from_json(member(input, "source"));
  const PiecewiseLinearFn cdf = json_io::function_from_json(member(input, "opponent_cdf"));
  const Rational eq_value = json_io::rational_from_json(member(input, "equilibrium_value"));
  const DeviationCheck c =
      check_no_profitable_deviation(prior, cdf, eq_value, candidates_from(input, prior, cdf));
  Result r;
  r.body = {{"max_payoff", json_io::to_json(c.max_payoff)},
            {"equilibrium_value", json_io::to_json(eq_value)},
            {"profitable", c.profitable},
            {"witness", json_io::to_json(c.witness, opts)}};
  std::ostringstream os;
  os << "max deviation payoff " << cell(c.max_payoff, opts.decimals) << " vs equilibrium "
     << cell(eq_value, opts.decimals) << ": "
     << (c.profitable ? "profitable deviation exists" : "no profitable deviation") << "\n";
  print_distribution(os, "best deviation", c.witness.target(), opts.decimals);
  r.table = os.str();
  return r;
}

Result gen_random_cmd(const CommandRequest& request, const json_io::WriteOptions& opts) {
  if (request.atoms == 0 || request.columns == 0) {
    throw Error("precondition", "gen-random needs at least one atom and one column");
  }
  InstanceGenerator gen(request.seed.value_or(0));
  const DiscreteDistribution p = gen.distribution(request.atoms);
  const TransitionMatrix f = gen.transition(request.atoms, request.columns);
  Result r;
  r.body = {{"source", json_io::to_json(p, opts)}, {"transition", json_io::to_json(f)}};
  std::ostringstream os;
  print_distribution(os, "source", p, opts.decimals);
  print_matrix(os, "transition", f.matrix());
  r.table = os.str();
  return r;
}

json read_input(const CommandRequest& request, std::istream& in) {
  if (request.input_path == "-") return json::parse(in);
  std::ifstream file(request.input_path);
  if (!file) throw std::ios_base::failure("cannot open input file " + request.input_path);
  return json::parse(file);
}

json error_body(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const CommandRequest& request, std::istream& in, std::ostream& out) {
  using Handler = std::function<Result(const json&, const json_io::WriteOptions&)>;
  static const std::map<std::string, Handler> handlers = {
      {"verify-smpc", verify_smpc_cmd},   {"apply", apply_cmd},
      {"is-mpc", is_mpc_cmd},             {"find-witness", find_witness_cmd},
      {"decompose", decompose_cmd},       {"solve-persuasion", solve_persuasion_cmd},
      {"check-deviation", check_deviation_cmd},
  };
  const json_io::WriteOptions opts{request.decimals};

  std::ofstream file;
  std::ostream* sink = &out;
  if (request.output_path != "-") {
    file.open(request.output_path);
    if (!file) {
      out << error_body("io", "cannot open output file " + request.output_path).dump(2) << "\n";
      return kExitInput;
    }
    sink = &file;
  }

  int status = kExitOk;
  json body;
  std::string table;
  try {
    Result result;
    if (request.command == "gen-random") {
      result = gen_random_cmd(request, opts);
    } else {
      const auto it = handlers.find(request.command);
      if (it == handlers.end()) throw ParseError("unknown command \"" + request.command + "\"");
      result = it->second(read_input(request, in), opts);
    }
    body = std::move(result.body);
    table = std::move(result.table);
  } catch (const Error& e) {
    status = kExitDomain;
    body = error_body(e.code(), e.what());
  } catch (const ParseError& e) {
    status = kExitInput;
    body = error_body("parse", e.what());
  } catch (const json::exception& e) {
    status = kExitInput;
    body = error_body("parse", e.what());
  } catch (const std::ios_base::failure& e) {
    status = kExitInput;
    body = error_body("io", e.what());
  } catch (const std::exception& e) {
    status = kExitDomain;
    body = error_body("internal", e.what());
  }

  if (request.pretty && status == kExitOk) {
    *sink << table;
  } else {
    *sink << body.dump(request.pretty ? 2 : -1) << "\n";
  }
  return status;
}

}  // namespace mpcmix::cli
