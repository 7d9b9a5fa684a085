#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "mpcmix/cli.hpp"
#include "mpcmix/decomposition.hpp"
#include "mpcmix/error.hpp"
#include "mpcmix/json_io.hpp"
#include "mpcmix/random_instance.hpp"

using namespace mpcmix;
using namespace mpcmix::testing;
using json_io::json;

namespace {

struct Invocation {
  int status;
  std::string output;
  json body() const { return json::parse(output); }
};

Invocation invoke(const std::string& command, const std::string& input, bool pretty = false) {
  cli::CommandRequest request;
  request.command = command;
  request.pretty = pretty;
  std::istringstream in(input);
  std::ostringstream out;
  const int status = cli::run(request, in, out);
  return {status, out.str()};
}

json example_input() {
  return {{"source", json_io::to_json(example_prior())},
          {"transition", json_io::to_json(example_transition())}};
}

}  // namespace

TEST_CASE("json readers accept the documented schemas") {
  const json d = json::parse(R"({"atoms": ["0","1/2","1"], "weights": ["3/10","3/10","2/5"]})");
  CHECK(json_io::distribution_from_json(d) == example_prior());
  const json f = json::parse(R"({"rows": [["2/3","1/3","0","0"],["1/3","0","1/3","1/3"],["0","1/4","1/4","1/2"]]})");
  CHECK(json_io::transition_from_json(f) == example_transition());
  const json g = json::parse(R"({"knots": [["0","0"], ["1/2","1/3"], ["3/4","1"]]})");
  CHECK(json_io::function_from_json(g) == competition_cdf());
  CHECK(json_io::rational_from_json(json("0.25")) == q("1/4"));
  CHECK(json_io::rational_from_json(json(3)) == 3);
  CHECK_THROWS_AS(json_io::rational_from_json(json(0.5)), ParseError);
  CHECK_THROWS_AS(json_io::distribution_from_json(json::parse(R"({"atoms": ["0"]})")), ParseError);
  CHECK_THROWS_AS(json_io::distribution_from_json(json::parse(R"({"atoms": ["0"], "weights": ["1/2"]})")), Error);
}

TEST_CASE("property: emitted JSON re-parses to equal values") {
  InstanceGenerator gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const SmpcTriple t = gen.smpc(gen.uniform(1, 5), gen.uniform(1, 8));
    const json_io::WriteOptions opts{trial % 2 == 0};
    CHECK(json_io::triple_from_json(json::parse(json_io::to_json(t, opts).dump())) == t);

    const Mixture m = decompose_full(t);
    const Mixture back = json_io::mixture_from_json(json::parse(json_io::to_json(m, opts).dump()));
    REQUIRE(back.components.size() == m.components.size());
    for (std::size_t k = 0; k < m.components.size(); ++k) {
      CHECK(back.components[k].weight == m.components[k].weight);
      CHECK(back.components[k].component == m.components[k].component);
    }
  }
}

TEST_CASE("cli decompose on the worked example") {
  const Invocation r = invoke("decompose", example_input().dump());
  REQUIRE(r.status == cli::kExitOk);
  const json body = r.body();
  REQUIRE(body["components"].size() == 2);
  CHECK(body["components"][0]["weight"] == "4/7");
  CHECK(body["components"][1]["weight"] == "3/7");
  CHECK(body["components"][1]["target"]["atoms"] == json({"1/6", "1/2", "3/4"}));

  const Invocation pretty = invoke("decompose", example_input().dump(), true);
  CHECK(pretty.status == cli::kExitOk);
  CHECK(pretty.output.find("weight 4/7") != std::string::npos);
}

TEST_CASE("cli is-mpc reports a mean mismatch") {
  const json input = {{"source", json_io::to_json(example_prior())},
                      {"target", json_io::to_json(DiscreteDistribution::point_mass(q("1/2")))}};
  const Invocation r = invoke("is-mpc", input.dump());
  CHECK(r.status == cli::kExitOk);
  CHECK(r.body() == json({{"is_mpc", false}, {"reason", "mean mismatch"}}));
}

TEST_CASE("cli verify-smpc rejects a non-stochastic matrix") {
  json input = example_input();
  input["transition"]["rows"][0][0] = "1/2";
  input["target"] = json_io::to_json(example_target());
  const Invocation r = invoke("verify-smpc", input.dump());
  CHECK(r.status == cli::kExitDomain);
  CHECK(r.body()["error"]["code"] == "row-sum");
}

TEST_CASE("cli error classes") {
  CHECK(invoke("decompose", "{not json").status == cli::kExitInput);
  CHECK(invoke("decompose", R"({"source": {"atoms": ["x"], "weights": ["1"]}, "transition": {"rows": [["1"]]}})").status ==
        cli::kExitInput);
  CHECK(invoke("decompose", R"({"source": {"atoms": ["0"], "weights": ["1"]}})").status == cli::kExitInput);
  CHECK(invoke("bogus", "{}").status == cli::kExitInput);

  const json not_mpc = {{"source", json_io::to_json(example_target())}, {"target", json_io::to_json(example_prior())}};
  const Invocation w = invoke("find-witness", not_mpc.dump());
  CHECK(w.status == cli::kExitDomain);
  CHECK(w.body()["error"]["code"] == "not-mpc");

  cli::CommandRequest request;
  request.command = "decompose";
  request.input_path = "/nonexistent/input.json";
  std::istringstream in;
  std::ostringstream out;
  CHECK(cli::run(request, in, out) == cli::kExitInput);
}

TEST_CASE("cli persuasion commands") {
  const json deviation = {{"source", json_io::to_json(competition_prior())},
                          {"opponent_cdf", json_io::to_json(competition_cdf())},
                          {"equilibrium_value", "1/2"}};
  const Invocation d = invoke("check-deviation", deviation.dump());
  REQUIRE(d.status == cli::kExitOk);
  CHECK(d.body()["max_payoff"] == "1/2");
  CHECK(d.body()["profitable"] == false);

  const json persuasion = {{"source", json_io::to_json(example_prior())},
                           {"utility", json::parse(R"({"knots": [["0","0"],["1/2","0"],["1","1/2"]]})")}};
  const Invocation s = invoke("solve-persuasion", persuasion.dump());
  REQUIRE(s.status == cli::kExitOk);
  CHECK(s.body()["knot_complete"] == true);
  CHECK(json_io::rational_from_json(s.body()["reduced_value"]) >= json_io::rational_from_json(s.body()["value"]));
}

TEST_CASE("cli gen-random is deterministic and valid") {
  cli::CommandRequest request{.command = "gen-random", .seed = 42, .atoms = 4, .columns = 7};
  std::istringstream in;
  std::ostringstream a;
  std::ostringstream b;
  REQUIRE(cli::run(request, in, a) == cli::kExitOk);
  REQUIRE(cli::run(request, in, b) == cli::kExitOk);
  CHECK(a.str() == b.str());

  const json body = json::parse(a.str());
  const SmpcTriple t = apply_transition(json_io::distribution_from_json(body["source"]),
                                        json_io::transition_from_json(body["transition"]));
  CHECK_NOTHROW(validate_smpc(t.source(), t.transition(), t.target()));

  const Invocation first = invoke("decompose", a.str());
  const Invocation second = invoke("decompose", a.str());
  CHECK(first.output == second.output);
}
