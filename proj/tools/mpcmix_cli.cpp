#include <CLI11.hpp>

#include <iostream>

#include "mpcmix/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact mean-preserving contraction toolkit"};
  app.require_subcommand(1);

  mpcmix::cli::CommandRequest request;
  std::uint64_t seed = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"verify-smpc", "check {source, transition, target} against both SMPC identities"},
      {"apply", "push {source, transition} forward to its target distribution"},
      {"is-mpc", "convex-order test for {source, target}"},
      {"find-witness", "find a row-stochastic witness for {source, target}"},
      {"decompose", "split {source, transition} into a mixture of at most n-atom SMPCs"},
      {"solve-persuasion", "optimal contraction for {source, utility[, candidates]}"},
      {"check-deviation",
       "best deviation against {source, opponent_cdf, equilibrium_value[, candidates]}"},
      {"gen-random", "emit a seeded random {source, transition} instance"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-o,--output", request.output_path, "output path, - for stdout");
    sub->add_flag("--decimals", request.decimals, "add decimal approximations");
    sub->add_flag("--pretty", request.pretty, "human-readable table instead of JSON");
    if (name == "gen-random") {
      sub->add_option("--seed", seed, "random seed")->required();
      sub->add_option("--atoms", request.atoms, "source atoms n")->capture_default_str();
      sub->add_option("--columns", request.columns, "transition columns m")->capture_default_str();
    } else {
      sub->add_option("input", request.input_path, "input JSON path, - for stdin")
          ->capture_default_str();
    }
    sub->callback([&request, name = name] { request.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mpcmix::cli::kExitInput;
  }
  if (request.command == "gen-random") request.seed = seed;
  return mpcmix::cli::run(request, std::cin, std::cout);
}
