#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace mpcmix::cli {

struct CommandRequest {
  std::string command;  // verify-smpc, apply, is-mpc, find-witness, decompose,
                        // solve-persuasion, check-deviation, gen-random
  std::string input_path = "-";
  std::string output_path = "-";
  std::optional<std::uint64_t> seed;
  std::size_t atoms = 3;    // gen-random
  std::size_t columns = 4;  // gen-random
  bool decimals = false;
  bool pretty = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInput = 2;

/// Executes one command. "-" paths use the given streams. Results and
/// structured errors ({"error": {"code", "message"}}) go to the output.
int run(const CommandRequest& request, std::istream& in, std::ostream& out);

}  // namespace mpcmix::cli
