#pragma once

#include "vtl/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vtl {

struct CommandConfig {
    std::string subcommand;                 // emit, verify, trace, eval, enumerate, relations
    std::optional<int> n;                   // required by every subcommand except verify
    std::string form = "explicit";          // recursive, kernel, simplified, explicit
    bool expand = false;                    // force full element emission for the closed form
    std::string format = "text";            // text, json
    std::string output;                     // file path; empty writes to the out stream
    std::optional<std::string> eval_point;  // rational "p/q" for eval
    std::vector<std::string> suites;        // verify selection; empty runs every suite
    std::uint64_t seed = kDefaultSeed;      // evaluated-mode sample seed
    bool force = false;                     // bypass the command-level n ranges
    std::optional<int> k_filter;            // enumerate: through-strand filter
};

// Executes one command. Documents go to out (or to config.output when set),
// diagnostics to err. Returns the process exit status: 0 on success, 1 when a
// selected check fails, 2 on usage, domain, or evaluation errors.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

// argv front end; VTL_FORMAT preseeds --format. Returns the exit status.
int run_cli(int argc, const char* const* argv);

}  // namespace vtl
