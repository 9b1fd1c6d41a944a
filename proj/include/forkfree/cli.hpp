#ifndef FORKFREE_CLI_HPP
#define FORKFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace forkfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitFinding = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInput = 65;

struct CliConfig {
    std::string subcommand;
    std::string theorem;      // verify
    std::string inline_graph;  // positional graph6/sparse6
    std::string input;        // graph6 file, "-" for stdin
    std::string edges;        // edge-list file
    int n_min = 1;
    int n_max = 0;            // 0: not given
    std::string class_name;
    int simplicial_k = 3;     // verify; lowering it plants a fault
    int workers = 1;
    std::string format = "text";
    std::string out;          // empty: stdout
};

/// Parses argv and runs the subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace forkfree::cli

#endif
