#ifndef NSD_TOOLS_COMMANDS_HPP
#define NSD_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nsd/hypergraph.hpp"

namespace nsd::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  ok = 0,
  improper = 1,  ///< improper weighting, infeasible, disagreement, twins found
  usage = 2,     ///< bad arguments, unreadable or malformed input, no prediction
  budget = 3,    ///< search budget exhausted
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

struct SearchOptions {
  Weight max_k = 3;
  std::uint64_t budget = 100'000'000;
  std::size_t jobs = 1;
};

int cmd_gen(const std::string& spec, const std::optional<std::string>& out_path, Streams io);
int cmd_weigh(const std::string& spec, const std::string& mode,
              const std::optional<std::string>& out_path, Streams io);
int cmd_verify(const std::string& hypergraph_path, const std::string& weighting_path,
               Streams io);
int cmd_exact(const std::string& hypergraph_path, const std::string& mode,
              const SearchOptions& search, const std::optional<std::string>& witness_path,
              Streams io);
int cmd_table(const std::string& grid, const std::string& mode, std::size_t oracle_edge_cap,
              const SearchOptions& search, Streams io);
/// `args` are key=value pairs: n, r, p, trials, seed.
int cmd_random(const std::vector<std::string>& args, const SearchOptions& search, Streams io);
int cmd_twins(const std::string& hypergraph_path, Streams io);

}  // namespace nsd::cli

#endif  // NSD_TOOLS_COMMANDS_HPP
