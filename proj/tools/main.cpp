#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

namespace {

constexpr const char* spec_help = R"(Family spec grammar:
  multipartite:S1,S2,...       knrt:n=N,r=R,t=T      knr:n=N,r=R
  path:r=R,t=T,l=L             cycle:r=R,t=T,l=L
  theta:r=R,t=T,l=L1,L2,...    plane:affine,q=Q      plane:projective,q=Q
  random:n=N,r=R,p=P,seed=S    (std::mt19937_64, one draw per r-set in lexicographic order)
  blowup:sizes=S1,...@BASE     blowup:r=R,odd=P@BASE (BASE must be a graph spec)
Grids for 'table' accept inclusive ranges a..b and ';' separated specs.

Exit codes: 0 success/proper, 1 improper/infeasible, 2 usage or parse error, 3 budget exhausted.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighbor-sum-distinguishing weightings of graphs and uniform hypergraphs"};
  app.footer(spec_help);
  app.require_subcommand(1);

  nsd::cli::SearchOptions search;
  app.add_option("-j,--jobs", search.jobs, "Worker threads for search and batch commands")
      ->check(CLI::PositiveNumber);

  std::string spec, mode = "e", hg_path, w_path, grid;
  std::optional<std::string> out_path;
  std::size_t cap = 14;
  std::vector<std::string> kv;

  auto* gen = app.add_subcommand("gen", "Write a family member as a hypergraph file");
  gen->add_option("spec", spec, "Family spec")->required();
  gen->add_option("-o,--out", out_path, "Output path (default: stdout)");

  auto* weigh = app.add_subcommand("weigh", "Build and self-check the constructive weighting");
  weigh->add_option("spec", spec, "Family spec")->required();
  weigh->add_option("-m,--mode", mode, "e, ve or ven")->capture_default_str();
  weigh->add_option("-o,--out", out_path, "Weighting output path (default: stdout)");

  auto* ver = app.add_subcommand("verify", "Check that a weighting induces a proper coloring");
  ver->add_option("hypergraph", hg_path)->required();
  ver->add_option("weighting", w_path)->required();

  auto* exact = app.add_subcommand("exact", "Compute chi exactly by pruned search");
  exact->add_option("hypergraph", hg_path)->required();
  exact->add_option("-m,--mode", mode, "e, ve or ven")->capture_default_str();
  exact->add_option("-k,--max-k", search.max_k, "Largest weight to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  exact->add_option("-b,--budget", search.budget, "Search node budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  exact->add_option("-w,--witness", out_path, "Write the witness weighting here");

  auto* table = app.add_subcommand("table", "Prediction, construction and oracle per spec");
  table->add_option("grid", grid, "Spec grid, e.g. cycle:r=2,t=1,l=3..12")->required();
  table->add_option("-m,--mode", mode, "e, ve or ven")->capture_default_str();
  table->add_option("-c,--oracle-cap", cap, "Run the oracle only up to this many edges")
      ->capture_default_str();
  table->add_option("-k,--max-k", search.max_k)->capture_default_str();
  table->add_option("-b,--budget", search.budget)->capture_default_str();

  auto* random = app.add_subcommand("random", "Sample random uniform hypergraphs");
  random->add_option("args", kv, "n=N r=R p=P trials=T seed=S")->required();
  random->add_option("-b,--budget", search.budget)->capture_default_str();

  auto* twins = app.add_subcommand("twins", "List twin classes");
  twins->add_option("hypergraph", hg_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nsd::cli::usage;
  }

  const nsd::cli::Streams io{std::cout, std::cerr};
  if (*gen) return nsd::cli::cmd_gen(spec, out_path, io);
  if (*weigh) return nsd::cli::cmd_weigh(spec, mode, out_path, io);
  if (*ver) return nsd::cli::cmd_verify(hg_path, w_path, io);
  if (*exact) return nsd::cli::cmd_exact(hg_path, mode, search, out_path, io);
  if (*table) return nsd::cli::cmd_table(grid, mode, cap, search, io);
  if (*random) return nsd::cli::cmd_random(kv, search, io);
  return nsd::cli::cmd_twins(hg_path, io);
}
