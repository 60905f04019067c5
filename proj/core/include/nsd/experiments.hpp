#ifndef NSD_EXPERIMENTS_HPP
#define NSD_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsd/families.hpp"
#include "nsd/solver.hpp"
#include "nsd/weighters.hpp"

namespace nsd {

enum class Agreement { agree, disagree, skipped };

std::string_view to_string(Agreement a);

struct TableRow {
  FamilySpec spec;
  SigmaMode mode = SigmaMode::edge_only;
  std::size_t edge_count = 0;
  std::optional<Prediction> predicted;
  /// The constructive weighting was built and passed its self-check.
  bool constructive_ok = false;
  /// Empty on success, otherwise the first failure message of the row.
  std::string status;
  std::optional<ChiResult> exact;
  /// skipped unless both a prediction and an exact value exist.
  Agreement agreement = Agreement::skipped;
};

/// One row per spec: prediction, constructive weighting, and the exact value
/// when the hypergraph has at most `oracle_edge_cap` edges. Failures are
/// recorded in the row. Rows are computed on up to `jobs` threads.
std::vector<TableRow> family_table(const std::vector<FamilySpec>& grid, SigmaMode mode,
                                   std::size_t oracle_edge_cap,
                                   const SearchConfig& search = {}, std::size_t jobs = 1);

struct RandomReport {
  std::size_t n = 0, r = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t empty_instances = 0;
  /// Samples with an isolated edge (not nice).
  std::size_t isolated_edge_instances = 0;
  std::size_t budget_exhausted = 0;
  double mean_edges = 0.0;
  /// Fraction of non-empty samples with chi^e <= k, for k = 1, 2.
  std::map<Weight, double> fraction_chi_le;
  /// Same, restricted to nice non-empty samples.
  std::map<Weight, double> nice_fraction_chi_le;
};

/// Samples `trials` random r-uniform hypergraphs; trial i uses the i-th draw
/// of std::mt19937_64(seed) as its own seed. Budget-exhausted trials count
/// as not <= 2.
RandomReport random_trial_batch(std::size_t n, std::size_t r, double p, std::size_t trials,
                                std::uint64_t seed, const SearchConfig& search = {},
                                std::size_t jobs = 1);

}  // namespace nsd

#endif  // NSD_EXPERIMENTS_HPP
