#ifndef NSD_SOLVER_HPP
#define NSD_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsd/hypergraph.hpp"

namespace nsd {

struct SearchConfig {
  Weight max_k = 3;
  SigmaMode mode = SigmaMode::edge_only;
  std::uint64_t node_budget = 100'000'000;
  /// Worker threads for the top-level split; 0 or 1 searches sequentially.
  std::size_t parallel_width = 0;
};

enum class SearchOutcome { found, infeasible, budget_exhausted };

struct FeasibilityResult {
  SearchOutcome outcome = SearchOutcome::infeasible;
  std::optional<Weighting> witness;
  std::uint64_t nodes = 0;
};

/// Searches for a weighting with all weights in 1..k whose induced coloring
/// (under config.mode) is proper. Requires at least one edge and k >= 1.
FeasibilityResult feasible_with_k(const Hypergraph& h, Weight k, const SearchConfig& config);

struct ChiResult {
  enum class Status { exact, exceeds_max_k, budget_exhausted };
  Status status = Status::exact;
  /// The exact value when status is exact.
  Weight value = 0;
  std::optional<Weighting> witness;
  std::uint64_t nodes = 0;
  /// Largest k proved infeasible (0 if none).
  Weight infeasible_through = 0;
};

/// Smallest k <= config.max_k admitting a proper weighting.
ChiResult exact_chi(const Hypergraph& h, const SearchConfig& config);

struct Violation {
  EdgeIndex edge = 0;
  Color color = 0;
};

struct VerifyReport {
  bool proper = false;
  ColorVector colors;
  std::vector<Violation> violations;
};

VerifyReport verify(const Hypergraph& h, const Weighting& w, SigmaMode mode);

}  // namespace nsd

#endif  // NSD_SOLVER_HPP
