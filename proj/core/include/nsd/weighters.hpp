#ifndef NSD_WEIGHTERS_HPP
#define NSD_WEIGHTERS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/families.hpp"
#include "nsd/hypergraph.hpp"

namespace nsd {

/// Closed-form value of chi for a family, with the branch that produced it.
struct Prediction {
  Weight value = 0;
  SigmaMode mode = SigmaMode::edge_only;
  std::string theorem_case;
};

/// Predicted chi, or nullopt when no known result covers the spec and mode.
std::optional<Prediction> predict(const FamilySpec& spec, SigmaMode mode);

/// Raised when a constructed weighting turns out not to be proper.
class SelfCheckFailure : public std::logic_error {
 public:
  SelfCheckFailure(const std::string& what, std::vector<EdgeIndex> violations);
  const std::vector<EdgeIndex>& violations() const { return violations_; }

 private:
  std::vector<EdgeIndex> violations_;
};

/// Raised when no construction covers a part-size configuration.
class UncoveredConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by weigh() when predict() has nothing to say about the spec.
class NoPrediction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws SelfCheckFailure unless `w` induces a proper coloring of `h`.
void self_check(const Hypergraph& h, const Weighting& w, SigmaMode mode, std::string_view what);

// --- complete multipartite graphs, edge weighting ---------------------------

/**
 * Auxiliary structure for the complete multipartite construction.
 *
 * The parts (minus the largest one when the part count is odd) are split into
 * X_1..X_k (the k largest, non-increasing) and Y_1..Y_k (the rest, with Y_k
 * the largest). B* joins X_i to Y_1..Y_i and all Y's pairwise.
 */
struct BlowupPlan {
  enum class Case {
    larger_x,          ///< m_k > n_k
    fixed_vertex,      ///< n_k = m_k < m_{k-1}: z in X_{k-1} joined to X_k
    matching,          ///< n_k = m_k = m_{k-1} > 1: perfect matching X_k to X_{k-1}
    two_equal_parts,   ///< K_{t,t}: every edge at one vertex
    star_to_pair,      ///< three parts (a,t,t), a > t >= 2
    pendant_pair,      ///< three parts (a,1,1), a >= 2
    three_equal_parts  ///< three parts (t,t,t), t >= 2
  };

  Case case_tag = Case::larger_x;
  std::optional<std::size_t> removed_part;  ///< largest part, dropped for odd part count
  std::vector<std::size_t> x_parts;         ///< X_1..X_k as indices into the part list
  std::vector<std::size_t> y_parts;         ///< Y_1..Y_k
  std::vector<EdgeIndex> blown_up_edges;    ///< E(B*)
  std::optional<VertexId> z;                ///< fixed vertex (fixed_vertex, star_to_pair)
  std::vector<EdgeIndex> extra_edges;       ///< weight-2 edges beyond E(B*)

  /// All edges of weight 2, sorted.
  std::vector<EdgeIndex> heavy_edges() const;
};

std::string_view to_string(BlowupPlan::Case c);

/// True when at least floor((n-1)/2) parts have size > 1, there are at least
/// two parts and more than two vertices.
bool multipartite_hypothesis(const std::vector<std::size_t>& part_sizes);

BlowupPlan plan_complete_multipartite(const PartitionedHypergraph& g);

/// Weights in {1,2}; self-checked under edge_only.
Weighting weight_complete_multipartite(const PartitionedHypergraph& g);

// --- complete 3-partite graphs, full total weighting ------------------------

/// Full-total weighting (vertex weights included). All-distinct part sizes give
/// all ones; three equal parts reuse the edge weighting with unit vertex
/// weights. Self-checked under full_total.
Weighting weight_complete_3partite_ven(const PartitionedHypergraph& g);

// --- complete uniform hypergraphs -------------------------------------------

/**
 * Class structure for the complete n-partite r-uniform construction (parts
 * grouped into classes A_0..A_p), or for the complete r-uniform construction
 * (vertices grouped the same way).
 */
struct PartitionPlan {
  std::size_t p = 0, q = 0;
  bool p_even = false;
  /// Class index (0..p) of each grouped unit: a part, or a vertex.
  std::vector<std::size_t> class_of_unit;
  /// Edges that receive weight 2.
  std::vector<EdgeIndex> selected_edges;
  /// deg_{H*} of the units of each class, from the closed-form formulas.
  std::vector<std::size_t> formula_degree;
  /// deg_{H*} observed on the first vertex of each class (0 for empty classes).
  std::vector<std::size_t> observed_degree;
  /// True when every vertex of a class has the same observed degree.
  bool uniform_within_classes = true;

  /// True when observed class degrees strictly increase with the class index.
  bool strictly_increasing() const;
};

PartitionPlan plan_knrt(const PartitionedHypergraph& g, std::size_t r, std::size_t t);

/// Edge weighting of the complete n-partite r-uniform hypergraph. Requires
/// n > 2(r-1)^2 and r >= 3. For the total modes unit vertex weights are added.
Weighting weight_knrt(const PartitionedHypergraph& g, std::size_t r, std::size_t t,
                      SigmaMode mode = SigmaMode::edge_only);

PartitionPlan plan_knr(const Hypergraph& knr, std::size_t n, std::size_t r);

/// Weighting of the complete r-uniform hypergraph on n >= r+1 vertices, with
/// unit vertex weights; self-checked under all three modes.
Weighting weight_knr_total(std::size_t n, std::size_t r);

// --- paths, cycles, theta hypergraphs ---------------------------------------

/// A periodic weight pattern applied along an ordered list of edges.
struct PatternSpec {
  std::vector<Weight> period;

  /// One of "1122", "1221", "2112", "2211".
  static PatternSpec named(std::string_view digits);
  /// k ones followed by k twos.
  static PatternSpec blocks(std::size_t k);

  std::vector<Weight> expand(std::size_t count) const;
};

Weighting weight_tight_path(const TightPathSpec& spec, const Prediction& prediction);
Weighting weight_tight_cycle(const TightCycleSpec& spec, const Prediction& prediction);
Weighting weight_theta(const ThetaStructure& theta, const Prediction& prediction);

// --- planes -----------------------------------------------------------------

Weighting weight_plane(const PlaneStructure& plane);

// --- dispatch ---------------------------------------------------------------

struct WeighOutcome {
  FamilyInstance instance;
  Prediction prediction;
  Weighting weighting;
};

/// Generates the family, predicts chi and builds the matching weighting.
/// Throws NoPrediction when the spec/mode pair is not covered.
WeighOutcome weigh(const FamilySpec& spec, SigmaMode mode);

}  // namespace nsd

#endif  // NSD_WEIGHTERS_HPP
