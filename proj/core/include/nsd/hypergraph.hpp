#ifndef NSD_HYPERGRAPH_HPP
#define NSD_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace nsd {

using VertexId = std::size_t;
using EdgeIndex = std::size_t;
using Weight = std::int64_t;
using Color = std::int64_t;

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<VertexId>;

/// Induced vertex colors, one per vertex.
using ColorVector = std::vector<Color>;

/**
 * Simple hypergraph on the dense vertex set 0..n-1.
 *
 * Edges are stored sorted and in insertion order. Construction rejects
 * out-of-range ids, edges with fewer than two vertices, repeated vertices
 * inside an edge and duplicate edges. Instances are immutable.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds the hypergraph; each edge is sorted before validation. When
  /// `uniformity` is given every edge must have exactly that many vertices.
  Hypergraph(std::size_t vertex_count, std::vector<Edge> edges,
             std::optional<std::size_t> uniformity = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> edge(EdgeIndex e) const;

  /// Declared uniformity, or the common edge size when all edges agree.
  std::optional<std::size_t> uniformity() const { return uniformity_; }

  /// Indices of the edges containing `v`, in increasing order.
  std::span<const EdgeIndex> incident_edges(VertexId v) const;

  /// Index of the edge equal to `vertices` (any order), if present.
  std::optional<EdgeIndex> find_edge(std::vector<VertexId> vertices) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::size_t> uniformity_;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Which induced color a weighting defines.
enum class SigmaMode {
  edge_only,   ///< sum of incident edge weights
  total,       ///< plus the vertex's own weight
  full_total,  ///< plus the weights of all neighbours
};

bool requires_vertex_weights(SigmaMode mode);
std::string_view to_string(SigmaMode mode);
/// Parses "e", "ve" or "ven".
std::optional<SigmaMode> parse_sigma_mode(std::string_view text);

/**
 * Integer weights on the edges and, for the total modes, on the vertices.
 * Every weight lies in 1..max_weight.
 */
class Weighting {
 public:
  Weighting(std::vector<Weight> edge_weights,
            std::optional<std::vector<Weight>> vertex_weights,
            Weight max_weight);

  /// All-ones weighting for `h`; vertex weights are included when the mode
  /// needs them.
  static Weighting constant(const Hypergraph& h, SigmaMode mode, Weight value = 1);

  const std::vector<Weight>& edge_weights() const { return edge_weights_; }
  const std::optional<std::vector<Weight>>& vertex_weights() const { return vertex_weights_; }
  Weight max_weight() const { return max_weight_; }

  /// Largest weight actually used.
  Weight largest_used() const;

  /// Throws std::invalid_argument unless the weighting fits `h` under `mode`.
  void check_shape(const Hypergraph& h, SigmaMode mode) const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  std::vector<Weight> edge_weights_;
  std::optional<std::vector<Weight>> vertex_weights_;
  Weight max_weight_ = 1;
};

std::size_t degree(const Hypergraph& h, VertexId v);

/// Open neighbourhood of `v`, sorted.
std::vector<VertexId> neighborhood(const Hypergraph& h, VertexId v);

/// Induced colors. Sums are overflow-checked (std::overflow_error).
ColorVector sigma(const Hypergraph& h, const Weighting& w, SigmaMode mode);

/// True iff every edge contains two vertices of different color.
bool is_proper(const Hypergraph& h, std::span<const Color> colors);

/// Edges whose vertices all share one color.
std::vector<EdgeIndex> monochromatic_edges(const Hypergraph& h, std::span<const Color> colors);

/// No isolated edge, i.e. no edge disjoint from every other edge. For graphs
/// this is exactly "no K_2 component".
bool is_nice(const Hypergraph& h);

/// True iff every edge has two vertices of different degree; this is the
/// closed form for chi^e(h) == 1.
bool every_edge_has_degree_distinct_pair(const Hypergraph& h);

/// All unordered pairs {u, v} (u < v) with identical incident-edge sets.
std::vector<std::pair<VertexId, VertexId>> detect_twins(const Hypergraph& h);

/// Twin equivalence classes of size at least two, each sorted.
std::vector<std::vector<VertexId>> twin_classes(const Hypergraph& h);

/// Common degree if the hypergraph is regular.
std::optional<std::size_t> is_regular(const Hypergraph& h);

}  // namespace nsd

#endif  // NSD_HYPERGRAPH_HPP
