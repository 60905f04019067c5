#ifndef NSD_FAMILIES_HPP
#define NSD_FAMILIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsd/hypergraph.hpp"

namespace nsd {

struct MultipartiteSpec {
  std::vector<std::size_t> part_sizes;
  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;
};

/// Complete r-uniform n-partite hypergraph with parts of size t.
struct KnrtSpec {
  std::size_t n = 0, r = 0, t = 0;
  friend bool operator==(const KnrtSpec&, const KnrtSpec&) = default;
};

/// Complete r-uniform hypergraph on n vertices.
struct KnrSpec {
  std::size_t n = 0, r = 0;
  friend bool operator==(const KnrSpec&, const KnrSpec&) = default;
};

struct TightPathSpec {
  std::size_t r = 0, t = 0, length = 0;
  friend bool operator==(const TightPathSpec&, const TightPathSpec&) = default;
};

struct TightCycleSpec {
  std::size_t r = 0, t = 0, length = 0;
  friend bool operator==(const TightCycleSpec&, const TightCycleSpec&) = default;
};

struct ThetaSpec {
  std::size_t r = 0, t = 0;
  std::vector<std::size_t> lengths;
  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

struct AffinePlaneSpec {
  std::size_t q = 0;
  friend bool operator==(const AffinePlaneSpec&, const AffinePlaneSpec&) = default;
};

struct ProjectivePlaneSpec {
  std::size_t q = 0;
  friend bool operator==(const ProjectivePlaneSpec&, const ProjectivePlaneSpec&) = default;
};

struct RandomSpec {
  std::size_t n = 0, r = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  friend bool operator==(const RandomSpec&, const RandomSpec&) = default;
};

/// Blow-up of a graph: vertex v becomes a class of sizes[v] new vertices.
struct BlowupSpec {
  Hypergraph base;
  std::vector<std::size_t> sizes;
  std::string base_label;  ///< canonical text of the base family, for display
  friend bool operator==(const BlowupSpec&, const BlowupSpec&) = default;
};

using FamilySpec =
    std::variant<MultipartiteSpec, KnrtSpec, KnrSpec, TightPathSpec, TightCycleSpec, ThetaSpec,
                 AffinePlaneSpec, ProjectivePlaneSpec, RandomSpec, BlowupSpec>;

/// Hypergraph with a vertex partition (multipartite parts or blow-up classes).
struct PartitionedHypergraph {
  Hypergraph hypergraph;
  std::vector<std::vector<VertexId>> parts;
};

/**
 * Affine or projective plane of prime order q.
 *
 * For the affine plane, lines are indexed class by class: class i (0-based)
 * holds lines i*q .. i*q+q-1, classes 0..q-1 are the slopes 0..q-1 and class
 * q holds the vertical lines. The projective plane keeps those indices for the
 * extended lines and appends the line at infinity.
 */
struct PlaneStructure {
  Hypergraph hypergraph;
  std::size_t order = 0;
  bool projective = false;
  /// q+1 parallel classes of line indices (affine classes, kept for the
  /// extension).
  std::vector<std::vector<EdgeIndex>> parallel_classes;
  /// The fixed vertical line x=0 for affine; the line at infinity for projective.
  EdgeIndex distinguished_line = 0;
  /// The fixed line of the last parallel class used by the weighting (x=0).
  EdgeIndex anchor_line = 0;
  /// Ids of the points at infinity, one per parallel class (projective only).
  std::vector<VertexId> infinity_points;
};

/**
 * Theta hypergraph: s internally disjoint t-tight paths sharing their first
 * t vertices (ids 0..t-1) and last t vertices (ids t..2t-1). Interior
 * vertices follow branch by branch.
 */
struct ThetaStructure {
  Hypergraph hypergraph;
  std::size_t r = 0, t = 0;
  std::vector<std::size_t> lengths;
  /// Edge indices of each branch, ordered from the x end to the y end.
  std::vector<std::vector<EdgeIndex>> branch_edges;
};

PartitionedHypergraph complete_multipartite(const std::vector<std::size_t>& part_sizes);
PartitionedHypergraph complete_npartite_uniform(std::size_t parts, std::size_t r, std::size_t t);
Hypergraph complete_uniform(std::size_t n, std::size_t r);
Hypergraph tight_path(std::size_t r, std::size_t t, std::size_t length);
Hypergraph tight_cycle(std::size_t r, std::size_t t, std::size_t length);
ThetaStructure theta(std::size_t r, std::size_t t, const std::vector<std::size_t>& lengths);
PlaneStructure affine_plane(std::size_t q);
PlaneStructure projective_plane(std::size_t q);

/// Each candidate r-set, in lexicographic order, is kept independently when a
/// uniform draw from the 53-bit mantissa of std::mt19937_64(seed) is below p.
Hypergraph random_hypergraph(std::size_t n, std::size_t r, double p, std::uint64_t seed);

/// Replaces base vertex v by sizes[v] fresh vertices; every base edge uv
/// becomes S_u ∪ S_v. All resulting edges must have the same size.
PartitionedHypergraph blowup_transform(const Hypergraph& base,
                                       const std::vector<std::size_t>& sizes);

/// Size vector for a bipartite base graph: BFS levels alternate between
/// `odd_size` and r - odd_size, per component. Throws if the graph is not
/// bipartite.
std::vector<std::size_t> bipartite_blowup_sizes(const Hypergraph& base, std::size_t r,
                                                std::size_t odd_size);

bool is_prime(std::size_t q);

/// Generated hypergraph plus whichever structural metadata the family has.
struct FamilyInstance {
  Hypergraph hypergraph;
  std::vector<std::vector<VertexId>> parts;
  std::optional<PlaneStructure> plane;
  std::optional<ThetaStructure> theta;
};

FamilyInstance generate(const FamilySpec& spec);

}  // namespace nsd

#endif  // NSD_FAMILIES_HPP
