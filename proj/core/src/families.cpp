#include "nsd/families.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace nsd {

namespace {

// Advances `comb` (strictly increasing, values < n) to the next combination in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t r = comb.size();
  for (std::size_t i = r; i-- > 0;) {
    if (comb[i] < n - r + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <typename Visit>
void for_each_combination(std::size_t n, std::size_t r, Visit&& visit) {
  if (r > n) return;
  std::vector<std::size_t> comb(r);
  std::iota(comb.begin(), comb.end(), std::size_t{0});
  do {
    visit(comb);
  } while (r > 0 && next_combination(comb, n));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

PartitionedHypergraph complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  require(part_sizes.size() >= 2, "complete multipartite graph needs at least two parts");
  require(std::all_of(part_sizes.begin(), part_sizes.end(), [](std::size_t s) { return s >= 1; }),
          "every part must have at least one vertex");

  std::vector<std::vector<VertexId>> parts;
  std::vector<std::size_t> part_of;
  VertexId next = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    auto& part = parts.emplace_back();
    for (std::size_t j = 0; j < part_sizes[i]; ++j) {
      part.push_back(next++);
      part_of.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (VertexId v = 0; v < next; ++v) {
    for (VertexId u = v + 1; u < next; ++u) {
      if (part_of[u] != part_of[v]) edges.push_back({v, u});
    }
  }
  return {Hypergraph(next, std::move(edges), 2), std::move(parts)};
}

PartitionedHypergraph complete_npartite_uniform(std::size_t parts, std::size_t r, std::size_t t) {
  require(r >= 2, "uniformity must be at least 2");
  require(r <= parts, "uniformity r=" + std::to_string(r) + " exceeds the number of parts " +
                          std::to_string(parts));
  require(t >= 1, "part size must be at least 1");

  std::vector<Edge> edges;
  for_each_combination(parts, r, [&](const std::vector<std::size_t>& chosen) {
    std::vector<std::size_t> offset(r, 0);
    while (true) {
      Edge e(r);
      for (std::size_t i = 0; i < r; ++i) e[i] = chosen[i] * t + offset[i];
      edges.push_back(std::move(e));
      std::size_t i = r;
      while (i > 0 && ++offset[i - 1] == t) offset[--i] = 0;
      if (i == 0) break;
    }
  });

  std::vector<std::vector<VertexId>> part_lists(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    for (std::size_t j = 0; j < t; ++j) part_lists[i].push_back(i * t + j);
  }
  return {Hypergraph(parts * t, std::move(edges), r), std::move(part_lists)};
}

Hypergraph complete_uniform(std::size_t n, std::size_t r) {
  require(r >= 2, "uniformity must be at least 2");
  require(r <= n, "uniformity r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](const std::vector<std::size_t>& c) { edges.emplace_back(c); });
  return Hypergraph(n, std::move(edges), r);
}

Hypergraph tight_path(std::size_t r, std::size_t t, std::size_t length) {
  require(t >= 1 && t < r, "tight path needs 1 <= t < r");
  require(length >= 1, "tight path needs at least one edge");
  const std::size_t shift = r - t;
  const std::size_t n = length * shift + t;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) {
    Edge e(r);
    std::iota(e.begin(), e.end(), i * shift);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), r);
}

Hypergraph tight_cycle(std::size_t r, std::size_t t, std::size_t length) {
  require(t >= 1 && t < r, "tight cycle needs 1 <= t < r");
  require(length >= 2, "tight cycle needs at least two edges");
  const std::size_t shift = r - t;
  const std::size_t n = length * shift;
  // With n <= r an edge wraps onto itself or every edge is the whole vertex set.
  require(n > r, "tight cycle with r=" + std::to_string(r) + ", t=" + std::to_string(t) +
                     ", length=" + std::to_string(length) + " has only " + std::to_string(n) +
                     " vertices; need more than r");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < length; ++i) {
    Edge e(r);
    for (std::size_t j = 0; j < r; ++j) e[j] = (i * shift + j) % n;
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), r);
}

ThetaStructure theta(std::size_t r, std::size_t t, const std::vector<std::size_t>& lengths) {
  require(t >= 1 && t < r, "theta hypergraph needs 1 <= t < r");
  require(lengths.size() >= 3, "theta hypergraph needs at least three branches");
  const std::size_t shift = r - t;
  for (std::size_t len : lengths) {
    require(len >= 1, "every branch needs at least one edge");
    if (len == 1) {
      require(2 * t == r, "a branch of length 1 is the edge x ∪ y, which needs 2t = r");
    }
    require(len * shift >= t, "branch of length " + std::to_string(len) +
                                  " is too short: its first and last t vertices would overlap");
  }

  std::vector<Edge> edges;
  std::vector<std::vector<EdgeIndex>> branch_edges;
  VertexId next = 2 * t;
  for (std::size_t len : lengths) {
    std::vector<VertexId> seq;
    for (VertexId x = 0; x < t; ++x) seq.push_back(x);
    const std::size_t interior = len * shift - t;
    for (std::size_t i = 0; i < interior; ++i) seq.push_back(next++);
    for (VertexId y = t; y < 2 * t; ++y) seq.push_back(y);

    auto& ids = branch_edges.emplace_back();
    for (std::size_t i = 0; i < len; ++i) {
      ids.push_back(edges.size());
      edges.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(i * shift),
                         seq.begin() + static_cast<std::ptrdiff_t>(i * shift + r));
    }
  }
  return {Hypergraph(next, std::move(edges), r), r, t, lengths, std::move(branch_edges)};
}

PlaneStructure affine_plane(std::size_t q) {
  require(is_prime(q), "plane order q=" + std::to_string(q) + " is not prime");
  std::vector<Edge> lines;
  std::vector<std::vector<EdgeIndex>> classes(q + 1);
  auto point = [q](std::size_t x, std::size_t y) { return x * q + y; };
  for (std::size_t m = 0; m < q; ++m) {
    for (std::size_t b = 0; b < q; ++b) {
      Edge line;
      for (std::size_t x = 0; x < q; ++x) line.push_back(point(x, (m * x + b) % q));
      classes[m].push_back(lines.size());
      lines.push_back(std::move(line));
    }
  }
  for (std::size_t c = 0; c < q; ++c) {
    Edge line;
    for (std::size_t y = 0; y < q; ++y) line.push_back(point(c, y));
    classes[q].push_back(lines.size());
    lines.push_back(std::move(line));
  }
  PlaneStructure plane;
  plane.hypergraph = Hypergraph(q * q, std::move(lines), q);
  plane.order = q;
  plane.projective = false;
  plane.parallel_classes = std::move(classes);
  plane.distinguished_line = q * q;
  plane.anchor_line = q * q;
  return plane;
}

PlaneStructure projective_plane(std::size_t q) {
  PlaneStructure affine = affine_plane(q);
  const std::size_t points = q * q;
  std::vector<Edge> lines = affine.hypergraph.edges();
  std::vector<VertexId> infinity;
  for (std::size_t i = 0; i <= q; ++i) infinity.push_back(points + i);
  for (std::size_t i = 0; i <= q; ++i) {
    for (EdgeIndex line : affine.parallel_classes[i]) lines[line].push_back(infinity[i]);
  }
  lines.push_back(infinity);

  PlaneStructure plane;
  plane.hypergraph = Hypergraph(points + q + 1, std::move(lines), q + 1);
  plane.order = q;
  plane.projective = true;
  plane.parallel_classes = std::move(affine.parallel_classes);
  plane.distinguished_line = plane.hypergraph.edge_count() - 1;
  plane.anchor_line = affine.anchor_line;
  plane.infinity_points = std::move(infinity);
  return plane;
}

Hypergraph random_hypergraph(std::size_t n, std::size_t r, double p, std::uint64_t seed) {
  require(r >= 2 && r <= n, "random hypergraph needs 2 <= r <= n");
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for_each_combination(n, r, [&](const std::vector<std::size_t>& c) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < p) edges.emplace_back(c);
  });
  return Hypergraph(n, std::move(edges), r);
}

PartitionedHypergraph blowup_transform(const Hypergraph& base,
                                       const std::vector<std::size_t>& sizes) {
  require(sizes.size() == base.vertex_count(), "blow-up needs one class size per base vertex");
  require(std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s >= 1; }),
          "blow-up class sizes must be positive");
  require(base.edge_count() == 0 || base.uniformity() == 2, "blow-up base must be a graph");

  std::vector<std::vector<VertexId>> classes(base.vertex_count());
  VertexId next = 0;
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    for (std::size_t i = 0; i < sizes[v]; ++i) classes[v].push_back(next++);
  }

  std::optional<std::size_t> r;
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < base.edge_count(); ++e) {
    const VertexId u = base.edge(e)[0];
    const VertexId v = base.edge(e)[1];
    const std::size_t size = sizes[u] + sizes[v];
    if (r && *r != size) {
      throw std::invalid_argument("blow-up sizes violate uniformity on base edge {" +
                                  std::to_string(u) + "," + std::to_string(v) + "}: " +
                                  std::to_string(size) + " != " + std::to_string(*r));
    }
    r = size;
    Edge edge = classes[u];
    edge.insert(edge.end(), classes[v].begin(), classes[v].end());
    edges.push_back(std::move(edge));
  }
  return {Hypergraph(next, std::move(edges), r), std::move(classes)};
}

std::vector<std::size_t> bipartite_blowup_sizes(const Hypergraph& base, std::size_t r,
                                                std::size_t odd_size) {
  require(odd_size >= 1 && odd_size < r, "odd-level class size must lie in 1..r-1");
  const std::size_t n = base.vertex_count();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(n, unseen);
  for (VertexId root = 0; root < n; ++root) {
    if (level[root] != unseen) continue;
    level[root] = 0;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const VertexId v = frontier.front();
      frontier.pop();
      for (VertexId u : neighborhood(base, v)) {
        if (level[u] == unseen) {
          level[u] = level[v] + 1;
          frontier.push(u);
        } else if (level[u] % 2 == level[v] % 2) {
          throw std::invalid_argument("base graph is not bipartite");
        }
      }
    }
  }
  std::vector<std::size_t> sizes(n);
  for (VertexId v = 0; v < n; ++v) sizes[v] = level[v] % 2 == 1 ? odd_size : r - odd_size;
  return sizes;
}

FamilyInstance generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> FamilyInstance {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, MultipartiteSpec>) {
          auto g = complete_multipartite(s.part_sizes);
          return {std::move(g.hypergraph), std::move(g.parts), {}, {}};
        } else if constexpr (std::is_same_v<T, KnrtSpec>) {
          auto g = complete_npartite_uniform(s.n, s.r, s.t);
          return {std::move(g.hypergraph), std::move(g.parts), {}, {}};
        } else if constexpr (std::is_same_v<T, KnrSpec>) {
          return {complete_uniform(s.n, s.r), {}, {}, {}};
        } else if constexpr (std::is_same_v<T, TightPathSpec>) {
          return {tight_path(s.r, s.t, s.length), {}, {}, {}};
        } else if constexpr (std::is_same_v<T, TightCycleSpec>) {
          return {tight_cycle(s.r, s.t, s.length), {}, {}, {}};
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          auto th = theta(s.r, s.t, s.lengths);
          Hypergraph h = th.hypergraph;
          return {std::move(h), {}, {}, std::move(th)};
        } else if constexpr (std::is_same_v<T, AffinePlaneSpec>) {
          auto plane = affine_plane(s.q);
          Hypergraph h = plane.hypergraph;
          return {std::move(h), {}, std::move(plane), {}};
        } else if constexpr (std::is_same_v<T, ProjectivePlaneSpec>) {
          auto plane = projective_plane(s.q);
          Hypergraph h = plane.hypergraph;
          return {std::move(h), {}, std::move(plane), {}};
        } else if constexpr (std::is_same_v<T, RandomSpec>) {
          return {random_hypergraph(s.n, s.r, s.p, s.seed), {}, {}, {}};
        } else {
          auto g = blowup_transform(s.base, s.sizes);
          return {std::move(g.hypergraph), std::move(g.parts), {}, {}};
        }
      },
      spec);
}

}  // namespace nsd
