#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nsd::testing {

namespace {

Hypergraph sample_edges(Gen& g, std::size_t n, std::size_t m, std::size_t lo_rank,
                        std::size_t hi_rank) {
  std::set<Edge> edges;
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  // Bounded retries so tiny n cannot loop forever.
  for (std::size_t tries = 0; edges.size() < m && tries < 50 * m; ++tries) {
    const std::size_t size = g.range(lo_rank, std::min(hi_rank, n));
    std::shuffle(all.begin(), all.end(), g.engine());
    Edge e(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  std::shuffle(list.begin(), list.end(), g.engine());
  return Hypergraph(n, std::move(list));
}

}  // namespace

Hypergraph Gen::small_hypergraph(std::size_t max_n, std::size_t max_m, std::size_t max_rank) {
  const std::size_t n = range(3, max_n);
  return sample_edges(*this, n, range(1, max_m), 2, max_rank);
}

Hypergraph Gen::small_uniform(std::size_t max_n, std::size_t max_m, std::size_t r) {
  const std::size_t n = range(r + 1, std::max(r + 1, max_n));
  return sample_edges(*this, n, range(1, max_m), r, r);
}

Hypergraph Gen::nice_bipartite_graph(std::size_t max_side, std::size_t max_m) {
  while (true) {
    const std::size_t a = range(1, max_side), b = range(1, max_side);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < a; ++u) {
      for (VertexId v = 0; v < b; ++v) {
        if (coin(0.5)) pairs.emplace_back(u, a + v);
      }
    }
    if (pairs.size() < 2 || pairs.size() > max_m) continue;
    std::vector<VertexId> id(a + b, a + b);
    std::size_t n = 0;
    for (auto [u, v] : pairs) {
      if (id[u] == a + b) id[u] = n++;
      if (id[v] == a + b) id[v] = n++;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({id[u], id[v]});
    Hypergraph h(n, std::move(edges));
    if (has_no_isolated_edge_component(h)) return h;
  }
}

std::vector<std::size_t> Gen::part_sizes(std::size_t max_parts, std::size_t max_size) {
  std::vector<std::size_t> sizes(range(2, max_parts));
  for (auto& s : sizes) s = range(1, max_size);
  return sizes;
}

Weighting Gen::weighting(const Hypergraph& h, SigmaMode mode, Weight k) {
  std::uniform_int_distribution<Weight> d(1, k);
  std::vector<Weight> ew(h.edge_count());
  for (auto& w : ew) w = d(rng_);
  std::optional<std::vector<Weight>> vw;
  if (mode != SigmaMode::edge_only) {
    vw.emplace(h.vertex_count());
    for (auto& w : *vw) w = d(rng_);
  }
  return Weighting(std::move(ew), std::move(vw), k);
}

Hypergraph relabel(const Hypergraph& h, std::mt19937_64& rng) {
  std::vector<VertexId> perm(h.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge f;
    for (VertexId v : e) f.push_back(perm[v]);
    edges.push_back(f);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

bool has_no_isolated_edge_component(const Hypergraph& h) {
  // An edge is isolated iff every one of its vertices has degree 1.
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (const Edge& e : h.edges()) {
    for (VertexId v : e) ++deg[v];
  }
  return std::none_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return std::all_of(e.begin(), e.end(), [&](VertexId v) { return deg[v] == 1; });
  });
}

}  // namespace nsd::testing
